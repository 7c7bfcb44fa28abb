#include "k3cubic/json_io.hpp"

namespace k3cubic::json_io {

json to_json(const Rational& x) { return to_string(x); }

json to_json(const BinaryForm& f) {
  json a = json::array();
  for (const auto& c : f.coefficients()) a.push_back(to_string(c));
  return a;
}

BinaryForm form_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("binary form must be a JSON array");
  std::vector<Rational> c;
  for (const auto& x : j) {
    if (x.is_string())
      c.push_back(parse_rational(x.get<std::string>()));
    else if (x.is_number_integer())
      c.push_back(Rational(x.get<long>()));
    else
      throw ParseError("binary form coefficients must be strings or integers");
  }
  if (c.empty()) throw ParseError("empty binary form");
  return BinaryForm(c);
}

json to_json(const binforms::RootProfile& p) {
  json j;
  j["f5_parts"] = json::array();
  for (const auto& x : p.f5_parts) j["f5_parts"].push_back({{"multiplicity", x.multiplicity}, {"degree", x.degree}});
  j["f2_parts"] = json::array();
  for (const auto& x : p.f2_parts) j["f2_parts"].push_back({{"multiplicity", x.multiplicity}, {"degree", x.degree}});
  j["common"] = json::array();
  for (const auto& x : p.common) j["common"].push_back({{"m5", x.m5}, {"m2", x.m2}, {"count", x.count}});
  return j;
}

json to_json(const binforms::StabilityVerdict& v) {
  json j{{"verdict", binforms::to_string(v.verdict)}, {"max_weight", v.max_weight}, {"degenerate", v.degenerate}};
  j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  return j;
}

json to_json(const binforms::PairCase& c) {
  return {{"case", binforms::to_string(c.case_id)},
          {"type_vector", c.type_vector},
          {"nodes", c.nodes},
          {"eckardt", c.eckardt}};
}

json to_json(const kodaira::FiberConfiguration& c) {
  json fibers = json::array();
  for (const auto& f : c.fibers)
    fibers.push_back({{"type", kodaira::to_string(f.type)},
                      {"factor", to_json(f.locus)},
                      {"geometric_count", f.geometric_count()}});
  return {{"fibers", fibers}, {"summary", kodaira::to_string(c.counts())}, {"euler_total", c.euler_total}};
}

json to_json(const lattices::IntegralLattice& l) {
  json gram = json::array();
  for (std::size_t i = 0; i < l.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < l.rank(); ++j) row.push_back(l.gram()(i, j).get_si());
    gram.push_back(row);
  }
  return {{"name", l.name()}, {"rank", l.rank()}, {"gram", gram}};
}

json to_json(const lattices::FiniteQuadraticForm& q) {
  json divisors = json::array();
  for (const auto& n : q.orders()) divisors.push_back(n.get_si());
  json table = json::array();
  for (std::size_t i = 0; i < q.generators(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < q.generators(); ++j) row.push_back(to_string(q.values()(i, j)));
    table.push_back(row);
  }
  return {{"structure", lattices::group_structure(q)}, {"divisors", divisors}, {"q_table", table}};
}

json to_json(const lattices::ShiodaTateReport& r) {
  return {{"fiber_discriminant_product", to_string(r.fiber_discriminant_product)},
          {"picard_discriminant", to_string(r.picard_discriminant)},
          {"mw_order", to_string(r.mw_order)},
          {"holds", r.holds}};
}

json to_json(const lattices::Table2RowCheck& c) {
  return {{"row", c.row},
          {"rank_m", c.rank_m},
          {"rank_t", c.rank_t},
          {"signature_m", {c.sig_m.positive, c.sig_m.negative}},
          {"signature_t", {c.sig_t.positive, c.sig_t.negative}},
          {"disc_m", to_string(c.disc_m)},
          {"disc_t", to_string(c.disc_t)},
          {"form_m", c.form_m},
          {"form_t", c.form_t},
          {"pass", c.pass()}};
}

json to_json(const f3::Vec& v) {
  json a = json::array();
  for (int x : v) a.push_back(x == 2 ? -1 : x);
  return a;
}

json to_json(const f3::Tuple& t) {
  json a = json::array();
  for (const auto& v : t) a.push_back(to_json(v));
  return a;
}

json to_json(const f3::OrbitSummary& s) {
  json orbits = json::array();
  for (const auto& o : s.orbits)
    orbits.push_back({{"representative", to_json(o.representative)},
                      {"orbit_size", o.orbit_size},
                      {"stabilizer_order", o.stabilizer_order},
                      {"stabilizer_index_in_Gk", o.index_in_gk}});
  return {{"k", s.k},
          {"Gk_order", s.gk_order},
          {"tuple_count", s.tuple_count},
          {"so_transitive", s.so_transitive},
          {"index_sum", s.index_sum},
          {"orbits", orbits}};
}

json to_json(const cubio::CubicForm& f) {
  json a = json::array();
  for (const auto& c : f.coefficients()) a.push_back(to_string(c));
  return a;
}

json to_json(const cubio::ProjLine& l) {
  json a = json::array();
  for (const auto* p : {&l.first(), &l.second()}) {
    json pt = json::array();
    for (const auto& c : *p) pt.push_back(to_string(c));
    a.push_back(pt);
  }
  return a;
}

json to_json(const cubio::AnalysisReport& r) {
  json j;
  j["normal_form"] = {{"A00", to_json(r.normal.a00)}, {"A01", to_json(r.normal.a01)}, {"A11", to_json(r.normal.a11)},
                      {"B0", to_json(r.normal.b0)},   {"B1", to_json(r.normal.b1)}};
  j["F5"] = to_json(r.pair.f5);
  j["F2"] = to_json(r.pair.f2);
  j["determinant_identity"] = r.pair.determinant_identity;
  j["stability"] = to_json(r.stability);
  j["case"] = to_json(r.pair_case);
  j["fibers"] = to_json(r.fibers);
  j["lattices"] = {{"M", r.picard}, {"T", r.transcendental}, {"note", "generic for this type"}};
  j["stratum"] = r.stratum ? json(strata::to_string(*r.stratum)) : json(nullptr);
  j["shioda_tate"] = to_json(r.shioda);
  return j;
}

json to_json(const verify::SuiteResult& r, bool timing) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j = {{"criterion", c.criterion}, {"group", c.group},       {"name", c.name},
              {"expected", c.expected},   {"computed", c.computed}, {"pass", c.pass}};
    if (timing) j["seconds"] = c.seconds;
    checks.push_back(j);
  }
  json criteria = json::array();
  for (const auto& g : verify::groups()) {
    bool present = false;
    for (const auto& c : r.checks) present = present || c.group == g.name;
    if (present) criteria.push_back({{"criterion", g.criterion}, {"group", g.name}, {"pass", r.criterion_pass(g.criterion)}});
  }
  json j = {{"status", r.pass() ? "pass" : "fail"}, {"seed", r.seed}, {"criteria", criteria}, {"checks", checks}};
  if (timing) j["seconds"] = r.seconds;
  return j;
}

json envelope(const std::string& command, json payload) {
  json j = {{"schema_version", kSchemaVersion}, {"command", command}};
  j["result"] = std::move(payload);
  return j;
}

}  // namespace k3cubic::json_io
