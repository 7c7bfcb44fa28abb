#include "k3cubic/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "k3cubic/binforms.hpp"
#include "k3cubic/cubic.hpp"
#include "k3cubic/e6lines.hpp"
#include "k3cubic/eisenstein.hpp"
#include "k3cubic/f3space.hpp"
#include "k3cubic/fqf.hpp"
#include "k3cubic/kodaira.hpp"
#include "k3cubic/picard.hpp"
#include "k3cubic/sampling.hpp"
#include "k3cubic/strata.hpp"

namespace k3cubic::verify {

using binforms::CaseId;
using Clock = std::chrono::steady_clock;

bool SuiteResult::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool SuiteResult::criterion_pass(int criterion) const {
  bool any = false;
  for (const auto& c : checks) {
    if (c.criterion != criterion) continue;
    any = true;
    if (!c.pass) return false;
  }
  return any;
}

const std::vector<GroupInfo>& groups() {
  static const std::vector<GroupInfo> g = {
      {"table1", 1, "pencil-of-conics table"},
      {"euler", 2, "Euler numbers"},
      {"stability", 3, "stability criterion"},
      {"table2", 4, "Picard lattice table"},
      {"fqf", 5, "discriminant-form identities"},
      {"census", 6, "norm census of F_3^5"},
      {"groups", 7, "group orders"},
      {"orbits", 8, "orbit tables"},
      {"lines", 9, "lines on the cubic"},
      {"eisenstein", 10, "Eisenstein structure"},
      {"pipeline", 11, "end-to-end pipeline"},
      {"strata", 0, "stratum bookkeeping"},
  };
  return g;
}

namespace {

class Recorder {
 public:
  Recorder(std::vector<CheckResult>& out, const GroupInfo& info) : out_(out), info_(info), mark_(Clock::now()) {}

  void add(std::string name, std::string expected, std::string computed, bool pass) {
    const auto now = Clock::now();
    const double s = std::chrono::duration<double>(now - mark_).count();
    mark_ = now;
    out_.push_back({info_.criterion, info_.name, std::move(name), std::move(expected), std::move(computed), pass, s});
  }
  void equal(std::string name, const std::string& expected, const std::string& computed) {
    add(std::move(name), expected, computed, expected == computed);
  }
  template <class T>
  void equal_num(std::string name, const T& expected, const T& computed) {
    std::ostringstream e, c;
    e << expected;
    c << computed;
    add(std::move(name), e.str(), c.str(), expected == computed);
  }
  void truth(std::string name, bool value) { add(std::move(name), "true", value ? "true" : "false", value); }

 private:
  std::vector<CheckResult>& out_;
  const GroupInfo& info_;
  Clock::time_point mark_;
};

std::string join(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string join(std::vector<std::size_t> v, bool sort = true) {
  if (sort) std::sort(v.begin(), v.end());
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string case_summary(CaseId id, const std::vector<int>& tv, const std::string& fibers, int r, int e) {
  return "case " + binforms::to_string(id) + " type " + join(tv) + " fibres " + fibers + " r=" + std::to_string(r) +
         " e=" + std::to_string(e);
}

void run_table1(Recorder& rec, sampling::Rng& rng) {
  for (const auto& row : binforms::table1()) {
    const std::string expected = case_summary(row.id, row.type_vector,
                                              kodaira::to_string(kodaira::parse_fiber_counts(row.kodaira_fibres)),
                                              row.nodes, row.eckardt);
    auto describe = [](const binforms::FormPair& p) {
      const auto c = binforms::classify_case(p.f5, p.f2);
      const auto f = kodaira::fiber_configuration(p.f5, p.f2);
      return case_summary(c.case_id, c.type_vector, kodaira::to_string(f.counts()), c.nodes, c.eckardt);
    };
    const auto rep = binforms::representative_pair(row.id);
    rec.equal("case " + binforms::to_string(row.id) + " representative", expected, describe(rep));
    rec.equal("case " + binforms::to_string(row.id) + " under GL(2)", expected,
              describe(sampling::substitute(rep, sampling::random_gl2(rng))));
  }
}

void run_euler(Recorder& rec, sampling::Rng& rng) {
  for (CaseId id : binforms::all_cases()) {
    const auto p = binforms::representative_pair(id);
    rec.equal_num("case " + binforms::to_string(id) + " Euler sum", 24,
                  kodaira::fiber_configuration(p.f5, p.f2).euler_total);
  }
  // random cases, realized at random points
  const auto& rows = binforms::table1();
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    const auto& row = rows[static_cast<std::size_t>(sampling::uniform(rng, 0, static_cast<int>(rows.size()) - 1))];
    const auto p = sampling::random_pair_with_census(rng, row.census);
    if (kodaira::fiber_configuration(p.f5, p.f2).euler_total != 24) ++bad;
  }
  rec.equal_num("100 random stable pairs of prescribed case: Euler sum 24 failures", 0, bad);
  // random coefficients; the unstable draws are skipped
  int tested = 0;
  bad = 0;
  while (tested < 100) {
    const auto p = sampling::random_coefficient_pair(rng, 6);
    if (binforms::stability(p.f5, p.f2).verdict != binforms::Stability::Stable) continue;
    ++tested;
    if (kodaira::fiber_configuration(p.f5, p.f2).euler_total != 24) ++bad;
  }
  rec.equal_num("100 random-coefficient stable pairs: Euler sum 24 failures", 0, bad);
}

void run_stability(Recorder& rec, sampling::Rng& rng) {
  using binforms::Stability;
  const auto shapes = sampling::all_censuses();
  int disagree = 0, semistable = 0;
  for (const auto& c : shapes) {
    const auto s = binforms::numeric_stability(c);
    if (s != binforms::prose_stability(c)) ++disagree;
    if (s == Stability::StrictlySemistable) ++semistable;
  }
  rec.equal_num("all " + std::to_string(shapes.size()) + " census shapes: numeric vs prose disagreements", 0, disagree);
  rec.truth("boundary shapes present (" + std::to_string(semistable) + " strictly semistable)", semistable > 0);

  disagree = 0;
  int realized_bad = 0;
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    const auto c = sampling::random_census(rng);
    const auto s = binforms::numeric_stability(c);
    if (s != binforms::prose_stability(c)) ++disagree;
    if (i % 10 == 0) {
      const auto p = sampling::random_pair_with_census(rng, c);
      if (binforms::stability(p.f5, p.f2).verdict != s) ++realized_bad;
    }
  }
  rec.equal_num(std::to_string(trials) + " random profiles: numeric vs prose disagreements", 0, disagree);
  rec.equal_num(std::to_string(trials / 10) + " realized random pairs: verdict vs census disagreements", 0, realized_bad);

  const BinaryForm l1 = BinaryForm::vanishing_at(1, 0), l2 = BinaryForm::vanishing_at(0, 1);
  const BinaryForm f5 = l1.pow(3) * l2.pow(2), f2 = l2.pow(2);
  const auto v = binforms::stability(f5, f2);
  rec.equal("(L1^3 L2^2, L2^2) verdict", "StrictlySemistable", binforms::to_string(v.verdict));
  rec.equal("(L1^3 L2^2, L2^2) classification", "CUSP", binforms::to_string(binforms::classify_case(f5, f2).case_id));
}

void run_table2(Recorder& rec) {
  for (const auto& c : lattices::table2_verify()) {
    std::ostringstream computed;
    computed << "rank " << c.rank_m << "+" << c.rank_t << ", sig(T)=(" << c.sig_t.positive << "," << c.sig_t.negative
             << "), |D|=" << c.disc_m << "/" << c.disc_t << ", q_T~-q_M " << (c.forms_ok ? "yes" : "no");
    rec.add("row " + std::to_string(c.row), "rank sum 22, sig(T)=(2,*), q_T ~ -q_M", computed.str(), c.pass());
  }
  int failures = 0;
  for (CaseId id : binforms::all_cases())
    if (!lattices::shioda_tate_check(id).holds) ++failures;
  rec.equal_num("Shioda-Tate identity failures over 19 cases", 0, failures);
  rec.equal("row 1 |D(M)|", "243", to_string(lattices::shioda_tate_check(CaseId::C1).picard_discriminant));
  rec.equal("row 2 |D(M)|", "324", to_string(lattices::shioda_tate_check(CaseId::C2).picard_discriminant));
}

lattices::FiniteQuadraticForm qform(const char* expr) {
  return lattices::discriminant_form(lattices::parse_lattice_expr(expr).build());
}

void run_fqf(Recorder& rec) {
  using lattices::direct_sum;
  using lattices::fqf_isometric;
  using lattices::negated;
  rec.truth("q(E6) = -q(A2)", fqf_isometric(qform("E6"), negated(qform("A2"))));
  rec.truth("q(A2(-1)) = -q(A2)", fqf_isometric(qform("A2(-1)"), negated(qform("A2"))));
  rec.truth("q(A2)+q(A2) = q(A2(-1))+q(A2(-1))",
            fqf_isometric(direct_sum(qform("A2"), qform("A2")), direct_sum(qform("A2(-1)"), qform("A2(-1)"))));
  rec.truth("q(A2(-2)) = q(D4)+q(A2)", fqf_isometric(qform("A2(-2)"), direct_sum(qform("D4"), qform("A2"))));
  rec.equal("control q(A2) = q(A2(-1))", "false", fqf_isometric(qform("A2"), qform("A2(-1)")) ? "true" : "false");
  rec.equal("control q(A2(-2)) = q(D4)+q(A2(-1))", "false",
            fqf_isometric(qform("A2(-2)"), direct_sum(qform("D4"), qform("A2(-1)"))) ? "true" : "false");
}

void run_census(Recorder& rec) {
  const auto c = f3::norm_census();
  rec.equal_num("isotropic classes", 40, c.isotropic);
  rec.equal_num("short classes", 36, c.short_classes);
  rec.equal_num("long classes", 45, c.long_classes);
  rec.equal_num("2(40+36+45)", 242, 2 * (c.isotropic + c.short_classes + c.long_classes));
}

void run_groups(Recorder& rec) {
  const std::size_t so = f3::special_orthogonal().order();
  const std::size_t we6 = e6::weyl_group().size();
  rec.equal_num("|SO(V)| from F_3 matrices", std::size_t{51840}, so);
  rec.equal_num("|W(E6)| from I(1,6) reflections", std::size_t{51840}, we6);
  rec.truth("the two computations agree", so == we6);
  rec.equal_num("|O(V)|", std::size_t{103680}, f3::orthogonal().order());
  const std::size_t wd5 = f3::wd5().order();
  rec.equal_num("|W(D5)|", std::size_t{1920}, wd5);
  bool inside = true;
  for (const auto& g : f3::wd5().elements()) inside = inside && f3::special_orthogonal().contains(g);
  rec.truth("W(D5) inside SO(V)", inside);
  rec.equal_num("index [SO(V) : W(D5)]", std::size_t{27}, so / wd5);
  rec.equal_num("line stabilizer in W(E6)", std::size_t{1920}, e6::line_stabilizer_order(0));
}

void run_orbits(Recorder& rec) {
  const std::vector<std::size_t> gk = {1440, 192, 96, 384};
  for (int k = 1; k <= 4; ++k) {
    const auto s = f3::wd5_orbits_on_short(k);
    std::vector<std::size_t> sizes, indices;
    for (const auto& o : s.orbits) {
      sizes.push_back(o.orbit_size);
      indices.push_back(o.index_in_gk);
    }
    const std::string p = "k=" + std::to_string(k) + " ";
    rec.equal_num(p + "|G_k|", gk[static_cast<std::size_t>(k - 1)], s.gk_order);
    rec.truth(p + "SO(V) transitive on orthogonal short k-sets", s.so_transitive);
    switch (k) {
      case 1: rec.equal(p + "W(D5)-orbit sizes", "{16,20}", join(sizes)); break;
      case 2: rec.equal(p + "indices in G_k", "{1,4,6,16}", join(indices)); break;
      case 3: rec.equal(p + "indices in G_k", "{3,12,12}", join(indices)); break;
      case 4: rec.equal(p + "indices in G_k", "{3,24}", join(indices)); break;
    }
    rec.equal_num(p + "index sum", std::size_t{27}, s.index_sum);
  }
}

void run_lines(Recorder& rec) {
  const auto inc = e6::incidence();
  bool ten = true;
  for (std::size_t i = 0; i < 27; ++i) {
    int meet = 0;
    for (std::size_t j = 0; j < 27; ++j)
      if (i != j && inc(i, j) == 1) ++meet;
    ten = ten && meet == 10;
  }
  rec.equal_num("line classes", std::size_t{27}, e6::lines27().size());
  rec.truth("every line meets exactly 10 others", ten);
  rec.equal_num("tritangent planes", std::size_t{45}, e6::tritangents().size());
  const std::vector<int> expected = {21, 16, 12, 9};
  for (int k = 1; k <= 4; ++k)
    rec.equal_num("lines on a cubic with " + std::to_string(k) + " standard nodes", expected[static_cast<std::size_t>(k - 1)],
                  e6::nodal_line_count(e6::standard_node_roots(k)));
  bool five = true;
  for (int l = 0; l < 27; ++l) five = five && e6::conic_pencil_fibers(l).size() == 5;
  rec.truth("5 reducible conics in the pencil of every line", five);
  const auto cusp = f3::cusp_report();
  rec.equal_num("cusp classes (isotropic)", 40, cusp.classes);
  rec.truth("SO(V) transitive on cusps", cusp.so_transitive);
}

void run_eisenstein(Recorder& rec, sampling::Rng& rng) {
  const auto r = eisenstein::rho_check();
  rec.truth("rho^3 = I", r.cube_is_identity);
  rec.truth("rho is an isometry of T", r.is_isometry);
  rec.truth("rho has no fixed vectors", r.no_fixed_vectors);
  std::string cp;
  for (std::size_t i = r.char_poly.size(); i-- > 0;) cp += (cp.empty() ? "" : " ") + to_string(r.char_poly[i]);
  rec.add("characteristic polynomial (t^2+t+1)^5", "1 5 15 30 45 51 45 30 15 5 1", cp, r.char_poly_ok);

  const auto h = eisenstein::hermitian_check();
  rec.truth("(x,y) = 2 Re H(x,y) on the basis", h.pairing_ok);
  rec.truth("H is Hermitian", h.hermitian_symmetry_ok);

  int neg_bad = 0, sq_bad = 0, exact_bad = 0, zz_bad = 0, form_bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    eisenstein::TVector x(10);
    for (auto& c : x) c = sampling::uniform(rng, -5, 5);
    const Integer xx = eisenstein::t_pair(x, x);
    // h(sqrt(-3) x) = -x
    const auto hs = eisenstein::h_map(eisenstein::scalar_action(eisenstein::sqrt_minus_3(), x));
    for (std::size_t i = 0; i < 10; ++i)
      if (hs[i] != Rational(-x[i])) {
        ++neg_bad;
        break;
      }
    const auto hx = eisenstein::h_map(x);
    const Rational hh = eisenstein::t_pair(hx, hx);
    if (mod2(hh + Rational(2, 3) * xx) != 0) ++sq_bad;
    if (hh != Rational(xx) / 3) ++exact_bad;
    const auto z = eisenstein::to_module(x);
    const auto hz = eisenstein::hermitian(z, z);
    if (hz.b != 0 || hz.twice_real() != xx) ++form_bad;
    // a vector inside one A2 block
    const std::size_t block = static_cast<std::size_t>(sampling::uniform(rng, 1, 4));
    eisenstein::TVector y(10);
    y[2 * block] = x[0];
    y[2 * block + 1] = x[1];
    const auto w = eisenstein::to_module(y)[block];
    if (Rational(w.norm()) != -Rational(eisenstein::t_pair(y, y)) / 2) ++zz_bad;
  }
  rec.equal_num("h(sqrt(-3) x) = -x failures (200 random x)", 0, neg_bad);
  rec.equal_num("h(x)^2 = -(2/3) x^2 mod 2Z failures (200 random x)", 0, sq_bad);
  rec.equal_num("h(x)^2 = x^2/3 exactly, failures (200 random x)", 0, exact_bad);
  rec.equal_num("z zbar = -(r,r)/2 on A2 blocks, failures (200 random r)", 0, zz_bad);
  rec.equal_num("(x,x) = 2 H(x,x) failures (200 random x)", 0, form_bad);

  const auto d = eisenstein::discriminant_identification();
  rec.equal("|D(T)|", "243", to_string(d.discriminant_order));
  rec.equal("[T : sqrt(-3) T]", "243", to_string(d.kernel_index));
  rec.truth("h induces T/sqrt(-3)T = D(T)", d.h_lands_in_dual && d.surjective && d.kernel_contained);
  rec.truth("rho acts trivially on D(T)", d.rho_trivial);
  rec.truth("q_D(h(v)) = -(4/3) weight(v) on all 243 classes", d.form_matches);
}

void run_pipeline(Recorder& rec, sampling::Rng& rng) {
  const auto pts = sampling::random_general_points(rng, 9);
  std::string where;
  for (const auto& p : pts) where += "(" + to_string(p[0]) + ":" + to_string(p[1]) + ":" + to_string(p[2]) + ")";
  const auto res = cubio::cubic_from_points(pts);
  int on = 0;
  for (const auto& l : res.lines) on += cubio::contains_line(res.cubic, l.line);
  rec.equal_num("image lines on the cubic for " + where, 21, on);
  const auto base = cubio::analyze(res.cubic, res.default_l(), res.default_m());
  rec.equal("case of (l, m) = (p1p2, p1p3)", "1", binforms::to_string(base.pair_case.case_id));
  rec.truth("bordered determinant = -F5", base.pair.determinant_identity);
  rec.equal("stratum", "none", base.stratum ? strata::to_string(*base.stratum) : "none");

  const auto swapped = cubio::analyze(res.cubic, res.default_m(), res.default_l());
  rec.equal("case with l and m exchanged", "1", binforms::to_string(swapped.pair_case.case_id));
  const auto& l2 = res.line_of_class({1, 0, 0, 0, -1, -1, 0}).line;
  const auto& m2 = res.line_of_class({1, 0, 0, 0, -1, 0, -1}).line;
  const auto other = cubio::analyze(res.cubic, l2, m2);
  rec.equal("case for the pair (p4p5, p4p6)", "1", binforms::to_string(other.pair_case.case_id));

  int bad = 0, det_bad = 0;
  const int transforms = 20;
  for (int i = 0; i < transforms; ++i) {
    const RatMatrix c = sampling::random_gl4(rng, 3);
    const RatMatrix ci = inverse(c);
    const auto f = res.cubic.transformed(c);
    const auto a = cubio::analyze(f, res.default_l().mapped(ci), res.default_m().mapped(ci));
    if (a.pair_case.case_id != base.pair_case.case_id || a.pair_case.type_vector != base.pair_case.type_vector ||
        a.stability.verdict != base.stability.verdict)
      ++bad;
    if (!a.pair.determinant_identity) ++det_bad;
  }
  rec.equal_num(std::to_string(transforms) + " random PGL(4) transforms: classification changes", 0, bad);
  rec.equal_num(std::to_string(transforms) + " random PGL(4) transforms: determinant identity failures", 0, det_bad);
}

void run_strata(Recorder& rec) {
  const auto b = strata::bookkeeping_check();
  for (const auto& s : b.strata)
    rec.truth(strata::to_string(s.label) + " tuple, orbit and line orbit",
              s.tuple_valid && s.distinct_orbit && s.line_orbit_found);
  rec.truth("every W(D5)-orbit carries one label", b.covers_all_orbits);
  rec.truth("depth k equals the node count r", b.depth_matches_nodes);
}

void run_group(const GroupInfo& info, std::vector<CheckResult>& out, sampling::Rng& rng) {
  Recorder rec(out, info);
  try {
    if (info.name == "table1") run_table1(rec, rng);
    else if (info.name == "euler") run_euler(rec, rng);
    else if (info.name == "stability") run_stability(rec, rng);
    else if (info.name == "table2") run_table2(rec);
    else if (info.name == "fqf") run_fqf(rec);
    else if (info.name == "census") run_census(rec);
    else if (info.name == "groups") run_groups(rec);
    else if (info.name == "orbits") run_orbits(rec);
    else if (info.name == "lines") run_lines(rec);
    else if (info.name == "eisenstein") run_eisenstein(rec, rng);
    else if (info.name == "pipeline") run_pipeline(rec, rng);
    else if (info.name == "strata") run_strata(rec);
  } catch (const std::exception& e) {
    rec.add("group aborted", "no exception", e.what(), false);
  }
}

}  // namespace

SuiteResult run_verification(const std::optional<std::string>& group, std::uint32_t seed) {
  if (group && std::none_of(groups().begin(), groups().end(), [&](const GroupInfo& g) { return g.name == *group; }))
    throw DomainError("unknown verification group '" + *group + "'");
  SuiteResult result;
  result.seed = seed;
  const auto start = Clock::now();
  for (const auto& info : groups()) {
    if (group && info.name != *group) continue;
    // one stream per group, so a group's draws do not depend on the others
    sampling::Rng rng(seed + static_cast<std::uint32_t>(info.criterion) * 7919u);
    run_group(info, result.checks, rng);
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace k3cubic::verify
