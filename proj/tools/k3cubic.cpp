#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "k3cubic/binforms.hpp"
#include "k3cubic/cubic.hpp"
#include "k3cubic/e6lines.hpp"
#include "k3cubic/f3space.hpp"
#include "k3cubic/fqf.hpp"
#include "k3cubic/json_io.hpp"
#include "k3cubic/kodaira.hpp"
#include "k3cubic/picard.hpp"
#include "k3cubic/strata.hpp"
#include "k3cubic/verify.hpp"

using namespace k3cubic;
using json_io::json;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitVerify = 2;
constexpr int kExitUsage = 64;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::vector<Rational> exact_list(const std::string& text, std::size_t n, const std::string& what) {
  auto v = parse_rational_list(text);
  if (v.size() != n)
    throw ParseError(what + " needs " + std::to_string(n) + " values, got " + std::to_string(v.size()));
  return v;
}

// "p0:p1;p0:p1;..."
std::vector<std::pair<Rational, Rational>> parse_p1_points(const std::string& text) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& item : split(text, ';')) {
    const auto c = parse_rational_list(item, ':');
    if (c.size() != 2) throw ParseError("point of P^1 must look like p0:p1, got '" + item + "'");
    out.emplace_back(c[0], c[1]);
  }
  return out;
}

cubio::ProjLine parse_line(const std::string& text) {
  const auto pts = split(text, ';');
  if (pts.size() != 2) throw ParseError("a line is two points of P^3 separated by ';'");
  cubio::Point3 p, q;
  const auto a = exact_list(pts[0], 4, "point of P^3"), b = exact_list(pts[1], 4, "point of P^3");
  std::copy(a.begin(), a.end(), p.begin());
  std::copy(b.begin(), b.end(), q.begin());
  return cubio::ProjLine(p, q);
}

e6::PicClass parse_class(const std::string& text) {
  const auto v = exact_list(text, 7, "class in I(1,6)");
  e6::PicClass c{};
  for (std::size_t i = 0; i < 7; ++i) {
    if (!is_integral(v[i])) throw ParseError("class coefficients must be integers");
    c[i] = static_cast<int>(v[i].get_num().get_si());
  }
  return c;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

void print_json(const std::string& command, json payload) {
  std::cout << json_io::envelope(command, std::move(payload)).dump(2) << "\n";
}

// --- classify ---------------------------------------------------------------

json classification_json(const binforms::FormPair& p) {
  json j;
  j["F5"] = json_io::to_json(p.f5);
  j["F2"] = json_io::to_json(p.f2);
  j["profile"] = json_io::to_json(binforms::root_profile(p.f5, p.f2));
  const auto v = binforms::stability(p.f5, p.f2);
  j["stability"] = json_io::to_json(v);
  const auto c = binforms::classify_case(p.f5, p.f2);
  j["case"] = json_io::to_json(c);
  if (c.case_id == binforms::CaseId::Cusp) return j;
  j["fibers"] = json_io::to_json(kodaira::fiber_configuration(p.f5, p.f2));
  const auto& row = lattices::table2_row(c.case_id);
  j["lattices"] = {{"row", row.row}, {"M", row.picard}, {"T", row.transcendental}, {"note", "generic for this type"}};
  const auto s = strata::stratum_of(c.case_id);
  j["stratum"] = s ? json(strata::to_string(*s)) : json(nullptr);
  j["shioda_tate"] = json_io::to_json(lattices::shioda_tate_check(c.case_id));
  return j;
}

void print_classification(const binforms::FormPair& p) {
  const auto v = binforms::stability(p.f5, p.f2);
  std::cout << "F5: " << p.f5.to_string() << "\nF2: " << p.f2.to_string() << "\n";
  std::cout << "stability: " << binforms::to_string(v.verdict) << " (max weight " << v.max_weight << ")\n";
  const auto c = binforms::classify_case(p.f5, p.f2);
  std::cout << "case: " << binforms::to_string(c.case_id) << "\n";
  std::cout << "type vector: " << join_ints(c.type_vector) << "\n";
  if (c.case_id == binforms::CaseId::Cusp) {
    std::cout << "strictly semistable: the cusp of the compactification\n";
    return;
  }
  std::cout << "nodes r: " << c.nodes << "\nEckardt points e: " << c.eckardt << "\n";
  const auto f = kodaira::fiber_configuration(p.f5, p.f2);
  std::cout << "fibres: " << kodaira::to_string(f.counts()) << " (Euler sum " << f.euler_total << ")\n";
  for (const auto& fib : f.fibers)
    std::cout << "  " << kodaira::to_string(fib.type) << " over " << fib.locus.to_string() << "\n";
  const auto& row = lattices::table2_row(c.case_id);
  std::cout << "M(t): " << row.picard << "  (generic for this type)\n";
  std::cout << "T(t): " << row.transcendental << "\n";
  const auto s = strata::stratum_of(c.case_id);
  std::cout << "stratum: " << (s ? strata::to_string(*s) : "none") << "\n";
  const auto st = lattices::shioda_tate_check(c.case_id);
  std::cout << "Shioda-Tate: |MW|^2 * " << st.picard_discriminant << " = " << st.fiber_discriminant_product
            << ", |MW| = " << st.mw_order << "\n";
}

// --- analyze ----------------------------------------------------------------

void print_analysis(const cubio::AnalysisReport& r) {
  std::cout << "normal form:\n";
  std::cout << "  A00 = " << r.normal.a00.to_string() << "\n  A01 = " << r.normal.a01.to_string()
            << "\n  A11 = " << r.normal.a11.to_string() << "\n  B0 = " << r.normal.b0.to_string()
            << "\n  B1 = " << r.normal.b1.to_string() << "\n";
  std::cout << "bordered determinant = -F5: " << (r.pair.determinant_identity ? "yes" : "NO") << "\n";
  print_classification({r.pair.f5, r.pair.f2});
}

json line_list_json(const cubio::FromPointsResult& res) {
  json lines = json::array();
  for (const auto& l : res.lines)
    lines.push_back({{"label", l.label}, {"class", l.cls}, {"line", json_io::to_json(l.line)}});
  return lines;
}

// --- tables -----------------------------------------------------------------

void table1_text() {
  std::cout << "case  type vector        conic fibres   Kodaira fibres        r  e\n";
  for (const auto& row : binforms::table1()) {
    std::ostringstream line;
    line << std::left;
    line.width(6);
    line << binforms::to_string(row.id);
    line.width(19);
    line << join_ints(row.type_vector);
    line.width(15);
    line << row.conic_fibres;
    line.width(22);
    line << row.kodaira_fibres;
    line.width(3);
    line << row.nodes << row.eckardt;
    std::cout << line.str() << "\n";
  }
}

json table1_json() {
  json rows = json::array();
  for (const auto& row : binforms::table1())
    rows.push_back({{"case", binforms::to_string(row.id)},
                    {"type_vector", row.type_vector},
                    {"conic_fibres", row.conic_fibres},
                    {"kodaira_fibres", row.kodaira_fibres},
                    {"r", row.nodes},
                    {"e", row.eckardt}});
  return rows;
}

void table2_text(bool check) {
  std::vector<lattices::Table2RowCheck> checks;
  if (check) checks = lattices::table2_verify();
  for (std::size_t i = 0; i < lattices::table2().size(); ++i) {
    const auto& row = lattices::table2()[i];
    std::cout << row.row << ": M = " << row.picard << ", T = " << row.transcendental;
    if (check) {
      const auto& c = checks[i];
      std::cout << "  [rank " << c.rank_m << "+" << c.rank_t << ", |D| " << c.disc_m << ", "
                << (c.pass() ? "ok" : "FAIL") << "]";
    }
    std::cout << "\n";
  }
}

json table2_json(bool check) {
  json rows = json::array();
  std::vector<lattices::Table2RowCheck> checks;
  if (check) checks = lattices::table2_verify();
  for (std::size_t i = 0; i < lattices::table2().size(); ++i) {
    const auto& row = lattices::table2()[i];
    json j = {{"row", row.row}, {"M", row.picard}, {"T", row.transcendental}};
    if (check) j["check"] = json_io::to_json(checks[i]);
    rows.push_back(j);
  }
  return rows;
}

// --- lines ------------------------------------------------------------------

json lines_json(int k) {
  json j = {{"nodes", k}};
  if (k == 0) {
    j["lines"] = e6::lines27().size();
    j["tritangents"] = e6::tritangents().size();
    j["weyl_group_order"] = e6::weyl_group().size();
    j["line_stabilizer_order"] = e6::line_stabilizer_order(0);
    j["conic_pairs_per_line"] = e6::conic_pencil_fibers(0).size();
    return j;
  }
  const auto roots = e6::standard_node_roots(k);
  json r = json::array();
  for (const auto& a : roots) r.push_back(e6::to_string(a));
  j["node_roots"] = r;
  j["lines"] = e6::nodal_line_count(roots);
  const auto stab = e6::root_set_stabilizer(roots);
  j["stabilizer_order"] = stab.size();
  auto sizes = e6::line_orbit_sizes(stab);
  std::sort(sizes.begin(), sizes.end());
  j["stabilizer_line_orbits"] = sizes;
  return j;
}

void lines_text(int k) {
  const json j = lines_json(k);
  if (k == 0) {
    std::cout << "lines: " << j["lines"] << "\ntritangent planes: " << j["tritangents"] << "\n|W(E6)|: "
              << j["weyl_group_order"] << "\nline stabilizer: " << j["line_stabilizer_order"]
              << "\nreducible conics per line: " << j["conic_pairs_per_line"] << "\n";
    return;
  }
  std::cout << "node roots:";
  for (const auto& r : j["node_roots"]) std::cout << " " << r.get<std::string>();
  std::cout << "\nlines through the nodal cubic: " << j["lines"] << "\nstabilizer order: " << j["stabilizer_order"]
            << "\nline orbits of the stabilizer: " << j["stabilizer_line_orbits"].dump() << "\n";
}

// --- orbits -----------------------------------------------------------------

void orbits_text(const f3::OrbitSummary& s) {
  std::cout << "k = " << s.k << ": " << s.tuple_count << " sets of orthogonal short classes, |G_k| = " << s.gk_order
            << ", SO(V) transitive: " << (s.so_transitive ? "yes" : "no") << "\n";
  for (const auto& o : s.orbits)
    std::cout << "  " << f3::to_string(o.representative) << "  orbit " << o.orbit_size << "  stabilizer "
              << o.stabilizer_order << "  index in G_k " << o.index_in_gk << "\n";
  std::cout << "  index sum " << s.index_sum << "\n";
}

// --- lattice ----------------------------------------------------------------

json lattice_json(const std::string& expr) {
  const auto l = lattices::parse_lattice_expr(expr).build();
  const auto sig = lattices::signature(l);
  json j = {{"expr", expr}, {"rank", l.rank()}, {"determinant", to_string(l.determinant())},
            {"signature", {sig.positive, sig.negative}}, {"even", l.is_even()}};
  if (l.is_even() && !sig.degenerate()) j["discriminant_form"] = json_io::to_json(lattices::discriminant_form(l));
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubic surfaces with a line, binary form pairs and their K3 lattices"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit one JSON object");
  app.fallthrough();

  auto* classify = app.add_subcommand("classify", "classify a pair (F5, F2)");
  std::string f5_text, f2_text, roots5, roots2;
  classify->add_option("--f5", f5_text, "6 coefficients, x0-descending");
  classify->add_option("--f2", f2_text, "3 coefficients, x0-descending");
  classify->add_option("--roots5", roots5, "5 points p0:p1 separated by ';' (double roots of F5^2)");
  classify->add_option("--roots2", roots2, "2 points p0:p1 separated by ';'");
  std::string case_label;
  classify->add_option("--case", case_label, "use the built-in representative of a case (1..17, 8*, 13*, cusp)");

  auto* analyze = app.add_subcommand("analyze", "analyze a cubic surface with two skew lines");
  std::string cubic_text, l_text, m_text;
  analyze->add_option("--cubic", cubic_text, "20 coefficients, monomials lex x0>=x1>=x2>=x3")->required();
  analyze->add_option("--l", l_text, "line l as two points: a,b,c,d;e,f,g,h")->required();
  analyze->add_option("--m", m_text, "line m as two points")->required();

  auto* from_points = app.add_subcommand("from-points", "cubic surface from six points of P^2");
  std::string points_text, l_class_text = "1,-1,-1,0,0,0,0", m_class_text = "1,-1,0,-1,0,0,0";
  bool no_analysis = false;
  from_points->add_option("--points", points_text, "six points x,y,z separated by ';'")->required();
  from_points->add_option("--l-class", l_class_text, "class of l among the 21 computed lines")->capture_default_str();
  from_points->add_option("--m-class", m_class_text, "class of m")->capture_default_str();
  from_points->add_flag("--no-analysis", no_analysis, "only the cubic and its lines");

  auto* tables = app.add_subcommand("tables", "print the conic table and the Picard lattice table");
  int table_id = 0;
  bool check = false;
  tables->add_option("--table", table_id, "1 or 2 (default both)")->check(CLI::Range(0, 2));
  tables->add_flag("--check", check, "verify each Picard lattice row");

  auto* orbits = app.add_subcommand("orbits", "W(D5)-orbits on orthogonal short classes of F_3^5");
  int k = 0;
  bool cusps = false;
  orbits->add_option("--k", k, "1..4 (default all)")->check(CLI::Range(0, 4));
  orbits->add_flag("--cusps", cusps, "report on the isotropic classes");

  auto* lines = app.add_subcommand("lines", "lines on smooth and nodal cubic surfaces");
  int nodes = 0;
  lines->add_option("--nodes", nodes, "number of standard nodes, 0..4")->check(CLI::Range(0, 4));

  auto* lattice = app.add_subcommand("lattice", "invariants of a lattice expression");
  std::string expr, iso_expr;
  bool negate = false;
  lattice->add_option("expr", expr, "e.g. U+E6+A2^3+A2(-1)")->required();
  lattice->add_option("--iso", iso_expr, "compare discriminant forms with this lattice");
  lattice->add_flag("--negate", negate, "compare with the negative of the --iso form");

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  std::string group;
  std::uint32_t seed = verify::kDefaultSeed;
  bool timing = false;
  verify_cmd->add_option("--group", group, "run a single group");
  verify_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  verify_cmd->add_flag("--timing", timing, "include timings (output no longer reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify) {
      binforms::FormPair p;
      const int modes = !f5_text.empty() + !roots5.empty() + !case_label.empty();
      if (modes != 1) throw ParseError("give exactly one of --f5/--f2, --roots5/--roots2, --case");
      if (!case_label.empty()) {
        p = binforms::representative_pair(binforms::parse_case_id(case_label));
      } else if (!f5_text.empty()) {
        if (f2_text.empty()) throw ParseError("--f5 needs --f2");
        p = {BinaryForm(exact_list(f5_text, 6, "--f5")), BinaryForm(exact_list(f2_text, 3, "--f2"))};
      } else {
        const auto a = parse_p1_points(roots5), b = parse_p1_points(roots2);
        if (a.size() != 5 || b.size() != 2) throw ParseError("--roots5 takes 5 points and --roots2 takes 2");
        p = binforms::pair_from_points(a, b);
      }
      if (as_json) print_json("classify", classification_json(p));
      else print_classification(p);
    } else if (*analyze) {
      const cubio::CubicForm f(exact_list(cubic_text, 20, "--cubic"));
      const auto r = cubio::analyze(f, parse_line(l_text), parse_line(m_text));
      if (as_json) print_json("analyze", json_io::to_json(r));
      else print_analysis(r);
    } else if (*from_points) {
      std::vector<cubio::Point2> pts;
      for (const auto& item : split(points_text, ';')) {
        const auto v = exact_list(item, 3, "point of P^2");
        pts.push_back({v[0], v[1], v[2]});
      }
      if (pts.size() != 6) throw ParseError("--points takes six points");
      const auto res = cubio::cubic_from_points(pts);
      const auto& l = res.line_of_class(parse_class(l_class_text));
      const auto& m = res.line_of_class(parse_class(m_class_text));
      if (as_json) {
        json j = {{"cubic", json_io::to_json(res.cubic)}, {"lines", line_list_json(res)}, {"l", l.label}, {"m", m.label}};
        if (!no_analysis) j["analysis"] = json_io::to_json(cubio::analyze(res.cubic, l.line, m.line));
        print_json("from-points", j);
      } else {
        std::cout << "cubic:";
        for (const auto& c : res.cubic.coefficients()) std::cout << " " << to_string(c);
        std::cout << "\n";
        for (const auto& line : res.lines)
          std::cout << "  " << line.label << "  " << line.line.to_string() << "\n";
        std::cout << "l = " << l.label << ", m = " << m.label << "\n";
        if (!no_analysis) print_analysis(cubio::analyze(res.cubic, l.line, m.line));
      }
    } else if (*tables) {
      if (as_json) {
        json j;
        if (table_id != 2) j["table1"] = table1_json();
        if (table_id != 1) j["table2"] = table2_json(check);
        print_json("tables", j);
      } else {
        if (table_id != 2) table1_text();
        if (table_id == 0) std::cout << "\n";
        if (table_id != 1) table2_text(check);
      }
    } else if (*orbits) {
      json j = json::array();
      for (int kk = 1; kk <= 4; ++kk) {
        if (k != 0 && kk != k) continue;
        const auto s = f3::wd5_orbits_on_short(kk);
        if (as_json) j.push_back(json_io::to_json(s));
        else orbits_text(s);
      }
      if (cusps) {
        const auto c = f3::cusp_report();
        if (as_json) {
          j = {{"orbits", j},
               {"cusps", {{"classes", c.classes}, {"so_transitive", c.so_transitive}, {"wd5_orbit_sizes", c.wd5_orbit_sizes}}}};
        } else {
          std::cout << "cusps: " << c.classes << " isotropic classes, SO(V) transitive: "
                    << (c.so_transitive ? "yes" : "no") << ", W(D5)-orbits:";
          for (auto n : c.wd5_orbit_sizes) std::cout << " " << n;
          std::cout << "\n";
        }
      }
      if (as_json) print_json("orbits", j);
    } else if (*lines) {
      if (as_json) print_json("lines", lines_json(nodes));
      else lines_text(nodes);
    } else if (*lattice) {
      json j = lattice_json(expr);
      if (!iso_expr.empty()) {
        auto a = lattices::discriminant_form(lattices::parse_lattice_expr(expr).build());
        auto b = lattices::discriminant_form(lattices::parse_lattice_expr(iso_expr).build());
        if (negate) b = lattices::negated(b);
        j["compare"] = {{"with", (negate ? "-" : "") + iso_expr}, {"isometric", lattices::fqf_isometric(a, b)}};
      }
      if (as_json) {
        print_json("lattice", j);
      } else {
        std::cout << "rank " << j["rank"] << ", signature (" << j["signature"][0] << "," << j["signature"][1]
                  << "), determinant " << j["determinant"].get<std::string>() << ", "
                  << (j["even"].get<bool>() ? "even" : "odd") << "\n";
        if (j.contains("discriminant_form"))
          std::cout << "discriminant form: "
                    << lattices::describe(lattices::discriminant_form(lattices::parse_lattice_expr(expr).build()))
                    << "\n";
        if (j.contains("compare"))
          std::cout << "isometric to q(" << j["compare"]["with"].get<std::string>()
                    << "): " << (j["compare"]["isometric"].get<bool>() ? "yes" : "no") << "\n";
      }
    } else if (*verify_cmd) {
      const auto r = verify::run_verification(group.empty() ? std::nullopt : std::optional<std::string>(group), seed);
      if (as_json) {
        print_json("verify", json_io::to_json(r, timing));
      } else {
        for (const auto& c : r.checks) {
          std::cout << (c.pass ? "PASS " : "FAIL ") << "[" << c.group << "] " << c.name;
          if (!c.pass || c.expected != "true") std::cout << ": expected " << c.expected << ", computed " << c.computed;
          if (timing) std::cout << " (" << c.seconds << " s)";
          std::cout << "\n";
        }
        std::cout << (r.pass() ? "all checks pass" : "verification FAILED");
        if (timing) std::cout << " in " << r.seconds << " s";
        std::cout << "\n";
      }
      return r.pass() ? 0 : kExitVerify;
    }
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
