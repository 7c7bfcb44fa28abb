#include "k3cubic/strata.hpp"

#include <map>
#include <set>

#include "k3cubic/e6lines.hpp"

namespace k3cubic::strata {

using binforms::CaseId;
using f3::make_vec;

std::string to_string(const StratumLabel& label) {
  return "Delta_" + std::to_string(label.k) + "^(" + std::to_string(label.r) + ")";
}

const std::vector<Stratum>& strata() {
  static const std::vector<Stratum> all = [] {
    const auto a = make_vec({1, 1, 1, 1, 1});
    const auto a2 = make_vec({-1, 1, 1, 1, 1});
    const auto s = make_vec({1, 1, 0, 0, 0});
    const auto d12 = make_vec({1, -1, 0, 0, 0});
    const auto dm12 = make_vec({-1, 1, 0, 0, 0});
    const auto d34 = make_vec({0, 0, 1, -1, 0});
    const auto d23 = make_vec({0, -1, 1, 0, 0});
    const auto d45 = make_vec({0, 0, 0, -1, 1});
    const auto s34 = make_vec({0, 0, 1, 1, 0});
    const auto d34b = make_vec({0, 0, -1, 1, 0});
    std::vector<Stratum> v = {
        {{1, 1}, {a}, {CaseId::C4}, 1},
        {{1, 2}, {s}, {CaseId::C5, CaseId::C6, CaseId::C7}, 0},
        {{2, 1}, {a, d12}, {CaseId::C8}, 1},
        {{2, 2}, {a, a2}, {CaseId::C8Star}, 2},
        {{2, 3}, {s, s34}, {CaseId::C9, CaseId::C11}, 0},
        {{2, 4}, {s, dm12}, {CaseId::C10, CaseId::C12}, 0},
        {{3, 1}, {a, d12, d34}, {CaseId::C13}, 1},
        {{3, 2}, {a, a2, d23}, {CaseId::C13Star}, 2},
        {{3, 3}, {s, dm12, s34}, {CaseId::C14, CaseId::C15}, 0},
        {{4, 1}, {a, a2, d23, d45}, {CaseId::C16}, 2},
        {{4, 2}, {s, dm12, s34, d34b}, {CaseId::C17}, 0},
    };
    for (auto& st : v) st.tuple = f3::canonical_tuple(st.tuple);
    return v;
  }();
  return all;
}

const Stratum& stratum(const StratumLabel& label) {
  for (const auto& s : strata())
    if (s.label == label) return s;
  throw DomainError("unknown stratum " + to_string(label));
}

std::optional<StratumLabel> stratum_of(CaseId id) {
  for (const auto& s : strata())
    for (auto c : s.cases)
      if (c == id) return s.label;
  return std::nullopt;
}

bool BookkeepingReport::ok() const {
  if (!covers_all_orbits || !depth_matches_nodes) return false;
  for (const auto& s : strata)
    if (!s.tuple_valid || !s.distinct_orbit || !s.line_orbit_found) return false;
  return true;
}

BookkeepingReport bookkeeping_check() {
  BookkeepingReport report;
  report.covers_all_orbits = true;
  for (int k = 1; k <= 4; ++k) {
    const auto summary = f3::wd5_orbits_on_short(k);

    // G_k-orbits of lines for the standard k-node configuration, with the
    // number of nodes on a line of each orbit
    const auto nodes = e6::standard_node_roots(k);
    const auto stab = e6::root_set_stabilizer(nodes);
    std::vector<std::pair<std::size_t, int>> line_orbits;
    std::vector<bool> seen(27, false);
    for (int l = 0; l < 27; ++l) {
      if (seen[l]) continue;
      std::set<int> orbit;
      for (const auto& p : stab) orbit.insert(p[l]);
      for (int j : orbit) seen[j] = true;
      line_orbits.emplace_back(orbit.size(), e6::nodes_on_line(nodes, l));
    }

    std::map<const f3::OrbitReport*, int> used;
    for (const auto& st : strata()) {
      if (st.label.k != k) continue;
      StratumCheck c{};
      c.label = st.label;
      c.tuple_valid = static_cast<int>(st.tuple.size()) == k;
      for (std::size_t i = 0; i < st.tuple.size(); ++i) {
        c.tuple_valid = c.tuple_valid && f3::norm_class(st.tuple[i]) == f3::NormClass::Short;
        for (std::size_t j = i + 1; j < st.tuple.size(); ++j)
          c.tuple_valid = c.tuple_valid && f3::orthogonal(st.tuple[i], st.tuple[j]);
      }
      if (c.tuple_valid) {
        const auto& orbit = f3::orbit_of(summary, st.tuple);
        c.wd5_orbit_size = orbit.orbit_size;
        c.index_in_gk = orbit.index_in_gk;
        ++used[&orbit];
        for (const auto& [size, n] : line_orbits)
          if (size == c.index_in_gk && n == st.nodes_on_line) c.line_orbit_found = true;
      }
      report.strata.push_back(c);
    }
    for (auto& c : report.strata) {
      if (c.label.k != k || !c.tuple_valid) continue;
      c.distinct_orbit = used[&f3::orbit_of(summary, stratum(c.label).tuple)] == 1;
    }
    if (used.size() != summary.orbits.size()) report.covers_all_orbits = false;
  }

  report.depth_matches_nodes = true;
  for (auto id : binforms::all_cases()) {
    const int r = binforms::table1_row(id).nodes;
    const auto label = stratum_of(id);
    const int depth = label ? label->k : 0;
    if (depth != r) report.depth_matches_nodes = false;
  }
  return report;
}

}  // namespace k3cubic::strata
