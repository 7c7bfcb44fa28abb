#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3cubic/binforms.hpp"
#include "k3cubic/f3space.hpp"

namespace k3cubic::strata {

/// Stratum Delta_k^(r): k nodes, r-th orbit type.
struct StratumLabel {
  int k;
  int r;
  friend bool operator==(const StratumLabel&, const StratumLabel&) = default;
};
std::string to_string(const StratumLabel& label);  // "Delta_2^(3)"

struct Stratum {
  StratumLabel label;
  f3::Tuple tuple;                       // defining set of orthogonal short classes
  std::vector<binforms::CaseId> cases;   // classified pairs landing here
  int nodes_on_line;                     // nodes lying on the chosen line l
};

const std::vector<Stratum>& strata();
const Stratum& stratum(const StratumLabel& label);

/// Cases 1-3 have no stratum; the cusp has none either.
std::optional<StratumLabel> stratum_of(binforms::CaseId id);

struct StratumCheck {
  StratumLabel label;
  bool tuple_valid;            // k mutually orthogonal short classes
  std::size_t wd5_orbit_size;
  std::size_t index_in_gk;
  bool distinct_orbit;         // no other label of the same depth shares the orbit
  bool line_orbit_found;       // a G_k-orbit of lines of that size with the expected nodes on l
};

struct BookkeepingReport {
  std::vector<StratumCheck> strata;
  bool covers_all_orbits;      // every W(D5)-orbit carries exactly one label
  bool depth_matches_nodes;    // k = r column of the conic table for every case
  bool ok() const;
};

/// Consistency of the case -> stratum assignment with the orbit tables of
/// F_3^5 and, independently, with W(E6)-orbits of lines on nodal cubics.
BookkeepingReport bookkeeping_check();

}  // namespace k3cubic::strata
