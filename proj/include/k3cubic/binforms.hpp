#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3cubic/binary_form.hpp"

namespace k3cubic::binforms {

/// Pair of forms (F5, F2) of degrees 5 and 2.
struct FormPair {
  BinaryForm f5;
  BinaryForm f2;
};

/// Builds (F5, F2) from 5 weight-2 points and 2 weight-1 points of P^1
/// given as (p0 : p1); F5 and F2 are the products of the vanishing forms.
FormPair pair_from_points(const std::vector<std::pair<Rational, Rational>>& weight_two,
                          const std::vector<std::pair<Rational, Rational>>& weight_one);

struct Part {
  int multiplicity;
  int degree;  // degree of the squarefree factor = number of geometric roots
  friend auto operator<=>(const Part&, const Part&) = default;
};

struct CommonPart {
  int m5;
  int m2;
  int count;
  friend auto operator<=>(const CommonPart&, const CommonPart&) = default;
};

struct RootProfile {
  std::vector<Part> f5_parts;
  std::vector<Part> f2_parts;
  std::vector<CommonPart> common;
  friend bool operator==(const RootProfile&, const RootProfile&) = default;
};

/// The squarefree form whose roots are exactly the points p of P^1 with
/// multiplicity m5 in F5 and m2 in F2.
struct PointClass {
  int m5;
  int m2;
  BinaryForm locus;
  int count() const { return locus.degree(); }
  int weight() const { return 2 * m5 + m2; }
};

/// Local multiplicity census: (m5, m2) -> number of geometric points.
using Census = std::map<std::pair<int, int>, int>;

std::vector<PointClass> point_classes(const BinaryForm& f5, const BinaryForm& f2);
Census census_of(const std::vector<PointClass>& classes);

RootProfile root_profile(const BinaryForm& f5, const BinaryForm& f2);
/// Point census reconstructed from the profile alone.
Census census_of(const RootProfile& profile);

enum class Stability { Stable, StrictlySemistable, Unstable };
std::string to_string(Stability s);

struct StabilityVerdict {
  Stability verdict = Stability::Unstable;
  int max_weight = 0;               // max over points of 2*m5 + m2
  std::optional<std::string> witness;  // locus attaining max_weight when not stable
  bool degenerate = false;          // F5 = 0 or F2 = 0: not a point of P(V5) x P(V2)
};

/// Hilbert-Mumford bound on the census: max 2*m5+m2 <= 5 stable, = 6 strictly
/// semistable, >= 7 unstable.
Stability numeric_stability(const Census& census);
/// The same verdict phrased as conditions on roots (at most double roots of
/// F5, no common multiple root; boundary is a triple root of F5 or a shared
/// double root).
Stability prose_stability(const Census& census);

StabilityVerdict stability(const BinaryForm& f5, const BinaryForm& f2);

enum class CaseId {
  C1, C2, C3, C4, C5, C6, C7, C8, C8Star, C9, C10, C11, C12, C13, C13Star, C14, C15, C16, C17, Cusp
};
std::string to_string(CaseId id);
/// Inverse of to_string; throws ParseError.
CaseId parse_case_id(const std::string& label);
/// The 19 stable cases in table order (Cusp excluded).
const std::vector<CaseId>& all_cases();

struct Table1Row {
  CaseId id;
  std::vector<int> type_vector;
  std::string conic_fibres;
  std::string kodaira_fibres;
  int nodes;
  int eckardt;
  Census census;  // defining root configuration of the case
};

/// Rows of the pencil-of-conics table.
const std::vector<Table1Row>& table1();
const Table1Row& table1_row(CaseId id);

struct PairCase {
  CaseId case_id;
  std::vector<int> type_vector;
  int nodes;
  int eckardt;
};

/// Sorted-descending multiset {2*m5(p) + m2(p)}.
std::vector<int> type_vector(const Census& census);
std::optional<CaseId> match_case(const Census& census);

/// Pair realizing a census with one point of P^1 per geometric point, taken
/// in order from `points` (which must be distinct and numerous enough).
FormPair pair_from_census(const Census& census, const std::vector<std::pair<Rational, Rational>>& points);
/// Deterministic representative of a case (or the cusp) at the points
/// (1:0), (0:1), (1:1), (1:-1), (1:2), ...
FormPair representative_pair(CaseId id);

PairCase classify_case(const BinaryForm& f5, const BinaryForm& f2);

bool is_cusp_configuration(const BinaryForm& f5, const BinaryForm& f2);

}  // namespace k3cubic::binforms
