#include "k3cubic/binforms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3cubic::binforms {

namespace {

void check_degrees(const BinaryForm& f5, const BinaryForm& f2) {
  if (f5.degree() != 5) throw DomainError("F5 must have degree 5, got " + std::to_string(f5.degree()));
  if (f2.degree() != 2) throw DomainError("F2 must have degree 2, got " + std::to_string(f2.degree()));
}

const Census kCuspCensus{{{3, 0}, 1}, {{2, 2}, 1}};

}  // namespace

FormPair pair_from_points(const std::vector<std::pair<Rational, Rational>>& weight_two,
                          const std::vector<std::pair<Rational, Rational>>& weight_one) {
  if (weight_two.size() != 5 || weight_one.size() != 2) {
    throw DomainError("expected 5 weight-2 points and 2 weight-1 points");
  }
  BinaryForm f5({Rational(1)});
  for (const auto& [p0, p1] : weight_two) f5 = f5 * BinaryForm::vanishing_at(p0, p1);
  BinaryForm f2({Rational(1)});
  for (const auto& [p0, p1] : weight_one) f2 = f2 * BinaryForm::vanishing_at(p0, p1);
  return {f5.canonical(), f2.canonical()};
}

FormPair pair_from_census(const Census& census, const std::vector<std::pair<Rational, Rational>>& points) {
  BinaryForm f5({Rational(1)});
  BinaryForm f2({Rational(1)});
  std::size_t next = 0;
  for (const auto& [key, count] : census)
    for (int i = 0; i < count; ++i) {
      if (next == points.size()) throw DomainError("not enough points for the census");
      const auto& [p0, p1] = points[next++];
      const BinaryForm l = BinaryForm::vanishing_at(p0, p1);
      f5 = f5 * l.pow(key.first);
      f2 = f2 * l.pow(key.second);
    }
  if (f5.degree() != 5 || f2.degree() != 2) throw DomainError("census does not describe forms of degrees 5 and 2");
  return {f5.canonical(), f2.canonical()};
}

FormPair representative_pair(CaseId id) {
  std::vector<std::pair<Rational, Rational>> pts = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {1, -2}, {2, 3}, {3, -1}};
  const Census census =
      id == CaseId::Cusp ? Census{{{3, 0}, 1}, {{2, 2}, 1}} : table1_row(id).census;
  return pair_from_census(census, pts);
}

std::vector<PointClass> point_classes(const BinaryForm& f5, const BinaryForm& f2) {
  check_degrees(f5, f2);
  const auto sf5 = squarefree_decomposition(f5);
  const auto sf2 = squarefree_decomposition(f2);

  std::vector<PointClass> classes;
  std::vector<BinaryForm> rest5, rest2;
  for (const auto& p : sf5) rest5.push_back(p.second);
  for (const auto& p : sf2) rest2.push_back(p.second);

  for (std::size_t i = 0; i < sf5.size(); ++i) {
    for (std::size_t j = 0; j < sf2.size(); ++j) {
      const BinaryForm g = gcd(sf5[i].second, sf2[j].second);
      if (g.degree() == 0) continue;
      classes.push_back({sf5[i].first, sf2[j].first, g});
      rest5[i] = exact_divide(rest5[i], g);
      rest2[j] = exact_divide(rest2[j], g);
    }
  }
  for (std::size_t i = 0; i < sf5.size(); ++i)
    if (rest5[i].degree() > 0) classes.push_back({sf5[i].first, 0, rest5[i].canonical()});
  for (std::size_t j = 0; j < sf2.size(); ++j)
    if (rest2[j].degree() > 0) classes.push_back({0, sf2[j].first, rest2[j].canonical()});

  std::sort(classes.begin(), classes.end(), [](const PointClass& a, const PointClass& b) {
    if (a.weight() != b.weight()) return a.weight() > b.weight();
    return std::make_pair(a.m5, a.m2) > std::make_pair(b.m5, b.m2);
  });
  return classes;
}

Census census_of(const std::vector<PointClass>& classes) {
  Census c;
  for (const auto& pc : classes) c[{pc.m5, pc.m2}] += pc.count();
  return c;
}

RootProfile root_profile(const BinaryForm& f5, const BinaryForm& f2) {
  check_degrees(f5, f2);
  if (f5.is_zero() || f2.is_zero()) throw DomainError("zero form");
  const auto sf5 = squarefree_decomposition(f5);
  const auto sf2 = squarefree_decomposition(f2);
  RootProfile profile;
  for (const auto& [m, f] : sf5) profile.f5_parts.push_back({m, f.degree()});
  for (const auto& [m, f] : sf2) profile.f2_parts.push_back({m, f.degree()});
  for (const auto& [m5, a] : sf5)
    for (const auto& [m2, b] : sf2) {
      const int d = gcd(a, b).degree();
      if (d > 0) profile.common.push_back({m5, m2, d});
    }
  std::sort(profile.f5_parts.rbegin(), profile.f5_parts.rend());
  std::sort(profile.f2_parts.rbegin(), profile.f2_parts.rend());
  std::sort(profile.common.rbegin(), profile.common.rend());
  return profile;
}

Census census_of(const RootProfile& profile) {
  Census c;
  std::map<int, int> used5, used2;
  for (const auto& cp : profile.common) {
    c[{cp.m5, cp.m2}] += cp.count;
    used5[cp.m5] += cp.count;
    used2[cp.m2] += cp.count;
  }
  for (const auto& p : profile.f5_parts) {
    const int left = p.degree - used5[p.multiplicity];
    if (left > 0) c[{p.multiplicity, 0}] += left;
  }
  for (const auto& p : profile.f2_parts) {
    const int left = p.degree - used2[p.multiplicity];
    if (left > 0) c[{0, p.multiplicity}] += left;
  }
  return c;
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::StrictlySemistable: return "StrictlySemistable";
    case Stability::Unstable: return "Unstable";
  }
  return "?";
}

Stability numeric_stability(const Census& census) {
  int mu = 0;
  for (const auto& [key, count] : census)
    if (count > 0) mu = std::max(mu, 2 * key.first + key.second);
  if (mu <= 5) return Stability::Stable;
  if (mu == 6) return Stability::StrictlySemistable;
  return Stability::Unstable;
}

Stability prose_stability(const Census& census) {
  bool at_most_double = true;
  bool common_multiple = false;
  bool triple = false;
  bool shared_double = false;
  bool worse = false;
  for (const auto& [key, count] : census) {
    if (count == 0) continue;
    const auto [m5, m2] = key;
    if (m5 > 2) at_most_double = false;
    if (m5 >= 2 && m2 >= 2) common_multiple = true;
    if (m5 == 3 && m2 == 0) triple = true;
    if (m5 == 2 && m2 == 2) shared_double = true;
    // a quadruple root, or a triple root that F2 also vanishes at
    if (m5 >= 4 || (m5 == 3 && m2 >= 1)) worse = true;
  }
  if (at_most_double && !common_multiple) return Stability::Stable;
  if ((triple || shared_double) && !worse) return Stability::StrictlySemistable;
  return Stability::Unstable;
}

StabilityVerdict stability(const BinaryForm& f5, const BinaryForm& f2) {
  check_degrees(f5, f2);
  StabilityVerdict v;
  if (f5.is_zero() || f2.is_zero()) {
    v.verdict = Stability::Unstable;
    v.degenerate = true;
    v.witness = f5.is_zero() ? "F5 = 0" : "F2 = 0";
    return v;
  }
  const auto classes = point_classes(f5, f2);
  const Census census = census_of(classes);
  v.verdict = numeric_stability(census);
  v.max_weight = classes.empty() ? 0 : classes.front().weight();
  if (v.verdict != Stability::Stable) {
    const auto& top = classes.front();
    std::ostringstream os;
    os << top.locus.to_string() << " (m5=" << top.m5 << ", m2=" << top.m2 << ", weight " << top.weight() << ")";
    v.witness = os.str();
  }
  return v;
}

std::string to_string(CaseId id) {
  switch (id) {
    case CaseId::C1: return "1";
    case CaseId::C2: return "2";
    case CaseId::C3: return "3";
    case CaseId::C4: return "4";
    case CaseId::C5: return "5";
    case CaseId::C6: return "6";
    case CaseId::C7: return "7";
    case CaseId::C8: return "8";
    case CaseId::C8Star: return "8*";
    case CaseId::C9: return "9";
    case CaseId::C10: return "10";
    case CaseId::C11: return "11";
    case CaseId::C12: return "12";
    case CaseId::C13: return "13";
    case CaseId::C13Star: return "13*";
    case CaseId::C14: return "14";
    case CaseId::C15: return "15";
    case CaseId::C16: return "16";
    case CaseId::C17: return "17";
    case CaseId::Cusp: return "CUSP";
  }
  return "?";
}

CaseId parse_case_id(const std::string& label) {
  for (CaseId id : all_cases())
    if (to_string(id) == label) return id;
  if (label == "CUSP" || label == "cusp") return CaseId::Cusp;
  throw ParseError("unknown case id '" + label + "'");
}

const std::vector<CaseId>& all_cases() {
  static const std::vector<CaseId> cases{
      CaseId::C1,  CaseId::C2,  CaseId::C3,  CaseId::C4,      CaseId::C5,  CaseId::C6,  CaseId::C7,
      CaseId::C8,  CaseId::C8Star, CaseId::C9, CaseId::C10,   CaseId::C11, CaseId::C12, CaseId::C13,
      CaseId::C13Star, CaseId::C14, CaseId::C15, CaseId::C16, CaseId::C17};
  return cases;
}

const std::vector<Table1Row>& table1() {
  // t, singular conic fibres, Kodaira fibres, r, e, and the root configuration
  // (m5, m2) -> count that defines the case.
  static const std::vector<Table1Row> rows{
      {CaseId::C1, {2, 2, 2, 2, 2, 1, 1}, "5 I", "5 IV, 2 II", 0, 0, {{{1, 0}, 5}, {{0, 1}, 2}}},
      {CaseId::C2, {3, 2, 2, 2, 2, 1}, "5 I", "I0*, 4 IV, II", 0, 1, {{{1, 1}, 1}, {{1, 0}, 4}, {{0, 1}, 1}}},
      {CaseId::C3, {3, 3, 2, 2, 2}, "5 I", "2 I0*, 3 IV", 0, 2, {{{1, 1}, 2}, {{1, 0}, 3}}},
      {CaseId::C4, {2, 2, 2, 2, 2, 2}, "5 I", "6 IV", 1, 0, {{{1, 0}, 5}, {{0, 2}, 1}}},
      {CaseId::C5, {4, 2, 2, 2, 1, 1}, "II, 3 I", "IV*, 3 IV, 2 II", 1, 0, {{{2, 0}, 1}, {{1, 0}, 3}, {{0, 1}, 2}}},
      {CaseId::C6, {4, 3, 2, 2, 1}, "II, 3 I", "IV*, I0*, 2 IV, II", 1, 1,
       {{{2, 0}, 1}, {{1, 1}, 1}, {{1, 0}, 2}, {{0, 1}, 1}}},
      {CaseId::C7, {4, 3, 3, 2}, "II, 3 I", "IV*, 2 I0*, IV", 1, 2, {{{2, 0}, 1}, {{1, 1}, 2}, {{1, 0}, 1}}},
      {CaseId::C8, {4, 2, 2, 2, 2}, "II, 3 I", "IV*, 4 IV", 2, 0, {{{2, 0}, 1}, {{1, 0}, 3}, {{0, 2}, 1}}},
      {CaseId::C8Star, {4, 2, 2, 2, 2}, "5 I", "IV*, 4 IV", 2, 0, {{{1, 2}, 1}, {{1, 0}, 4}}},
      {CaseId::C9, {4, 4, 2, 1, 1}, "2 II, I", "2 IV*, IV, 2 II", 2, 0, {{{2, 0}, 2}, {{1, 0}, 1}, {{0, 1}, 2}}},
      {CaseId::C10, {5, 2, 2, 2, 1}, "III, 3 I", "II*, 3 IV, II", 2, 0, {{{2, 1}, 1}, {{1, 0}, 3}, {{0, 1}, 1}}},
      {CaseId::C11, {4, 4, 3, 1}, "2 II, I", "2 IV*, I0*, II", 2, 1, {{{2, 0}, 2}, {{1, 1}, 1}, {{0, 1}, 1}}},
      {CaseId::C12, {5, 3, 2, 2}, "III, 3 I", "II*, I0*, 2 IV", 2, 1, {{{2, 1}, 1}, {{1, 1}, 1}, {{1, 0}, 2}}},
      {CaseId::C13, {4, 4, 2, 2}, "2 II, I", "2 IV*, 2 IV", 3, 0, {{{2, 0}, 1}, {{1, 2}, 1}, {{1, 0}, 2}}},
      {CaseId::C13Star, {4, 4, 2, 2}, "II, 3 I", "2 IV*, 2 IV", 3, 0, {{{2, 0}, 2}, {{1, 0}, 1}, {{0, 2}, 1}}},
      {CaseId::C14, {5, 4, 2, 1}, "III, II, I", "II*, IV*, IV, II", 3, 0,
       {{{2, 1}, 1}, {{2, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}}},
      {CaseId::C15, {5, 4, 3}, "III, II, I", "II*, IV*, I0*", 3, 1, {{{2, 1}, 1}, {{2, 0}, 1}, {{1, 1}, 1}}},
      {CaseId::C16, {4, 4, 4}, "2 II, I", "3 IV*", 4, 0, {{{2, 0}, 2}, {{1, 2}, 1}}},
      {CaseId::C17, {5, 5, 2}, "2 III, I", "2 II*, IV", 4, 0, {{{2, 1}, 2}, {{1, 0}, 1}}},
  };
  return rows;
}

const Table1Row& table1_row(CaseId id) {
  for (const auto& row : table1())
    if (row.id == id) return row;
  throw DomainError("no table row for case " + to_string(id));
}

std::vector<int> type_vector(const Census& census) {
  std::vector<int> t;
  for (const auto& [key, count] : census)
    for (int i = 0; i < count; ++i) t.push_back(2 * key.first + key.second);
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::optional<CaseId> match_case(const Census& census) {
  Census clean;
  for (const auto& [k, v] : census)
    if (v > 0) clean[k] = v;
  if (clean == kCuspCensus) return CaseId::Cusp;
  for (const auto& row : table1())
    if (row.census == clean) return row.id;
  return std::nullopt;
}

PairCase classify_case(const BinaryForm& f5, const BinaryForm& f2) {
  check_degrees(f5, f2);
  if (f5.is_zero() || f2.is_zero()) throw DomainError("unstable pair");
  const Census census = census_of(point_classes(f5, f2));
  const Stability s = numeric_stability(census);
  if (s == Stability::Unstable) throw DomainError("unstable pair");
  const auto id = match_case(census);
  if (s == Stability::StrictlySemistable) {
    if (id == CaseId::Cusp) return {CaseId::Cusp, type_vector(census), 0, 0};
    throw DomainError("strictly semistable, no stratum");
  }
  if (!id) throw std::logic_error("stable configuration missing from the case list");
  const auto& row = table1_row(*id);
  const auto t = type_vector(census);
  if (t != row.type_vector) throw std::logic_error("type vector disagrees with table for case " + to_string(*id));
  return {*id, t, row.nodes, row.eckardt};
}

bool is_cusp_configuration(const BinaryForm& f5, const BinaryForm& f2) {
  if (f5.degree() != 5 || f2.degree() != 2 || f5.is_zero() || f2.is_zero()) return false;
  return census_of(point_classes(f5, f2)) == kCuspCensus;
}

}  // namespace k3cubic::binforms
