#include <doctest.h>

#include "k3cubic/binforms.hpp"
#include "k3cubic/sampling.hpp"

using namespace k3cubic;
using namespace k3cubic::binforms;

namespace {

const BinaryForm x0 = BinaryForm::linear(1, 0);
const BinaryForm x1 = BinaryForm::linear(0, 1);

bool has_common(const RootProfile& p, int m5, int m2) {
  for (const auto& c : p.common)
    if (c.m5 == m5 && c.m2 == m2) return true;
  return false;
}

}  // namespace

TEST_CASE("root profiles") {
  SUBCASE("generic pair") {
    sampling::Rng rng(1);
    const auto p = pair_from_census({{{1, 0}, 5}, {{0, 1}, 2}}, sampling::random_points(rng, 7));
    const auto r = root_profile(p.f5, p.f2);
    REQUIRE(r.f5_parts.size() == 1);
    CHECK(r.f5_parts[0] == Part{1, 5});
    REQUIRE(r.f2_parts.size() == 1);
    CHECK(r.f2_parts[0] == Part{1, 2});
    CHECK(r.common.empty());
  }
  SUBCASE("cusp shape") {
    const auto r = root_profile(x0.pow(3) * x1.pow(2), x1.pow(2));
    CHECK(has_common(r, 2, 2));
  }
  SUBCASE("double root of F5 that is a simple root of F2") {
    const BinaryForm q(std::vector<Rational>{1, 0, 0, 2});  // x0^3 + 2 x1^3, irreducible over Q
    const auto r = root_profile(x0.pow(2) * q, x0 * x1);
    CHECK(has_common(r, 2, 1));
    CHECK(census_of(r)[{2, 1}] == 1);
  }
}

TEST_CASE("stability") {
  const auto generic = representative_pair(CaseId::C1);
  CHECK(stability(generic.f5, generic.f2).verdict == Stability::Stable);
  const auto cusp = stability(x0.pow(3) * x1.pow(2), x1.pow(2));
  CHECK(cusp.verdict == Stability::StrictlySemistable);
  CHECK(cusp.max_weight == 6);
  const auto bad = stability(x0.pow(4) * x1, x1.pow(2));
  CHECK(bad.verdict == Stability::Unstable);
  CHECK(bad.max_weight == 8);
  CHECK(bad.witness.has_value());
  CHECK(stability(BinaryForm::zero(5), x1.pow(2)).degenerate);
}

TEST_CASE("numeric and prose stability agree on every census shape") {
  const auto shapes = sampling::all_censuses();
  CHECK(shapes.size() == 47);
  int semistable = 0;
  for (const auto& c : shapes) {
    CHECK(numeric_stability(c) == prose_stability(c));
    semistable += numeric_stability(c) == Stability::StrictlySemistable;
  }
  CHECK(semistable > 0);
}

TEST_CASE("table rows classify to themselves") {
  CHECK(all_cases().size() == 19);
  for (CaseId id : all_cases()) {
    CAPTURE(to_string(id));
    const auto p = representative_pair(id);
    const auto c = classify_case(p.f5, p.f2);
    CHECK(c.case_id == id);
    CHECK(c.type_vector == table1_row(id).type_vector);
    CHECK(c.nodes == table1_row(id).nodes);
    CHECK(c.eckardt == table1_row(id).eckardt);
    int sum = 0;
    for (int t : c.type_vector) sum += t;
    CHECK(sum == 12);
  }
}

TEST_CASE("documented classification examples") {
  SUBCASE("case 1") {
    const auto p = pair_from_points({{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}}, {{1, 3}, {1, -3}});
    const auto c = classify_case(p.f5, p.f2);
    CHECK(c.case_id == CaseId::C1);
    CHECK(c.type_vector == std::vector<int>{2, 2, 2, 2, 2, 1, 1});
  }
  SUBCASE("case 2: one simple common root") {
    const auto p = pair_from_points({{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}}, {{1, 0}, {1, -3}});
    const auto c = classify_case(p.f5, p.f2);
    CHECK(c.case_id == CaseId::C2);
    CHECK(c.eckardt == 1);
  }
  SUBCASE("case 8*: double root of F2 at a simple root of F5") {
    const auto p = pair_from_points({{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}}, {{1, 2}, {1, 2}});
    const auto c = classify_case(p.f5, p.f2);
    CHECK(c.case_id == CaseId::C8Star);
    CHECK(c.nodes == 2);
  }
  SUBCASE("cusp") {
    CHECK(is_cusp_configuration(x0.pow(3) * x1.pow(2), x1.pow(2)));
    CHECK_FALSE(is_cusp_configuration(x0.pow(3) * x1.pow(2), x0 * x1));
    const auto g = representative_pair(CaseId::C1);
    CHECK_FALSE(is_cusp_configuration(g.f5, g.f2));
    CHECK(classify_case(x0.pow(3) * x1.pow(2), x1.pow(2)).case_id == CaseId::Cusp);
  }
  CHECK_THROWS_AS(classify_case(x0.pow(4) * x1, x1.pow(2)), DomainError);
  CHECK_THROWS_AS(classify_case(x0, x1), DomainError);
}

TEST_CASE("classification is GL(2)-invariant") {
  sampling::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& row = table1()[static_cast<std::size_t>(sampling::uniform(rng, 0, 18))];
    const auto p = sampling::random_pair_with_census(rng, row.census);
    CAPTURE(p.f5.to_string());
    CAPTURE(p.f2.to_string());
    CHECK(classify_case(p.f5, p.f2).case_id == row.id);
  }
}

TEST_CASE("case labels round trip") {
  for (CaseId id : all_cases()) CHECK(parse_case_id(to_string(id)) == id);
  CHECK(parse_case_id("cusp") == CaseId::Cusp);
  CHECK_THROWS_AS(parse_case_id("18"), ParseError);
}
