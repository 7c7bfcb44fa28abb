#include <doctest.h>

#include "k3cubic/cubic.hpp"
#include "k3cubic/sampling.hpp"

using namespace k3cubic;
using namespace k3cubic::cubio;
using binforms::CaseId;

namespace {

const BinaryForm t0 = BinaryForm::linear(1, 0);
const BinaryForm t1 = BinaryForm::linear(0, 1);

CubicForm fermat() {
  std::vector<Rational> c(20, 0);
  const auto mons = monomials(4, 3);
  for (std::size_t i = 0; i < mons.size(); ++i)
    for (int v = 0; v < 4; ++v)
      if (mons[i][static_cast<std::size_t>(v)] == 3) c[i] = 1;
  return CubicForm(c);
}

// A00 = A11 = t0, A01 = 0: F2 = t0^2, F5 = t0 (B0^2 + B1^2)
CubicForm case_8_star() {
  return cubic_from_normal_form(t0, BinaryForm::zero(1), t0, t1 * t1, t0 * t0 + t0 * t1);
}

// A00 = t0, A11 = t1, B0 = B1 = t0 t1: F2 = t0 t1, F5 = t0^2 t1^2 (t0 + t1)
CubicForm case_17() { return cubic_from_normal_form(t0, BinaryForm::zero(1), t1, t0 * t1, t0 * t1); }

}  // namespace

TEST_CASE("lines on cubics") {
  const ProjLine l({1, -1, 0, 0}, {0, 0, 1, -1});
  CHECK(contains_line(fermat(), l));
  CHECK_FALSE(contains_line(fermat(), ProjLine({1, 0, 0, 0}, {0, 1, 0, 0})));
  CHECK(contains_line(case_17(), standard_line_l()));
  CHECK(contains_line(case_17(), standard_line_m()));
  CHECK(skew(standard_line_l(), standard_line_m()));
  CHECK_FALSE(skew(l, ProjLine({1, -1, 0, 0}, {1, 0, 0, 0})));
  CHECK(restrict_to_line(fermat(), l).is_zero());
  CHECK(ProjLine({2, 0, 0, 0}, {1, 1, 0, 0}) == ProjLine({1, 0, 0, 0}, {0, 1, 0, 0}));
}

TEST_CASE("normalization of a normal form") {
  const auto f = case_17();
  const auto n = normalize(f, standard_line_l(), standard_line_m());
  CHECK(n.transform == RatMatrix::identity(4));
  CHECK(n.a00 == t0);
  CHECK(n.a11 == t1);
  CHECK(n.a01.is_zero());
  CHECK(n.reconstruct() == n.form);
  CHECK_THROWS_AS(normalize(f, standard_line_l(), standard_line_l()), DomainError);
  CHECK_THROWS_AS(normalize(fermat(), standard_line_l(), standard_line_m()), DomainError);
}

TEST_CASE("F5 and F2 from A and B") {
  const auto f = cubic_from_normal_form(t0, BinaryForm::zero(1), t1, t0 * t0, t1 * t1);
  const auto r = extract_f5_f2(normalize(f, standard_line_l(), standard_line_m()));
  CHECK(r.f2 == t0 * t1);
  CHECK(r.f5 == t0.pow(4) * t1 + t0 * t1.pow(4));
  CHECK(r.determinant_identity);
  CHECK(r.bordered_determinant == -r.f5);
  CHECK_THROWS_AS(
      extract_f5_f2(normalize(cubic_from_normal_form(t0, t0, t0, t1 * t1, t0 * t0), standard_line_l(),
                              standard_line_m())),
      DomainError);
}

TEST_CASE("bordered determinant identity on random normal forms") {
  sampling::Rng rng(21);
  auto lin = [&] { return BinaryForm::linear(sampling::uniform(rng, -4, 4), sampling::uniform(rng, -4, 4)); };
  auto quad = [&] {
    return BinaryForm(std::vector<Rational>{sampling::uniform(rng, -4, 4), sampling::uniform(rng, -4, 4),
                                            sampling::uniform(rng, -4, 4)});
  };
  int tested = 0;
  while (tested < 100) {
    const auto f = cubic_from_normal_form(lin(), lin(), lin(), quad(), quad());
    const auto n = normalize(f, standard_line_l(), standard_line_m());
    try {
      const auto r = extract_f5_f2(n);
      CHECK(r.determinant_identity);
      CHECK(r.f5.degree() == 5);
      CHECK(r.f2.degree() == 2);
      ++tested;
    } catch (const DomainError&) {
    }
  }
}

TEST_CASE("analysis of special cubics") {
  const auto a = analyze(case_8_star(), standard_line_l(), standard_line_m());
  CHECK(a.pair_case.case_id == CaseId::C8Star);
  REQUIRE(a.stratum.has_value());
  CHECK(strata::to_string(*a.stratum) == "Delta_2^(2)");
  CHECK(a.pair_case.nodes == 2);
  CHECK(a.fibers.euler_total == 24);

  const auto b = analyze(case_17(), standard_line_l(), standard_line_m());
  CHECK(b.pair_case.case_id == CaseId::C17);
  REQUIRE(b.stratum.has_value());
  CHECK(strata::to_string(*b.stratum) == "Delta_4^(2)");
  CHECK(b.pair_case.nodes == 4);
  CHECK(b.picard == "U+E8^2+A2");
}

TEST_CASE("classification survives projective transformations") {
  sampling::Rng rng(8);
  for (const auto& f : {case_8_star(), case_17()}) {
    const auto base = analyze(f, standard_line_l(), standard_line_m());
    for (int i = 0; i < 10; ++i) {
      const RatMatrix c = sampling::random_gl4(rng, 2);
      const RatMatrix ci = inverse(c);
      const auto g = f.transformed(c);
      const auto l = standard_line_l().mapped(ci), m = standard_line_m().mapped(ci);
      CHECK(contains_line(g, l));
      const auto a = analyze(g, l, m);
      CHECK(a.pair_case.case_id == base.pair_case.case_id);
      CHECK(a.pair_case.type_vector == base.pair_case.type_vector);
      CHECK(a.stability.verdict == base.stability.verdict);
    }
    // m may be a line of another type on a nodal surface; the node count is the same
    CHECK(analyze(f, standard_line_m(), standard_line_l()).pair_case.nodes == base.pair_case.nodes);
  }
}

TEST_CASE("cubic through six points") {
  SUBCASE("degenerate positions are named") {
    std::vector<Point2> collinear{{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {1, 1, 1}, {2, 3, 1}, {3, -1, 1}};
    CHECK_THROWS_WITH_AS(check_general_position(collinear), "points p1, p2, p3 are collinear", DomainError);
    std::vector<Point2> repeated{{0, 0, 1}, {0, 0, 2}, {2, 0, 1}, {1, 1, 1}, {2, 3, 1}, {3, -1, 1}};
    CHECK_THROWS_AS(check_general_position(repeated), DomainError);
    // six points on the conic x y = z^2
    std::vector<Point2> conic{{1, 1, 1}, {4, 1, 2}, {1, 4, 2}, {9, 1, 3}, {1, 9, 3}, {-1, -1, 1}};
    CHECK_THROWS_AS(check_general_position(conic), DomainError);
  }
  SUBCASE("random points") {
    sampling::Rng rng(17);
    for (int trial = 0; trial < 3; ++trial) {
      const auto pts = sampling::random_general_points(rng, 7);
      const auto r = cubic_from_points(pts);
      CHECK(r.anticanonical.size() == 4);
      for (const auto& c : r.anticanonical)
        for (const auto& p : pts) CHECK(c.evaluate({p[0], p[1], p[2]}) == 0);
      REQUIRE(r.lines.size() == 21);
      for (const auto& l : r.lines) CHECK(contains_line(r.cubic, l.line));
      CHECK(skew(r.default_l(), r.default_m()));
      const auto a = analyze(r.cubic, r.default_l(), r.default_m());
      CHECK(a.pair_case.case_id == CaseId::C1);
      CHECK(a.pair.determinant_identity);
      CHECK_FALSE(a.stratum.has_value());
      // two further skew pairs give a case without nodes
      const auto b = analyze(r.cubic, r.line_of_class({1, 0, 0, 0, -1, -1, 0}).line,
                             r.line_of_class({1, 0, 0, 0, -1, 0, -1}).line);
      CHECK(b.pair_case.nodes == 0);
      const auto c = analyze(r.cubic, r.line_of_class({2, 0, -1, -1, -1, -1, -1}).line,
                             r.line_of_class({2, -1, 0, -1, -1, -1, -1}).line);
      CHECK(c.pair_case.nodes == 0);
    }
  }
}
