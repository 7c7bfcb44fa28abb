#include <doctest.h>

#include "k3cubic/fqf.hpp"
#include "k3cubic/lattice.hpp"
#include "k3cubic/picard.hpp"

using namespace k3cubic;
using namespace k3cubic::lattices;

namespace {

FiniteQuadraticForm qf(const char* expr) { return discriminant_form(parse_lattice_expr(expr).build()); }

}  // namespace

TEST_CASE("named lattices") {
  CHECK(named_lattice("U").gram() == IntMatrix{{0, 1}, {1, 0}});
  CHECK(named_lattice("A2").gram() == IntMatrix{{-2, 1}, {1, -2}});
  CHECK(named_lattice("E8").determinant() == 1);
  CHECK(named_lattice("E6").determinant() == 3);
  CHECK(named_lattice("D4").determinant() == 4);
  CHECK(scale(named_lattice("A2"), -1).gram() == IntMatrix{{2, -1}, {-1, 2}});
  CHECK_THROWS_AS(named_lattice("Z9"), DomainError);
  CHECK_FALSE(named_lattice("I(1,6)").is_even());
}

TEST_CASE("lattice expressions") {
  const auto e = parse_lattice_expr("U+E6+A2^3+A2(-1)");
  REQUIRE(e.components.size() == 4);
  CHECK(e.components[2] == Component{"A2", 1, 3});
  CHECK(e.components[3] == Component{"A2", -1, 1});
  CHECK(e.to_string() == "U+E6+A2^3+A2(-1)");
  CHECK(e.build().rank() == 16);
  CHECK_THROWS_AS(parse_lattice_expr("A2("), ParseError);
  CHECK(abs(parse_lattice_expr("U+A2^5").build().determinant()) == 243);
}

TEST_CASE("signatures") {
  CHECK(signature(named_lattice("U")) == Signature{1, 1, 0});
  CHECK(signature(parse_lattice_expr("A2(-1)+A2^4").build()) == Signature{2, 8, 0});
  CHECK(signature(parse_lattice_expr("U+A2^5").build()) == Signature{1, 11, 0});
  CHECK(signature(IntegralLattice(IntMatrix{{1, 1}, {1, 1}})).radical == 1);
}

TEST_CASE("Smith normal form") {
  const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const auto s = smith_normal_form(a);
  CHECK(s.diagonal == std::vector<Integer>{2, 6, 12});
  CHECK(s.u * a * s.v == s.s);
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
}

TEST_CASE("discriminant forms") {
  const auto a2 = qf("A2");
  CHECK(a2.order() == 3);
  CHECK(a2.values()(0, 0) == Rational(4, 3));
  CHECK(qf("U").order() == 1);
  CHECK(qf("E8").order() == 1);
  CHECK(group_structure(qf("U+A2^5")) == "(Z/3)^5");
  CHECK(group_structure(qf("D4")) == "(Z/2)^2");
  CHECK(value_census(qf("E6")) == value_census(negated(a2)));
  CHECK_THROWS_AS(qf("I(1,6)"), DomainError);
  for (const char* e : {"A2", "E6", "D4", "A2(-2)", "U+D4+A2^4", "A2(-1)+A2(2)^2"}) {
    CAPTURE(e);
    CHECK(qf(e).check_axioms());
  }
}

TEST_CASE("discriminant form identities") {
  CHECK(fqf_isometric(qf("E6"), negated(qf("A2"))));
  CHECK(fqf_isometric(qf("A2(-1)"), negated(qf("A2"))));
  CHECK(fqf_isometric(direct_sum(qf("A2"), qf("A2")), direct_sum(qf("A2(-1)"), qf("A2(-1)"))));
  CHECK(fqf_isometric(qf("A2(-2)"), direct_sum(qf("D4"), qf("A2"))));
  CHECK_FALSE(fqf_isometric(qf("A2"), qf("A2(-1)")));
  CHECK_FALSE(fqf_isometric(qf("A2"), qf("D4")));
  CHECK_FALSE(fqf_isometric(qf("A2(-2)"), direct_sum(qf("D4"), qf("A2(-1)"))));
  CHECK(isometric_by_search(qf("E6"), negated(qf("A2"))));
}

TEST_CASE("short vectors") {
  CHECK(short_vectors(named_lattice("A2"), -2).size() == 6);
  CHECK(short_vectors(named_lattice("D4"), -2).size() == 24);
  CHECK(short_vectors(named_lattice("E6"), -2).size() == 72);
  CHECK(short_vectors(named_lattice("E8"), -2).size() == 240);
  CHECK_THROWS_AS(short_vectors(named_lattice("U"), -2), DomainError);
}

TEST_CASE("roots orthogonal to the canonical class of I(1,6)") {
  const auto l = named_lattice("I(1,6)");
  const std::vector<Integer> k{-3, 1, 1, 1, 1, 1, 1};
  const IntMatrix b = orthogonal_complement_basis(l, k);
  REQUIRE(b.cols() == 6);
  IntMatrix g(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) g(i, j) = l.pair(b.column(i), b.column(j));
  const IntegralLattice perp(g);
  CHECK(perp.determinant() == 3);
  CHECK(short_vectors(perp, -2).size() == 72);
}

TEST_CASE("Picard lattice table") {
  CHECK(table2().size() == 17);
  for (const auto& c : table2_verify()) {
    CAPTURE(c.row);
    CHECK(c.rank_m + c.rank_t == 22);
    CHECK(c.pass());
  }
  CHECK(table2_row(binforms::CaseId::C16).picard == "U+E8^2+A2");
  CHECK(table2_row_index(binforms::CaseId::C8Star) == 8);
  CHECK(table2_row_index(binforms::CaseId::C17) == 17);
  CHECK_THROWS_AS(table2_row_index(binforms::CaseId::Cusp), DomainError);
}

TEST_CASE("Shioda-Tate") {
  const auto r1 = shioda_tate_check(binforms::CaseId::C1);
  CHECK(r1.picard_discriminant == 243);
  CHECK(r1.fiber_discriminant_product == 243);
  CHECK(r1.mw_order == 1);
  const auto r2 = shioda_tate_check(binforms::CaseId::C2);
  CHECK(r2.picard_discriminant == 324);
  const auto r4 = shioda_tate_check(binforms::CaseId::C4);
  CHECK(r4.fiber_discriminant_product == 729);
  CHECK(r4.picard_discriminant == 81);
  CHECK(r4.mw_order == 3);
  for (auto id : binforms::all_cases()) CHECK(shioda_tate_check(id).holds);
}
