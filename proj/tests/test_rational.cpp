#include <doctest.h>

#include "k3cubic/binary_form.hpp"
#include "k3cubic/matrix.hpp"
#include "k3cubic/mpoly.hpp"
#include "k3cubic/rational.hpp"

using namespace k3cubic;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -7 ") == Rational(-7));
  CHECK(parse_rational("+4/-2") == Rational(-2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(parse_rational_list("1,2/3,-4").size() == 3);
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(mod2(Rational(-2, 3)) == Rational(4, 3));
  CHECK(mod1(Rational(7, 3)) == Rational(1, 3));
}

TEST_CASE("exact linear algebra") {
  RatMatrix m{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}};
  CHECK(determinant(m) == 4);
  const RatMatrix inv = inverse(m);
  CHECK(m * inv == RatMatrix::identity(3));
  RatMatrix s{{1, 2, 3}, {2, 4, 6}};
  CHECK(rank(s) == 1);
  const auto ns = nullspace(s);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) CHECK(s.apply(v) == std::vector<Rational>{0, 0});
  CHECK_THROWS_AS(inverse(s * s.transpose()), DomainError);
  // det(tI - m) = t^3 - 6t^2 + 10t - 4
  CHECK(characteristic_polynomial(m) == std::vector<Rational>{-4, 10, -6, 1});
}

TEST_CASE("squarefree decomposition") {
  const BinaryForm x0 = BinaryForm::linear(1, 0), x1 = BinaryForm::linear(0, 1);
  SUBCASE("monomial") {
    const auto d = squarefree_decomposition(x0.pow(3) * x1.pow(2));
    REQUIRE(d.size() == 2);
    CHECK(d[0].first == 3);
    CHECK(d[0].second == x0);
    CHECK(d[1].first == 2);
    CHECK(d[1].second == x1);
  }
  SUBCASE("squarefree quintic") {
    const BinaryForm f(std::vector<Rational>{1, 0, 0, 0, -1, 0});  // x0^5 - x0 x1^4
    const auto d = squarefree_decomposition(f);
    REQUIRE(d.size() == 1);
    CHECK(d[0].first == 1);
    CHECK(proportional(d[0].second, f));
  }
  SUBCASE("repeated factor") {
    const BinaryForm a = BinaryForm::linear(1, -1), b = BinaryForm::linear(1, 1);
    const auto d = squarefree_decomposition(a.pow(2) * b);
    REQUIRE(d.size() == 2);
    CHECK(d[0].first == 2);
    CHECK(proportional(d[0].second, a));
    CHECK(proportional(d[1].second, b));
  }
  CHECK_THROWS_AS(squarefree_decomposition(BinaryForm::zero(3)), DomainError);
}

TEST_CASE("binary form operations") {
  const BinaryForm f(std::vector<Rational>{1, 0, -1});  // x0^2 - x1^2
  CHECK(f.evaluate(1, 1) == 0);
  CHECK(f.substitute(1, 1, 0, 1) == BinaryForm(std::vector<Rational>{1, 2, 0}));
  CHECK(gcd(f, BinaryForm::linear(1, 1)).degree() == 1);
  CHECK(gcd(f, BinaryForm::linear(1, 2)).degree() == 0);
  CHECK(exact_divide(f, BinaryForm::linear(1, -1)) == BinaryForm::linear(1, 1));
  CHECK_THROWS_AS(f + BinaryForm::linear(1, 1), std::invalid_argument);
  CHECK(BinaryForm::vanishing_at(2, 3).evaluate(2, 3) == 0);
  CHECK(BinaryForm(std::vector<Rational>{0, 0, Rational(1, 2)}).x1_multiplicity() == 2);
}

TEST_CASE("polynomials in several variables") {
  const Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  const Poly f = (x + y).pow(3);
  CHECK(f.evaluate({1, 2}) == 27);
  CHECK(monomials(4, 3).size() == 20);
  CHECK(monomials(2, 2).front() == Exponents{2, 0});
  const Poly g = f.compose({x - y, y});
  CHECK(g == x.pow(3));
}
