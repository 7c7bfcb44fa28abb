#include <doctest.h>

#include "k3cubic/eisenstein.hpp"
#include "k3cubic/sampling.hpp"

using namespace k3cubic;
using namespace k3cubic::eisenstein;

namespace {

TVector basis(std::size_t i) {
  TVector e(10, 0);
  e[i] = 1;
  return e;
}

TVector random_vector(sampling::Rng& rng) {
  TVector x(10);
  for (auto& c : x) c = sampling::uniform(rng, -6, 6);
  return x;
}

std::vector<Rational> as_rational(const TVector& x) { return {x.begin(), x.end()}; }

}  // namespace

TEST_CASE("Eisenstein integers") {
  const EisensteinInt zeta{0, 1};
  CHECK(zeta * zeta * zeta == EisensteinInt{1, 0});
  CHECK(sqrt_minus_3() * sqrt_minus_3() == EisensteinInt{-3, 0});
  CHECK(EisensteinInt{2, 1}.norm() == 3);
  CHECK((EisensteinInt{2, 1} * EisensteinInt{2, 1}.conj()) == EisensteinInt{3, 0});
}

TEST_CASE("rho") {
  const auto r = rho_check();
  CHECK(r.cube_is_identity);
  CHECK(r.is_isometry);
  CHECK(r.nontrivial);
  CHECK(r.no_fixed_vectors);
  CHECK(r.char_poly_ok);
  CHECK(r.char_poly == std::vector<Rational>{1, 5, 15, 30, 45, 51, 45, 30, 15, 5, 1});
  // zeta r_1 = r_1'
  CHECK(scalar_action({0, 1}, basis(0)) == basis(1));
}

TEST_CASE("module structure") {
  sampling::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_vector(rng);
    CHECK(from_module(to_module(x)) == x);
    const auto y = scalar_action(sqrt_minus_3(), scalar_action(sqrt_minus_3(), x));
    TVector m3 = x;
    for (auto& c : m3) c *= -3;
    CHECK(y == m3);
  }
}

TEST_CASE("Hermitian form") {
  const auto h = hermitian_check();
  CHECK(h.pairing_ok);
  CHECK(h.hermitian_symmetry_ok);
  CHECK(h.positive == 1);
  CHECK(h.negative == 4);
  CHECK(hermitian(to_module(basis(0)), to_module(basis(0))) == EisensteinInt{1, 0});
  CHECK(hermitian(to_module(basis(2)), to_module(basis(2))) == EisensteinInt{-1, 0});
  CHECK(hermitian(to_module(basis(0)), to_module(basis(4))) == EisensteinInt{0, 0});
  sampling::Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_vector(rng), y = random_vector(rng);
    CHECK(hermitian(to_module(x), to_module(y)).twice_real() == t_pair(x, y));
    // z zbar = -(r,r)/2 for r = z r_i in a negative definite block
    const EisensteinInt z{x[0], x[1]};
    const auto r = scalar_action(z, basis(6));
    CHECK(Rational(z.norm()) == -Rational(t_pair(r, r)) / 2);
  }
}

TEST_CASE("the map h") {
  // h(r_i)^2 is 2/3 on the positive block and -2/3 on negative blocks
  CHECK(t_pair(h_map(basis(0)), h_map(basis(0))) == Rational(2, 3));
  CHECK(t_pair(h_map(basis(2)), h_map(basis(2))) == Rational(-2, 3));
  sampling::Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_vector(rng);
    auto minus_x = as_rational(x);
    for (auto& c : minus_x) c = -c;
    CHECK(h_map(scalar_action(sqrt_minus_3(), x)) == minus_x);
    const Rational hh = t_pair(h_map(x), h_map(x));
    const Integer xx = t_pair(x, x);
    CHECK(hh == Rational(xx) / 3);
    CHECK(mod2(hh + Rational(2, 3) * xx) == 0);
  }
}

TEST_CASE("discriminant group of T") {
  const auto d = discriminant_identification();
  CHECK(d.discriminant_order == 243);
  CHECK(d.kernel_index == 243);
  CHECK(d.h_lands_in_dual);
  CHECK(d.surjective);
  CHECK(d.kernel_contained);
  CHECK(d.rho_trivial);
  CHECK(d.form_matches);
  CHECK(residue(basis(1)) == std::array<int, 5>{1, 0, 0, 0, 0});
}
