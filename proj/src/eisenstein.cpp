#include "k3cubic/eisenstein.hpp"

#include <sstream>

#include "k3cubic/lattice.hpp"

namespace k3cubic::eisenstein {

namespace {

constexpr std::size_t kBlocks = 5;
constexpr std::size_t kRank = 2 * kBlocks;

int mod3(const Integer& x) {
  Integer r = x % 3;
  if (r < 0) r += 3;
  return static_cast<int>(r.get_si());
}

TVector basis_vector(std::size_t i) {
  TVector e(kRank, Integer(0));
  e[i] = 1;
  return e;
}

}  // namespace

std::string to_string(const EisensteinInt& z) {
  std::ostringstream os;
  os << z.a << (z.b < 0 ? "-" : "+") << abs(z.b) << "w";
  return os.str();
}

const IntMatrix& t_gram() {
  static const IntMatrix g = [] {
    IntMatrix m(kRank, kRank);
    for (std::size_t k = 0; k < kBlocks; ++k) {
      const int s = k == 0 ? -1 : 1;
      m(2 * k, 2 * k) = -2 * s;
      m(2 * k + 1, 2 * k + 1) = -2 * s;
      m(2 * k, 2 * k + 1) = s;
      m(2 * k + 1, 2 * k) = s;
    }
    return m;
  }();
  return g;
}

const IntMatrix& rho() {
  static const IntMatrix r = [] {
    IntMatrix m(kRank, kRank);
    for (std::size_t k = 0; k < kBlocks; ++k) {
      m(2 * k + 1, 2 * k) = 1;
      m(2 * k, 2 * k + 1) = -1;
      m(2 * k + 1, 2 * k + 1) = -1;
    }
    return m;
  }();
  return r;
}

TVector scalar_action(const EisensteinInt& z, const TVector& x) {
  const TVector rx = rho().apply(x);
  TVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = z.a * x[i] + z.b * rx[i];
  return out;
}

Integer t_pair(const TVector& x, const TVector& y) { return pair(t_gram(), x, y); }

std::vector<Rational> h_map(const TVector& x) {
  const TVector rx = rho().apply(x);
  std::vector<Rational> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = Rational(x[i] + 2 * rx[i], 3);
    out[i].canonicalize();
  }
  return out;
}

Rational t_pair(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  return pair(to_rational(t_gram()), x, y);
}

std::vector<EisensteinInt> to_module(const TVector& x) {
  std::vector<EisensteinInt> z(kBlocks);
  for (std::size_t k = 0; k < kBlocks; ++k) z[k] = {x[2 * k], x[2 * k + 1]};
  return z;
}

TVector from_module(const std::vector<EisensteinInt>& z) {
  TVector x(kRank);
  for (std::size_t k = 0; k < kBlocks; ++k) {
    x[2 * k] = z[k].a;
    x[2 * k + 1] = z[k].b;
  }
  return x;
}

const std::array<int, 5>& hermitian_signs() {
  static const std::array<int, 5> s = {1, -1, -1, -1, -1};
  return s;
}

EisensteinInt hermitian(const std::vector<EisensteinInt>& z, const std::vector<EisensteinInt>& w) {
  EisensteinInt s;
  for (std::size_t k = 0; k < kBlocks; ++k) {
    const EisensteinInt t = z[k] * w[k].conj();
    s = hermitian_signs()[k] > 0 ? s + t : s - t;
  }
  return s;
}

std::array<int, 5> residue(const TVector& x) {
  std::array<int, 5> v{};
  for (std::size_t k = 0; k < kBlocks; ++k) v[k] = mod3(x[2 * k] + x[2 * k + 1]);
  return v;
}

std::array<int, 5> to_standard(const std::array<int, 5>& v) {
  auto m = [](int x) { return ((x % 3) + 3) % 3; };
  return {m(v[0]), m(v[1] + v[2]), m(v[1] - v[2]), m(v[3] + v[4]), m(v[3] - v[4])};
}

RhoReport rho_check() {
  RhoReport r{};
  const IntMatrix& p = rho();
  const IntMatrix id = IntMatrix::identity(kRank);
  r.cube_is_identity = p * p * p == id;
  r.is_isometry = p.transpose() * t_gram() * p == t_gram();
  r.nontrivial = !(p == id);
  r.no_fixed_vectors = determinant(p - id) != 0;
  r.char_poly = characteristic_polynomial(to_rational(p));
  // (t^2 + t + 1)^5 by repeated multiplication
  std::vector<Rational> expected{1};
  for (std::size_t k = 0; k < kBlocks; ++k) {
    std::vector<Rational> next(expected.size() + 2, Rational(0));
    for (std::size_t i = 0; i < expected.size(); ++i)
      for (std::size_t j = 0; j < 3; ++j) next[i + j] += expected[i];
    expected = next;
  }
  r.char_poly_ok = r.char_poly == expected;
  return r;
}

HermitianReport hermitian_check() {
  HermitianReport r{};
  r.pairing_ok = true;
  r.hermitian_symmetry_ok = true;
  for (std::size_t i = 0; i < kRank && r.pairing_ok; ++i)
    for (std::size_t j = 0; j < kRank; ++j) {
      const auto zi = to_module(basis_vector(i));
      const auto zj = to_module(basis_vector(j));
      const EisensteinInt h = hermitian(zi, zj);
      if (h.twice_real() != t_gram()(i, j)) {
        r.pairing_ok = false;
        r.mismatch = "basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        break;
      }
      if (!(hermitian(zj, zi) == h.conj())) r.hermitian_symmetry_ok = false;
    }
  for (int s : hermitian_signs()) (s > 0 ? r.positive : r.negative)++;
  return r;
}

DiscriminantIdentification discriminant_identification() {
  DiscriminantIdentification d{};
  const lattices::IntegralLattice t(t_gram(), "A2(-1)+A2^4");
  const lattices::DiscriminantGroup dg(t);
  d.discriminant_order = dg.order();

  d.h_lands_in_dual = true;
  for (std::size_t i = 0; i < kRank; ++i) d.h_lands_in_dual = d.h_lands_in_dual && dg.in_dual(h_map(basis_vector(i)));

  // images of r_1..r_5 in D(T) = (Z/3)^5 must be independent over F_3
  RatMatrix images(kBlocks, dg.orders().size());
  for (std::size_t k = 0; k < kBlocks; ++k) {
    const auto c = dg.coordinates(h_map(basis_vector(2 * k)));
    for (std::size_t j = 0; j < c.size(); ++j) images(k, j) = Rational(c[j]);
  }
  bool elementary = dg.orders().size() == kBlocks;
  for (const auto& n : dg.orders()) elementary = elementary && n == 3;
  d.surjective = false;
  if (elementary) {
    Integer det = determinant(images).get_num() % 3;
    d.surjective = det != 0;
  }

  const IntMatrix s = IntMatrix::identity(kRank) + Integer(2) * rho();
  d.kernel_index = abs(determinant(s));
  d.kernel_contained = true;
  for (std::size_t i = 0; i < kRank; ++i) {
    const auto hx = h_map(scalar_action(sqrt_minus_3(), basis_vector(i)));
    for (std::size_t j = 0; j < kRank; ++j)
      if (hx[j] != -Rational(i == j ? 1 : 0)) d.kernel_contained = false;
  }

  d.rho_trivial = true;
  const RatMatrix rq = to_rational(rho());
  for (const auto& g : dg.generators()) {
    const auto rg = rq.apply(g);
    for (std::size_t j = 0; j < kRank; ++j)
      if (!is_integral(rg[j] - g[j])) d.rho_trivial = false;
  }

  d.form_matches = true;
  std::array<int, 5> v{};
  for (int code = 0; code < 243; ++code) {
    int c = code;
    TVector x(kRank, Integer(0));
    for (std::size_t k = 0; k < kBlocks; ++k) {
      v[k] = c % 3;
      c /= 3;
      x[2 * k] = v[k];
    }
    const auto hx = h_map(x);
    const Rational qd = mod2(t_pair(hx, hx));
    const auto w = to_standard(residue(x));
    int weight = 0;
    for (int wi : w) weight += wi != 0;
    const Rational qs = mod2(Rational(-4 * weight, 3));
    if (qd != qs || residue(x) != v) d.form_matches = false;
  }
  return d;
}

}  // namespace k3cubic::eisenstein
