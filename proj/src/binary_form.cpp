#include "k3cubic/binary_form.hpp"

#include <algorithm>
#include <sstream>

namespace k3cubic {

namespace {

// Dense univariate polynomial, index = exponent of t.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly usub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

UPoly uderiv(const UPoly& p) {
  if (p.size() <= 1) return {};
  UPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  trim(d);
  return d;
}

// a = q*b + r
void udivmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.empty()) throw DomainError("division by zero polynomial");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Rational f = r.back() / lead;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    trim(r);
  }
  trim(q);
}

UPoly umonic(UPoly p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

UPoly ugcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly q, r;
    udivmod(a, b, q, r);
    a = std::move(b);
    b = umonic(std::move(r));
  }
  return umonic(a);
}

UPoly uexact_div(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  udivmod(a, b, q, r);
  if (!r.empty()) throw DomainError("inexact polynomial division");
  return q;
}

// f = x1^k * g with g(t, 1) = p(t).
struct Dehomogenized {
  int x1_power;
  UPoly p;
};

Dehomogenized dehomogenize(const BinaryForm& f) {
  const int k = f.x1_multiplicity();
  const int d = f.degree();
  UPoly p(static_cast<std::size_t>(d - k + 1));
  for (int i = k; i <= d; ++i) p[static_cast<std::size_t>(d - i)] = f.coefficient(i);
  trim(p);
  return {k, p};
}

// x1^k * homogenization of p to degree deg(p).
BinaryForm homogenize(int x1_power, const UPoly& p) {
  const int dp = udeg(p);
  std::vector<Rational> c(static_cast<std::size_t>(dp + x1_power + 1), Rational(0));
  for (int j = 0; j <= dp; ++j) c[static_cast<std::size_t>(dp - j + x1_power)] = p[static_cast<std::size_t>(j)];
  return BinaryForm(std::move(c));
}

}  // namespace

BinaryForm::BinaryForm(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
  for (auto& c : coeffs_) c.canonicalize();
}

BinaryForm BinaryForm::zero(int degree) {
  return BinaryForm(std::vector<Rational>(static_cast<std::size_t>(degree + 1), Rational(0)));
}

BinaryForm BinaryForm::monomial(int degree, int x1_power, const Rational& c) {
  BinaryForm f = zero(degree);
  f.coeffs_.at(static_cast<std::size_t>(x1_power)) = c;
  return f;
}

BinaryForm BinaryForm::linear(const Rational& a, const Rational& b) { return BinaryForm({a, b}); }

BinaryForm BinaryForm::vanishing_at(const Rational& p0, const Rational& p1) {
  if (p0 == 0 && p1 == 0) throw DomainError("(0:0) is not a point of P^1");
  return BinaryForm({p1, -p0});
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

int BinaryForm::x1_multiplicity() const {
  if (is_zero()) throw DomainError("zero form");
  int k = 0;
  while (coeffs_[static_cast<std::size_t>(k)] == 0) ++k;
  return k;
}

BinaryForm BinaryForm::canonical() const {
  if (is_zero()) return *this;
  Integer lcm_den = 1;
  for (const auto& c : coeffs_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(coeffs_.size());
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  const auto first = std::find_if(ints.begin(), ints.end(), [](const Integer& v) { return v != 0; });
  if (*first < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (const auto& v : ints) out.emplace_back(Integer(v / content));
  return BinaryForm(std::move(out));
}

Rational BinaryForm::evaluate(const Rational& x0, const Rational& x1) const {
  const int d = degree();
  Rational sum = 0;
  for (int i = 0; i <= d; ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] == 0) continue;
    Rational term = coeffs_[static_cast<std::size_t>(i)];
    for (int k = 0; k < d - i; ++k) term *= x0;
    for (int k = 0; k < i; ++k) term *= x1;
    sum += term;
  }
  return sum;
}

BinaryForm BinaryForm::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  BinaryForm result({Rational(1)});
  BinaryForm base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

BinaryForm BinaryForm::substitute(const Rational& a, const Rational& b, const Rational& c,
                                  const Rational& d) const {
  const int deg = degree();
  const BinaryForm l0 = linear(a, b);
  const BinaryForm l1 = linear(c, d);
  std::vector<BinaryForm> p0{BinaryForm({Rational(1)})}, p1{BinaryForm({Rational(1)})};
  for (int i = 1; i <= deg; ++i) {
    p0.push_back(p0.back() * l0);
    p1.push_back(p1.back() * l1);
  }
  BinaryForm out = zero(deg);
  for (int i = 0; i <= deg; ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] == 0) continue;
    out = out + coeffs_[static_cast<std::size_t>(i)] * (p0[static_cast<std::size_t>(deg - i)] * p1[static_cast<std::size_t>(i)]);
  }
  return out;
}

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("adding forms of different degree");
  std::vector<Rational> c = f.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += g.coeffs_[i];
  return BinaryForm(std::move(c));
}

BinaryForm operator-(const BinaryForm& f) { return Rational(-1) * f; }

BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) { return f + (-g); }

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
  std::vector<Rational> c(f.coeffs_.size() + g.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) c[i + j] += f.coeffs_[i] * g.coeffs_[j];
  }
  return BinaryForm(std::move(c));
}

BinaryForm operator*(const Rational& s, const BinaryForm& f) {
  std::vector<Rational> c = f.coeffs_;
  for (auto& x : c) x *= s;
  return BinaryForm(std::move(c));
}

bool proportional(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree()) return false;
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return f.canonical() == g.canonical();
}

std::string BinaryForm::to_string() const {
  const int d = degree();
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= d; ++i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const int e0 = d - i, e1 = i;
    const bool unit = mag == 1 && (e0 + e1) > 0;
    if (!unit) os << k3cubic::to_string(mag);
    bool need_star = !unit;
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      if (need_star) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      need_star = true;
    };
    var("x0", e0);
    var("x1", e1);
  }
  if (first) os << "0";
  return os.str();
}

BinaryForm gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero()) return g.is_zero() ? g : g.canonical();
  if (g.is_zero()) return f.canonical();
  const auto df = dehomogenize(f);
  const auto dg = dehomogenize(g);
  const UPoly p = ugcd(df.p, dg.p);
  return homogenize(std::min(df.x1_power, dg.x1_power), p).canonical();
}

BinaryForm exact_divide(const BinaryForm& f, const BinaryForm& g) {
  if (g.is_zero()) throw DomainError("division by zero form");
  if (f.is_zero()) return BinaryForm::zero(f.degree() - g.degree());
  const auto df = dehomogenize(f);
  const auto dg = dehomogenize(g);
  if (df.x1_power < dg.x1_power) throw DomainError("inexact binary form division");
  const UPoly q = uexact_div(df.p, dg.p);
  BinaryForm out = homogenize(df.x1_power - dg.x1_power, q);
  if (out.degree() != f.degree() - g.degree()) throw DomainError("inexact binary form division");
  return out;
}

std::vector<std::pair<int, BinaryForm>> squarefree_decomposition(const BinaryForm& f) {
  if (f.is_zero()) throw DomainError("zero form");
  const auto [k, p] = dehomogenize(f);

  // Yun's algorithm over Q.
  std::vector<std::pair<int, UPoly>> parts;
  if (udeg(p) > 0) {
    const UPoly dp = uderiv(p);
    const UPoly a0 = ugcd(p, dp);
    UPoly b = uexact_div(p, a0);
    UPoly c = uexact_div(dp, a0);
    UPoly d = usub(c, uderiv(b));
    int i = 1;
    while (udeg(b) > 0) {
      const UPoly a = ugcd(b, d);
      if (udeg(a) > 0) parts.emplace_back(i, a);
      b = uexact_div(b, a);
      c = uexact_div(d, a);
      d = usub(c, uderiv(b));
      ++i;
    }
  }

  std::vector<std::pair<int, BinaryForm>> out;
  bool placed_x1 = (k == 0);
  for (const auto& [mult, a] : parts) {
    BinaryForm factor = homogenize(0, a);
    if (mult == k) {
      factor = factor * BinaryForm::linear(0, 1);
      placed_x1 = true;
    }
    out.emplace_back(mult, factor.canonical());
  }
  if (!placed_x1) out.emplace_back(k, BinaryForm::linear(0, 1));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  return out;
}

}  // namespace k3cubic
