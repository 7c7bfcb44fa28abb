#include "k3cubic/fqf.hpp"

#include <algorithm>
#include <sstream>

namespace k3cubic::lattices {

namespace {

constexpr long kEnumerationLimit = 1000000;

RatMatrix reduced(RatMatrix v) {
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j) v(i, j) = i == j ? mod2(v(i, j)) : mod1(v(i, j));
  return v;
}

std::vector<Integer> sorted(std::vector<Integer> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

FiniteQuadraticForm::FiniteQuadraticForm(std::vector<Integer> orders, RatMatrix values) {
  if (values.rows() != orders.size() || !values.is_symmetric())
    throw DomainError("quadratic form table must be square, symmetric and match the generators");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 1) throw DomainError("generator orders must be positive");
    if (orders[i] != 1) keep.push_back(i);
  }
  orders_.reserve(keep.size());
  RatMatrix v(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    orders_.push_back(orders[keep[a]]);
    for (std::size_t b = 0; b < keep.size(); ++b) v(a, b) = values(keep[a], keep[b]);
  }
  values_ = reduced(v);
}

Integer FiniteQuadraticForm::order() const {
  Integer o = 1;
  for (const auto& n : orders_) o *= n;
  return o;
}

Rational FiniteQuadraticForm::q(const std::vector<Integer>& x) const {
  Rational s = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (x[i] == 0) continue;
    s += Rational(x[i] * x[i]) * values_(i, i);
    for (std::size_t j = i + 1; j < orders_.size(); ++j) s += Rational(2 * x[i] * x[j]) * values_(i, j);
  }
  return mod2(s);
}

Rational FiniteQuadraticForm::b(const std::vector<Integer>& x, const std::vector<Integer>& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < orders_.size(); ++j) s += Rational(x[i] * y[j]) * values_(i, j);
  }
  return mod1(s);
}

void FiniteQuadraticForm::for_each(const std::function<void(const std::vector<Integer>&)>& fn) const {
  if (order() > kEnumerationLimit) throw UndecidedError("finite quadratic form too large to enumerate");
  std::vector<Integer> x(orders_.size(), Integer(0));
  while (true) {
    fn(x);
    std::size_t i = 0;
    for (; i < x.size(); ++i) {
      if (++x[i] < orders_[i]) break;
      x[i] = 0;
    }
    if (i == x.size()) return;
  }
}

bool FiniteQuadraticForm::check_axioms() const {
  const std::size_t k = orders_.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (mod2(Rational(orders_[i] * orders_[i]) * values_(i, i)) != 0) return false;
    for (std::size_t j = 0; j < k; ++j)
      if (!is_integral(Rational(orders_[i]) * values_(i, j))) return false;
  }
  std::vector<std::vector<Integer>> gens;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Integer> g(k, Integer(0));
    g[i] = 1;
    gens.push_back(g);
  }
  auto add = [&](const std::vector<Integer>& x, const std::vector<Integer>& y) {
    std::vector<Integer> z(k);
    for (std::size_t i = 0; i < k; ++i) {
      z[i] = x[i] + y[i];
      if (z[i] >= orders_[i]) z[i] -= orders_[i];
    }
    return z;
  };
  const bool exhaustive = order() <= 243;
  std::vector<std::vector<Integer>> all;
  if (exhaustive) for_each([&](const std::vector<Integer>& x) { all.push_back(x); });
  bool ok = true;
  for_each([&](const std::vector<Integer>& x) {
    if (!ok) return;
    const auto& partners = exhaustive ? all : gens;
    for (const auto& y : partners) {
      if (mod2(q(add(x, y)) - q(x) - q(y) - 2 * b(x, y)) != 0) ok = false;
      if (b(x, y) != b(y, x)) ok = false;
    }
    for (int n = 2; n <= 4 && ok; ++n) {
      std::vector<Integer> nx(k);
      for (std::size_t i = 0; i < k; ++i) nx[i] = (Integer(n) * x[i]) % orders_[i];
      if (q(nx) != mod2(Rational(n * n) * q(x))) ok = false;
    }
  });
  return ok;
}

FiniteQuadraticForm discriminant_form(const IntegralLattice& lattice) {
  if (!lattice.is_even()) throw DomainError("odd lattice: discriminant quadratic form undefined mod 2Z");
  const DiscriminantGroup dg(lattice);
  const auto& gens = dg.generators();
  RatMatrix v(gens.size(), gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) v(i, j) = dg.rational_pair(gens[i], gens[j]);
  return FiniteQuadraticForm(dg.orders(), v);
}

FiniteQuadraticForm negated(const FiniteQuadraticForm& form) {
  return FiniteQuadraticForm(form.orders(), Rational(-1) * form.values());
}

FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
  const std::size_t ka = a.generators(), kb = b.generators();
  std::vector<Integer> orders = a.orders();
  orders.insert(orders.end(), b.orders().begin(), b.orders().end());
  RatMatrix v(ka + kb, ka + kb);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < ka; ++j) v(i, j) = a.values()(i, j);
  for (std::size_t i = 0; i < kb; ++i)
    for (std::size_t j = 0; j < kb; ++j) v(ka + i, ka + j) = b.values()(i, j);
  return FiniteQuadraticForm(orders, v);
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  Integer m = abs(n);
  for (Integer p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    out.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) out.push_back(m);
  return out;
}

FiniteQuadraticForm primary_part(const FiniteQuadraticForm& form, const Integer& p) {
  const std::size_t k = form.generators();
  std::vector<Integer> orders(k), mult(k);
  for (std::size_t i = 0; i < k; ++i) {
    Integer n = form.orders()[i], pa = 1;
    while (n % p == 0) {
      n /= p;
      pa *= p;
    }
    orders[i] = pa;
    mult[i] = n;
  }
  RatMatrix v(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) v(i, j) = Rational(mult[i] * mult[j]) * form.values()(i, j);
  return FiniteQuadraticForm(orders, v);
}

std::map<Rational, long> value_census(const FiniteQuadraticForm& form) {
  std::map<Rational, long> census;
  form.for_each([&](const std::vector<Integer>& x) { ++census[form.q(x)]; });
  return census;
}

ElementaryInvariant elementary_invariant(const FiniteQuadraticForm& form, const Integer& p) {
  if (p == 2) throw UndecidedError("elementary invariant needs an odd prime");
  const std::size_t k = form.generators();
  IntMatrix beta(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (form.orders()[i] != p) throw UndecidedError("form is not " + to_string(p) + "-elementary");
    for (std::size_t j = 0; j < k; ++j) {
      const Rational x = Rational(p) * form.values()(i, j);
      if (!is_integral(x)) throw UndecidedError("unexpected denominators in an elementary form");
      beta(i, j) = x.get_num();
    }
  }
  if (k == 0) return {0, 1};
  Integer d = determinant(beta);
  d %= p;
  if (d < 0) d += p;
  if (d == 0) throw DomainError("degenerate finite quadratic form");
  return {static_cast<int>(k), mpz_legendre(d.get_mpz_t(), p.get_mpz_t())};
}

bool isometric_by_search(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b, long limit) {
  if (a.order() != b.order()) return false;
  if (a.order() > limit) throw UndecidedError("group of order " + to_string(a.order()) + " exceeds the isometry search limit");
  if (value_census(a) != value_census(b)) return false;

  struct Element {
    std::vector<Integer> coords;
    Integer order;
    Rational q;
  };
  std::vector<Element> targets;
  b.for_each([&](const std::vector<Integer>& y) {
    Integer ord = 1;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == 0) continue;
      Integer g;
      mpz_gcd(g.get_mpz_t(), y[i].get_mpz_t(), b.orders()[i].get_mpz_t());
      const Integer oi = b.orders()[i] / g;
      mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), oi.get_mpz_t());
    }
    targets.push_back({y, ord, b.q(y)});
  });

  const std::size_t k = a.generators();
  std::vector<std::size_t> chosen(k);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == k) return true;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      const auto& y = targets[t];
      if (a.orders()[i] % y.order != 0) continue;
      if (y.q != a.values()(i, i)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (b.b(y.coords, targets[chosen[j]].coords) != a.values()(i, j)) ok = false;
      if (!ok) continue;
      chosen[i] = t;
      if (extend(i + 1)) return true;
    }
    return false;
  };
  // Nondegeneracy of b makes any such homomorphism injective, hence bijective.
  return extend(0);
}

bool fqf_isometric(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
  if (a.order() != b.order()) return false;
  for (const auto& p : prime_divisors(a.order())) {
    const auto pa = primary_part(a, p);
    const auto pb = primary_part(b, p);
    if (sorted(pa.orders()) != sorted(pb.orders())) return false;
    const bool elementary =
        p != 2 && std::all_of(pa.orders().begin(), pa.orders().end(), [&](const Integer& n) { return n == p; });
    if (elementary) {
      if (!(elementary_invariant(pa, p) == elementary_invariant(pb, p))) return false;
    } else if (!isometric_by_search(pa, pb)) {
      return false;
    }
  }
  return true;
}

std::string group_structure(const FiniteQuadraticForm& form) {
  if (form.generators() == 0) return "0";
  std::map<Integer, int> cyclic;
  for (const auto& p : prime_divisors(form.order())) {
    const auto part = primary_part(form, p);
    for (const auto& n : part.orders()) ++cyclic[n];
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : cyclic) {
    if (!first) os << "+";
    first = false;
    if (c == 1)
      os << "Z/" << n;
    else
      os << "(Z/" << n << ")^" << c;
  }
  return os.str();
}

std::string describe(const FiniteQuadraticForm& form) {
  std::ostringstream os;
  os << group_structure(form) << " q=[";
  for (std::size_t i = 0; i < form.generators(); ++i) os << (i ? "," : "") << to_string(form.values()(i, i));
  os << "]";
  return os.str();
}

}  // namespace k3cubic::lattices
