#include "k3cubic/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3cubic {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  Exponents e(nvars, 0);
  e.at(i) = 1;
  return monomial(e);
}

Poly Poly::monomial(const Exponents& e, const Rational& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

Poly Poly::linear(const std::vector<Rational>& c) {
  Poly p(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    Exponents e(c.size(), 0);
    e[i] = 1;
    p.add_term(e, c[i]);
  }
  return p;
}

Rational Poly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Poly::evaluate(const std::vector<Rational>& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("point has the wrong number of coordinates");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Poly Poly::compose(const std::vector<Poly>& images) const {
  if (images.size() != nvars_) throw std::invalid_argument("composition needs one image per variable");
  const std::size_t m = images.empty() ? 0 : images.front().nvars();
  // cache powers of each image
  std::vector<std::vector<Poly>> powers(nvars_);
  Poly out(m);
  for (const auto& [e, c] : terms_) {
    Poly t = Poly::constant(m, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Poly::constant(m, 1));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[e[i]];
    }
    out = out + t;
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  Poly c = a;
  for (const auto& [e, v] : b.terms_) c.add_term(e, v);
  return c;
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rational(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  Poly c(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, va] : a.terms_)
    for (const auto& [eb, vb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      c.add_term(e, va * vb);
    }
  return c;
}

Poly operator*(const Rational& s, const Poly& a) {
  Poly c(a.nvars_);
  if (s == 0) return c;
  for (const auto& [e, v] : a.terms_) c.terms_.emplace(e, s * v);
  return c;
}

Poly Poly::pow(int e) const {
  Poly r = Poly::constant(nvars_, 1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    bool any = false;
    if (a != 1) {
      os << k3cubic::to_string(a);
      any = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (any ? "*" : "") << "x" << i;
      if (e[i] > 1) os << "^" << e[i];
      any = true;
    }
    if (!any) os << "1";
  }
  return os.str();
}

std::vector<Exponents> monomials(std::size_t n, int degree) {
  std::vector<Exponents> out;
  Exponents e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n == 0) return out;
  rec(rec, 0, degree);
  return out;
}

}  // namespace k3cubic
