#pragma once

#include <map>
#include <string>
#include <vector>

#include "k3cubic/rational.hpp"

namespace k3cubic {

using Exponents = std::vector<int>;

/// Polynomial in a fixed number of variables with rational coefficients.
class Poly {
 public:
  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly monomial(const Exponents& e, const Rational& c = 1);
  /// sum c_i x_i
  static Poly linear(const std::vector<Rational>& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  Rational evaluate(const std::vector<Rational>& x) const;
  /// Replace variable i by images[i] (all images share one variable count).
  Poly compose(const std::vector<Poly>& images) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
  Poly pow(int e) const;

  std::string to_string() const;

 private:
  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;  // no zero coefficients
};

/// Exponent vectors of degree d in n variables, lexicographically
/// decreasing (x0^d first, x_{n-1}^d last).
std::vector<Exponents> monomials(std::size_t n, int degree);

}  // namespace k3cubic
