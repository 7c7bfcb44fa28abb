#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3cubic/rational.hpp"

namespace k3cubic {

/// Homogeneous form of degree d in (x0, x1) over Q.
///
/// Coefficient i multiplies x0^(d-i) x1^i. The root at infinity is the
/// point x1 = 0, i.e. (1:0); its multiplicity is the power of x1 dividing
/// the form, which equals the number of leading zero coefficients.
class BinaryForm {
 public:
  BinaryForm() : coeffs_{Rational(0)} {}
  explicit BinaryForm(std::vector<Rational> coefficients);

  /// The zero form of the given degree.
  static BinaryForm zero(int degree);
  /// c * x0^(degree - x1_power) * x1^x1_power
  static BinaryForm monomial(int degree, int x1_power, const Rational& c = 1);
  /// a*x0 + b*x1
  static BinaryForm linear(const Rational& a, const Rational& b);
  /// The linear form vanishing at the point (p0 : p1), namely p1*x0 - p0*x1.
  static BinaryForm vanishing_at(const Rational& p0, const Rational& p1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coefficient(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

  bool is_zero() const;
  /// True when the form is a nonzero constant multiple of x0^0 x1^0 (degree 0).
  bool is_constant() const { return degree() == 0 && !is_zero(); }

  /// Power of x1 dividing the form (multiplicity of the root (1:0)).
  int x1_multiplicity() const;

  /// Integer coefficients with content 1 and positive first nonzero coefficient.
  BinaryForm canonical() const;

  Rational evaluate(const Rational& x0, const Rational& x1) const;

  /// f(a*x0 + b*x1, c*x0 + d*x1).
  BinaryForm substitute(const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d) const;

  BinaryForm pow(int e) const;

  friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator-(const BinaryForm& f);
  friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator*(const Rational& s, const BinaryForm& f);
  friend bool operator==(const BinaryForm& f, const BinaryForm& g) { return f.coeffs_ == g.coeffs_; }

  /// True when f and g agree up to a nonzero rational factor.
  friend bool proportional(const BinaryForm& f, const BinaryForm& g);

  /// Readable form such as "x0^2*x1 - 3*x1^3".
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Canonical homogeneous gcd (degree 0 form "1" when coprime).
BinaryForm gcd(const BinaryForm& f, const BinaryForm& g);

/// Exact quotient f / g; throws DomainError if g does not divide f.
BinaryForm exact_divide(const BinaryForm& f, const BinaryForm& g);

/// Squarefree decomposition f = c * prod factor_i^mult_i, factors canonical,
/// squarefree and pairwise coprime; sorted by decreasing multiplicity.
/// The exact power of x1 is split off first and merged into the factor of
/// its multiplicity. Throws DomainError("zero form") on the zero form.
std::vector<std::pair<int, BinaryForm>> squarefree_decomposition(const BinaryForm& f);

}  // namespace k3cubic
