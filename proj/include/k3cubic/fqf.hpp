#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "k3cubic/lattice.hpp"

namespace k3cubic::lattices {

/// Finite abelian group with a Q/2Z-valued quadratic form, presented by
/// generators g_i of order n_i (the group is the direct sum of the cyclic
/// groups they span) and the rational matrix (g_i, g_j).
class FiniteQuadraticForm {
 public:
  FiniteQuadraticForm() = default;
  FiniteQuadraticForm(std::vector<Integer> orders, RatMatrix values);

  const std::vector<Integer>& orders() const { return orders_; }
  /// Diagonal entries reduced mod 2, off-diagonal entries mod 1.
  const RatMatrix& values() const { return values_; }
  std::size_t generators() const { return orders_.size(); }
  Integer order() const;

  /// q(x) in [0, 2) for x given in generator coordinates.
  Rational q(const std::vector<Integer>& x) const;
  /// b(x, y) in [0, 1).
  Rational b(const std::vector<Integer>& x, const std::vector<Integer>& y) const;

  /// Calls fn on every element (coordinate tuple); order must be <= limit.
  void for_each(const std::function<void(const std::vector<Integer>&)>& fn) const;

  /// Verifies q(nx) = n^2 q(x), q(x+y)-q(x)-q(y) = 2b(x,y) and the
  /// well-definedness of the generator table. Exhaustive for small groups.
  bool check_axioms() const;

 private:
  std::vector<Integer> orders_;
  RatMatrix values_;
};

/// Discriminant form of an even nondegenerate lattice.
FiniteQuadraticForm discriminant_form(const IntegralLattice& lattice);

FiniteQuadraticForm negated(const FiniteQuadraticForm& form);
FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);

/// The p-primary component.
FiniteQuadraticForm primary_part(const FiniteQuadraticForm& form, const Integer& p);
std::vector<Integer> prime_divisors(const Integer& n);

/// Number of elements with each value of q.
std::map<Rational, long> value_census(const FiniteQuadraticForm& form);

/// Invariant of a nondegenerate form on (Z/p)^r, p odd: r and the Legendre
/// symbol of det of the Z/p-valued bilinear matrix p*b(g_i, g_j).
struct ElementaryInvariant {
  int rank;
  int det_symbol;  // +1 or -1
  friend bool operator==(const ElementaryInvariant&, const ElementaryInvariant&) = default;
};
/// Throws UndecidedError when the form is not p-elementary for an odd p.
ElementaryInvariant elementary_invariant(const FiniteQuadraticForm& form, const Integer& p);

/// Exhaustive search for an isometry (generator images preserving order,
/// q and b). Throws UndecidedError above `limit` elements.
bool isometric_by_search(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b, long limit = 4096);

/// Decides isometry prime by prime: odd elementary parts by their invariant,
/// everything else by search. Throws UndecidedError when neither applies.
bool fqf_isometric(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);

/// Human-readable summary such as "(Z/3)^5" plus the generator values.
std::string describe(const FiniteQuadraticForm& form);
std::string group_structure(const FiniteQuadraticForm& form);

}  // namespace k3cubic::lattices
