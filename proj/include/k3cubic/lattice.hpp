#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "k3cubic/matrix.hpp"

namespace k3cubic::lattices {

/// Integral lattice given abstractly by its Gram matrix.
class IntegralLattice {
 public:
  IntegralLattice() = default;
  explicit IntegralLattice(IntMatrix gram, std::string name = {});

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const std::string& name() const { return name_; }

  bool is_even() const;
  Integer determinant() const;
  Integer pair(const std::vector<Integer>& x, const std::vector<Integer>& y) const;
  Integer norm(const std::vector<Integer>& x) const { return pair(x, x); }

  friend bool operator==(const IntegralLattice& a, const IntegralLattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
  std::string name_;
};

/// U, A1..A8, D4..D8, E6, E7, E8, I(1,6). Root lattices are negative definite
/// (Cartan matrix times -1). Throws DomainError for unknown names.
IntegralLattice named_lattice(std::string_view name);

/// L(n): the form multiplied by n.
IntegralLattice scale(const IntegralLattice& lattice, long n);
IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);

/// One summand of a lattice expression such as "A2(-1)^3".
struct Component {
  std::string name;
  long scale = 1;
  int copies = 1;
  friend bool operator==(const Component&, const Component&) = default;
};

/// Orthogonal direct sum written like "U+E6+A2^3+A2(-1)".
struct LatticeExpr {
  std::vector<Component> components;

  IntegralLattice build() const;
  std::string to_string() const;
  friend bool operator==(const LatticeExpr&, const LatticeExpr&) = default;
};

LatticeExpr parse_lattice_expr(std::string_view text);

struct Signature {
  int positive = 0;
  int negative = 0;
  int radical = 0;  // nonzero for degenerate lattices
  bool degenerate() const { return radical != 0; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Sylvester inertia via exact rational congruence diagonalization.
Signature signature(const IntegralLattice& lattice);

/// U * A * V = S with U, V unimodular and S diagonal, s_i | s_{i+1}, s_i >= 0.
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  IntMatrix s;
  std::vector<Integer> diagonal;
};
SmithForm smith_normal_form(const IntMatrix& a);

/// L^* / L for an even nondegenerate lattice, with the dual-basis generators
/// derived from the Smith form of the Gram matrix.
class DiscriminantGroup {
 public:
  explicit DiscriminantGroup(const IntegralLattice& lattice);

  const IntegralLattice& lattice() const { return lattice_; }
  const SmithForm& smith() const { return smith_; }
  /// Orders of the nontrivial cyclic generators.
  const std::vector<Integer>& orders() const { return orders_; }
  /// Generator i as a vector of L (x) Q in lattice coordinates.
  const std::vector<std::vector<Rational>>& generators() const { return generators_; }
  Integer order() const;

  /// True when v lies in L^*, i.e. pairs integrally with L.
  bool in_dual(const std::vector<Rational>& v) const;
  /// Coordinates of v + L with respect to the generators (v must lie in L^*).
  std::vector<Integer> coordinates(const std::vector<Rational>& v) const;
  /// Lift of a coordinate tuple to L^*.
  std::vector<Rational> lift(const std::vector<Integer>& coords) const;

  Rational rational_pair(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

 private:
  IntegralLattice lattice_;
  SmithForm smith_;
  std::vector<std::size_t> index_;  // Smith diagonal position of each generator
  std::vector<Integer> orders_;
  std::vector<std::vector<Rational>> generators_;
};

/// All vectors of the given norm in a definite lattice (rank <= 12).
/// Throws DomainError for indefinite lattices.
std::vector<std::vector<Integer>> short_vectors(const IntegralLattice& lattice, const Integer& norm);

/// Z-basis (as columns of integer coordinates in the ambient lattice) of the
/// orthogonal complement of v.
IntMatrix orthogonal_complement_basis(const IntegralLattice& ambient, const std::vector<Integer>& v);

}  // namespace k3cubic::lattices
