#pragma once

#include <map>
#include <string>
#include <vector>

#include "k3cubic/binforms.hpp"
#include "k3cubic/lattice.hpp"

namespace k3cubic::kodaira {

enum class FiberType { Smooth, II, IV, I0star, IVstar, IIstar };

std::string to_string(FiberType t);
FiberType parse_fiber_type(const std::string& label);
int euler_number(FiberType t);
/// Root lattice spanned by the components missing the zero section
/// ("" for Smooth and II).
std::string root_lattice(FiberType t);

/// Fibre of y^2 = x^3 + g at a zero of g of order k (0 <= k <= 5).
FiberType fiber_type_from_multiplicity(int k);

/// g = F5^2 F2, canonicalized.
BinaryForm weierstrass_sextic(const BinaryForm& f5, const BinaryForm& f2);

struct Fiber {
  FiberType type;
  BinaryForm locus;  // squarefree; its degree is the number of geometric fibres
  int geometric_count() const { return locus.degree(); }
};

/// Multiset of fibre types with multiplicities.
using FiberCounts = std::map<FiberType, int>;

struct FiberConfiguration {
  std::vector<Fiber> fibers;  // sorted by type, most singular first
  int euler_total = 0;

  FiberCounts counts() const;
};

/// "5 IV, 2 II" style rendering, most singular type first.
std::string to_string(const FiberCounts& counts);
FiberCounts parse_fiber_counts(const std::string& text);

/// Singular fibres of the elliptic K3 attached to a stable pair; checked
/// against the table row of the pair's case.
FiberConfiguration fiber_configuration(const BinaryForm& f5, const BinaryForm& f2);

/// U plus one root lattice per reducible fibre.
lattices::LatticeExpr trivial_lattice(const FiberCounts& counts);
inline lattices::LatticeExpr trivial_lattice(const FiberConfiguration& config) { return trivial_lattice(config.counts()); }

/// Kodaira column of the pencil-of-conics table for a case.
FiberCounts table_fibers(binforms::CaseId id);

}  // namespace k3cubic::kodaira
