#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "k3cubic/matrix.hpp"

namespace k3cubic::e6 {

/// Class a_0 e_0 + ... + a_6 e_6 in I(1,6).
using PicClass = std::array<int, 7>;

int pairing(const PicClass& x, const PicClass& y);  // diag(1, -1, ..., -1)
PicClass canonical_class();                         // k = -3 e_0 + e_1 + ... + e_6
PicClass operator+(const PicClass& x, const PicClass& y);
PicClass operator-(const PicClass& x, const PicClass& y);
PicClass scaled(int s, const PicClass& x);
std::string to_string(const PicClass& x);

/// e_i, then e_0 - e_i - e_j, then 2e_0 - sum e + e_i.
const std::vector<PicClass>& lines27();
/// e_i - e_j, e_0 - e_i - e_j - e_k, 2e_0 - sum e (one of each sign pair).
const std::vector<PicClass>& roots36();
int line_index(const PicClass& x);  // -1 when not a line class

/// 27x27 pairing matrix of the line classes.
IntMatrix incidence();
/// Triples of line indices {a, b, c} with a + b + c = -k.
std::vector<std::array<int, 3>> tritangents();

/// Reflection x -> x + (x.a) a in a root.
PicClass reflect(const PicClass& root, const PicClass& x);

using Perm = std::array<std::uint8_t, 27>;
Perm line_permutation(const PicClass& root);
Perm compose(const Perm& a, const Perm& b);  // (a o b)(i) = a[b[i]]

/// W(E6) as permutations of the 27 lines, generated by the 36 reflections.
const std::vector<Perm>& weyl_group();
/// 7x7 matrix of an element: images of e_1..e_6 are lines, and
/// e_0 = (e_0 - e_1 - e_2) + e_1 + e_2.
IntMatrix to_matrix(const Perm& p);
PicClass image(const IntMatrix& m, const PicClass& x);

std::size_t line_stabilizer_order(int line);

/// Orbit sizes of a group (as permutations) on the lines.
std::vector<std::size_t> line_orbit_sizes(const std::vector<Perm>& group);
/// Closure of the reflections in the given roots, as line permutations.
std::vector<Perm> reflection_subgroup(const std::vector<PicClass>& roots);

/// Standard node roots 2e_0 - sum e, e_1 - e_2, e_3 - e_4, e_5 - e_6 (first k).
std::vector<PicClass> standard_node_roots(int k);
bool is_standard_node_set(const std::vector<PicClass>& roots);

/// Number of orbits of the reflections in pairwise orthogonal roots on
/// the 27 lines; throws DomainError for non-orthogonal roots.
int nodal_line_count(const std::vector<PicClass>& roots);

/// The 5 pairs {a, b} of lines with a + b = -k - l.
std::vector<std::array<int, 2>> conic_pencil_fibers(int line);

/// Elements of W(E6) mapping the set {+-a : a in roots} to itself.
std::vector<Perm> root_set_stabilizer(const std::vector<PicClass>& roots);
/// Number of roots (up to sign) of the set with nonzero pairing with the line.
int nodes_on_line(const std::vector<PicClass>& roots, int line);

}  // namespace k3cubic::e6
