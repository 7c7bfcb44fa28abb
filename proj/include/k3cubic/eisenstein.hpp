#pragma once

#include <array>
#include <string>
#include <vector>

#include "k3cubic/matrix.hpp"

namespace k3cubic::eisenstein {

/// a + b*zeta with zeta^2 + zeta + 1 = 0.
struct EisensteinInt {
  Integer a = 0;
  Integer b = 0;

  EisensteinInt conj() const { return {a - b, -b}; }
  Integer norm() const { return a * a - a * b + b * b; }
  /// 2 Re(a + b zeta) = 2a - b.
  Integer twice_real() const { return 2 * a - b; }

  friend EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) { return {x.a + y.a, x.b + y.b}; }
  friend EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) { return {x.a - y.a, x.b - y.b}; }
  friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
    // zeta^2 = -1 - zeta
    const Integer bb = x.b * y.b;
    return {x.a * y.a - bb, x.a * y.b + x.b * y.a - bb};
  }
  friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) { return x.a == y.a && x.b == y.b; }
};

std::string to_string(const EisensteinInt& z);

/// 1 + 2 zeta, a square root of -3.
inline EisensteinInt sqrt_minus_3() { return {1, 2}; }

/// T = A2(-1) + A2^4 in the basis r_1, r_1', ..., r_5, r_5'.
const IntMatrix& t_gram();
/// rho(r_i) = r_i', rho(r_i') = -r_i - r_i'.
const IntMatrix& rho();

using TVector = std::vector<Integer>;

/// (a + b zeta) x = a x + b rho(x).
TVector scalar_action(const EisensteinInt& z, const TVector& x);
Integer t_pair(const TVector& x, const TVector& y);

/// h(x) = (x + 2 rho(x)) / 3 in T (x) Q.
std::vector<Rational> h_map(const TVector& x);
Rational t_pair(const std::vector<Rational>& x, const std::vector<Rational>& y);

/// x = sum a_i r_i + b_i r_i'  <->  z_i = a_i + b_i zeta.
std::vector<EisensteinInt> to_module(const TVector& x);
TVector from_module(const std::vector<EisensteinInt>& z);

/// Diagonal of H: +1 on the A2(-1) block, -1 elsewhere.
const std::array<int, 5>& hermitian_signs();
EisensteinInt hermitian(const std::vector<EisensteinInt>& z, const std::vector<EisensteinInt>& w);

/// Image of x in V = Lambda / sqrt(-3) Lambda: v_i = a_i + b_i mod 3.
std::array<int, 5> residue(const TVector& x);
/// Isometry from V (with the form induced by D(T)) to F_3^5 with
/// q = -(4/3) * weight.
std::array<int, 5> to_standard(const std::array<int, 5>& v);

struct RhoReport {
  bool cube_is_identity;
  bool is_isometry;
  bool nontrivial;
  bool no_fixed_vectors;  // det(rho - I) != 0
  bool char_poly_ok;      // (t^2 + t + 1)^5
  std::vector<Rational> char_poly;
};
RhoReport rho_check();

struct HermitianReport {
  bool pairing_ok;  // (x, y) = 2 Re H(x, y) on the basis
  bool hermitian_symmetry_ok;
  std::string mismatch;
  int positive;
  int negative;
};
HermitianReport hermitian_check();

struct DiscriminantIdentification {
  bool h_lands_in_dual;      // G h(e) integral for each basis vector e
  bool surjective;           // the h(r_i) generate D(T)
  Integer kernel_index;      // |det(1 + 2 rho)|
  bool kernel_contained;     // h(sqrt(-3) e) in T for each basis vector
  Integer discriminant_order;
  bool rho_trivial;          // (rho - I) T^* in T
  bool form_matches;         // q_D(h(v)) = q_std(to_standard(v)) for all 243 v
  bool ok() const {
    return h_lands_in_dual && surjective && kernel_contained && rho_trivial && form_matches &&
           kernel_index == 243 && discriminant_order == 243;
  }
};
DiscriminantIdentification discriminant_identification();

}  // namespace k3cubic::eisenstein
