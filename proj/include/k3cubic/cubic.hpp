#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "k3cubic/binforms.hpp"
#include "k3cubic/e6lines.hpp"
#include "k3cubic/kodaira.hpp"
#include "k3cubic/mpoly.hpp"
#include "k3cubic/picard.hpp"
#include "k3cubic/strata.hpp"

namespace k3cubic::cubio {

using Point3 = std::array<Rational, 4>;  // point of P^3
using Point2 = std::array<Rational, 3>;  // point of P^2

/// Cubic form in x0..x3; coefficients follow monomials(4, 3)
/// (x0^3, x0^2 x1, x0^2 x2, x0^2 x3, x0 x1^2, ..., x3^3).
class CubicForm {
 public:
  CubicForm() = default;
  explicit CubicForm(std::vector<Rational> coefficients);
  static CubicForm from_poly(const Poly& p);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Poly poly() const;
  bool is_zero() const;
  /// F(C y): the form in the new coordinates y.
  CubicForm transformed(const RatMatrix& c) const;
  friend bool operator==(const CubicForm&, const CubicForm&) = default;

 private:
  std::vector<Rational> coeffs_ = std::vector<Rational>(20, Rational(0));
};

/// Line of P^3 spanned by two points, stored in reduced row-echelon form.
class ProjLine {
 public:
  ProjLine(const Point3& p, const Point3& q);
  const Point3& first() const { return p_; }
  const Point3& second() const { return q_; }
  /// The image under x -> M x.
  ProjLine mapped(const RatMatrix& m) const;
  friend bool operator==(const ProjLine&, const ProjLine&) = default;
  std::string to_string() const;

 private:
  Point3 p_;
  Point3 q_;
};

/// Restriction of F to the line as a binary cubic in (s, t) for s p + t q.
BinaryForm restrict_to_line(const CubicForm& f, const ProjLine& l);
bool contains_line(const CubicForm& f, const ProjLine& l);
bool skew(const ProjLine& l, const ProjLine& m);

/// F = sum A_ij(t) x_i x_j + 2 sum B_i(t) x_i with t = (x2, x3) after a
/// change of coordinates sending l to {x2 = x3 = 0} and m to {x0 = x1 = 0}.
struct NormalizedCubic {
  BinaryForm a00, a01, a11;  // linear
  BinaryForm b0, b1;         // quadratic
  RatMatrix transform;       // x = transform * y
  CubicForm form;            // F in the y coordinates

  CubicForm reconstruct() const;
};

NormalizedCubic normalize(const CubicForm& f, const ProjLine& l, const ProjLine& m);
/// The cubic with the given A and B, with l = {x2=x3=0}, m = {x0=x1=0}.
CubicForm cubic_from_normal_form(const BinaryForm& a00, const BinaryForm& a01, const BinaryForm& a11,
                                 const BinaryForm& b0, const BinaryForm& b1);
ProjLine standard_line_l();
ProjLine standard_line_m();

struct FormPairResult {
  BinaryForm f5;
  BinaryForm f2;
  BinaryForm bordered_determinant;  // equals -F5
  bool determinant_identity;
};
/// F5 = B0^2 A11 + B1^2 A00 - 2 A01 B0 B1, F2 = A00 A11 - A01^2.
FormPairResult extract_f5_f2(const NormalizedCubic& n);

struct ImageLine {
  e6::PicClass cls;
  std::string label;
  ProjLine line;
};

struct FromPointsResult {
  CubicForm cubic;
  std::vector<Poly> anticanonical;  // basis c0..c3 of cubics through the points
  std::vector<ImageLine> lines;     // 15 lines p_i p_j, then 6 conics
  ProjLine default_l() const;       // image of p1 p2
  ProjLine default_m() const;       // image of p1 p3
  const ImageLine& line_of_class(const e6::PicClass& c) const;
};

/// Checks distinctness, no three collinear, not all six on a conic.
void check_general_position(const std::vector<Point2>& points);
FromPointsResult cubic_from_points(const std::vector<Point2>& points);

struct AnalysisReport {
  NormalizedCubic normal;
  FormPairResult pair;
  binforms::StabilityVerdict stability;
  binforms::PairCase pair_case;
  kodaira::FiberConfiguration fibers;
  std::string picard;           // M(t), generic for this type
  std::string transcendental;   // T(t), generic for this type
  std::optional<strata::StratumLabel> stratum;
  lattices::ShiodaTateReport shioda;
};

/// Full pipeline; throws DomainError for unstable or degenerate input.
AnalysisReport analyze(const CubicForm& f, const ProjLine& l, const ProjLine& m);

}  // namespace k3cubic::cubio
