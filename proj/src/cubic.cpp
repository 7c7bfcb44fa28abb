#include "k3cubic/cubic.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace k3cubic::cubio {

namespace {

const std::vector<Exponents>& cubic_monomials() {
  static const std::vector<Exponents> m = monomials(4, 3);
  return m;
}

RatMatrix rows_of(const std::vector<std::vector<Rational>>& rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

template <std::size_t N>
std::vector<Rational> to_vec(const std::array<Rational, N>& a) {
  return std::vector<Rational>(a.begin(), a.end());
}

/// Binary form in (t0, t1) = (x2, x3) as a polynomial in x0..x3.
Poly lift(const BinaryForm& f) {
  Poly p(4);
  const int d = f.degree();
  for (int i = 0; i <= d; ++i) p.add_term({0, 0, d - i, i}, f.coefficient(i));
  return p;
}

BinaryForm det3(const std::array<std::array<BinaryForm, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool same_point(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return rank(rows_of({a, b})) < 2;
}

std::vector<Rational> canonical_integer_vector(std::vector<Rational> v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  Integer g = 0;
  for (auto& x : v) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
  }
  if (g == 0) return v;
  Rational s(1, g);
  s.canonicalize();
  for (const auto& x : v)
    if (x != 0) {
      if (x < 0) s = -s;
      break;
    }
  for (auto& x : v) x *= s;
  return v;
}

}  // namespace

CubicForm::CubicForm(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != 20) throw ParseError("a cubic form needs 20 coefficients");
}

CubicForm CubicForm::from_poly(const Poly& p) {
  if (p.nvars() != 4) throw DomainError("cubic forms live in 4 variables");
  std::vector<Rational> c(20, Rational(0));
  const auto& mons = cubic_monomials();
  for (const auto& [e, v] : p.terms()) {
    const auto it = std::find(mons.begin(), mons.end(), e);
    if (it == mons.end()) throw DomainError("polynomial is not a homogeneous cubic");
    c[static_cast<std::size_t>(it - mons.begin())] = v;
  }
  return CubicForm(c);
}

Poly CubicForm::poly() const {
  Poly p(4);
  for (std::size_t i = 0; i < 20; ++i) p.add_term(cubic_monomials()[i], coeffs_[i]);
  return p;
}

bool CubicForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return x == 0; });
}

CubicForm CubicForm::transformed(const RatMatrix& c) const {
  std::vector<Poly> images;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Rational> row(4);
    for (std::size_t j = 0; j < 4; ++j) row[j] = c(i, j);
    images.push_back(Poly::linear(row));
  }
  return from_poly(poly().compose(images));
}

ProjLine::ProjLine(const Point3& p, const Point3& q) {
  RatMatrix m = rows_of({to_vec(p), to_vec(q)});
  if (row_reduce(m).size() != 2) throw DomainError("line points must be independent");
  for (std::size_t j = 0; j < 4; ++j) {
    p_[j] = m(0, j);
    q_[j] = m(1, j);
  }
}

ProjLine ProjLine::mapped(const RatMatrix& m) const {
  const auto a = m.apply(to_vec(p_));
  const auto b = m.apply(to_vec(q_));
  return ProjLine({a[0], a[1], a[2], a[3]}, {b[0], b[1], b[2], b[3]});
}

std::string ProjLine::to_string() const {
  std::ostringstream os;
  auto pt = [&](const Point3& x) {
    os << "(";
    for (std::size_t i = 0; i < 4; ++i) os << (i ? "," : "") << k3cubic::to_string(x[i]);
    os << ")";
  };
  os << "[";
  pt(p_);
  os << " ";
  pt(q_);
  os << "]";
  return os.str();
}

BinaryForm restrict_to_line(const CubicForm& f, const ProjLine& l) {
  std::vector<Poly> images;
  for (std::size_t i = 0; i < 4; ++i) images.push_back(Poly::linear({l.first()[i], l.second()[i]}));
  const Poly r = f.poly().compose(images);
  std::vector<Rational> c(4, Rational(0));
  for (int i = 0; i <= 3; ++i) c[i] = r.coefficient({3 - i, i});
  return BinaryForm(c);
}

bool contains_line(const CubicForm& f, const ProjLine& l) { return restrict_to_line(f, l).is_zero(); }

bool skew(const ProjLine& l, const ProjLine& m) {
  return rank(rows_of({to_vec(l.first()), to_vec(l.second()), to_vec(m.first()), to_vec(m.second())})) == 4;
}

ProjLine standard_line_l() { return ProjLine({1, 0, 0, 0}, {0, 1, 0, 0}); }
ProjLine standard_line_m() { return ProjLine({0, 0, 1, 0}, {0, 0, 0, 1}); }

namespace {

Poly normal_form_poly(const BinaryForm& a00, const BinaryForm& a01, const BinaryForm& a11, const BinaryForm& b0,
                      const BinaryForm& b1) {
  const Poly x0 = Poly::variable(4, 0), x1 = Poly::variable(4, 1);
  return lift(a00) * x0 * x0 + Rational(2) * lift(a01) * x0 * x1 + lift(a11) * x1 * x1 +
         Rational(2) * lift(b0) * x0 + Rational(2) * lift(b1) * x1;
}

}  // namespace

CubicForm NormalizedCubic::reconstruct() const { return CubicForm::from_poly(normal_form_poly(a00, a01, a11, b0, b1)); }

CubicForm cubic_from_normal_form(const BinaryForm& a00, const BinaryForm& a01, const BinaryForm& a11,
                                 const BinaryForm& b0, const BinaryForm& b1) {
  if (a00.degree() != 1 || a01.degree() != 1 || a11.degree() != 1 || b0.degree() != 2 || b1.degree() != 2)
    throw DomainError("A_ij must be linear and B_i quadratic");
  return CubicForm::from_poly(normal_form_poly(a00, a01, a11, b0, b1));
}

NormalizedCubic normalize(const CubicForm& f, const ProjLine& l, const ProjLine& m) {
  if (f.is_zero()) throw DomainError("zero cubic form");
  if (!contains_line(f, l)) throw DomainError("line l is not on the surface");
  if (!contains_line(f, m)) throw DomainError("line m is not on the surface");
  if (!skew(l, m)) throw DomainError("lines are not skew");

  NormalizedCubic n;
  n.transform = RatMatrix(4, 4);
  const std::array<Point3, 4> cols = {l.first(), l.second(), m.first(), m.second()};
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) n.transform(i, j) = cols[j][i];
  if (determinant(n.transform) == 0) throw DomainError("degenerate coordinate change");
  n.form = f.transformed(n.transform);

  std::vector<Rational> a00(2), a01(2), a11(2), b0(3), b1(3);
  const Poly g = n.form.poly();
  for (const auto& [e, c] : g.terms()) {
    const int d01 = e[0] + e[1];
    const int idx = e[3];
    if (d01 == 2) {
      if (e[0] == 2) a00[idx] += c;
      else if (e[1] == 2) a11[idx] += c;
      else a01[idx] += c / 2;
    } else if (d01 == 1) {
      (e[0] == 1 ? b0 : b1)[idx] += c / 2;
    } else {
      throw std::logic_error("normalized cubic has a monomial purely in one pair of variables");
    }
  }
  n.a00 = BinaryForm(a00);
  n.a01 = BinaryForm(a01);
  n.a11 = BinaryForm(a11);
  n.b0 = BinaryForm(b0);
  n.b1 = BinaryForm(b1);
  if (!(n.reconstruct() == n.form)) throw std::logic_error("normal form does not reproduce the cubic");
  return n;
}

FormPairResult extract_f5_f2(const NormalizedCubic& n) {
  FormPairResult r;
  r.f5 = n.b0 * n.b0 * n.a11 + n.b1 * n.b1 * n.a00 - Rational(2) * n.a01 * n.b0 * n.b1;
  r.f2 = n.a00 * n.a11 - n.a01 * n.a01;
  const std::array<std::array<BinaryForm, 3>, 3> bordered = {{
      {n.a00, n.a01, n.b0},
      {n.a01, n.a11, n.b1},
      {n.b0, n.b1, BinaryForm::zero(3)},
  }};
  r.bordered_determinant = det3(bordered);
  r.determinant_identity = r.bordered_determinant == -r.f5;
  if (r.f5.is_zero() || r.f2.is_zero()) throw DomainError("degenerate configuration");
  return r;
}

ProjLine FromPointsResult::default_l() const {
  return line_of_class({1, -1, -1, 0, 0, 0, 0}).line;
}

ProjLine FromPointsResult::default_m() const {
  return line_of_class({1, -1, 0, -1, 0, 0, 0}).line;
}

const ImageLine& FromPointsResult::line_of_class(const e6::PicClass& c) const {
  for (const auto& l : lines)
    if (l.cls == c) return l;
  throw DomainError("no image line computed for class " + e6::to_string(c));
}

void check_general_position(const std::vector<Point2>& points) {
  if (points.size() != 6) throw DomainError("six points are required");
  const std::size_t n = points.size();
  auto name = [](std::size_t i) { return "p" + std::to_string(i + 1); };
  for (std::size_t i = 0; i < n; ++i)
    if (points[i][0] == 0 && points[i][1] == 0 && points[i][2] == 0) throw DomainError(name(i) + " is not a point");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (same_point(to_vec(points[i]), to_vec(points[j])))
        throw DomainError("points " + name(i) + " and " + name(j) + " coincide");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (determinant(rows_of({to_vec(points[i]), to_vec(points[j]), to_vec(points[k])})) == 0)
          throw DomainError("points " + name(i) + ", " + name(j) + ", " + name(k) + " are collinear");
  const auto conic = monomials(3, 2);
  RatMatrix m(6, 6);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = Poly::monomial(conic[j]).evaluate(to_vec(points[i]));
  if (determinant(m) == 0) throw DomainError("the six points lie on a conic");
}

FromPointsResult cubic_from_points(const std::vector<Point2>& points) {
  check_general_position(points);
  FromPointsResult res;

  const auto plane_cubics = monomials(3, 3);
  RatMatrix eval(6, plane_cubics.size());
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < plane_cubics.size(); ++j)
      eval(i, j) = Poly::monomial(plane_cubics[j]).evaluate(to_vec(points[i]));
  const auto basis = nullspace(eval);
  if (basis.size() != 4) throw DomainError("cubics through the points do not form a 4-dimensional space");
  for (const auto& v : basis) {
    Poly c(3);
    const auto w = canonical_integer_vector(v);
    for (std::size_t j = 0; j < plane_cubics.size(); ++j) c.add_term(plane_cubics[j], w[j]);
    res.anticanonical.push_back(c);
  }

  // relation among the 20 cubic monomials in c0..c3, inside the 55 plane nonics
  const auto nonics = monomials(3, 9);
  std::map<Exponents, std::size_t> row_of;
  for (std::size_t i = 0; i < nonics.size(); ++i) row_of[nonics[i]] = i;
  const auto& mons = cubic_monomials();
  RatMatrix rel(nonics.size(), mons.size());
  for (std::size_t j = 0; j < mons.size(); ++j) {
    const Poly image = Poly::monomial(mons[j]).compose(res.anticanonical);
    for (const auto& [e, c] : image.terms()) rel(row_of.at(e), j) = c;
  }
  const auto relation = nullspace(rel);
  if (relation.size() != 1) throw DomainError("expected a unique cubic relation, found " + std::to_string(relation.size()));
  res.cubic = CubicForm(canonical_integer_vector(relation.front()));

  auto phi = [&](const std::vector<Rational>& q) {
    std::vector<Rational> out;
    for (const auto& c : res.anticanonical) out.push_back(c.evaluate(q));
    return out;
  };
  auto is_base_point = [&](const std::vector<Rational>& q) {
    for (const auto& p : points)
      if (same_point(q, to_vec(p))) return true;
    return false;
  };
  auto line_through = [&](const std::vector<std::vector<Rational>>& candidates) -> ProjLine {
    std::vector<std::vector<Rational>> images;
    for (const auto& q : candidates) {
      if (is_base_point(q)) continue;
      const auto img = phi(q);
      if (std::all_of(img.begin(), img.end(), [](const Rational& x) { return x == 0; })) continue;
      if (images.empty() || !same_point(images.front(), img)) images.push_back(img);
      if (images.size() == 2) break;
    }
    if (images.size() < 2) throw std::logic_error("could not find two image points on a line");
    return ProjLine({images[0][0], images[0][1], images[0][2], images[0][3]},
                    {images[1][0], images[1][1], images[1][2], images[1][3]});
  };

  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      std::vector<std::vector<Rational>> cands;
      for (int lambda = 1; lambda <= 6; ++lambda) {
        std::vector<Rational> q(3);
        for (std::size_t c = 0; c < 3; ++c) q[c] = points[i][c] + Rational(lambda) * points[j][c];
        cands.push_back(q);
      }
      e6::PicClass cls{1, 0, 0, 0, 0, 0, 0};
      cls[i + 1] = -1;
      cls[j + 1] = -1;
      res.lines.push_back({cls, e6::to_string(cls), line_through(cands)});
    }

  const auto conic_mons = monomials(3, 2);
  for (std::size_t skip = 0; skip < 6; ++skip) {
    std::vector<std::size_t> five;
    for (std::size_t k = 0; k < 6; ++k)
      if (k != skip) five.push_back(k);
    RatMatrix m(5, 6);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 6; ++c) m(r, c) = Poly::monomial(conic_mons[c]).evaluate(to_vec(points[five[r]]));
    const auto ns = nullspace(m);
    if (ns.size() != 1) throw std::logic_error("conic through five points is not unique");
    Poly q(3);
    for (std::size_t c = 0; c < 6; ++c) q.add_term(conic_mons[c], ns.front()[c]);

    // second intersections of lines through p = points[five[0]] with the conic
    const auto p = to_vec(points[five[0]]);
    std::vector<std::vector<Rational>> cands;
    for (int a = -3; a <= 3 && cands.size() < 12; ++a)
      for (int b = -3; b <= 3 && cands.size() < 12; ++b) {
        const std::vector<Rational> d = {Rational(1), Rational(a), Rational(b)};
        const Rational qd = q.evaluate(d);
        if (qd == 0) continue;
        std::vector<Rational> pd(3);
        for (std::size_t c = 0; c < 3; ++c) pd[c] = p[c] + d[c];
        const Rational bpd = (q.evaluate(pd) - qd) / 2;  // q(p) = 0
        const Rational t = -2 * bpd / qd;
        if (t == 0) continue;
        std::vector<Rational> r(3);
        for (std::size_t c = 0; c < 3; ++c) r[c] = p[c] + t * d[c];
        cands.push_back(r);
      }
    e6::PicClass cls{2, -1, -1, -1, -1, -1, -1};
    cls[skip + 1] = 0;
    res.lines.push_back({cls, e6::to_string(cls), line_through(cands)});
  }
  return res;
}

AnalysisReport analyze(const CubicForm& f, const ProjLine& l, const ProjLine& m) {
  AnalysisReport r;
  r.normal = normalize(f, l, m);
  r.pair = extract_f5_f2(r.normal);
  r.stability = binforms::stability(r.pair.f5, r.pair.f2);
  r.pair_case = binforms::classify_case(r.pair.f5, r.pair.f2);
  if (r.pair_case.case_id == binforms::CaseId::Cusp)
    throw DomainError("strictly semistable cusp configuration (L1^3 L2^2, L2^2)");
  r.fibers = kodaira::fiber_configuration(r.pair.f5, r.pair.f2);
  const auto& row = lattices::table2_row(r.pair_case.case_id);
  r.picard = row.picard;
  r.transcendental = row.transcendental;
  r.stratum = strata::stratum_of(r.pair_case.case_id);
  r.shioda = lattices::shioda_tate_check(r.pair_case.case_id);
  return r;
}

}  // namespace k3cubic::cubio
