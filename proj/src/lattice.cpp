#include "k3cubic/lattice.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <sstream>

namespace k3cubic::lattices {

IntegralLattice::IntegralLattice(IntMatrix gram, std::string name) : gram_(std::move(gram)), name_(std::move(name)) {
  if (!gram_.is_symmetric()) throw DomainError("Gram matrix must be square and symmetric");
}

bool IntegralLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

Integer IntegralLattice::determinant() const {
  if (rank() == 0) return 1;
  return k3cubic::determinant(gram_);
}

Integer IntegralLattice::pair(const std::vector<Integer>& x, const std::vector<Integer>& y) const {
  return k3cubic::pair(gram_, x, y);
}

namespace {

IntMatrix from_dynkin(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = -2;
  for (auto [a, b] : edges) {
    g(a, b) = 1;
    g(b, a) = 1;
  }
  return g;
}

std::vector<std::pair<std::size_t, std::size_t>> chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

}  // namespace

IntegralLattice named_lattice(std::string_view name) {
  const std::string n(name);
  if (n == "U") return IntegralLattice(IntMatrix{{0, 1}, {1, 0}}, "U");
  if (n == "I(1,6)" || n == "I1,6") {
    IntMatrix g(7, 7);
    g(0, 0) = 1;
    for (std::size_t i = 1; i < 7; ++i) g(i, i) = -1;
    return IntegralLattice(g, "I(1,6)");
  }
  if (n.size() == 2 && std::isdigit(static_cast<unsigned char>(n[1]))) {
    const std::size_t r = static_cast<std::size_t>(n[1] - '0');
    switch (n[0]) {
      case 'A':
        if (r >= 1 && r <= 8) return IntegralLattice(from_dynkin(r, chain(r)), n);
        break;
      case 'D':
        if (r >= 4 && r <= 8) {
          auto e = chain(r - 1);
          e.emplace_back(r - 3, r - 1);
          return IntegralLattice(from_dynkin(r, e), n);
        }
        break;
      case 'E':
        if (r >= 6 && r <= 8) {
          auto e = chain(r - 1);
          e.emplace_back(2, r - 1);
          return IntegralLattice(from_dynkin(r, e), n);
        }
        break;
      default:
        break;
    }
  }
  throw DomainError("unknown lattice '" + n + "'");
}

IntegralLattice scale(const IntegralLattice& lattice, long n) {
  if (n == 0) throw DomainError("scale factor must be nonzero");
  std::string name = lattice.name().empty() ? std::string() : lattice.name() + "(" + std::to_string(n) + ")";
  return IntegralLattice(Integer(n) * lattice.gram(), name);
}

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b) {
  const std::size_t ra = a.rank(), rb = b.rank();
  IntMatrix g(ra + rb, ra + rb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < rb; ++j) g(ra + i, ra + j) = b.gram()(i, j);
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "+" + b.name();
  return IntegralLattice(g, name);
}

IntegralLattice LatticeExpr::build() const {
  IntegralLattice out(IntMatrix(0, 0));
  for (const auto& c : components) {
    IntegralLattice piece = named_lattice(c.name);
    if (c.scale != 1) piece = scale(piece, c.scale);
    for (int i = 0; i < c.copies; ++i) out = direct_sum(out, piece);
  }
  return IntegralLattice(out.gram(), to_string());
}

std::string LatticeExpr::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (i) os << "+";
    os << c.name;
    if (c.scale != 1) os << "(" << c.scale << ")";
    if (c.copies != 1) os << "^" << c.copies;
  }
  return components.empty() ? "0" : os.str();
}

LatticeExpr parse_lattice_expr(std::string_view text) {
  LatticeExpr expr;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  std::size_t pos = 0;
  auto fail = [&]() -> LatticeExpr { throw ParseError("malformed lattice expression '" + std::string(text) + "'"); };
  while (pos < s.size()) {
    Component c;
    if (s.compare(pos, 6, "I(1,6)") == 0) {
      c.name = "I(1,6)";
      pos += 6;
    } else {
      const std::size_t start = pos;
      while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) return fail();
      c.name = s.substr(start, pos - start);
      if (pos < s.size() && s[pos] == '(') {
        const auto close = s.find(')', pos);
        if (close == std::string::npos) return fail();
        try {
          c.scale = std::stol(s.substr(pos + 1, close - pos - 1));
        } catch (const std::exception&) {
          return fail();
        }
        pos = close + 1;
      }
    }
    if (pos < s.size() && s[pos] == '^') {
      const std::size_t start = ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) return fail();
      c.copies = std::stoi(s.substr(start, pos - start));
    }
    named_lattice(c.name);  // validates the name
    expr.components.push_back(c);
    if (pos < s.size()) {
      if (s[pos] != '+') return fail();
      ++pos;
      if (pos == s.size()) return fail();
    }
  }
  return expr;
}

Signature signature(const IntegralLattice& lattice) {
  RatMatrix a = to_rational(lattice.gram());
  const std::size_t n = a.rows();
  Signature sig;
  std::size_t done = 0;
  while (done < n) {
    // pick a pivot with nonzero diagonal, creating one if necessary
    std::size_t p = done;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = done; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;  // remaining block is zero
      // x_i <- x_i + x_j : row/column operation, a_ii becomes 2 a_ij
      for (std::size_t k = 0; k < n; ++k) a(pi, k) += a(pj, k);
      for (std::size_t k = 0; k < n; ++k) a(k, pi) += a(k, pj);
      p = pi;
    }
    a.swap_rows(p, done);
    a.swap_cols(p, done);
    const Rational piv = a(done, done);
    (piv > 0 ? sig.positive : sig.negative)++;
    for (std::size_t i = done + 1; i < n; ++i) {
      if (a(i, done) == 0) continue;
      const Rational f = a(i, done) / piv;
      for (std::size_t k = done; k < n; ++k) a(i, k) -= f * a(done, k);
      for (std::size_t k = done; k < n; ++k) a(k, i) = a(i, k);
    }
    ++done;
  }
  sig.radical = static_cast<int>(n) - sig.positive - sig.negative;
  return sig;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  auto row_axpy = [&](std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
    for (std::size_t j = 0; j < m; ++j) u(dst, j) += f * u(src, j);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t i = 0; i < m; ++i) a(i, dst) += f * a(i, src);
    for (std::size_t i = 0; i < n; ++i) v(i, dst) += f * v(i, src);
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a(i, j) != 0 && (pi == m || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) break;
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        row_axpy(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        col_axpy(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            row_axpy(t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
    }
  }

  SmithForm out{u, v, a, {}};
  for (std::size_t i = 0; i < steps; ++i) out.diagonal.push_back(a(i, i));
  return out;
}

DiscriminantGroup::DiscriminantGroup(const IntegralLattice& lattice) : lattice_(lattice) {
  if (lattice.determinant() == 0) throw DomainError("degenerate lattice has no discriminant group");
  smith_ = smith_normal_form(lattice.gram());
  if (smith_.u * lattice.gram() * smith_.v != smith_.s) throw std::logic_error("Smith form verification failed");
  const std::size_t n = lattice.rank();
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& s = smith_.diagonal[i];
    if (s == 1) continue;
    std::vector<Rational> g(n);
    for (std::size_t k = 0; k < n; ++k) {
      g[k] = Rational(smith_.v(k, i), s);
      g[k].canonicalize();
    }
    index_.push_back(i);
    orders_.push_back(s);
    generators_.push_back(std::move(g));
  }
}

Integer DiscriminantGroup::order() const {
  Integer o = 1;
  for (const auto& d : orders_) o *= d;
  return o;
}

bool DiscriminantGroup::in_dual(const std::vector<Rational>& v) const {
  const auto gv = to_rational(lattice_.gram()).apply(v);
  for (const auto& x : gv)
    if (!is_integral(x)) return false;
  return true;
}

std::vector<Integer> DiscriminantGroup::coordinates(const std::vector<Rational>& v) const {
  const auto gv = to_rational(lattice_.gram()).apply(v);
  std::vector<Integer> y(gv.size());
  for (std::size_t i = 0; i < gv.size(); ++i) {
    if (!is_integral(gv[i])) throw DomainError("vector is not in the dual lattice");
    y[i] = gv[i].get_num();
  }
  const auto z = smith_.u.apply(y);
  std::vector<Integer> coords;
  for (std::size_t k = 0; k < index_.size(); ++k) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), z[index_[k]].get_mpz_t(), orders_[k].get_mpz_t());
    coords.push_back(r);
  }
  return coords;
}

std::vector<Rational> DiscriminantGroup::lift(const std::vector<Integer>& coords) const {
  std::vector<Rational> v(lattice_.rank(), Rational(0));
  for (std::size_t k = 0; k < coords.size(); ++k)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += Rational(coords[k]) * generators_[k][i];
  return v;
}

Rational DiscriminantGroup::rational_pair(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  return k3cubic::pair(to_rational(lattice_.gram()), x, y);
}

std::vector<std::vector<Integer>> short_vectors(const IntegralLattice& lattice, const Integer& norm) {
  const std::size_t n = lattice.rank();
  if (n > 12) throw DomainError("short vector enumeration limited to rank 12");
  const Signature sig = signature(lattice);
  int sign = 0;
  if (sig.positive == static_cast<int>(n)) sign = 1;
  if (sig.negative == static_cast<int>(n)) sign = -1;
  if (sign == 0) throw DomainError("short vector enumeration needs a definite lattice");

  const Rational target = Rational(norm * sign);
  std::vector<std::vector<Integer>> out;
  if (target < 0) return out;
  if (target == 0) {
    out.emplace_back(n, Integer(0));
    return out;
  }

  // Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2
  RatMatrix q = to_rational(Integer(sign) * lattice.gram());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) q(j, i) = q(i, j);
    for (std::size_t j = i + 1; j < n; ++j) q(i, j) /= q(i, i);
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }

  std::vector<Integer> x(n);
  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level, const Rational& budget) {
    const std::size_t i = level - 1;
    Rational center = 0;
    for (std::size_t j = i + 1; j < n; ++j) center -= q(i, j) * Rational(x[j]);
    const double radius = std::sqrt(std::max(0.0, Rational(budget / q(i, i)).get_d()));
    const double c = center.get_d();
    const long lo = static_cast<long>(std::floor(c - radius)) - 1;
    const long hi = static_cast<long>(std::ceil(c + radius)) + 1;
    for (long xi = lo; xi <= hi; ++xi) {
      const Rational off = Rational(xi) - center;
      const Rational used = q(i, i) * off * off;
      if (used > budget) continue;
      x[i] = xi;
      const Rational rest = budget - used;
      if (i == 0) {
        if (rest == 0) out.push_back(x);
      } else {
        descend(i, rest);
      }
    }
    x[i] = 0;
  };
  descend(n, target);
  std::sort(out.begin(), out.end());
  return out;
}

IntMatrix orthogonal_complement_basis(const IntegralLattice& ambient, const std::vector<Integer>& v) {
  const std::size_t n = ambient.rank();
  const auto w = ambient.gram().apply(v);
  IntMatrix row(1, n);
  for (std::size_t j = 0; j < n; ++j) row(0, j) = w[j];
  const SmithForm sf = smith_normal_form(row);
  const std::size_t r = (sf.diagonal.empty() || sf.diagonal[0] == 0) ? 0 : 1;
  IntMatrix basis(n, n - r);
  for (std::size_t c = r; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) basis(i, c - r) = sf.v(i, c);
  return basis;
}

}  // namespace k3cubic::lattices
