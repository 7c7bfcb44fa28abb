#include "k3cubic/f3space.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace k3cubic::f3 {

namespace {

int m3(int x) { return ((x % 3) + 3) % 3; }

}  // namespace

int code(const Vec& x) {
  int c = 0;
  for (int i = 4; i >= 0; --i) c = 3 * c + x[i];
  return c;
}

Vec from_code(int c) {
  Vec x{};
  for (int i = 0; i < 5; ++i) {
    x[i] = c % 3;
    c /= 3;
  }
  return x;
}

Vec negate(const Vec& x) {
  Vec y{};
  for (int i = 0; i < 5; ++i) y[i] = m3(-x[i]);
  return y;
}

Vec add(const Vec& x, const Vec& y) {
  Vec z{};
  for (int i = 0; i < 5; ++i) z[i] = m3(x[i] + y[i]);
  return z;
}

Vec make_vec(std::initializer_list<int> entries) {
  if (entries.size() != 5) throw std::invalid_argument("F3 vectors have 5 entries");
  Vec x{};
  int i = 0;
  for (int e : entries) x[i++] = m3(e);
  return x;
}

std::string to_string(const Vec& x) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < 5; ++i) os << (i ? "," : "") << (x[i] == 2 ? -1 : x[i]);
  os << ")";
  return os.str();
}

int weight(const Vec& x) {
  int w = 0;
  for (int v : x) w += v != 0;
  return w;
}

Rational q(const Vec& x) { return mod2(Rational(-4 * weight(x), 3)); }

int dot(const Vec& x, const Vec& y) {
  int s = 0;
  for (int i = 0; i < 5; ++i) s += x[i] * y[i];
  return s % 3;
}

Rational b(const Vec& x, const Vec& y) { return mod1(Rational(2 * dot(x, y), 3)); }

NormClass norm_class(const Vec& x) {
  if (weight(x) == 0) return NormClass::Zero;
  const Rational v = q(x);
  if (v == 0) return NormClass::Isotropic;
  if (v == mod2(Rational(-2, 3))) return NormClass::Short;
  return NormClass::Long;
}

std::string to_string(NormClass c) {
  switch (c) {
    case NormClass::Zero: return "zero";
    case NormClass::Isotropic: return "isotropic";
    case NormClass::Short: return "short";
    case NormClass::Long: return "long";
  }
  return "?";
}

Vec canonical_class(const Vec& x) { return std::min(x, negate(x)); }

std::vector<Vec> classes_of(NormClass c) {
  std::vector<Vec> out;
  for (int k = 1; k < 243; ++k) {
    const Vec x = from_code(k);
    if (canonical_class(x) == x && norm_class(x) == c) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

NormCensus norm_census() {
  NormCensus n;
  std::map<Rational, int> by_value;
  for (int k = 1; k < 243; ++k) {
    const Vec x = from_code(k);
    if (canonical_class(x) == x) ++by_value[q(x)];
  }
  n.isotropic = by_value[Rational(0)];
  n.short_classes = by_value[mod2(Rational(-2, 3))];
  n.long_classes = by_value[mod2(Rational(-4, 3))];
  return n;
}

Mat identity() {
  Mat m{};
  for (int i = 0; i < 5; ++i) m[6 * i] = 1;
  return m;
}

Mat multiply(const Mat& a, const Mat& b) {
  Mat c{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      int s = 0;
      for (int k = 0; k < 5; ++k) s += a[5 * i + k] * b[5 * k + j];
      c[5 * i + j] = static_cast<std::uint8_t>(s % 3);
    }
  return c;
}

Vec image(const Mat& a, const Vec& x) {
  Vec y{};
  for (int i = 0; i < 5; ++i) {
    int s = 0;
    for (int k = 0; k < 5; ++k) s += a[5 * i + k] * x[k];
    y[i] = s % 3;
  }
  return y;
}

int det(const Mat& a) {
  int m[5][5];
  for (int i = 0; i < 25; ++i) m[i / 5][i % 5] = a[i];
  int d = 1;
  for (int c = 0; c < 5; ++c) {
    int p = c;
    while (p < 5 && m[p][c] == 0) ++p;
    if (p == 5) return 0;
    if (p != c) {
      for (int j = 0; j < 5; ++j) std::swap(m[p][j], m[c][j]);
      d = m3(-d);
    }
    d = m3(d * m[c][c]);
    const int inv = m[c][c];  // 1 and 2 are self-inverse mod 3
    for (int r = c + 1; r < 5; ++r) {
      const int f = m3(m[r][c] * inv);
      for (int j = c; j < 5; ++j) m[r][j] = m3(m[r][j] - f * m[c][j]);
    }
  }
  return d;
}

bool preserves_form(const Mat& a) {
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      int s = 0;
      for (int k = 0; k < 5; ++k) s += a[5 * k + i] * a[5 * k + j];
      if (s % 3 != (i == j ? 1 : 0)) return false;
    }
  return true;
}

std::uint64_t code(const Mat& a) {
  std::uint64_t c = 0;
  for (int i = 24; i >= 0; --i) c = 3 * c + a[i];
  return c;
}

Mat reflection(const Vec& v) {
  const int vv = dot(v, v);
  if (vv == 0) throw DomainError("reflection in an isotropic vector");
  // s_v(x) = x - 2 (x.v)/(v.v) v ; 2/(v.v) = 2 * (v.v) mod 3
  const int f = m3(2 * vv);
  Mat m = identity();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m[5 * i + j] = static_cast<std::uint8_t>(m3(m[5 * i + j] - f * v[i] * v[j]));
  return m;
}

Group::Group(std::vector<Mat> elements) {
  std::sort(elements.begin(), elements.end(), [](const Mat& a, const Mat& b) { return code(a) < code(b); });
  elements_ = std::move(elements);
  codes_.reserve(elements_.size());
  for (const auto& m : elements_) codes_.push_back(code(m));
}

bool Group::contains(const Mat& m) const { return std::binary_search(codes_.begin(), codes_.end(), code(m)); }

Group closure(const std::vector<Mat>& generators, std::size_t bound) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<Mat> elements{identity()};
  seen.insert(code(identity()));
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const auto& g : generators) {
      const Mat h = multiply(elements[next], g);
      if (seen.insert(code(h)).second) {
        elements.push_back(h);
        if (elements.size() > bound) throw std::runtime_error("group closure exceeded its bound");
      }
    }
  }
  return Group(std::move(elements));
}

const Group& special_orthogonal() {
  static const Group g = [] {
    const Mat s1 = reflection(make_vec({1, 0, 0, 0, 0}));
    std::vector<Mat> gens;
    for (NormClass c : {NormClass::Short, NormClass::Long})
      for (const auto& v : classes_of(c)) gens.push_back(multiply(s1, reflection(v)));
    return closure(gens);
  }();
  return g;
}

const Group& orthogonal() {
  static const Group g = [] {
    std::vector<Mat> all = special_orthogonal().elements();
    Mat minus{};
    for (int i = 0; i < 5; ++i) minus[6 * i] = 2;
    for (const auto& m : special_orthogonal().elements()) all.push_back(multiply(minus, m));
    return Group(std::move(all));
  }();
  return g;
}

const Group& wd5() {
  static const Group g = [] {
    std::vector<Mat> out;
    std::array<int, 5> perm = {0, 1, 2, 3, 4};
    do {
      for (int signs = 0; signs < 32; ++signs) {
        Mat m{};
        for (int i = 0; i < 5; ++i) m[5 * perm[i] + i] = (signs >> i) & 1 ? 2 : 1;
        if (det(m) == 1) out.push_back(m);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Group(std::move(out));
  }();
  return g;
}

Tuple canonical_tuple(std::vector<Vec> classes) {
  for (auto& v : classes) v = canonical_class(v);
  std::sort(classes.begin(), classes.end());
  return classes;
}

Tuple act(const Mat& g, const Tuple& t) {
  Tuple out;
  out.reserve(t.size());
  for (const auto& v : t) out.push_back(image(g, v));
  return canonical_tuple(std::move(out));
}

std::string to_string(const Tuple& t) {
  std::string s = "{";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + to_string(t[i]);
  return s + "}";
}

std::vector<Tuple> orthogonal_short_tuples(int k) {
  const auto shorts = classes_of(NormClass::Short);
  std::vector<Tuple> out;
  Tuple current;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i < shorts.size(); ++i) {
      bool ok = true;
      for (const auto& v : current) ok = ok && orthogonal(v, shorts[i]);
      if (!ok) continue;
      current.push_back(shorts[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::size_t stabilizer_order(const Group& g, const Tuple& t) {
  std::size_t n = 0;
  for (const auto& m : g.elements())
    if (act(m, t) == t) ++n;
  return n;
}

std::size_t orbit_size(const Group& g, const Tuple& t) {
  std::set<Tuple> orbit;
  for (const auto& m : g.elements()) orbit.insert(act(m, t));
  return orbit.size();
}

Tuple standard_tuple(int k) {
  if (k < 1 || k > 4) throw DomainError("k must be between 1 and 4");
  std::vector<Vec> rows = {make_vec({1, 1, 1, 1, 1}), make_vec({-1, 1, 1, 1, 1}), make_vec({0, -1, 1, 0, 0}),
                           make_vec({0, 0, 0, -1, 1})};
  rows.resize(k);
  return canonical_tuple(rows);
}

std::size_t gk_order(int k) { return stabilizer_order(special_orthogonal(), standard_tuple(k)); }

OrbitSummary wd5_orbits_on_short(int k) {
  if (k < 1 || k > 4) throw DomainError("k must be between 1 and 4");
  OrbitSummary s;
  s.k = k;
  s.gk_order = gk_order(k);
  const auto tuples = orthogonal_short_tuples(k);
  s.tuple_count = tuples.size();
  s.so_transitive = special_orthogonal().order() == s.gk_order * s.tuple_count;

  const Group& w = wd5();
  std::set<Tuple> seen;
  for (const auto& t : tuples) {
    if (seen.count(t)) continue;
    std::set<Tuple> orbit;
    for (const auto& m : w.elements()) orbit.insert(act(m, t));
    seen.insert(orbit.begin(), orbit.end());
    OrbitReport r;
    r.representative = *orbit.begin();
    r.orbit_size = orbit.size();
    r.stabilizer_order = w.order() / orbit.size();
    r.index_in_gk = s.gk_order / r.stabilizer_order;
    s.orbits.push_back(r);
  }
  s.index_sum = 0;
  for (const auto& o : s.orbits) s.index_sum += o.index_in_gk;
  return s;
}

const OrbitReport& orbit_of(const OrbitSummary& summary, const Tuple& t) {
  const Tuple c = canonical_tuple(t);
  for (const auto& o : summary.orbits)
    for (const auto& m : wd5().elements())
      if (act(m, o.representative) == c) return o;
  throw DomainError("tuple " + to_string(t) + " is not a set of orthogonal short classes of size " +
                    std::to_string(summary.k));
}

bool so_transitive_on(NormClass c) {
  const auto cls = classes_of(c);
  std::set<Vec> orbit;
  for (const auto& m : special_orthogonal().elements()) orbit.insert(canonical_class(image(m, cls.front())));
  return orbit.size() == cls.size();
}

CuspReport cusp_report() {
  CuspReport r;
  const auto iso = classes_of(NormClass::Isotropic);
  r.classes = static_cast<int>(iso.size());
  r.so_transitive = so_transitive_on(NormClass::Isotropic);
  r.weight_three = std::all_of(iso.begin(), iso.end(), [](const Vec& v) { return weight(v) == 3; });
  std::set<Vec> seen;
  for (const auto& v : iso) {
    if (seen.count(v)) continue;
    std::set<Vec> orbit;
    for (const auto& m : wd5().elements()) orbit.insert(canonical_class(image(m, v)));
    seen.insert(orbit.begin(), orbit.end());
    r.wd5_orbit_sizes.push_back(orbit.size());
  }
  return r;
}

}  // namespace k3cubic::f3
