#include "k3cubic/e6lines.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "k3cubic/rational.hpp"

namespace k3cubic::e6 {

int pairing(const PicClass& x, const PicClass& y) {
  int s = x[0] * y[0];
  for (int i = 1; i < 7; ++i) s -= x[i] * y[i];
  return s;
}

PicClass canonical_class() { return {-3, 1, 1, 1, 1, 1, 1}; }

PicClass operator+(const PicClass& x, const PicClass& y) {
  PicClass z{};
  for (int i = 0; i < 7; ++i) z[i] = x[i] + y[i];
  return z;
}

PicClass operator-(const PicClass& x, const PicClass& y) {
  PicClass z{};
  for (int i = 0; i < 7; ++i) z[i] = x[i] - y[i];
  return z;
}

PicClass scaled(int s, const PicClass& x) {
  PicClass z{};
  for (int i = 0; i < 7; ++i) z[i] = s * x[i];
  return z;
}

std::string to_string(const PicClass& x) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 7; ++i) {
    if (x[i] == 0) continue;
    if (x[i] < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    if (std::abs(x[i]) != 1) os << std::abs(x[i]);
    os << "e" << i;
    first = false;
  }
  return first ? "0" : os.str();
}

namespace {

PicClass unit(int i) {
  PicClass e{};
  e[i] = 1;
  return e;
}

}  // namespace

const std::vector<PicClass>& lines27() {
  static const std::vector<PicClass> lines = [] {
    std::vector<PicClass> out;
    for (int i = 1; i <= 6; ++i) out.push_back(unit(i));
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) out.push_back(unit(0) - unit(i) - unit(j));
    const PicClass conic = {2, -1, -1, -1, -1, -1, -1};
    for (int i = 1; i <= 6; ++i) out.push_back(conic + unit(i));
    return out;
  }();
  return lines;
}

const std::vector<PicClass>& roots36() {
  static const std::vector<PicClass> roots = [] {
    std::vector<PicClass> out;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) out.push_back(unit(i) - unit(j));
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        for (int k = j + 1; k <= 6; ++k) out.push_back(unit(0) - unit(i) - unit(j) - unit(k));
    out.push_back({2, -1, -1, -1, -1, -1, -1});
    return out;
  }();
  return roots;
}

int line_index(const PicClass& x) {
  static const std::map<PicClass, int> index = [] {
    std::map<PicClass, int> m;
    for (int i = 0; i < 27; ++i) m[lines27()[i]] = i;
    return m;
  }();
  const auto it = index.find(x);
  return it == index.end() ? -1 : it->second;
}

IntMatrix incidence() {
  IntMatrix m(27, 27);
  for (int i = 0; i < 27; ++i)
    for (int j = 0; j < 27; ++j) m(i, j) = pairing(lines27()[i], lines27()[j]);
  return m;
}

std::vector<std::array<int, 3>> tritangents() {
  const PicClass minus_k = scaled(-1, canonical_class());
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < 27; ++a)
    for (int b = a + 1; b < 27; ++b) {
      const int c = line_index(minus_k - lines27()[a] - lines27()[b]);
      if (c > b && pairing(lines27()[a], lines27()[b]) == 1) out.push_back({a, b, c});
    }
  return out;
}

PicClass reflect(const PicClass& root, const PicClass& x) {
  const int r2 = pairing(root, root);
  if (r2 != -2) throw DomainError("reflection needs a root of norm -2");
  return x + scaled(pairing(x, root), root);
}

Perm line_permutation(const PicClass& root) {
  Perm p{};
  for (int i = 0; i < 27; ++i) {
    const int j = line_index(reflect(root, lines27()[i]));
    if (j < 0) throw std::logic_error("reflection does not preserve the lines");
    p[i] = static_cast<std::uint8_t>(j);
  }
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c{};
  for (int i = 0; i < 27; ++i) c[i] = a[b[i]];
  return c;
}

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    return std::hash<std::string_view>()(std::string_view(reinterpret_cast<const char*>(p.data()), p.size()));
  }
};

std::vector<Perm> perm_closure(const std::vector<Perm>& gens, std::size_t bound = 200000) {
  Perm id{};
  for (int i = 0; i < 27; ++i) id[i] = static_cast<std::uint8_t>(i);
  std::unordered_set<Perm, PermHash> seen{id};
  std::vector<Perm> out{id};
  for (std::size_t next = 0; next < out.size(); ++next)
    for (const auto& g : gens) {
      const Perm h = compose(out[next], g);
      if (seen.insert(h).second) {
        out.push_back(h);
        if (out.size() > bound) throw std::runtime_error("group closure exceeded its bound");
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const std::vector<Perm>& weyl_group() {
  static const std::vector<Perm> group = [] {
    std::vector<Perm> gens;
    for (const auto& r : roots36()) gens.push_back(line_permutation(r));
    return perm_closure(gens);
  }();
  return group;
}

IntMatrix to_matrix(const Perm& p) {
  IntMatrix m(7, 7);
  std::array<PicClass, 7> images{};
  for (int i = 1; i <= 6; ++i) images[i] = lines27()[p[i - 1]];
  images[0] = lines27()[p[line_index(unit(0) - unit(1) - unit(2))]] + images[1] + images[2];
  for (int j = 0; j < 7; ++j)
    for (int i = 0; i < 7; ++i) m(i, j) = images[j][i];
  return m;
}

PicClass image(const IntMatrix& m, const PicClass& x) {
  PicClass y{};
  for (int i = 0; i < 7; ++i) {
    Integer s = 0;
    for (int j = 0; j < 7; ++j) s += m(i, j) * x[j];
    y[i] = static_cast<int>(s.get_si());
  }
  return y;
}

std::size_t line_stabilizer_order(int line) {
  std::size_t n = 0;
  for (const auto& p : weyl_group())
    if (p[line] == line) ++n;
  return n;
}

std::vector<std::size_t> line_orbit_sizes(const std::vector<Perm>& group) {
  std::vector<int> orbit_id(27, -1);
  std::vector<std::size_t> sizes;
  for (int i = 0; i < 27; ++i) {
    if (orbit_id[i] >= 0) continue;
    std::set<int> orbit;
    for (const auto& p : group) orbit.insert(p[i]);
    for (int j : orbit) orbit_id[j] = static_cast<int>(sizes.size());
    sizes.push_back(orbit.size());
  }
  return sizes;
}

std::vector<Perm> reflection_subgroup(const std::vector<PicClass>& roots) {
  std::vector<Perm> gens;
  for (const auto& r : roots) gens.push_back(line_permutation(r));
  return perm_closure(gens);
}

std::vector<PicClass> standard_node_roots(int k) {
  if (k < 0 || k > 4) throw DomainError("at most 4 standard node roots");
  std::vector<PicClass> all = {{2, -1, -1, -1, -1, -1, -1}, unit(1) - unit(2), unit(3) - unit(4), unit(5) - unit(6)};
  all.resize(k);
  return all;
}

bool is_standard_node_set(const std::vector<PicClass>& roots) {
  for (int k = 0; k <= 4; ++k) {
    auto a = standard_node_roots(k);
    auto b = roots;
    if (a.size() != b.size()) continue;
    for (auto& r : b)
      if (r < scaled(-1, r)) r = scaled(-1, r);
    for (auto& r : a)
      if (r < scaled(-1, r)) r = scaled(-1, r);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a == b) return true;
  }
  return false;
}

int nodal_line_count(const std::vector<PicClass>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (pairing(roots[i], roots[i]) != -2 || pairing(roots[i], canonical_class()) != 0)
      throw DomainError("node classes must be roots orthogonal to k");
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (pairing(roots[i], roots[j]) != 0) throw DomainError("node roots must be pairwise orthogonal");
  }
  return static_cast<int>(line_orbit_sizes(reflection_subgroup(roots)).size());
}

std::vector<std::array<int, 2>> conic_pencil_fibers(int line) {
  if (line < 0 || line >= 27) throw DomainError("line index out of range");
  const PicClass c = scaled(-1, canonical_class()) - lines27()[line];
  std::vector<std::array<int, 2>> out;
  for (int a = 0; a < 27; ++a) {
    const int b = line_index(c - lines27()[a]);
    if (b > a && pairing(lines27()[a], lines27()[b]) == 1) out.push_back({a, b});
  }
  return out;
}

std::vector<Perm> root_set_stabilizer(const std::vector<PicClass>& roots) {
  std::set<PicClass> target;
  for (const auto& r : roots) {
    target.insert(r);
    target.insert(scaled(-1, r));
  }
  std::vector<Perm> out;
  for (const auto& p : weyl_group()) {
    const IntMatrix m = to_matrix(p);
    bool ok = true;
    for (const auto& r : roots) ok = ok && target.count(image(m, r));
    if (ok) out.push_back(p);
  }
  return out;
}

int nodes_on_line(const std::vector<PicClass>& roots, int line) {
  int n = 0;
  for (const auto& r : roots) n += pairing(r, lines27()[line]) != 0;
  return n;
}

}  // namespace k3cubic::e6
