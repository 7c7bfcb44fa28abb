#include <doctest.h>

#include <algorithm>
#include <set>

#include "k3cubic/e6lines.hpp"

using namespace k3cubic;
using namespace k3cubic::e6;

TEST_CASE("lines and roots") {
  const auto& lines = lines27();
  CHECK(lines.size() == 27);
  const PicClass k = canonical_class();
  for (const auto& l : lines) {
    CHECK(pairing(l, l) == -1);
    CHECK(pairing(l, k) == -1);
  }
  CHECK(pairing(PicClass{0, 1, 0, 0, 0, 0, 0}, PicClass{1, -1, -1, 0, 0, 0, 0}) == 1);
  const auto inc = incidence();
  for (std::size_t i = 0; i < 27; ++i) {
    int meet = 0;
    for (std::size_t j = 0; j < 27; ++j) meet += i != j && inc(i, j) == 1;
    CHECK(meet == 10);
  }
  CHECK(roots36().size() == 36);
  for (const auto& r : roots36()) {
    CHECK(pairing(r, r) == -2);
    CHECK(pairing(r, k) == 0);
  }
  CHECK(line_index(PicClass{1, 0, 0, -1, -1, 0, 0}) >= 0);
  CHECK(line_index(PicClass{1, 0, 0, 0, 0, 0, 0}) == -1);
}

TEST_CASE("tritangents") {
  const auto t = tritangents();
  CHECK(t.size() == 45);
  std::vector<int> through(27, 0);
  for (const auto& tri : t) {
    const PicClass s = lines27()[tri[0]] + lines27()[tri[1]] + lines27()[tri[2]];
    CHECK(s == scaled(-1, canonical_class()));
    for (int i : tri) ++through[static_cast<std::size_t>(i)];
  }
  CHECK(std::all_of(through.begin(), through.end(), [](int n) { return n == 5; }));
}

TEST_CASE("Weyl group of E6") {
  const auto& w = weyl_group();
  CHECK(w.size() == 51840);
  CHECK(line_stabilizer_order(0) == 1920);
  CHECK(w.size() / line_stabilizer_order(5) == 27);
  CHECK(line_orbit_sizes(w) == std::vector<std::size_t>{27});
  // every element fixes k and preserves the form
  for (std::size_t i = 0; i < w.size(); i += 1013) {
    const IntMatrix m = to_matrix(w[i]);
    CHECK(image(m, canonical_class()) == canonical_class());
    for (const auto& r : roots36()) CHECK(pairing(image(m, r), image(m, r)) == -2);
  }
  // transitive on tritangents
  const auto tri = tritangents();
  std::set<std::array<int, 3>> orbit;
  for (const auto& g : w) {
    std::array<int, 3> t{g[tri[0][0]], g[tri[0][1]], g[tri[0][2]]};
    std::sort(t.begin(), t.end());
    orbit.insert(t);
  }
  CHECK(orbit.size() == 45);
}

TEST_CASE("nodal cubics") {
  CHECK(nodal_line_count(standard_node_roots(1)) == 21);
  CHECK(nodal_line_count(standard_node_roots(2)) == 16);
  CHECK(nodal_line_count(standard_node_roots(3)) == 12);
  CHECK(nodal_line_count(standard_node_roots(4)) == 9);
  CHECK(is_standard_node_set(standard_node_roots(3)));
  CHECK_THROWS_AS(nodal_line_count({PicClass{0, 1, -1, 0, 0, 0, 0}, PicClass{0, 0, 1, -1, 0, 0, 0}}), DomainError);
  const std::vector<std::size_t> stab = {1440, 192, 96, 384};
  for (int k = 1; k <= 4; ++k) CHECK(root_set_stabilizer(standard_node_roots(k)).size() == stab[static_cast<std::size_t>(k - 1)]);
}

TEST_CASE("conic pencils") {
  for (int l = 0; l < 27; ++l) {
    const auto pairs = conic_pencil_fibers(l);
    REQUIRE(pairs.size() == 5);
    std::set<int> seen;
    for (const auto& p : pairs) {
      const PicClass c = lines27()[p[0]] + lines27()[p[1]];
      CHECK(pairing(c, c) == 0);
      seen.insert(p[0]);
      seen.insert(p[1]);
    }
    std::set<int> meeting;
    const auto inc = incidence();
    for (int j = 0; j < 27; ++j)
      if (j != l && inc(static_cast<std::size_t>(l), static_cast<std::size_t>(j)) == 1) meeting.insert(j);
    CHECK(seen == meeting);
  }
}
