#include "k3cubic/sampling.hpp"

#include <algorithm>

namespace k3cubic::sampling {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

binforms::Census random_census(Rng& rng) {
  const int n = uniform(rng, 1, 7);
  std::vector<std::pair<int, int>> mult(static_cast<std::size_t>(n), {0, 0});
  for (int i = 0; i < 5; ++i) ++mult[static_cast<std::size_t>(uniform(rng, 0, n - 1))].first;
  for (int i = 0; i < 2; ++i) ++mult[static_cast<std::size_t>(uniform(rng, 0, n - 1))].second;
  binforms::Census census;
  for (const auto& m : mult)
    if (m.first + m.second > 0) ++census[m];
  return census;
}

namespace {

void extend(std::vector<std::pair<int, int>>& chosen, int r5, int r2, std::vector<binforms::Census>& out) {
  if (r5 == 0 && r2 == 0) {
    binforms::Census c;
    for (const auto& m : chosen) ++c[m];
    out.push_back(c);
    return;
  }
  // non-increasing sequence of (m5, m2) so every multiset appears once
  for (int a = r5; a >= 0; --a)
    for (int b = r2; b >= 0; --b) {
      if (a + b == 0) continue;
      const std::pair<int, int> m{a, b};
      if (!chosen.empty() && chosen.back() < m) continue;
      chosen.push_back(m);
      extend(chosen, r5 - a, r2 - b, out);
      chosen.pop_back();
    }
}

}  // namespace

std::vector<binforms::Census> all_censuses() {
  std::vector<binforms::Census> out;
  std::vector<std::pair<int, int>> chosen;
  extend(chosen, 5, 2, out);
  return out;
}

std::vector<std::pair<Rational, Rational>> random_points(Rng& rng, int n) {
  std::vector<std::pair<Rational, Rational>> pool{{0, 1}};
  for (int t = -12; t <= 12; ++t) pool.emplace_back(1, t);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(n));
  return pool;
}

std::array<Rational, 4> random_gl2(Rng& rng) {
  while (true) {
    std::array<int, 4> g{uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3)};
    if (g[0] * g[3] - g[1] * g[2] != 0) return {g[0], g[1], g[2], g[3]};
  }
}

binforms::FormPair substitute(const binforms::FormPair& pair, const std::array<Rational, 4>& g) {
  return {pair.f5.substitute(g[0], g[1], g[2], g[3]), pair.f2.substitute(g[0], g[1], g[2], g[3])};
}

binforms::FormPair random_pair_with_census(Rng& rng, const binforms::Census& census) {
  int n = 0;
  for (const auto& [m, count] : census) n += count;
  const auto pair = binforms::pair_from_census(census, random_points(rng, n));
  const Rational s5 = uniform(rng, 1, 5), s2 = -uniform(rng, 1, 5);
  const auto moved = substitute(pair, random_gl2(rng));
  return {s5 * moved.f5, s2 * moved.f2};
}

binforms::FormPair random_coefficient_pair(Rng& rng, int bound) {
  std::vector<Rational> c5(6), c2(3);
  for (auto& c : c5) c = uniform(rng, -bound, bound);
  for (auto& c : c2) c = uniform(rng, -bound, bound);
  return {BinaryForm(c5), BinaryForm(c2)};
}

RatMatrix random_gl4(Rng& rng, int bound) {
  while (true) {
    RatMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = uniform(rng, -bound, bound);
    if (determinant(m) != 0) return m;
  }
}

std::vector<cubio::Point2> random_general_points(Rng& rng, int bound) {
  while (true) {
    std::vector<cubio::Point2> pts(6);
    for (auto& p : pts)
      for (auto& c : p) c = uniform(rng, -bound, bound);
    try {
      cubio::check_general_position(pts);
      return pts;
    } catch (const DomainError&) {
    }
  }
}

}  // namespace k3cubic::sampling
