#pragma once

#include <array>
#include <random>
#include <utility>
#include <vector>

#include "k3cubic/binforms.hpp"
#include "k3cubic/cubic.hpp"
#include "k3cubic/matrix.hpp"

/// Seeded random inputs shared by the verification suite and the tests.
namespace k3cubic::sampling {

using Rng = std::mt19937;

int uniform(Rng& rng, int lo, int hi);

/// Random multiplicity census of a pair (F5, F2): the 5 roots of F5 and
/// the 2 roots of F2 are dropped onto 1..7 points.
binforms::Census random_census(Rng& rng);
/// Every census shape of a pair, each once.
std::vector<binforms::Census> all_censuses();

/// n distinct points of P^1 drawn from (0:1) and (1:t), |t| <= 12.
std::vector<std::pair<Rational, Rational>> random_points(Rng& rng, int n);

/// (a, b, c, d) with ad - bc != 0, entries in [-3, 3].
std::array<Rational, 4> random_gl2(Rng& rng);
binforms::FormPair substitute(const binforms::FormPair& pair, const std::array<Rational, 4>& g);

/// Pair realizing the census at random points, moved by a random GL(2).
binforms::FormPair random_pair_with_census(Rng& rng, const binforms::Census& census);
/// Random integer coefficients in [-bound, bound]; may be unstable.
binforms::FormPair random_coefficient_pair(Rng& rng, int bound);

/// Invertible integer 4x4 matrix with entries in [-bound, bound].
RatMatrix random_gl4(Rng& rng, int bound);

/// Six integral points of P^2 in general position (redrawn until they are).
std::vector<cubio::Point2> random_general_points(Rng& rng, int bound);

}  // namespace k3cubic::sampling
