#include <doctest.h>

#include <algorithm>

#include "k3cubic/f3space.hpp"
#include "k3cubic/strata.hpp"

using namespace k3cubic;
using namespace k3cubic::f3;

namespace {

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("vectors of F_3^5") {
  const Vec v = make_vec({1, -1, 0, 0, 1});
  CHECK(v == Vec{1, 2, 0, 0, 1});
  CHECK(from_code(code(v)) == v);
  CHECK(weight(v) == 3);
  CHECK(q(v) == 0);
  CHECK(q(make_vec({1, 0, 0, 0, 0})) == Rational(2, 3));
  CHECK(q(make_vec({1, 1, 0, 0, 0})) == Rational(4, 3));
  CHECK(canonical_class(negate(v)) == canonical_class(v));
  CHECK(to_string(v) == "(1,-1,0,0,1)");
}

TEST_CASE("norm census") {
  const auto c = norm_census();
  CHECK(c.isotropic == 40);
  CHECK(c.short_classes == 36);
  CHECK(c.long_classes == 45);
  CHECK(classes_of(NormClass::Short).size() == 36);
  for (const auto& x : classes_of(NormClass::Isotropic)) CHECK(weight(x) % 3 == 0);
}

TEST_CASE("orthogonal groups") {
  const auto& so = special_orthogonal();
  CHECK(so.order() == 51840);
  CHECK(orthogonal().order() == 103680);
  Mat minus{};
  for (int i = 0; i < 5; ++i) minus[static_cast<std::size_t>(6 * i)] = 2;
  CHECK(det(minus) == 2);
  CHECK_FALSE(so.contains(minus));
  CHECK(orthogonal().contains(minus));
  for (std::size_t i = 0; i < so.order(); i += 997) {
    CHECK(preserves_form(so.elements()[i]));
    CHECK(det(so.elements()[i]) == 1);
  }
  CHECK(so_transitive_on(NormClass::Isotropic));
  CHECK(so_transitive_on(NormClass::Short));
  CHECK(so_transitive_on(NormClass::Long));
}

TEST_CASE("W(D5)") {
  const auto& w = wd5();
  CHECK(w.order() == 1920);
  CHECK(special_orthogonal().order() / w.order() == 27);
  for (const auto& g : w.elements()) CHECK(special_orthogonal().contains(g));
}

TEST_CASE("orbits on orthogonal short classes") {
  const std::vector<std::size_t> gk = {1440, 192, 96, 384};
  const std::vector<std::vector<std::size_t>> index = {{12, 15}, {1, 4, 6, 16}, {3, 12, 12}, {3, 24}};
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    const auto s = wd5_orbits_on_short(k);
    CHECK(s.gk_order == gk[static_cast<std::size_t>(k - 1)]);
    CHECK(gk_order(k) == s.gk_order);
    CHECK(s.so_transitive);
    CHECK(s.index_sum == 27);
    std::vector<std::size_t> idx, sizes;
    std::size_t total = 0;
    for (const auto& o : s.orbits) {
      idx.push_back(o.index_in_gk);
      sizes.push_back(o.orbit_size);
      total += o.orbit_size;
      CHECK(o.orbit_size * o.stabilizer_order == 1920);
    }
    CHECK(sorted(idx) == index[static_cast<std::size_t>(k - 1)]);
    CHECK(total == s.tuple_count);
    if (k == 1) CHECK(sorted(sizes) == std::vector<std::size_t>{16, 20});
  }
}

TEST_CASE("standard tuples") {
  for (int k = 1; k <= 4; ++k) {
    const auto t = standard_tuple(k);
    REQUIRE(t.size() == static_cast<std::size_t>(k));
    for (const auto& a : t) CHECK(norm_class(a) == NormClass::Short);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j) CHECK(orthogonal(t[i], t[j]));
    CHECK(stabilizer_order(special_orthogonal(), t) == gk_order(k));
  }
}

TEST_CASE("cusps") {
  const auto c = cusp_report();
  CHECK(c.classes == 40);
  CHECK(c.so_transitive);
  CHECK(c.weight_three);
  CHECK(c.wd5_orbit_sizes == std::vector<std::size_t>{40});
}

TEST_CASE("strata bookkeeping") {
  CHECK(strata::strata().size() == 11);
  CHECK(strata::to_string(strata::StratumLabel{2, 3}) == "Delta_2^(3)");
  CHECK(strata::stratum_of(binforms::CaseId::C8Star) == strata::StratumLabel{2, 2});
  CHECK(strata::stratum_of(binforms::CaseId::C17) == strata::StratumLabel{4, 2});
  CHECK(strata::stratum_of(binforms::CaseId::C4) == strata::StratumLabel{1, 1});
  CHECK_FALSE(strata::stratum_of(binforms::CaseId::C3).has_value());
  CHECK_FALSE(strata::stratum_of(binforms::CaseId::Cusp).has_value());
  const auto b = strata::bookkeeping_check();
  CHECK(b.ok());
  for (const auto& s : b.strata) {
    CAPTURE(strata::to_string(s.label));
    CHECK(s.tuple_valid);
    CHECK(s.distinct_orbit);
    CHECK(s.line_orbit_found);
  }
}
