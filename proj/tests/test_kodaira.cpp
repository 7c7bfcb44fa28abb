#include <doctest.h>

#include "k3cubic/kodaira.hpp"
#include "k3cubic/picard.hpp"
#include "k3cubic/sampling.hpp"

using namespace k3cubic;
using namespace k3cubic::kodaira;
using binforms::CaseId;

namespace {

const BinaryForm x0 = BinaryForm::linear(1, 0);
const BinaryForm x1 = BinaryForm::linear(0, 1);

FiberCounts counts_of(CaseId id) {
  const auto p = binforms::representative_pair(id);
  return fiber_configuration(p.f5, p.f2).counts();
}

}  // namespace

TEST_CASE("Weierstrass sextic") {
  CHECK(weierstrass_sextic(x0.pow(5), x1.pow(2)) == (x0.pow(10) * x1.pow(2)).canonical());
  const BinaryForm f5(std::vector<Rational>{1, 0, 0, 0, 0, -1});
  const auto g = weierstrass_sextic(f5, x0 * x1);
  CHECK(proportional(g, f5.pow(2) * x0 * x1));
  CHECK(g.degree() == 12);
}

TEST_CASE("fibre type from vanishing order") {
  CHECK(fiber_type_from_multiplicity(0) == FiberType::Smooth);
  CHECK(fiber_type_from_multiplicity(1) == FiberType::II);
  CHECK(fiber_type_from_multiplicity(2) == FiberType::IV);
  CHECK(fiber_type_from_multiplicity(3) == FiberType::I0star);
  CHECK(fiber_type_from_multiplicity(4) == FiberType::IVstar);
  CHECK(fiber_type_from_multiplicity(5) == FiberType::IIstar);
  CHECK_THROWS_AS(fiber_type_from_multiplicity(6), DomainError);
  CHECK(euler_number(FiberType::II) == 2);
  CHECK(euler_number(FiberType::IV) == 4);
  CHECK(euler_number(FiberType::I0star) == 6);
  CHECK(euler_number(FiberType::IVstar) == 8);
  CHECK(euler_number(FiberType::IIstar) == 10);
  CHECK(root_lattice(FiberType::IVstar) == "E6");
  CHECK(root_lattice(FiberType::II).empty());
}

TEST_CASE("fibre configurations of documented cases") {
  CHECK(counts_of(CaseId::C1) == FiberCounts{{FiberType::IV, 5}, {FiberType::II, 2}});
  CHECK(counts_of(CaseId::C17) == FiberCounts{{FiberType::IIstar, 2}, {FiberType::IV, 1}});
  CHECK(counts_of(CaseId::C3) == FiberCounts{{FiberType::I0star, 2}, {FiberType::IV, 3}});
  CHECK(to_string(counts_of(CaseId::C1)) == "5 IV, 2 II");
  for (CaseId id : binforms::all_cases()) {
    CAPTURE(binforms::to_string(id));
    const auto p = binforms::representative_pair(id);
    const auto f = fiber_configuration(p.f5, p.f2);
    CHECK(f.euler_total == 24);
    CHECK(f.counts() == table_fibers(id));
    CHECK(f.counts() == parse_fiber_counts(binforms::table1_row(id).kodaira_fibres));
  }
}

TEST_CASE("Euler number 24 on random stable pairs") {
  sampling::Rng rng(5);
  int tested = 0;
  while (tested < 100) {
    const auto p = sampling::random_coefficient_pair(rng, 4);
    if (binforms::stability(p.f5, p.f2).verdict != binforms::Stability::Stable) continue;
    ++tested;
    CHECK(fiber_configuration(p.f5, p.f2).euler_total == 24);
  }
}

TEST_CASE("trivial lattice") {
  const auto t = trivial_lattice(counts_of(CaseId::C1));
  CHECK(t.to_string() == "U+A2^5");
  CHECK(t == lattices::parse_lattice_expr(lattices::table2_row(CaseId::C1).picard));
  CHECK(trivial_lattice(counts_of(CaseId::C2)).to_string() == "U+D4+A2^4");
  CHECK(trivial_lattice(counts_of(CaseId::C16)).to_string() == "U+E6^3");
}

TEST_CASE("fibre count strings") {
  const auto c = parse_fiber_counts("II*, IV*, I0*");
  CHECK(c.at(FiberType::IIstar) == 1);
  CHECK(to_string(c) == "II*, IV*, I0*");
  CHECK_THROWS_AS(parse_fiber_counts("3 Q"), ParseError);
}
