#include <doctest.h>

#include "k3cubic/json_io.hpp"
#include "k3cubic/kodaira.hpp"
#include "k3cubic/verify.hpp"

using namespace k3cubic;
using namespace k3cubic::json_io;

TEST_CASE("binary forms round trip") {
  const BinaryForm f(std::vector<Rational>{1, Rational(-2, 3), 0});
  const json j = to_json(f);
  CHECK(j == json::array({"1", "-2/3", "0"}));
  CHECK(form_from_json(j) == f);
  CHECK(form_from_json(json::array({1, 0, -1})) == BinaryForm(std::vector<Rational>{1, 0, -1}));
  CHECK_THROWS_AS(form_from_json(json::object()), ParseError);
  CHECK_THROWS_AS(form_from_json(json::array({"x"})), ParseError);
}

TEST_CASE("reports") {
  const auto p = binforms::representative_pair(binforms::CaseId::C2);
  const json c = to_json(binforms::classify_case(p.f5, p.f2));
  CHECK(c["case"] == "2");
  CHECK(c["type_vector"] == json::array({3, 2, 2, 2, 2, 1}));
  const json f = to_json(kodaira::fiber_configuration(p.f5, p.f2));
  CHECK(f["euler_total"] == 24);
  CHECK(f["summary"] == "I0*, 4 IV, II");
  const json q = to_json(lattices::discriminant_form(lattices::named_lattice("A2")));
  CHECK(q["structure"] == "Z/3");
  CHECK(to_json(f3::standard_tuple(2)) == json::parse("[[1,1,1,1,1],[1,-1,-1,-1,-1]]"));
}

TEST_CASE("envelope and suite output") {
  const json e = envelope("x", json::object());
  CHECK(e["schema_version"] == kSchemaVersion);
  CHECK(e["command"] == "x");
  const auto r = verify::run_verification(std::string("census"));
  const json j = to_json(r);
  CHECK(j["status"] == "pass");
  CHECK_FALSE(j.contains("seconds"));
  CHECK(to_json(r, true).contains("seconds"));
  CHECK(j["checks"].size() == 4);
  CHECK(j.dump() == to_json(verify::run_verification(std::string("census"))).dump());
  CHECK_THROWS_AS(verify::run_verification(std::string("nothing")), DomainError);
}
