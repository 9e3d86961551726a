#include <doctest.h>

#include <random>
#include <sstream>

#include "linarr/projective.hpp"
#include "test_support.hpp"

using namespace linarr;
using linarr::testing::F;

TEST_CASE("canonical representatives") {
  const FieldElement e = FieldElement::sqrt3();
  const ProjectivePoint p(FieldElement(2) * e, -1, 2);
  CHECK(p.coords() == Triple{1, F("-1/6*e"), F("1/3*e")});
  CHECK(ProjectivePoint(0, 0, 5).coords() == Triple{0, 0, 1});
  CHECK(ProjectivePoint(0, -3, 6).coords() == Triple{0, 1, -2});
  CHECK_THROWS_AS(ProjectivePoint(0, 0, 0), std::invalid_argument);
}

TEST_CASE("meets of lines") {
  const auto x = ProjectiveLine::parse("x");
  const auto y = ProjectiveLine::parse("y");
  const auto z = ProjectiveLine::parse("z");
  CHECK(meet(x, y) == ProjectivePoint(0, 0, 1));
  CHECK(meet(ProjectiveLine::parse("2*x - e*z"), z) == ProjectivePoint(0, 1, 0));
  CHECK(meet(ProjectiveLine::parse("2*x - e*z"), ProjectiveLine::parse("2*y - z")) ==
        ProjectivePoint(F("1/2*e"), F("1/2"), 1));
  CHECK_THROWS_AS(meet(x, ProjectiveLine::parse("3*x")), std::invalid_argument);
}

TEST_CASE("incidence") {
  CHECK(incident(ProjectivePoint(0, 0, 1), ProjectiveLine::parse("x")));
  CHECK_FALSE(incident(ProjectivePoint(1, 1, 1), ProjectiveLine::parse("z")));
  CHECK(incident(ProjectivePoint(F("1/2*e"), F("1/2"), 1), ProjectiveLine::parse("2*x - e*z")));
}

TEST_CASE("projective invariants on random lines") {
  std::mt19937_64 rng(3);
  using linarr::testing::random_element;
  using linarr::testing::random_nonzero;
  for (int trial = 0; trial < 100; ++trial) {
    const Triple a{random_nonzero(rng), random_element(rng), random_element(rng)};
    const Triple b{random_element(rng), random_nonzero(rng), random_element(rng)};
    const ProjectiveLine l1(a), l2(b);
    if (l1 == l2) continue;
    const auto p = meet(l1, l2);
    CHECK(p == meet(l2, l1));
    CHECK(incident(p, l1));
    CHECK(incident(p, l2));

    const FieldElement s = random_nonzero(rng);
    CHECK(ProjectiveLine(Triple{a[0] * s, a[1] * s, a[2] * s}) == l1);
    CHECK(canonical_triple(l1.coords()) == l1.coords());

    // Duality: swapping the roles of points and lines keeps incidence.
    const ProjectivePoint dual_point(l1.coords());
    const ProjectiveLine dual_line(p.coords());
    CHECK(incident(dual_point, dual_line));
  }
}

TEST_CASE("csv triples") {
  std::istringstream in("# comment\n1, -e, 1/2+e\n\n0 0 1\n");
  const auto rows = read_triples_csv(in);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][2] == F("1/2+e"));
  std::ostringstream out;
  write_triples_csv(out, rows);
  std::istringstream back(out.str());
  CHECK(read_triples_csv(back) == rows);
  std::istringstream bad("1, 2\n");
  CHECK_THROWS_AS(read_triples_csv(bad), ParseError);
}
