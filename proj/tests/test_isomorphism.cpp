#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "linarr/isomorphism.hpp"
#include "linarr/freeness.hpp"
#include "test_support.hpp"

using namespace linarr;
using linarr::testing::open_data;
using linarr::testing::random_element;

namespace {

std::array<Triple, 3> random_invertible(std::mt19937_64& rng) {
  for (;;) {
    std::array<Triple, 3> m;
    for (auto& row : m)
      for (auto& v : row) v = random_element(rng, 4);
    const auto det = dot(m[0], cross(m[1], m[2]));
    if (!det.is_zero()) return m;
  }
}

Arrangement shuffled(const Arrangement& a, std::mt19937_64& rng) {
  std::vector<std::size_t> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return a.subset(order);
}

}  // namespace

TEST_CASE("the two 31-line arrangements are not isomorphic") {
  const auto a312 = build_family_12k7(2);
  const auto a313 = build_a31_3();
  CHECK(weak_combinatorics(a312) == weak_combinatorics(a313));
  CHECK_FALSE(incidence_isomorphic(a312, a313));
  CHECK_FALSE(incidence_isomorphic(a313, a312));
  CHECK_FALSE(incidence_isomorphic(build_family_12k7(1), a312));
}

TEST_CASE("Table 4 lines realize the rotated construction") {
  auto in = open_data("table4_a31_3.txt");
  const auto table = AdditionTable::read(in);
  Arrangement t4;
  for (const auto& row : table.rows) t4.add(*row.line, row.name);
  CHECK(incidence_isomorphic(t4, build_a31_3()));
  CHECK_FALSE(incidence_isomorphic(t4, build_family_12k7(2)));
}

TEST_CASE("isomorphism is reflexive and survives coordinate changes") {
  std::mt19937_64 rng(2024);
  for (const auto& a : {build_family_12k7(1), build_family_12k7(2), build_a31_3()}) {
    CHECK(incidence_isomorphic(a, a));
    for (int trial = 0; trial < 3; ++trial) {
      const auto b = shuffled(transform(a, random_invertible(rng)), rng);
      const auto map = find_lattice_isomorphism(a, b);
      REQUIRE(map.has_value());
      CHECK(incidence_isomorphic(b, a));
      // the returned map carries every singular point's line set onto a singular point of b
      const auto lb = singular_locus(b);
      std::set<std::vector<std::size_t>> b_sets;
      for (const auto& p : lb.points) b_sets.insert(p.lines);
      for (const auto& p : singular_locus(a).points) {
        std::vector<std::size_t> image;
        for (std::size_t i : p.lines) image.push_back((*map)[i]);
        std::sort(image.begin(), image.end());
        CHECK(b_sets.count(image) == 1);
      }
    }
  }
}

TEST_CASE("small non-isomorphic pairs") {
  Arrangement generic, pencil;
  for (const char* f : {"x", "y", "z", "x+y+z"}) generic.add(ProjectiveLine::parse(f));
  for (const char* f : {"x", "y", "x+y", "z"}) pencil.add(ProjectiveLine::parse(f));
  CHECK_FALSE(incidence_isomorphic(generic, pencil));
  CHECK(incidence_isomorphic(Arrangement{}, Arrangement{}));
}
