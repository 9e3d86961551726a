// Acceptance run: one PASS/FAIL line per criterion.
//
// Usage: linarr_acceptance [--only N,...] [--known-red N,...]
// Exit status is 0 when the set of failing criteria equals the --known-red set.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "linarr/freeness.hpp"
#include "linarr/ideals.hpp"
#include "linarr/isomorphism.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace linarr;
using linarr::testing::open_data;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

std::set<int> parse_list(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(std::stoi(item));
  }
  return out;
}

struct Fixture {
  Arrangement arrangement;
  AdditionTable table;
  std::vector<std::size_t> order;
};

Fixture load_table(const std::string& name, std::optional<Arrangement> onto = std::nullopt) {
  auto in = open_data(name);
  Fixture f;
  f.table = AdditionTable::read(in);
  if (onto) {
    f.arrangement = *onto;
  } else {
    for (const auto& row : f.table.rows) f.arrangement.add(*row.line, row.name);
  }
  f.order = f.table.resolve(f.arrangement);
  for (std::size_t i = 0; i < f.order.size(); ++i) f.arrangement.set_label(f.order[i], f.table.rows[i].name);
  return f;
}

WeakCombinatorics expected_vector() {
  WeakCombinatorics w;
  w.n = 31;
  w.t = {{2, 54}, {3, 42}, {4, 21}, {5, 6}, {6, 1}, {8, 3}};
  return w;
}

// 1. Family construction.
Verdict family_construction() {
  std::vector<std::string> bad;
  for (int k = 1; k <= 5; ++k) {
    const auto a = build_family_12k7(k);
    std::set<ProjectiveLine> distinct(a.lines().begin(), a.lines().end());
    if (a.size() != static_cast<std::size_t>(12 * k + 7) || distinct.size() != a.size()) {
      bad.push_back("k=" + std::to_string(k) + " gives " + std::to_string(distinct.size()));
    }
  }
  if (!bad.empty()) return {false, join(bad)};
  return {true, "k=1..5 give 19, 31, 43, 55, 67 distinct lines"};
}

// 2. Table 2 replay, row by row.
Verdict table2_replay() {
  const auto f = load_table("table2_a19.txt", build_family_12k7(1));
  const auto cert = freeness_replay(f.arrangement, f.order);
  std::vector<std::string> exp_bad, restriction_bad, offset_bad;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& row = f.table.rows[i];
    const auto& step = cert.steps[i];
    if (step.exponents != *row.exponents) exp_bad.push_back(row.name);
    const unsigned t = static_cast<unsigned>(step.restriction_count);
    const std::array<unsigned, 2> computed{std::min(1u, t - 1), std::max(1u, t - 1)};
    if (t == 0 || computed != *row.restriction) {
      restriction_bad.push_back(row.name + " (t=" + std::to_string(t) + ", table {" +
                                std::to_string((*row.restriction)[0]) + "," + std::to_string((*row.restriction)[1]) +
                                "})");
    }
    // the same column read against the next row's addition
    const std::size_t j = std::min(i + 1, cert.steps.size() - 1);
    const unsigned tn = static_cast<unsigned>(cert.steps[j].restriction_count);
    if (std::array<unsigned, 2>{std::min(1u, tn - 1), std::max(1u, tn - 1)} != *row.restriction) {
      offset_bad.push_back(row.name);
    }
  }
  const bool final_ok = cert.verdict && cert.final_exponents() == ExponentTriple(1, 7, 11);
  std::ostringstream d;
  d << "final " << (cert.verdict ? cert.final_exponents().to_string() : "invalid") << "; exp A' rows "
    << (exp_bad.empty() ? "all match" : "differ at " + join(exp_bad)) << "; exp A'' = {1,t-1} "
    << (restriction_bad.empty() ? "on every row" : "fails at " + join(restriction_bad))
    << "; exp A'' read against the next row's line " << (offset_bad.empty() ? "matches every row" : "differs at " + join(offset_bad));
  return {final_ok && exp_bad.empty() && restriction_bad.empty(), d.str()};
}

// 3. Table 3 and Table 4 extensions.
Verdict extensions() {
  const auto t3 = load_table("table3_a31_2.txt", build_family_12k7(2));
  const auto c3 = freeness_replay(t3.arrangement, t3.order);
  const auto t4 = load_table("table4_a31_3.txt");
  const auto c4 = freeness_replay(t4.arrangement, t4.order);
  bool rows_ok = true;
  for (std::size_t i = 0; i < c4.steps.size(); ++i) rows_ok = rows_ok && c4.steps[i].exponents == *t4.table.rows[i].exponents;
  const bool ok = c3.verdict && c3.final_exponents() == ExponentTriple(1, 13, 17) && c4.verdict &&
                  c4.final_exponents() == ExponentTriple(1, 13, 17) && rows_ok &&
                  incidence_isomorphic(t4.arrangement, build_a31_3());
  std::ostringstream d;
  d << "A(31,2) " << (c3.verdict ? c3.final_exponents().to_string() : "invalid") << ", A(31,3) "
    << (c4.verdict ? c4.final_exponents().to_string() : "invalid") << (rows_ok ? ", Table 4 exp A' rows match" : ", Table 4 rows differ");
  return {ok, d.str()};
}

// 4. Weak combinatorics.
Verdict weak_combinatorics_check() {
  const auto w2 = weak_combinatorics(build_family_12k7(2));
  const auto w3 = weak_combinatorics(build_a31_3());
  const bool ok = w2 == expected_vector() && w3 == expected_vector() && w2.pair_count() == 465 && w3.pair_count() == 465;
  return {ok, "A(31,2) " + w2.to_string() + ", A(31,3) " + w3.to_string() + ", pair count " + std::to_string(w3.pair_count())};
}

// 5. Appendix list L.
Verdict appendix_list() {
  auto in = open_data("appendix_L.csv");
  std::set<ProjectivePoint> listed;
  for (const auto& t : read_triples_csv(in)) listed.insert(ProjectivePoint(t));
  const auto computed = singular_locus(build_family_12k7(2)).point_set();
  const std::set<ProjectivePoint> mine(computed.begin(), computed.end());
  return {mine == listed && listed.size() == 127,
          std::to_string(mine.size()) + " computed points, " + std::to_string(listed.size()) + " listed"};
}

// 6. Non-isomorphism and self-isomorphism under coordinate changes.
Verdict isomorphism() {
  const auto a2 = build_family_12k7(2);
  const auto a3 = build_a31_3();
  const bool different = !incidence_isomorphic(a2, a3);
  std::mt19937_64 rng(31);
  int same = 0;
  for (int trial = 0; trial < 10; ++trial) {
    std::array<Triple, 3> m;
    do {
      for (auto& row : m)
        for (auto& v : row) v = linarr::testing::random_element(rng, 4);
    } while (dot(m[0], cross(m[1], m[2])).is_zero());
    std::vector<std::size_t> perm(a2.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto& base = trial % 2 == 0 ? a2 : a3;
    same += incidence_isomorphic(base, transform(base, m).subset(perm));
  }
  return {different && same == 10,
          std::string("A(31,2) vs A(31,3): ") + (different ? "not isomorphic" : "isomorphic") +
              "; relabeled projective images recognized " + std::to_string(same) + "/10"};
}

// 7. Containment verdicts on the full singular loci.
Verdict containment() {
  const ExactField field;
  std::ostringstream d;
  d << std::fixed << std::setprecision(1);
  bool ok = true;

  const auto a2 = build_family_12k7(2);
  const auto r2 = containment_check(field, FatPointScheme::uniform(singular_locus(a2).point_set(), 1), 3, 2);
  d << "A(31,2) contained=" << (r2.contained ? "true" : "false") << " after testing all "
    << std::accumulate(r2.symbolic_generator_degrees.begin(), r2.symbolic_generator_degrees.end(), std::size_t{0},
                       [](std::size_t acc, const auto& kv) { return acc + kv.second; })
    << " generators of J^(3) (" << r2.wall_time_ms / 1000 << " s)";
  ok = ok && r2.contained && r2.exhaustive;

  const auto a3 = build_a31_3();
  ContainmentOptions first;
  first.stop_at_first_witness = true;
  const auto r3 = containment_check(field, FatPointScheme::uniform(singular_locus(a3).point_set(), 1), 3, 2, first);
  d << "; A(31,3) contained=" << (r3.contained ? "true" : "false") << " (" << r3.wall_time_ms / 1000 << " s)";
  ok = ok && !r3.contained;
  if (!r3.witnesses.empty()) {
    const auto primary = to_form(r3.witnesses.front());
    const auto f = witness_line_factors(primary, a3);
    d << ", " << r3.witnesses.size() << " failing generator(s), primary degree " << primary.degree() << " = "
      << f.lines.size() << " lines + quotient of degree " << f.quotient.degree();
    // regression value for the witness degree
    ok = ok && f.lines.size() == 21 && f.quotient.degree() == 12 && primary.degree() == 33;
    ok = ok && vanishes_on(primary, FatPointScheme::uniform(singular_locus(a3).point_set(), 3));
  }
  return {ok, d.str()};
}

// 8. Sanity containments and the brute-force oracle.
Verdict sanity_containments() {
  const ExactField field;
  const auto star = FatPointScheme::uniform(
      {ProjectivePoint(1, 0, 0), ProjectivePoint(0, 1, 0), ProjectivePoint(0, 0, 1)}, 1);
  const auto r = containment_check(field, star, 2, 2);
  const bool star_ok = !r.contained && r.witnesses.size() == 1 &&
                       to_form(r.witnesses[0]).monic() == HomogeneousForm::parse("x*y*z");
  std::mt19937_64 rng(8);
  int agree = 0;
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<std::size_t> count(1, 6);
    const auto points = linarr::testing::random_points(rng, count(rng));
    const auto report = containment_check(field, FatPointScheme::uniform(points, 1), 3, 2);
    const unsigned cap = std::max(report.degrees_scanned.second, 8u);
    agree += report.contained == linarr::testing::oracle_contained(points, 3, 2, cap);
  }
  return {star_ok && agree == 25, std::string("star (2,2) witness xyz: ") + (star_ok ? "yes" : "no") +
                                      "; oracle agreement " + std::to_string(agree) + "/25"};
}

// 9. Property suites.
Verdict properties() {
  std::mt19937_64 rng(9);
  using linarr::testing::random_element;
  using linarr::testing::random_form;
  std::vector<std::string> failed;

  int field_ok = 0;
  for (int i = 0; i < 100; ++i) {
    const auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
    bool ok = (a + b) + c == a + (b + c) && a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
              a + FieldElement() == a && a * FieldElement(1) == a && a - a == FieldElement();
    if (!a.is_zero()) ok = ok && a * a.inverse() == FieldElement(1);
    field_ok += ok;
  }
  if (field_ok != 100) failed.push_back("field axioms");

  int euler_ok = 0;
  for (int i = 0; i < 100; ++i) {
    const unsigned d = 1 + i % 6;
    const auto f = random_form(rng, d);
    const auto lhs = HomogeneousForm::variable(Variable::x) * f.partial(Variable::x) +
                     HomogeneousForm::variable(Variable::y) * f.partial(Variable::y) +
                     HomogeneousForm::variable(Variable::z) * f.partial(Variable::z);
    euler_ok += f.is_zero() || lhs == f * FieldElement(static_cast<long>(d));
  }
  if (euler_ok != 100) failed.push_back("Euler identity");

  int pair_ok = 0, sum_ok = 0;
  std::uniform_int_distribution<int> coef(-3, 3);
  const auto a19 = build_family_12k7(1);
  for (int i = 0; i < 100; ++i) {
    Arrangement a;
    while (a.size() < 9) {
      Triple t{FieldElement(coef(rng)), FieldElement(coef(rng)), FieldElement(coef(rng))};
      if (!(t[0].is_zero() && t[1].is_zero() && t[2].is_zero())) a.add_unique(ProjectiveLine(t));
    }
    pair_ok += weak_combinatorics(a).pair_count() == 36;

    std::vector<std::size_t> order(a19.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto cert = freeness_replay(a19, order);
    const std::size_t valid = cert.failing_step ? *cert.failing_step : cert.steps.size();
    bool sums = true;
    for (std::size_t k = 0; k < valid; ++k) sums = sums && cert.steps[k].exponents.sum() == k + 1;
    sum_ok += sums;
  }
  if (pair_ok != 100) failed.push_back("pair-count identity");
  if (sum_ok != 100) failed.push_back("exponent-sum identity");

  int power_ok = 0;
  const ExactField field;
  for (int i = 0; i < 100; ++i) {
    std::uniform_int_distribution<std::size_t> count(1, 4);
    const auto points = linarr::testing::random_points(rng, count(rng));
    const unsigned m = 2 + i % 2;
    const auto g = minimal_generators(field, FatPointScheme::uniform(points, 1), 30);
    const unsigned d = g.forms.front().degree * m + i % 2;
    const auto symbolic = FatPointScheme::uniform(points, m);
    bool ok = true;
    for (const auto& row : power_graded_span(field, g, m, d).forms) {
      ok = ok && vanishes_on(HomogeneousForm::from_dense(d, row), symbolic);
    }
    power_ok += ok;
  }
  if (power_ok != 100) failed.push_back("I^m in I^(m)");

  return {failed.empty(), failed.empty() ? "field axioms, Euler identity, pair-count identity, exponent-sum identity, "
                                           "I^m in I^(m): 100/100 each"
                                         : "failed: " + join(failed)};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only, known_red;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if ((arg == "--only" || arg == "--known-red") && i + 1 < argc) {
      (arg == "--only" ? only : known_red) = parse_list(argv[++i]);
    } else {
      std::cerr << "usage: linarr_acceptance [--only N,...] [--known-red N,...]\n";
      return 2;
    }
  }

  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"family construction", family_construction},
      {"Table 2 replay", table2_replay},
      {"Table 3/4 extensions", extensions},
      {"weak combinatorics", weak_combinatorics_check},
      {"appendix list L", appendix_list},
      {"non-isomorphism", isomorphism},
      {"containment verdicts", containment},
      {"sanity containments", sanity_containments},
      {"property suites", properties},
  };

  std::set<int> failing;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i + 1);
    if (!only.empty() && !only.count(n)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) failing.insert(n);
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << n << " (" << criteria[i].first << ", "
              << std::fixed << std::setprecision(2) << secs << " s): " << v.detail << std::endl;
  }

  std::set<int> expected;
  for (int n : known_red) {
    if (only.empty() || only.count(n)) expected.insert(n);
  }
  if (failing != expected) {
    std::cout << "failing criteria differ from the known-red set" << std::endl;
    return 1;
  }
  return 0;
}
