#pragma once

// Brute-force reference for the ideal engine: sparse forms, derivative
// evaluation and plain Gaussian elimination, sharing no code with the
// dense echelon machinery.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "linarr/form.hpp"
#include "linarr/projective.hpp"

namespace linarr::testing {

/// Reduced basis of a span of forms of one degree, by naive elimination on leading terms.
class NaiveSpan {
 public:
  bool insert(HomogeneousForm f) {
    f = reduce(std::move(f));
    if (f.is_zero()) return false;
    f = f.monic();
    basis_.push_back(std::move(f));
    std::sort(basis_.begin(), basis_.end(),
              [](const auto& a, const auto& b) { return a.leading_term().first > b.leading_term().first; });
    return true;
  }
  HomogeneousForm reduce(HomogeneousForm f) const {
    bool changed = true;
    while (changed && !f.is_zero()) {
      changed = false;
      for (const auto& b : basis_) {
        const auto c = f.coefficient(b.leading_term().first);
        if (!c.is_zero()) {
          f -= b * c;
          changed = true;
        }
      }
    }
    return f;
  }
  bool contains(const HomogeneousForm& f) const { return reduce(f).is_zero(); }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<HomogeneousForm>& basis() const { return basis_; }

 private:
  std::vector<HomogeneousForm> basis_;
};

/// Forms of degree d vanishing to order m at each point, as a kernel computed
/// from scratch: conditions are all partials of order < m evaluated at the point.
inline std::vector<HomogeneousForm> oracle_symbolic(const std::vector<ProjectivePoint>& points, unsigned m, unsigned d) {
  const auto basis = monomial_basis(d);
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& p : points) {
    for (unsigned a = 0; a < m; ++a)
      for (unsigned b = 0; a + b < m; ++b)
        for (unsigned c = 0; a + b + c < m; ++c) {
          std::vector<FieldElement> row;
          for (const auto& mono : basis) {
            auto g = HomogeneousForm::monomial(mono);
            for (unsigned i = 0; i < a && !g.is_zero(); ++i) g = g.partial(Variable::x);
            for (unsigned i = 0; i < b && !g.is_zero(); ++i) g = g.partial(Variable::y);
            for (unsigned i = 0; i < c && !g.is_zero(); ++i) g = g.partial(Variable::z);
            row.push_back(g.is_zero() ? FieldElement() : g.evaluate(p.coords()));
          }
          rows.push_back(std::move(row));
        }
  }
  // Gauss-Jordan on the condition rows.
  const std::size_t n = basis.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t k = r;
    while (k < rows.size() && rows[k][c].is_zero()) ++k;
    if (k == rows.size()) continue;
    std::swap(rows[r], rows[k]);
    const auto inv = rows[r][c].inverse();
    for (auto& v : rows[r]) v = v * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const auto f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<HomogeneousForm> kernel;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<FieldElement> w(n);
    w[free] = FieldElement(1);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) w[pivot_cols[i]] = -rows[i][free];
    kernel.push_back(HomogeneousForm::from_dense(d, w));
  }
  return kernel;
}

/// I^(m) ⊆ I^r checked degree by degree up to `cap`, with (I^r)_d spanned by
/// all products f_1 ... f_r of basis forms of I_{d_1}, ..., I_{d_r}.
inline bool oracle_contained(const std::vector<ProjectivePoint>& points, unsigned m, unsigned r, unsigned cap) {
  std::vector<std::vector<HomogeneousForm>> radical(cap + 1);
  for (unsigned d = 0; d <= cap; ++d) radical[d] = oracle_symbolic(points, 1, d);
  // products[k][d]: span of k-fold products in degree d
  std::vector<NaiveSpan> prev(cap + 1);
  for (unsigned d = 0; d <= cap; ++d)
    for (const auto& f : radical[d]) prev[d].insert(f);
  for (unsigned k = 2; k <= r; ++k) {
    std::vector<NaiveSpan> next(cap + 1);
    for (unsigned d1 = 0; d1 <= cap; ++d1)
      for (unsigned d2 = 0; d1 + d2 <= cap; ++d2)
        for (const auto& f : prev[d1].basis())
          for (const auto& g : radical[d2]) next[d1 + d2].insert(f * g);
    prev = std::move(next);
  }
  for (unsigned d = 0; d <= cap; ++d)
    for (const auto& f : oracle_symbolic(points, m, d))
      if (!prev[d].contains(f)) return false;
  return true;
}

inline std::vector<ProjectivePoint> random_points(std::mt19937_64& rng, std::size_t count) {
  // Small coordinates produce collinear and other special positions often.
  std::uniform_int_distribution<int> coord(-2, 2);
  std::bernoulli_distribution irrational(0.2);
  std::set<ProjectivePoint> seen;
  std::vector<ProjectivePoint> out;
  while (out.size() < count) {
    Triple t{FieldElement(coord(rng)), FieldElement(coord(rng)), FieldElement(coord(rng))};
    if (irrational(rng)) t[0] = t[0] * FieldElement::sqrt3();
    if (t[0].is_zero() && t[1].is_zero() && t[2].is_zero()) continue;
    ProjectivePoint p(t);
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

}  // namespace linarr::testing
