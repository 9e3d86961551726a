#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <functional>
#include <future>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/fields.hpp"
#include "linarr/form.hpp"
#include "linarr/linalg.hpp"
#include "linarr/projective.hpp"

namespace linarr {

struct FatPoint {
  ProjectivePoint point;
  unsigned multiplicity = 1;
};

/// Distinct points with vanishing orders. With multiplicity m everywhere it
/// describes the m-th symbolic power of the ideal of the points: a form lies in
/// it iff it vanishes to order >= m at every point.
class FatPointScheme {
 public:
  FatPointScheme() = default;

  static FatPointScheme uniform(const std::vector<ProjectivePoint>& points, unsigned multiplicity);

  /// Throws std::invalid_argument on a repeated point or multiplicity 0.
  void add(const ProjectivePoint& point, unsigned multiplicity);
  FatPointScheme with_multiplicity(unsigned multiplicity) const;

  const std::vector<FatPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  /// sum_i C(m_i + 1, 2): the number of conditions imposed in large degree.
  std::size_t condition_count() const;

  /// Rows `px py pz m` (comma or whitespace separated, `#` comments).
  static FatPointScheme read(std::istream& in);
  void write(std::ostream& out) const;

 private:
  std::vector<FatPoint> points_;
  std::map<ProjectivePoint, std::size_t> index_;
};

/// Raised when generator search does not stabilise below the degree cap.
class DegreeCapExceeded : public std::runtime_error {
 public:
  DegreeCapExceeded(unsigned cap, std::size_t generators_found)
      : std::runtime_error("degree cap " + std::to_string(cap) + " exceeded before generators stabilised (" +
                           std::to_string(generators_found) + " generators found so far)"),
        cap_(cap),
        generators_found_(generators_found) {}
  unsigned cap() const { return cap_; }
  std::size_t generators_found() const { return generators_found_; }

 private:
  unsigned cap_;
  std::size_t generators_found_;
};

/// Form stored densely over monomial_basis(degree).
template <class Field>
struct DenseForm {
  unsigned degree = 0;
  Vec<Field> coeffs;

  /// Index of the leading monomial, or coeffs.size() for the zero form.
  std::size_t leading_index(const Field& field) const {
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (!field.is_zero(coeffs[i])) return i;
    }
    return coeffs.size();
  }
};

template <class Field>
struct GradedBasis {
  unsigned degree = 0;
  std::vector<Vec<Field>> forms;  // reduced row echelon, leading monomials increasing in index

  std::size_t dimension() const { return forms.size(); }
};

template <class Field>
struct GeneratorSet {
  std::vector<DenseForm<Field>> forms;  // sorted by degree, then leading monomial
  unsigned stabilised_at = 0;           // last degree inspected by the search

  std::size_t size() const { return forms.size(); }
  std::map<unsigned, std::size_t> degree_histogram() const {
    std::map<unsigned, std::size_t> h;
    for (const auto& f : forms) ++h[f.degree];
    return h;
  }
};

namespace detail {

/// Index map from degree d-1 to degree d for multiplication by a variable.
std::vector<std::size_t> shift_table(unsigned from_degree, Variable v);

/// Product index table: entry [i][j] is the degree-(a+b) index of the product
/// of the i-th degree-a monomial and the j-th degree-b monomial.
const std::vector<std::vector<std::size_t>>& product_table(unsigned a, unsigned b);

}  // namespace detail

template <class Field>
DenseForm<Field> multiply(const Field& field, const DenseForm<Field>& f, const DenseForm<Field>& g) {
  DenseForm<Field> out{f.degree + g.degree, Vec<Field>(monomial_count(f.degree + g.degree), field.zero())};
  const auto& table = detail::product_table(f.degree, g.degree);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (field.is_zero(f.coeffs[i])) continue;
    const auto& row = table[i];
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
      if (field.is_zero(g.coeffs[j])) continue;
      auto& slot = out.coeffs[row[j]];
      slot = field.add(slot, field.mul(f.coeffs[i], g.coeffs[j]));
    }
  }
  return out;
}

template <class Field>
Vec<Field> shift(const Field& field, const Vec<Field>& v, const std::vector<std::size_t>& table, std::size_t target_size) {
  Vec<Field> out(target_size, field.zero());
  for (std::size_t i = 0; i < v.size(); ++i) out[table[i]] = v[i];
  return out;
}

template <class Field>
DenseForm<Field> to_dense(const Field& field, const HomogeneousForm& f) {
  DenseForm<Field> out{f.degree(), Vec<Field>(monomial_count(f.degree()), field.zero())};
  for (const auto& [m, c] : f.terms()) out.coeffs[monomial_index(m)] = field.from(c);
  return out;
}

inline HomogeneousForm to_form(const DenseForm<ExactField>& f) { return HomogeneousForm::from_dense(f.degree, f.coeffs); }

/// Rows are the conditions d^(a,b,c) f (p_i) = 0 with a+b+c = m_i - 1 (for
/// homogeneous f this order alone forces vanishing to order m_i, by Euler's
/// identity); in degree d < m_i - 1 the order-d conditions are used, which
/// force f = 0. Columns follow monomial_basis(d).
template <class Field>
std::vector<Vec<Field>> vanishing_matrix(const Field& field, const FatPointScheme& scheme, unsigned d) {
  const auto basis = monomial_basis(d);
  const std::size_t n = basis.size();
  std::vector<Vec<Field>> rows;
  // falling[i][a] = i (i-1) ... (i-a+1) as a field element.
  const unsigned max_order = [&] {
    unsigned k = 0;
    for (const auto& fp : scheme.points()) k = std::max(k, fp.multiplicity - 1);
    return std::min(k, d);
  }();
  std::vector<std::vector<typename Field::Element>> falling(d + 1);
  for (unsigned i = 0; i <= d; ++i) {
    falling[i].assign(max_order + 1, field.zero());
    typename Field::Element acc = field.one();
    for (unsigned a = 0; a <= std::min(i, max_order); ++a) {
      falling[i][a] = acc;
      acc = field.mul(acc, field.from_int(static_cast<long long>(i) - a));
    }
  }
  for (const auto& fp : scheme.points()) {
    const unsigned order = std::min(fp.multiplicity - 1, d);
    std::array<std::vector<typename Field::Element>, 3> powers;
    for (int v = 0; v < 3; ++v) {
      const auto coord = field.from(fp.point[v]);
      powers[v].assign(d + 1, field.zero());
      powers[v][0] = field.one();
      for (unsigned k = 1; k <= d; ++k) powers[v][k] = field.mul(powers[v][k - 1], coord);
    }
    for (unsigned a = order + 1; a-- > 0;) {
      for (unsigned b = order - a + 1; b-- > 0;) {
        const unsigned c = order - a - b;
        Vec<Field> row(n, field.zero());
        for (std::size_t col = 0; col < n; ++col) {
          const Monomial& m = basis[col];
          if (m.exp[0] < a || m.exp[1] < b || m.exp[2] < c) continue;
          auto v = field.mul(falling[m.exp[0]][a], field.mul(falling[m.exp[1]][b], falling[m.exp[2]][c]));
          v = field.mul(v, powers[0][m.exp[0] - a]);
          v = field.mul(v, powers[1][m.exp[1] - b]);
          v = field.mul(v, powers[2][m.exp[2] - c]);
          row[col] = v;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

namespace detail {

struct CollinearGroup {
  ProjectiveLine line;
  std::vector<std::size_t> points;  // indices into the scheme, ascending
};

/// Lines through at least two points of the scheme, most populated first.
std::vector<CollinearGroup> collinear_groups(const FatPointScheme& scheme);

struct PeelPlan {
  std::vector<ProjectiveLine> lines;  // with repetition
  FatPointScheme residual;
  long degree;  // negative when the piece is zero
};

/// Bezout reduction. A line whose points carry total multiplicity > d meets
/// every degree-d form of the ideal too often, so it divides all of them:
/// I(S)_d = l * I(S - l)_(d-1), where S - l lowers each multiplicity on l by
/// one. Applied until no line qualifies.
PeelPlan peel(const FatPointScheme& scheme, unsigned d);

template <class Field>
GradedBasis<Field> kernel_piece(const Field& field, const FatPointScheme& scheme, unsigned d) {
  const std::size_t n = monomial_count(d);
  Echelon<Field> conditions(field, n);
  for (auto& row : vanishing_matrix(field, scheme, d)) {
    conditions.insert(std::move(row));
    if (conditions.rank() == n) break;
  }
  Echelon<Field> kernel(field, n);
  for (auto& v : conditions.nullspace()) kernel.insert(std::move(v));
  return {d, kernel.reduced_rows()};
}

}  // namespace detail

/// Degree-d piece of the scheme's ideal as a canonical (reduced echelon)
/// basis: the forced line factors are split off first, then the kernel of
/// the residual vanishing matrix is taken.
template <class Field>
GradedBasis<Field> symbolic_graded_piece(const Field& field, const FatPointScheme& scheme, unsigned d) {
  const auto plan = detail::peel(scheme, d);
  if (plan.degree < 0) return {d, {}};
  if (plan.lines.empty()) return detail::kernel_piece(field, scheme, d);
  const auto base = detail::kernel_piece(field, plan.residual, static_cast<unsigned>(plan.degree));
  if (base.forms.empty()) return {d, {}};
  DenseForm<Field> factor{0, {field.one()}};
  for (const auto& l : plan.lines) factor = multiply(field, factor, to_dense(field, l.form()));
  Echelon<Field> out(field, monomial_count(d));
  for (const auto& f : base.forms) out.insert(multiply(field, factor, DenseForm<Field>{base.degree, f}).coeffs);
  return {d, out.reduced_rows()};
}

template <class Field>
std::size_t hilbert_function(const Field& field, const FatPointScheme& scheme, unsigned d) {
  const auto plan = detail::peel(scheme, d);
  if (plan.degree < 0) return 0;
  const std::size_t n = monomial_count(static_cast<unsigned>(plan.degree));
  Echelon<Field> conditions(field, n);
  for (auto& row : vanishing_matrix(field, plan.residual, static_cast<unsigned>(plan.degree))) {
    conditions.insert(std::move(row));
    if (conditions.rank() == n) break;
  }
  return n - conditions.rank();
}

/// Graded pieces of a fat-point ideal, computed on demand and cached.
template <class Field>
class SchemeIdeal {
 public:
  SchemeIdeal(const Field& field, FatPointScheme scheme, unsigned threads = 1)
      : field_(&field), scheme_(std::move(scheme)), threads_(std::max(1u, threads)) {}

  const FatPointScheme& scheme() const { return scheme_; }

  const GradedBasis<Field>& piece(unsigned d) {
    if (auto it = pieces_.find(d); it != pieces_.end()) return it->second;
    // Degrees are independent; fill a batch concurrently.
    std::vector<std::pair<unsigned, std::future<GradedBasis<Field>>>> jobs;
    for (unsigned k = d; k < d + threads_; ++k) {
      if (pieces_.count(k)) continue;
      jobs.emplace_back(k, std::async(threads_ > 1 ? std::launch::async : std::launch::deferred,
                                      [this, k] { return symbolic_graded_piece(*field_, scheme_, k); }));
    }
    for (auto& [k, job] : jobs) pieces_.emplace(k, job.get());
    return pieces_.at(d);
  }

  std::size_t hilbert_function(unsigned d) { return piece(d).dimension(); }

  /// True when the conditions are independent in degree d, i.e. the Hilbert
  /// function of the scheme has reached its degree.
  bool independent(unsigned d) {
    return static_cast<long long>(piece(d).dimension()) ==
           static_cast<long long>(monomial_count(d)) - static_cast<long long>(scheme_.condition_count());
  }

  /// Minimal generators of degree d: the canonical basis rows of piece_d whose
  /// leading monomial is not a leading monomial of (x, y, z) * piece_{d-1}.
  std::vector<DenseForm<Field>> generators_in_degree(unsigned d) {
    const GradedBasis<Field>& current = piece(d);
    const std::size_t n = monomial_count(d);
    Echelon<Field> multiples(*field_, n);
    if (d > 0) {
      const GradedBasis<Field>& prev = piece(d - 1);
      for (Variable v : {Variable::x, Variable::y, Variable::z}) {
        const auto table = detail::shift_table(d - 1, v);
        for (const auto& f : prev.forms) {
          if (multiples.rank() == current.dimension()) break;
          multiples.insert(shift(*field_, f, table, n));
        }
      }
    }
    std::vector<DenseForm<Field>> out;
    for (const auto& row : current.forms) {
      std::size_t lead = 0;
      while (field_->is_zero(row[lead])) ++lead;
      if (!multiples.is_pivot(lead)) out.push_back({d, row});
    }
    return out;
  }

  /// Degree-by-degree search. Once the conditions are independent in degree
  /// d - 1 the ideal is generated in degrees <= d, so the search ends there.
  GeneratorSet<Field> minimal_generators(unsigned max_degree) {
    GeneratorSet<Field> out;
    for (unsigned d = 0; d <= max_degree; ++d) {
      for (auto& g : generators_in_degree(d)) out.forms.push_back(std::move(g));
      if (d > 0 && independent(d - 1)) {
        out.stabilised_at = d;
        return out;
      }
    }
    throw DegreeCapExceeded(max_degree, out.size());
  }

 private:
  const Field* field_;
  FatPointScheme scheme_;
  unsigned threads_;
  std::map<unsigned, GradedBasis<Field>> pieces_;
};

template <class Field>
GeneratorSet<Field> minimal_generators(const Field& field, const FatPointScheme& scheme, unsigned max_degree,
                                       unsigned threads = 1) {
  return SchemeIdeal<Field>(field, scheme, threads).minimal_generators(max_degree);
}

/// Graded pieces of the ideal generated by all r-fold products of a generator
/// set. The degree-d piece is the span of monomial * product over all
/// products of degree <= d.
template <class Field>
class PowerSpans {
 public:
  /// `upper_bound(d)`, when given, is a known bound on the piece dimension;
  /// insertion stops once it is reached.
  PowerSpans(const Field& field, const GeneratorSet<Field>& generators, unsigned r,
             std::function<std::size_t(unsigned)> upper_bound = {})
      : field_(&field), upper_bound_(std::move(upper_bound)) {
    if (r == 0) throw std::invalid_argument("power must be at least 1");
    std::vector<std::size_t> pick(r, 0);
    const std::size_t g = generators.forms.size();
    if (g == 0) return;
    // Multisets i_1 <= ... <= i_r.
    for (;;) {
      DenseForm<Field> p = generators.forms[pick[0]];
      for (unsigned k = 1; k < r; ++k) p = multiply(field, p, generators.forms[pick[k]]);
      products_.push_back(std::move(p));
      std::size_t k = r;
      while (k > 0 && pick[k - 1] == g - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < r; ++j) pick[j] = pick[k - 1];
    }
  }

  const Echelon<Field>& at(unsigned d) {
    if (auto it = pieces_.find(d); it != pieces_.end()) return *it->second;
    const std::size_t n = monomial_count(d);
    auto span = std::make_unique<Echelon<Field>>(*field_, n);
    const std::size_t bound = upper_bound_ ? upper_bound_(d) : n;
    for (unsigned shift_degree = 0; shift_degree <= d && span->rank() < bound; ++shift_degree) {
      const std::size_t monomials = monomial_count(shift_degree);
      for (const auto& p : products_) {
        if (p.degree + shift_degree != d) continue;
        const auto& table = detail::product_table(p.degree, shift_degree);
        for (std::size_t m = 0; m < monomials && span->rank() < bound; ++m) {
          Vec<Field> v(n, field_->zero());
          for (std::size_t i = 0; i < p.coeffs.size(); ++i) v[table[i][m]] = p.coeffs[i];
          span->insert(std::move(v));
        }
      }
    }
    return *pieces_.emplace(d, std::move(span)).first->second;
  }

  std::size_t dimension(unsigned d) { return at(d).rank(); }

 private:
  const Field* field_;
  std::function<std::size_t(unsigned)> upper_bound_;
  std::vector<DenseForm<Field>> products_;
  std::map<unsigned, std::unique_ptr<Echelon<Field>>> pieces_;
};

template <class Field>
GradedBasis<Field> power_graded_span(const Field& field, const GeneratorSet<Field>& generators, unsigned r,
                                     unsigned d) {
  PowerSpans<Field> spans(field, generators, r);
  return {d, spans.at(d).reduced_rows()};
}

template <class Field>
bool membership(const Field& field, const DenseForm<Field>& f, const GeneratorSet<Field>& generators, unsigned r) {
  PowerSpans<Field> spans(field, generators, r);
  return spans.at(f.degree).contains(f.coeffs);
}

template <class Field>
struct ContainmentReport {
  bool contained = true;
  unsigned symbolic_power = 0;  // m
  unsigned ordinary_power = 0;  // r
  std::vector<DenseForm<Field>> witnesses;  // failing generators of the symbolic power, lowest degree first
  std::pair<unsigned, unsigned> degrees_scanned{0, 0};
  std::map<unsigned, std::size_t> radical_generator_degrees;
  std::map<unsigned, std::size_t> symbolic_generator_degrees;
  std::map<unsigned, std::size_t> witness_degrees;
  bool exhaustive = false;  // every minimal generator of I^(m) was tested
  std::string field;
  double wall_time_ms = 0;
};

struct ContainmentOptions {
  unsigned max_degree = 60;
  unsigned threads = 1;
  bool stop_at_first_witness = false;  // finish the first failing degree, then stop
};

/// Decides I^(m) ⊆ I^r for the ideal I of the scheme's points: every minimal
/// generator of I^(m) is tested for membership in the degree-matching piece
/// of I^r. The report lists every failing generator, or those of the lowest
/// failing degree when `stop_at_first_witness` is set.
template <class Field>
ContainmentReport<Field> containment_check(const Field& field, const FatPointScheme& scheme, unsigned m, unsigned r,
                                           const ContainmentOptions& options = {}) {
  if (m == 0 || r == 0) throw std::invalid_argument("powers must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  ContainmentReport<Field> report;
  report.symbolic_power = m;
  report.ordinary_power = r;
  report.field = field.name();

  const auto radical = minimal_generators(field, scheme.with_multiplicity(1), options.max_degree, options.threads);
  report.radical_generator_degrees = radical.degree_histogram();

  // I^r sits inside I^(r), whose pieces bound the span dimension. Past the
  // degree where the r-fold conditions become independent they stay so.
  const FatPointScheme r_fold = scheme.with_multiplicity(r);
  std::optional<unsigned> settled;
  auto bound = [&](unsigned d) -> std::size_t {
    const std::size_t n = monomial_count(d);
    if (settled && d >= *settled) return n - r_fold.condition_count();
    const std::size_t h = hilbert_function(field, r_fold, d);
    if (h + r_fold.condition_count() == n) settled = d;
    return h;
  };
  PowerSpans<Field> spans(field, radical, r, bound);
  SchemeIdeal<Field> symbolic(field, scheme.with_multiplicity(m), options.threads);
  bool complete = false;
  std::size_t generators = 0;
  for (unsigned d = 0; d <= options.max_degree && !complete; ++d) {
    for (auto& g : symbolic.generators_in_degree(d)) {
      ++generators;
      ++report.symbolic_generator_degrees[d];
      if (report.degrees_scanned.first == 0) report.degrees_scanned.first = d;
      report.degrees_scanned.second = d;
      if (!spans.at(d).contains(g.coeffs)) {
        ++report.witness_degrees[d];
        report.witnesses.push_back(std::move(g));
      }
    }
    if (options.stop_at_first_witness && !report.witnesses.empty()) break;
    complete = d > 0 && symbolic.independent(d - 1);
  }
  if (!complete && report.witnesses.empty()) throw DegreeCapExceeded(options.max_degree, generators);
  report.exhaustive = complete;
  report.contained = report.witnesses.empty();
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

template <class Field>
std::optional<DenseForm<Field>> divide_by_linear(const Field& field, const DenseForm<Field>& f,
                                                 const std::array<typename Field::Element, 3>& l) {
  if (f.degree == 0) return std::nullopt;
  int lead_var = 0;
  while (lead_var < 3 && field.is_zero(l[lead_var])) ++lead_var;
  if (lead_var == 3) throw ArithmeticError("division by the zero form");
  const auto lead_inv = field.inv(l[lead_var]);
  const auto basis = monomial_basis(f.degree);
  DenseForm<Field> q{f.degree - 1, Vec<Field>(monomial_count(f.degree - 1), field.zero())};
  Vec<Field> rest = f.coeffs;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (field.is_zero(rest[i])) continue;
    const Monomial& m = basis[i];
    if (m.exp[lead_var] == 0) return std::nullopt;
    Monomial qm = m;
    qm.exp[lead_var] -= 1;
    const auto c = field.mul(rest[i], lead_inv);
    q.coeffs[monomial_index(qm)] = c;
    for (int v = 0; v < 3; ++v) {
      if (field.is_zero(l[v])) continue;
      Monomial t = qm;
      t.exp[v] += 1;
      auto& slot = rest[monomial_index(t)];
      slot = field.sub(slot, field.mul(c, l[v]));
    }
  }
  return q;
}

template <class Field>
struct LineFactorization {
  std::vector<std::size_t> lines;  // arrangement indices, repeated by multiplicity, ascending
  DenseForm<Field> quotient;
};

/// Divides out every arrangement line (with multiplicity) from a nonzero form.
template <class Field>
LineFactorization<Field> witness_line_factors(const Field& field, const DenseForm<Field>& f,
                                              const Arrangement& arrangement) {
  LineFactorization<Field> out{{}, f};
  for (std::size_t i = 0; i < arrangement.size(); ++i) {
    const auto& l = arrangement.line(i);
    const std::array<typename Field::Element, 3> coeffs{field.from(l[0]), field.from(l[1]), field.from(l[2])};
    while (auto q = divide_by_linear(field, out.quotient, coeffs)) {
      out.quotient = std::move(*q);
      out.lines.push_back(i);
    }
  }
  return out;
}

/// Exact variant on sparse forms, dividing with HomogeneousForm::exact_divide.
struct ExactLineFactorization {
  std::vector<std::size_t> lines;
  HomogeneousForm quotient;
};
ExactLineFactorization witness_line_factors(const HomogeneousForm& f, const Arrangement& arrangement);

/// Checks by exact derivative evaluation that f vanishes to order >= m_i at
/// every point of the scheme.
bool vanishes_on(const HomogeneousForm& f, const FatPointScheme& scheme);

}  // namespace linarr
