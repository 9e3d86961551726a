#include "linarr/ideals.hpp"

#include <istream>
#include <algorithm>
#include <mutex>
#include <set>
#include <ostream>

namespace linarr {

FatPointScheme FatPointScheme::uniform(const std::vector<ProjectivePoint>& points, unsigned multiplicity) {
  FatPointScheme s;
  for (const auto& p : points) s.add(p, multiplicity);
  return s;
}

void FatPointScheme::add(const ProjectivePoint& point, unsigned multiplicity) {
  if (multiplicity == 0) throw std::invalid_argument("multiplicity must be positive");
  if (!index_.emplace(point, points_.size()).second) {
    throw std::invalid_argument("repeated point " + point.to_string());
  }
  points_.push_back({point, multiplicity});
}

FatPointScheme FatPointScheme::with_multiplicity(unsigned multiplicity) const {
  FatPointScheme s;
  for (const auto& fp : points_) s.add(fp.point, multiplicity);
  return s;
}

std::size_t FatPointScheme::condition_count() const {
  std::size_t total = 0;
  for (const auto& fp : points_) total += std::size_t(fp.multiplicity) * (fp.multiplicity + 1) / 2;
  return total;
}

FatPointScheme FatPointScheme::read(std::istream& in) {
  FatPointScheme s;
  std::string row;
  std::size_t line_no = 0;
  while (std::getline(in, row)) {
    ++line_no;
    const auto cells = split_row(row);
    if (cells.empty()) continue;
    if (cells.size() != 4) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'px py pz multiplicity'");
    }
    const long m = std::stol(cells[3]);
    if (m <= 0) throw ParseError("line " + std::to_string(line_no) + ": multiplicity must be positive");
    s.add(ProjectivePoint(FieldElement::parse(cells[0]), FieldElement::parse(cells[1]), FieldElement::parse(cells[2])),
          static_cast<unsigned>(m));
  }
  return s;
}

void FatPointScheme::write(std::ostream& out) const {
  for (const auto& fp : points_) {
    out << fp.point[0] << ' ' << fp.point[1] << ' ' << fp.point[2] << ' ' << fp.multiplicity << '\n';
  }
}

namespace detail {

std::vector<std::size_t> shift_table(unsigned from_degree, Variable v) {
  const auto basis = monomial_basis(from_degree);
  std::vector<std::size_t> out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Monomial m = basis[i];
    m.exp[static_cast<int>(v)] += 1;
    out[i] = monomial_index(m);
  }
  return out;
}

const std::vector<std::vector<std::size_t>>& product_table(unsigned a, unsigned b) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::vector<std::vector<std::size_t>>> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.try_emplace({a, b});
  if (inserted) {
    const auto ba = monomial_basis(a);
    const auto bb = monomial_basis(b);
    it->second.assign(ba.size(), std::vector<std::size_t>(bb.size()));
    for (std::size_t i = 0; i < ba.size(); ++i) {
      for (std::size_t j = 0; j < bb.size(); ++j) it->second[i][j] = monomial_index(ba[i] * bb[j]);
    }
  }
  return it->second;
}

std::vector<CollinearGroup> collinear_groups(const FatPointScheme& scheme) {
  const auto& pts = scheme.points();
  std::map<ProjectiveLine, std::set<std::size_t>> on_line;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      auto& members = on_line[join(pts[i].point, pts[j].point)];
      members.insert(i);
      members.insert(j);
    }
  }
  std::vector<CollinearGroup> out;
  out.reserve(on_line.size());
  for (auto& [line, members] : on_line) out.push_back({line, {members.begin(), members.end()}});
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.points.size() > b.points.size(); });
  return out;
}

PeelPlan peel(const FatPointScheme& scheme, unsigned d) {
  const auto groups = collinear_groups(scheme);
  std::vector<unsigned> mult;
  for (const auto& fp : scheme.points()) mult.push_back(fp.multiplicity);
  PeelPlan plan{{}, {}, static_cast<long>(d)};
  for (bool again = true; again && plan.degree >= 0;) {
    again = false;
    for (const auto& g : groups) {
      long total = 0;
      for (std::size_t i : g.points) total += mult[i];
      if (total <= plan.degree) continue;
      for (std::size_t i : g.points) {
        if (mult[i] > 0) --mult[i];
      }
      plan.lines.push_back(g.line);
      --plan.degree;
      again = true;
      if (plan.degree < 0) break;
    }
  }
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] > 0) plan.residual.add(scheme.points()[i].point, mult[i]);
  }
  return plan;
}

}  // namespace detail

ExactLineFactorization witness_line_factors(const HomogeneousForm& f, const Arrangement& arrangement) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero form");
  ExactLineFactorization out{{}, f};
  for (std::size_t i = 0; i < arrangement.size(); ++i) {
    const HomogeneousForm l = arrangement.line(i).form();
    while (out.quotient.degree() > 0) {
      auto q = out.quotient.exact_divide(l);
      if (!q) break;
      out.quotient = std::move(*q);
      out.lines.push_back(i);
    }
  }
  return out;
}

bool vanishes_on(const HomogeneousForm& f, const FatPointScheme& scheme) {
  unsigned max_order = 0;
  for (const auto& fp : scheme.points()) max_order = std::max(max_order, fp.multiplicity - 1);
  // Every partial derivative of order < max multiplicity, keyed by its exponent.
  std::map<Monomial, HomogeneousForm> by_index{{Monomial{}, f}};
  for (unsigned k = 1; k <= max_order; ++k) {
    for (unsigned a = k + 1; a-- > 0;) {
      for (unsigned b = k - a + 1; b-- > 0;) {
        const Monomial target(a, b, k - a - b);
        Monomial parent = target;
        Variable var = Variable::x;
        if (parent.exp[0] > 0) {
          parent.exp[0] -= 1;
        } else if (parent.exp[1] > 0) {
          parent.exp[1] -= 1;
          var = Variable::y;
        } else {
          parent.exp[2] -= 1;
          var = Variable::z;
        }
        by_index.emplace(target, by_index.at(parent).partial(var));
      }
    }
  }
  for (const auto& fp : scheme.points()) {
    for (const auto& [order, g] : by_index) {
      if (order.degree() >= fp.multiplicity) continue;
      if (!g.evaluate(fp.point.coords()).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace linarr
