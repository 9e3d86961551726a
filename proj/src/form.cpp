#include "linarr/form.hpp"

#include <ostream>

#include "linarr/expression.hpp"

namespace linarr {

std::string Monomial::to_string() const {
  static constexpr char kNames[3] = {'x', 'y', 'z'};
  std::string out;
  for (int v = 0; v < 3; ++v) {
    if (exp[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += kNames[v];
    if (exp[v] > 1) out += "^" + std::to_string(exp[v]);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> monomial_basis(unsigned d) {
  std::vector<Monomial> basis;
  basis.reserve(monomial_count(d));
  for (unsigned a = d + 1; a-- > 0;) {
    for (unsigned b = d - a + 1; b-- > 0;) basis.emplace_back(a, b, d - a - b);
  }
  return basis;
}

HomogeneousForm::HomogeneousForm(unsigned degree, Terms terms) : degree_(degree), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.degree() != degree_) throw std::invalid_argument("monomial degree differs from form degree");
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

HomogeneousForm HomogeneousForm::constant(const FieldElement& c) { return monomial(Monomial{}, c); }

HomogeneousForm HomogeneousForm::variable(Variable v) {
  Monomial m;
  m.exp[static_cast<int>(v)] = 1;
  return monomial(m);
}

HomogeneousForm HomogeneousForm::monomial(const Monomial& m, const FieldElement& c) {
  HomogeneousForm f(m.degree());
  if (!c.is_zero()) f.terms_.emplace(m, c);
  return f;
}

HomogeneousForm HomogeneousForm::linear(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  return HomogeneousForm(1, {{Monomial(1, 0, 0), a}, {Monomial(0, 1, 0), b}, {Monomial(0, 0, 1), c}});
}

HomogeneousForm HomogeneousForm::parse(std::string_view text) {
  auto poly = parse_expression(text);
  if (poly.empty()) return HomogeneousForm(0);
  const unsigned d = poly.begin()->first.degree();
  for (const auto& [m, c] : poly) {
    if (m.degree() != d) throw ParseError("expression is not homogeneous: '" + std::string(text) + "'");
  }
  HomogeneousForm f(d);
  f.terms_ = std::move(poly);
  return f;
}

FieldElement HomogeneousForm::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement() : it->second;
}

HomogeneousForm& HomogeneousForm::operator+=(const HomogeneousForm& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    degree_ = o.degree_;
  } else if (o.degree_ != degree_) {
    throw std::invalid_argument("adding forms of different degrees");
  }
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

HomogeneousForm& HomogeneousForm::operator-=(const HomogeneousForm& o) { return *this += -o; }

HomogeneousForm& HomogeneousForm::operator*=(const FieldElement& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

HomogeneousForm HomogeneousForm::operator-() const {
  HomogeneousForm out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
  HomogeneousForm out(a.degree_ + b.degree_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, inserted] = out.terms_.try_emplace(ma * mb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& t) { return t.second.is_zero(); });
  return out;
}

HomogeneousForm HomogeneousForm::partial(Variable v) const {
  const int i = static_cast<int>(v);
  HomogeneousForm out(degree_ == 0 ? 0 : degree_ - 1);
  for (const auto& [m, c] : terms_) {
    if (m.exp[i] == 0) continue;
    Monomial d = m;
    d.exp[i] -= 1;
    out.terms_.emplace(d, c * FieldElement(static_cast<long>(m.exp[i])));
  }
  return out;
}

FieldElement HomogeneousForm::evaluate(const std::array<FieldElement, 3>& point) const {
  std::array<std::vector<FieldElement>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    powers[v].reserve(degree_ + 1);
    powers[v].emplace_back(1);
    for (unsigned k = 1; k <= degree_; ++k) powers[v].push_back(powers[v].back() * point[v]);
  }
  FieldElement sum;
  for (const auto& [m, c] : terms_) sum += c * powers[0][m.exp[0]] * powers[1][m.exp[1]] * powers[2][m.exp[2]];
  return sum;
}

std::optional<HomogeneousForm> HomogeneousForm::exact_divide(const HomogeneousForm& divisor) const {
  if (divisor.is_zero()) throw ArithmeticError("division by the zero form");
  if (divisor.degree_ > degree_) return std::nullopt;
  HomogeneousForm quotient(degree_ - divisor.degree_);
  HomogeneousForm rest(*this);
  const auto& [lead_m, lead_c] = divisor.leading_term();
  const FieldElement lead_inv = lead_c.inverse();
  while (!rest.is_zero()) {
    const auto& [m, c] = rest.leading_term();
    if (!lead_m.divides(m)) return std::nullopt;
    const auto step = monomial(m / lead_m, c * lead_inv);
    rest -= step * divisor;
    quotient += step;
  }
  return quotient;
}

std::vector<FieldElement> HomogeneousForm::to_dense() const {
  std::vector<FieldElement> out(monomial_count(degree_));
  for (const auto& [m, c] : terms_) out[monomial_index(m)] = c;
  return out;
}

HomogeneousForm HomogeneousForm::from_dense(unsigned degree, const std::vector<FieldElement>& coeffs) {
  if (coeffs.size() != monomial_count(degree)) throw std::invalid_argument("dense vector has wrong length");
  HomogeneousForm f(degree);
  const auto basis = monomial_basis(degree);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) f.terms_.emplace_hint(f.terms_.end(), basis[i], coeffs[i]);
  }
  return f;
}

HomogeneousForm HomogeneousForm::monic() const {
  if (is_zero()) return *this;
  return *this * leading_term().second.inverse();
}

std::string HomogeneousForm::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string term;
    const bool compound = sgn(c.rational_part()) != 0 && sgn(c.irrational_part()) != 0;
    if (m.degree() == 0) {
      term = compound ? "(" + c.to_string() + ")" : c.to_string();
    } else if (c.is_one()) {
      term = m.to_string();
    } else if (c == FieldElement(-1)) {
      term = "-" + m.to_string();
    } else {
      term = (compound ? "(" + c.to_string() + ")" : c.to_string()) + "*" + m.to_string();
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

HomogeneousForm pow(const HomogeneousForm& f, unsigned exponent) {
  HomogeneousForm result = HomogeneousForm::constant(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * f;
  return result;
}

std::ostream& operator<<(std::ostream& os, const HomogeneousForm& f) { return os << f.to_string(); }

}  // namespace linarr
