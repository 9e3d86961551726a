#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linarr/field.hpp"

namespace linarr {

enum class Variable { x = 0, y = 1, z = 2 };

/// Exponent triple x^a y^b z^c.
struct Monomial {
  std::array<unsigned, 3> exp{0, 0, 0};

  constexpr Monomial() = default;
  constexpr Monomial(unsigned a, unsigned b, unsigned c) : exp{a, b, c} {}

  constexpr unsigned degree() const { return exp[0] + exp[1] + exp[2]; }
  constexpr unsigned operator[](Variable v) const { return exp[static_cast<int>(v)]; }

  bool divides(const Monomial& other) const {
    return exp[0] <= other.exp[0] && exp[1] <= other.exp[1] && exp[2] <= other.exp[2];
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.exp[0] + b.exp[0], a.exp[1] + b.exp[1], a.exp[2] + b.exp[2]};
  }
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const {
    return {exp[0] - divisor.exp[0], exp[1] - divisor.exp[1], exp[2] - divisor.exp[2]};
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lexicographic order with x > y > z.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.exp[0] <=> b.exp[0]; c != 0) return c;
    return a.exp[1] <=> b.exp[1];
  }

  std::string to_string() const;
};

/// Number of degree-d monomials in three variables, C(d+2, 2).
constexpr std::size_t monomial_count(unsigned d) { return std::size_t(d + 1) * (d + 2) / 2; }

/// Position of a monomial in the degree-d basis, listed in decreasing grlex
/// order (x^d first, z^d last).
constexpr std::size_t monomial_index(const Monomial& m) {
  const std::size_t s = m.exp[1] + m.exp[2];
  return s * (s + 1) / 2 + m.exp[2];
}

/// All degree-d monomials in basis order.
std::vector<Monomial> monomial_basis(unsigned d);

/// Sparse homogeneous trivariate form over Q(sqrt 3).
///
/// Stored terms are always nonzero and of total degree `degree()`. The zero
/// form keeps its declared degree.
class HomogeneousForm {
 public:
  using Terms = std::map<Monomial, FieldElement, std::greater<>>;

  explicit HomogeneousForm(unsigned degree = 0) : degree_(degree) {}
  HomogeneousForm(unsigned degree, Terms terms);

  static HomogeneousForm constant(const FieldElement& c);
  static HomogeneousForm variable(Variable v);
  static HomogeneousForm monomial(const Monomial& m, const FieldElement& c = 1);
  /// a*x + b*y + c*z.
  static HomogeneousForm linear(const FieldElement& a, const FieldElement& b, const FieldElement& c);
  /// Parses the textual form syntax, e.g. `x^2*z - (1/2+1/2*e)*y*z^2`.
  /// An expression that expands to 0 is given degree 0.
  static HomogeneousForm parse(std::string_view text);

  unsigned degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  FieldElement coefficient(const Monomial& m) const;

  /// Leading term under grlex; requires a nonzero form.
  const std::pair<const Monomial, FieldElement>& leading_term() const { return *terms_.begin(); }

  HomogeneousForm& operator+=(const HomogeneousForm& o);
  HomogeneousForm& operator-=(const HomogeneousForm& o);
  HomogeneousForm& operator*=(const FieldElement& s);
  HomogeneousForm operator-() const;

  friend HomogeneousForm operator+(HomogeneousForm a, const HomogeneousForm& b) { return a += b; }
  friend HomogeneousForm operator-(HomogeneousForm a, const HomogeneousForm& b) { return a -= b; }
  friend HomogeneousForm operator*(HomogeneousForm a, const FieldElement& s) { return a *= s; }
  friend HomogeneousForm operator*(const FieldElement& s, HomogeneousForm a) { return a *= s; }
  friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b);

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  HomogeneousForm partial(Variable v) const;
  FieldElement evaluate(const std::array<FieldElement, 3>& point) const;

  /// Quotient q with *this == divisor * q, or nullopt when the linear form
  /// does not divide. Throws ArithmeticError for a zero divisor.
  std::optional<HomogeneousForm> exact_divide(const HomogeneousForm& divisor) const;

  /// Coefficients over monomial_basis(degree()).
  std::vector<FieldElement> to_dense() const;
  static HomogeneousForm from_dense(unsigned degree, const std::vector<FieldElement>& coeffs);

  /// Scales so the leading coefficient is 1; zero stays zero.
  HomogeneousForm monic() const;

  std::string to_string() const;

 private:
  unsigned degree_;
  Terms terms_;
};

HomogeneousForm pow(const HomogeneousForm& f, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const HomogeneousForm& f);

}  // namespace linarr
