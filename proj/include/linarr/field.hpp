#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace linarr {

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element a + b*e of Q(sqrt 3), e^2 = 3, with exact rational parts.
///
/// Both parts are GMP rationals and stay canonical (lowest terms, positive
/// denominator) after every operation.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long value) : rat_(value) {}  // NOLINT(google-explicit-constructor)
  FieldElement(mpq_class rat, mpq_class irr) : rat_(std::move(rat)), irr_(std::move(irr)) {
    rat_.canonicalize();
    irr_.canonicalize();
  }
  explicit FieldElement(mpq_class rat) : FieldElement(std::move(rat), mpq_class(0)) {}

  static FieldElement sqrt3() { return {mpq_class(0), mpq_class(1)}; }
  /// Parses `p/q`, `r/s*e`, `p/q+r/s*e` and any constant expression the form
  /// parser accepts.
  static FieldElement parse(std::string_view text);

  const mpq_class& rational_part() const { return rat_; }
  const mpq_class& irrational_part() const { return irr_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(irr_) == 0; }
  bool is_one() const { return rat_ == 1 && sgn(irr_) == 0; }
  bool is_rational() const { return sgn(irr_) == 0; }

  FieldElement conjugate() const { return {rat_, -irr_}; }
  /// a^2 - 3b^2; zero only for the zero element.
  mpq_class norm() const { return rat_ * rat_ - 3 * irr_ * irr_; }
  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  /// *this -= a * b without temporaries.
  FieldElement& sub_product(const FieldElement& a, const FieldElement& b);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator-() const { return {-rat_, -irr_}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.rat_ == b.rat_ && a.irr_ == b.irr_;
  }
  /// Lexicographic on (rational part, irrational part). Only used for
  /// deterministic ordering of keys, not the real ordering of the numbers.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

  /// Sign of the real number a + b*sqrt(3).
  int sign() const;
  double to_double() const;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  mpq_class rat_{0};
  mpq_class irr_{0};
};

FieldElement pow(FieldElement base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const FieldElement& v);

}  // namespace linarr

template <>
struct std::hash<linarr::FieldElement> {
  std::size_t operator()(const linarr::FieldElement& v) const noexcept { return v.hash(); }
};
