#include "linarr/field.hpp"

#include <cmath>
#include <functional>
#include <ostream>

#include "linarr/expression.hpp"

namespace linarr {

FieldElement FieldElement::parse(std::string_view text) {
  const auto poly = parse_expression(text);
  if (poly.empty()) return {};
  if (poly.size() != 1 || poly.begin()->first.degree() != 0) {
    throw ParseError("not a field constant: '" + std::string(text) + "'");
  }
  return poly.begin()->second;
}

FieldElement FieldElement::inverse() const {
  // p^2 - 3q^2 vanishes only at p = q = 0 because sqrt(3) is irrational.
  const mpq_class n = norm();
  if (sgn(n) == 0) throw ArithmeticError("division by zero in Q(sqrt 3)");
  return {rat_ / n, -irr_ / n};
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  rat_ += o.rat_;
  irr_ += o.irr_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  rat_ -= o.rat_;
  irr_ -= o.irr_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (sgn(irr_) == 0 && sgn(o.irr_) == 0) {
    rat_ *= o.rat_;
    return *this;
  }
  mpq_class r = rat_ * o.rat_ + 3 * irr_ * o.irr_;
  irr_ = rat_ * o.irr_ + irr_ * o.rat_;
  rat_ = std::move(r);
  return *this;
}

FieldElement& FieldElement::sub_product(const FieldElement& a, const FieldElement& b) {
  thread_local mpq_class t;
  const bool a_irr = sgn(a.irr_) != 0, b_irr = sgn(b.irr_) != 0;
  if (sgn(a.rat_) != 0 && sgn(b.rat_) != 0) {
    mpq_mul(t.get_mpq_t(), a.rat_.get_mpq_t(), b.rat_.get_mpq_t());
    mpq_sub(rat_.get_mpq_t(), rat_.get_mpq_t(), t.get_mpq_t());
  }
  if (a_irr && b_irr) {
    mpq_mul(t.get_mpq_t(), a.irr_.get_mpq_t(), b.irr_.get_mpq_t());
    mpz_mul_ui(mpq_numref(t.get_mpq_t()), mpq_numref(t.get_mpq_t()), 3);
    t.canonicalize();
    mpq_sub(rat_.get_mpq_t(), rat_.get_mpq_t(), t.get_mpq_t());
  }
  if (b_irr && sgn(a.rat_) != 0) {
    mpq_mul(t.get_mpq_t(), a.rat_.get_mpq_t(), b.irr_.get_mpq_t());
    mpq_sub(irr_.get_mpq_t(), irr_.get_mpq_t(), t.get_mpq_t());
  }
  if (a_irr && sgn(b.rat_) != 0) {
    mpq_mul(t.get_mpq_t(), a.irr_.get_mpq_t(), b.rat_.get_mpq_t());
    mpq_sub(irr_.get_mpq_t(), irr_.get_mpq_t(), t.get_mpq_t());
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  if (o.is_rational()) {
    if (sgn(o.rat_) == 0) throw ArithmeticError("division by zero in Q(sqrt 3)");
    rat_ /= o.rat_;
    irr_ /= o.rat_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  if (const int c = cmp(a.rat_, b.rat_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const int c = cmp(a.irr_, b.irr_);
  if (c == 0) return std::strong_ordering::equal;
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

int FieldElement::sign() const {
  const int sa = sgn(rat_);
  const int sb = sgn(irr_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with 3 b^2.
  const int c = cmp(rat_ * rat_, 3 * irr_ * irr_);
  return c > 0 ? sa : sb;
}

double FieldElement::to_double() const { return rat_.get_d() + irr_.get_d() * std::sqrt(3.0); }

std::string FieldElement::to_string() const {
  if (sgn(irr_) == 0) return rat_.get_str();
  std::string irr;
  if (irr_ == 1) {
    irr = "e";
  } else if (irr_ == -1) {
    irr = "-e";
  } else {
    irr = irr_.get_str() + "*e";
  }
  if (sgn(rat_) == 0) return irr;
  if (irr.front() == '-') return rat_.get_str() + irr;
  return rat_.get_str() + "+" + irr;
}

std::size_t FieldElement::hash() const {
  const std::hash<std::string> h;
  return h(rat_.get_str()) * 1000003u ^ h(irr_.get_str());
}

FieldElement pow(FieldElement base, unsigned exponent) {
  FieldElement result(1);
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& v) { return os << v.to_string(); }

}  // namespace linarr
