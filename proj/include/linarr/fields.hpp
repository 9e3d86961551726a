#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "linarr/field.hpp"

namespace linarr {

/// Exact Q(sqrt 3) backend for the linear-algebra engine.
///
/// Stored rows are scaled to pivot 1 and elimination subtracts t[c]*row, so
/// entries stay reduced fractions of the canonical echelon basis.
struct ExactField {
  using Element = FieldElement;
  static constexpr bool exact = true;

  Element zero() const { return {}; }
  Element one() const { return FieldElement(1); }
  Element from_int(long long v) const { return FieldElement(static_cast<long>(v)); }
  Element from(const FieldElement& v) const { return v; }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const { return a.inverse(); }
  std::string to_string(const Element& a) const { return a.to_string(); }
  std::string name() const { return "Q(sqrt3)"; }

  /// Clears v[col] using `row`, whose pivot row[col] is 1 and whose entries
  /// before col vanish.
  void eliminate(std::vector<Element>& v, const std::vector<Element>& row, std::size_t col) const;
  void normalize_pivot(std::vector<Element>& v, std::size_t col) const;
};

namespace detail {
std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p);
}  // namespace detail

/// Z/P for a prime P = 11 mod 12, where 3 is a square; e maps to
/// 3^((P+1)/4), a fixed square root of 3. The images of Q(sqrt 3) data are
/// exact residues, so ranks agree with characteristic zero except at the
/// finitely many primes dividing the relevant minors.
template <std::uint32_t P>
struct PrimeField {
  static_assert(P % 12 == 11, "need P = 11 mod 12 so that 3 is a square and P = 3 mod 4");
  using Element = std::uint32_t;
  static constexpr bool exact = false;
  static constexpr std::uint32_t modulus = P;

  PrimeField() : sqrt3_(detail::pow_mod(3, (std::uint64_t(P) + 1) / 4, P)) {
    if (std::uint64_t(sqrt3_) * sqrt3_ % P != 3) throw std::logic_error("modulus is not prime");
  }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element sqrt3() const { return sqrt3_; }
  Element from_int(long long v) const {
    const long long r = v % static_cast<long long>(P);
    return static_cast<Element>(r < 0 ? r + P : r);
  }
  Element from(const mpq_class& q) const {
    const mpz_class num = q.get_num() % P;
    const mpz_class den = q.get_den() % P;
    if (den == 0) throw ArithmeticError("denominator divisible by the modulus");
    long n = num.get_si();
    if (n < 0) n += P;
    return mul(static_cast<Element>(n), inv(static_cast<Element>(den.get_ui())));
  }
  Element from(const FieldElement& v) const {
    return add(from(v.rational_part()), mul(from(v.irrational_part()), sqrt3_));
  }
  bool is_zero(Element a) const { return a == 0; }
  Element add(Element a, Element b) const {
    const std::uint32_t s = a + b;
    return s >= P ? s - P : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + P - b; }
  Element mul(Element a, Element b) const { return static_cast<Element>(std::uint64_t(a) * b % P); }
  Element neg(Element a) const { return a == 0 ? 0 : P - a; }
  Element inv(Element a) const {
    if (a == 0) throw ArithmeticError("division by zero mod p");
    return detail::pow_mod(a, P - 2, P);
  }
  std::string to_string(Element a) const { return std::to_string(a); }
  std::string name() const { return "GF(" + std::to_string(P) + ")"; }

  void eliminate(std::vector<Element>& v, const std::vector<Element>& row, std::size_t col) const {
    // row[col] == 1 for stored rows.
    const std::uint64_t f = P - v[col];
    const std::size_t n = v.size();
    Element* dst = v.data();
    const Element* src = row.data();
    for (std::size_t j = col; j < n; ++j) dst[j] = static_cast<Element>((dst[j] + f * src[j]) % P);
  }
  void normalize_pivot(std::vector<Element>& v, std::size_t col) const {
    if (v[col] == 1) return;
    const std::uint64_t f = inv(v[col]);
    for (std::size_t j = col; j < v.size(); ++j) v[j] = static_cast<Element>(v[j] * f % P);
  }

 private:
  Element sqrt3_;
};

/// Two primes just below 2^31 with P = 11 mod 12.
using PrimeFieldA = PrimeField<2147483579u>;
using PrimeFieldB = PrimeField<2147483543u>;

}  // namespace linarr
