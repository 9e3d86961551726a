#include "linarr/fields.hpp"

namespace linarr {
namespace detail {

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp != 0) {
    if (exp & 1u) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace detail

void ExactField::eliminate(std::vector<Element>& v, const std::vector<Element>& row, std::size_t col) const {
  const FieldElement factor = v[col];
  for (std::size_t j = col; j < v.size(); ++j) {
    if (!row[j].is_zero()) v[j].sub_product(factor, row[j]);
  }
}

void ExactField::normalize_pivot(std::vector<Element>& v, std::size_t col) const {
  if (v[col] == FieldElement(1)) return;
  const FieldElement inv = v[col].inverse();
  for (std::size_t j = col; j < v.size(); ++j) {
    if (!v[j].is_zero()) v[j] *= inv;
  }
}

}  // namespace linarr
