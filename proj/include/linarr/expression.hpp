#pragma once

#include <functional>
#include <map>
#include <string_view>

#include "linarr/field.hpp"
#include "linarr/form.hpp"

namespace linarr {

/// Polynomial in x, y, z over Q(sqrt 3), not necessarily homogeneous.
using SparsePolynomial = std::map<Monomial, FieldElement, std::greater<>>;

/// Parses arithmetic over the symbols x, y, z, e with `+ - * ^`, parentheses,
/// rational literals `p/q` and implicit multiplication (`2x`, `7/2e`).
/// `/` is only accepted inside a rational literal. Throws ParseError.
SparsePolynomial parse_expression(std::string_view text);

}  // namespace linarr
