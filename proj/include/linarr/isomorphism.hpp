#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "linarr/arrangement.hpp"

namespace linarr {

/// Line bijection (A index -> B index) that carries the singular points of A
/// onto those of B with incidences preserved, i.e. an isomorphism of
/// intersection lattices. Found by colour refinement on per-line multiplicity
/// profiles followed by backtracking over the refined classes.
std::optional<std::vector<std::size_t>> find_lattice_isomorphism(const Arrangement& a, const Arrangement& b);

bool incidence_isomorphic(const Arrangement& a, const Arrangement& b);

}  // namespace linarr
