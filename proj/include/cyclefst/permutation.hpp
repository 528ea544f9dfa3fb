#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cyclefst/types.hpp"

namespace cyclefst {

// Throws ValidationError naming the first entry that is out of 1..n or
// repeats an earlier value.
void validate_permutation(std::span<const Element> one_line);

// Cycle decomposition by a single marking pass. Each cycle starts at its
// smallest element; cycles are listed in order of their smallest element.
std::vector<std::vector<Element>> cycle_decomposition(
    std::span<const Element> one_line);

std::size_t count_cycles(std::span<const Element> one_line);

Permutation identity_permutation(std::size_t n);

// pi^{-1} in one-line notation.
Permutation invert(std::span<const Element> one_line);

// Builds the one-line notation of a product of disjoint cycles over 1..n.
// Elements not mentioned are fixpoints.
Permutation from_cycles(std::size_t n,
                        const std::vector<std::vector<Element>>& cycles);

}  // namespace cyclefst
