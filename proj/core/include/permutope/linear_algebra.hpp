#pragma once

#include <vector>

#include "permutope/rational.hpp"

namespace permutope {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by exact Gaussian elimination. Rows may be ragged only if empty.
std::size_t rank(RationalMatrix rows);

}  // namespace permutope
