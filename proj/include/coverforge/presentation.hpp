#pragma once

#include <vector>

#include "coverforge/group.hpp"

namespace coverforge {

// Finite presentation; words are sequences of signed 1-based generator
// numbers (+i = generator i-1, -i = its inverse).
struct Presentation {
  unsigned generator_count = 0;
  std::vector<std::vector<int>> relators;
};

// Regular permutation representation from coset enumeration over the
// trivial subgroup (systematic HLT strategy, no lookahead).
// Throws CosetLimitExceeded when the table does not close within max_cosets.
Group from_presentation(const Presentation& pres, std::size_t max_cosets = 20000);

}  // namespace coverforge
