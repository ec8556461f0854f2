#pragma once

#include <cstddef>

namespace coverforge {

// Desk-scale resource bounds. Both limits are per-call configurable; the
// defaults cover every shipped workload with headroom.
struct Limits {
  std::size_t lattice_limit = 2048;   // max |G| for subgroup enumeration
  std::size_t element_limit = 10000;  // max |G| for full element listing
};

}  // namespace coverforge
