#pragma once

#include <map>
#include <optional>
#include <vector>

#include "coverforge/group.hpp"
#include "coverforge/limits.hpp"

namespace coverforge {

struct StructureReport {
  unsigned long long order = 1;
  std::optional<unsigned long long> center_order;
  std::vector<unsigned long long> derived_series_orders;
  bool is_perfect = false;
  bool is_soluble = true;
  bool is_nilpotent = true;
  // invariant-factor partitions of the abelianization, per prime
  std::map<unsigned, std::vector<unsigned>> abelian_invariants;
  // element order -> count; absent when |G| exceeds the element limit
  std::optional<std::map<unsigned long long, std::size_t>> order_spectrum;
  std::optional<unsigned long long> frattini_order;
};

// Series fields need only the stabilizer chain; spectrum, center and
// Frattini data are filled when within limits and left absent otherwise.
StructureReport structure_report(const Group& g, const Limits& limits = {});

}  // namespace coverforge
