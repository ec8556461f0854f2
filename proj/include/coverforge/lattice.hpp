#pragma once

#include <optional>

#include "coverforge/dense.hpp"
#include "coverforge/group.hpp"
#include "coverforge/limits.hpp"

namespace coverforge {

// Complete list of subgroups of a desk-scale group (elements as index sets
// into the dense table, deterministic (order, element-set) sequence).
class SubgroupLattice {
 public:
  struct Entry {
    unsigned long long order = 1;
    std::vector<EltIndex> elements;  // sorted
    std::vector<EltIndex> gens;
  };

  std::shared_ptr<const DenseTable> table;
  std::vector<Entry> entries;
  std::optional<unsigned long long> order_cap;

  std::size_t size() const { return entries.size(); }
  Group to_group(std::size_t i) const;

  // Flags are computed on first use.
  const std::vector<bool>& maximal_flags() const;
  const std::vector<bool>& normal_flags() const;

  bool contains_subgroup(std::size_t inner, std::size_t outer) const;

 private:
  mutable std::optional<std::vector<bool>> maximal_;
  mutable std::optional<std::vector<bool>> normal_;
  mutable std::vector<std::vector<std::uint64_t>> bits_;
  void ensure_bits() const;
};

// Layered cyclic-extension enumeration, seeded with the perfect subgroups
// (built-in registry for insoluble inputs). With order_cap set, only
// subgroups of order <= order_cap are listed.
SubgroupLattice subgroup_lattice(const Group& g,
                                 std::optional<unsigned long long> order_cap = {},
                                 const Limits& limits = {});

// For p-groups of any supported size via Frattini-quotient hyperplanes,
// otherwise through the lattice.
std::vector<Group> maximal_subgroups(const Group& g, const Limits& limits = {});

std::vector<Group> normal_subgroups(const Group& g, const Limits& limits = {});

// Largest p-power-order subgroup (the p-part of |G|).
Group sylow_subgroup(const Group& g, unsigned p, const Limits& limits = {});

// Intersection of the maximal subgroups; direct [G,G]G^p computation for
// p-groups, lattice route otherwise.
Group frattini_subgroup(const Group& g, const Limits& limits = {});

// Order = p^k for some prime p (k >= 1); returns p.
std::optional<unsigned> p_group_prime(unsigned long long order);

}  // namespace coverforge
