#pragma once

#include <map>
#include <vector>

#include "coverforge/catalog.hpp"
#include "coverforge/group.hpp"
#include "coverforge/limits.hpp"

namespace coverforge {

// Non-increasing sequence of positive integers (trailing zeros trimmed).
struct Partition {
  std::vector<unsigned> parts;

  static Partition of(std::vector<unsigned> parts);
  unsigned weight() const;
  unsigned part(std::size_t j) const {  // zero-padded access
    return j < parts.size() ? parts[j] : 0;
  }
  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
};

// Abelian p-group in canonical form Z_{p^a1} x ... x Z_{p^ak}, a1 >= ... >= ak.
struct AbelianPGroup {
  unsigned p = 2;
  Partition partition;

  unsigned long long order() const;
};

struct AbelianGroup {
  std::map<unsigned, Partition> primary_parts;

  unsigned long long order() const;
};

// Componentwise comparison after zero padding.
bool abelian_embeds(const AbelianPGroup& b, const AbelianPGroup& a);

// Slot-wise maximum: the smallest abelian p-group containing every member.
AbelianPGroup min_abelian_p_cover(const std::vector<AbelianPGroup>& f);

// f(n) = sum over k of floor(n/k); the weight of cover_partition_all(n).
unsigned long long dirichlet_f(unsigned long long n);

// (floor(n/1), ..., floor(n/n)): the minimum cover of all partitions of n.
Partition cover_partition_all(unsigned n);

// Order of the smallest abelian group embedding all abelian groups of
// order n: the product over primes of p^f(m_p).
unsigned long long min_abelian_cover_order(unsigned long long n);

// (f(n) - n(ln n + 2*gamma - 1)) / sqrt(n)
double dirichlet_gap(unsigned long long n);

// All partitions of n, in descending lexicographic order.
std::vector<Partition> partitions_of(unsigned n);

// Permutation realization as a product of cyclic groups on disjoint cycles.
Group realize_abelian_p_group(const AbelianPGroup& g);

// Nilpotent minimum cover as the direct product of per-prime components
// (partition calculus for abelian Sylow families, catalog scan otherwise).
// The result is a minimum cover among nilpotent groups.
Group min_nilpotent_cover(const std::vector<Group>& members,
                          const Catalog* per_prime_authority = nullptr,
                          const Limits& limits = {});

}  // namespace coverforge
