#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coverforge/group.hpp"

namespace coverforge {

using EltIndex = std::uint16_t;

// Fully tabulated finite group: element list (lexicographic when backed by
// permutations), multiplication/inverse/order tables and conjugacy data.
// Index 0 is always the identity.
class DenseTable {
 public:
  // Tabulates a permutation group; |G| must not exceed `limit`.
  static std::shared_ptr<const DenseTable> of(const Group& g, std::size_t limit);

  // Wraps a raw multiplication table (indices 0..n-1, table[i*n+j] = i*j).
  // The identity is relabeled to index 0 if necessary.
  static DenseTable from_raw(std::size_t n, std::vector<EltIndex> table);

  std::size_t size() const { return n_; }
  EltIndex mul(EltIndex i, EltIndex j) const { return mul_[i * n_ + j]; }
  EltIndex inv(EltIndex i) const { return inv_[i]; }
  EltIndex conj(EltIndex x, EltIndex g) const {  // g^-1 x g
    return mul(mul(inv_[g], x), g);
  }
  std::uint32_t elt_order(EltIndex i) const { return order_[i]; }

  // Permutation realization (empty when built from a raw table).
  const std::vector<Perm>& perms() const { return perms_; }
  bool has_perms() const { return !perms_.empty(); }
  unsigned degree() const { return degree_; }
  std::optional<EltIndex> index_of(const Perm& p) const;

  const std::vector<EltIndex>& generator_indices() const { return gens_; }

  std::size_t class_count() const { return class_size_.size(); }
  EltIndex class_of(EltIndex i) const { return class_of_[i]; }
  std::uint32_t class_size(EltIndex c) const { return class_size_[c]; }

  // Subgroup generated by the given element indices, as a sorted index list.
  // With `cap` set, enumeration stops and returns nullopt once the closure
  // exceeds it.
  std::vector<EltIndex> closure(const std::vector<EltIndex>& seed) const;
  std::optional<std::vector<EltIndex>> closure_capped(
      const std::vector<EltIndex>& seed, std::size_t cap) const;

  // Relabels a subgroup (sorted index list) as a standalone table; `orig`
  // receives the original indices in the new labeling order.
  DenseTable subgroup_table(const std::vector<EltIndex>& elems,
                            std::vector<EltIndex>* orig = nullptr) const;

  // Greedy small generating sequence: repeatedly adds the element that
  // enlarges the generated subgroup most (ties broken by index). Cached,
  // together with the prefix subgroup orders.
  const std::vector<EltIndex>& greedy_generators() const;
  const std::vector<std::size_t>& greedy_prefix_orders() const;

  bool is_abelian() const;
  unsigned long long exponent() const;
  std::vector<EltIndex> center() const;
  std::vector<EltIndex> derived() const;
  std::vector<std::uint32_t> derived_series_sizes() const;
  std::vector<std::uint32_t> lower_central_sizes() const;

  // Order spectrum as (element order, count) pairs.
  std::map<unsigned long long, std::size_t> spectrum() const;

  // Invariant-factor partitions per prime of an abelian table.
  // Precondition: is_abelian().
  std::map<unsigned, std::vector<unsigned>> abelian_invariants() const;

  // Content-based isomorphism-invariant fingerprint; equal profiles are a
  // necessary condition for isomorphism, and a sufficient one for abelian
  // tables.
  const std::string& profile() const;

  // Class-level invariant key of one element under the refined profile.
  std::uint64_t element_key(EltIndex i) const;

 private:
  void init_tables();
  void init_classes();
  void refine_class_keys() const;

  std::size_t n_ = 0;
  unsigned degree_ = 0;
  std::vector<Perm> perms_;
  std::vector<EltIndex> mul_;
  std::vector<EltIndex> inv_;
  std::vector<std::uint32_t> order_;
  std::vector<EltIndex> gens_;
  std::vector<EltIndex> class_of_;
  std::vector<std::uint32_t> class_size_;
  std::vector<EltIndex> class_rep_;
  mutable std::vector<std::uint64_t> class_key_;
  mutable std::string profile_;
  mutable std::vector<EltIndex> greedy_;
  mutable std::vector<std::size_t> greedy_prefix_;
};

// Backtracking isomorphism test on dense tables. Deterministic; returns the
// image indices of a.greedy_generators() in b when an isomorphism exists.
std::optional<std::vector<EltIndex>> dense_iso(const DenseTable& a,
                                               const DenseTable& b);

bool dense_isomorphic(const DenseTable& a, const DenseTable& b);

// All subgroups of `g` isomorphic to `p` (as sorted element-index sets).
// Exhaustive; intended for small `p` (perfect-subgroup seeding).
std::vector<std::vector<EltIndex>> dense_subgroup_copies(const DenseTable& p,
                                                         const DenseTable& g);

}  // namespace coverforge
