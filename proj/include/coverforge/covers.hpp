#pragma once

#include <map>
#include <optional>
#include <vector>

#include "coverforge/catalog.hpp"
#include "coverforge/embed.hpp"
#include "coverforge/group.hpp"
#include "coverforge/limits.hpp"

namespace coverforge {

// The set F = {F_1, ..., F_k} with cached order bounds.
struct FamilySpec {
  std::vector<Group> members;
  unsigned long long lcm_order = 1;
  unsigned long long product_order = 1;

  static FamilySpec of(std::vector<Group> members);  // EmptyFamily on empty input
};

struct OrderBounds {
  unsigned long long lower = 1;  // lcm of member orders
  unsigned long long upper = 1;  // product of member orders
  bool coprime = false;          // pairwise coprime members force lower == upper
};

OrderBounds order_bounds(const FamilySpec& f);

struct CoverVerdict {
  bool is_cover = false;
  bool is_minimal = false;
  bool is_co_minimal = false;
  bool is_strongly_minimal = false;
  std::optional<bool> is_minimum;  // present only with a catalog authority
  std::map<std::size_t, EmbeddingCertificate> witnesses;  // member index -> witness
};

bool is_cover(const Group& g, const FamilySpec& f,
              std::map<std::size_t, EmbeddingCertificate>* witnesses = nullptr,
              const Limits& limits = {});

// Maximal-subgroup check only; covering is upward-closed in subgroups.
bool is_minimal_cover(const Group& g, const FamilySpec& f, const Limits& limits = {});

// Checks every nontrivial proper normal subgroup; the cover property is not
// monotone along quotient chains, so minimal-normal-only checking would be
// unsound.
bool is_co_minimal_cover(const Group& g, const FamilySpec& f, const Limits& limits = {});

// Authority must cover every order m < |G| divisible by lcm(F).
bool is_minimum_cover(const Group& g, const FamilySpec& f, const Catalog& authority,
                      const Limits& limits = {});

CoverVerdict cover_verdict(const Group& g, const FamilySpec& f,
                           const Catalog* authority = nullptr,
                           const Limits& limits = {});

struct CatalogRef {
  unsigned long long order = 0;
  unsigned index = 0;
  bool operator==(const CatalogRef&) const = default;
};

std::vector<CatalogRef> find_minimal_covers(const FamilySpec& f, const Catalog& c,
                                            unsigned long long max_order,
                                            const Limits& limits = {});

// All covers of the smallest order realizing one (empty when none exists
// up to max_order).
std::vector<CatalogRef> find_minimum_covers(const FamilySpec& f, const Catalog& c,
                                            unsigned long long max_order,
                                            const Limits& limits = {});

// n divides |G| but no proper subgroup order.
bool is_n_witness(const Group& g, unsigned long long n, const Limits& limits = {});

std::vector<CatalogRef> find_witnesses(unsigned long long n, const Catalog& c,
                                       unsigned long long max_order,
                                       const Limits& limits = {});

bool is_dual_cover(const Group& g, const FamilySpec& f, const Limits& limits = {});
bool is_minimal_dual_cover(const Group& g, const FamilySpec& f, const Limits& limits = {});
// Scans the full subgroup lattice; no monotonicity shortcut is available.
bool is_co_minimal_dual_cover(const Group& g, const FamilySpec& f,
                              const Limits& limits = {});

// For a minimal n-cover G: each Sylow p-subgroup must cover all groups of
// order equal to the p-part of n.
bool sylow_cover_check(const Group& g, unsigned long long n, const Catalog& authority,
                       const Limits& limits = {});

struct SelfCoverResult {
  bool is_self_minimal = false;
  bool theorem_consistent = false;
};

// G against the family of its own maximal subgroups (up to isomorphism).
SelfCoverResult self_cover_check(const Group& g, const Limits& limits = {});

struct CensusRow {
  unsigned long long order = 0;
  std::size_t groups = 0;
  std::size_t covers = 0;
  std::size_t minimal = 0;
  std::size_t strongly_minimal = 0;
};

CensusRow census_row(unsigned long long order, const FamilySpec& family,
                     const Catalog& c, const Limits& limits = {});

}  // namespace coverforge
