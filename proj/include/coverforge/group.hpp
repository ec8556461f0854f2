#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "coverforge/limits.hpp"
#include "coverforge/perm.hpp"

namespace coverforge {

namespace detail {

// Base and strong generating set with full transversals.
struct StabChain {
  struct Level {
    Point base = 0;
    std::vector<Perm> gens;          // strong generators fixing earlier base points
    std::vector<Point> orbit;        // discovery order, orbit[0] == base
    std::vector<int> orbit_pos;      // point -> index into orbit, or -1
    std::vector<Perm> transversal;   // transversal[i] maps base to orbit[i]
  };

  unsigned degree = 0;
  std::vector<Level> levels;
  unsigned long long order = 1;

  // Residue of g after sifting, plus the level where sifting stopped
  // (levels.size() when g sifts to the identity).
  std::pair<Perm, std::size_t> sift(const Perm& g) const;
  bool contains(const Perm& g) const;
};

StabChain build_chain(unsigned degree, const std::vector<Perm>& gens);

}  // namespace detail

// A finite permutation group given by generators, with a lazily built
// stabilizer chain for order and membership queries. Immutable after
// construction; chain construction is internally synchronized so values
// can be shared across threads.
class Group {
 public:
  // Generators must be non-empty and of equal degree.
  explicit Group(std::vector<Perm> generators);

  static Group trivial();  // degree-1 identity group

  unsigned degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  unsigned long long order() const;
  bool contains(const Perm& g) const;
  bool is_trivial() const { return order() == 1; }

  // All elements in lexicographic order on image arrays.
  // Throws OrderExceedsLimit when |G| > limit.
  const std::vector<Perm>& elements(std::size_t limit) const;

  const detail::StabChain& chain() const;

  // Orbit of a point under the group, in discovery order.
  std::vector<Point> orbit(Point x) const;

  bool is_transitive() const;

  // Type-erased cache slot for the dense element table (see dense.hpp).
  std::shared_ptr<void> dense_cache_get() const;
  void dense_cache_put(std::shared_ptr<void> v) const;

 private:
  unsigned degree_;
  std::vector<Perm> gens_;

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Subgroup of the symmetric group generated by `gens` acting on `degree`
// points; an empty generator list yields the trivial group on that domain.
Group generated_group(unsigned degree, std::vector<Perm> gens);

// Acts on the disjoint union of the two domains.
Group direct_product(const Group& a, const Group& b);

// Smallest subgroup of g containing `seed` and closed under conjugation by
// the generators of g.
Group normal_closure(const Group& g, const std::vector<Perm>& seed);

// Commutator subgroup [a, b] as a subgroup of the ambient group `g`
// (normal closure of pairwise generator commutators).
Group commutator_subgroup(const Group& g, const Group& a, const Group& b);

Group derived_subgroup(const Group& g);

// Orders of the derived series until it stabilizes (ends at 1 iff soluble).
std::vector<unsigned long long> derived_series_orders(const Group& g);

bool is_soluble(const Group& g);
bool is_perfect(const Group& g);
bool is_nilpotent(const Group& g);

// Faithful action of G/N on the left cosets of N, degree |G:N|.
// Throws NotNormal when N is not normal in G.
Group quotient(const Group& g, const Group& n);

bool is_normal_in(const Group& g, const Group& n);

}  // namespace coverforge
