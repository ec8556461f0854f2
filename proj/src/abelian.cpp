#include "coverforge/abelian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coverforge/constructors.hpp"
#include "coverforge/covers.hpp"
#include "coverforge/dense.hpp"
#include "coverforge/errors.hpp"
#include "coverforge/lattice.hpp"

namespace coverforge {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

unsigned long long checked_pow(unsigned long long b, unsigned e) {
  unsigned long long r = 1;
  while (e--) {
    if (__builtin_mul_overflow(r, b, &r))
      throw OrderExceedsLimit("power does not fit in 64 bits");
  }
  return r;
}

}  // namespace

Partition Partition::of(std::vector<unsigned> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw InvalidParameter("partition has an interior zero");
    if (i > 0 && parts[i] > parts[i - 1])
      throw InvalidParameter("partition parts must be non-increasing");
  }
  Partition p;
  p.parts = std::move(parts);
  return p;
}

unsigned Partition::weight() const {
  unsigned w = 0;
  for (unsigned v : parts) w += v;
  return w;
}

unsigned long long AbelianPGroup::order() const {
  return checked_pow(p, partition.weight());
}

unsigned long long AbelianGroup::order() const {
  unsigned long long o = 1;
  for (const auto& [p, part] : primary_parts) {
    if (__builtin_mul_overflow(o, checked_pow(p, part.weight()), &o))
      throw OrderExceedsLimit("abelian group order exceeds 64 bits");
  }
  return o;
}

bool abelian_embeds(const AbelianPGroup& b, const AbelianPGroup& a) {
  if (b.partition.parts.empty()) return true;
  if (b.p != a.p) return false;
  std::size_t k = std::max(a.partition.parts.size(), b.partition.parts.size());
  for (std::size_t j = 0; j < k; ++j)
    if (b.partition.part(j) > a.partition.part(j)) return false;
  return true;
}

AbelianPGroup min_abelian_p_cover(const std::vector<AbelianPGroup>& f) {
  if (f.empty()) throw EmptyFamily("abelian cover of an empty family");
  unsigned p = f.front().p;
  std::size_t k = 0;
  for (const auto& m : f) {
    if (m.p != p) throw InvalidParameter("family members must share one prime");
    k = std::max(k, m.partition.parts.size());
  }
  std::vector<unsigned> c(k, 0);
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& m : f) c[j] = std::max(c[j], m.partition.part(j));
  // the slot-wise maxima are automatically non-increasing; Partition::of
  // would reject otherwise
  AbelianPGroup cover{p, Partition::of(std::move(c))};
  for (const auto& m : f)
    if (!abelian_embeds(m, cover)) throw Error("abelian cover postcondition failed");
  return cover;
}

unsigned long long dirichlet_f(unsigned long long n) {
  if (n == 0) throw InvalidParameter("dirichlet_f needs n >= 1");
  // hyperbola method: sum floor(n/k) in O(sqrt n)
  unsigned long long s = 0;
  unsigned long long r = static_cast<unsigned long long>(std::sqrt((double)n));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  for (unsigned long long k = 1; k <= r; ++k) s += n / k;
  return 2 * s - r * r;
}

Partition cover_partition_all(unsigned n) {
  if (n == 0) throw InvalidParameter("cover_partition_all needs n >= 1");
  std::vector<unsigned> c(n);
  for (unsigned k = 1; k <= n; ++k) c[k - 1] = n / k;
  return Partition::of(std::move(c));
}

unsigned long long min_abelian_cover_order(unsigned long long n) {
  if (n == 0) throw InvalidParameter("min_abelian_cover_order needs n >= 1");
  unsigned long long a = 1;
  unsigned long long rest = n;
  for (unsigned long long p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    unsigned m = 0;
    while (rest % p == 0) {
      rest /= p;
      ++m;
    }
    if (__builtin_mul_overflow(a, checked_pow(p, static_cast<unsigned>(dirichlet_f(m))), &a))
      throw OrderExceedsLimit("A(n) exceeds 64 bits");
  }
  if (rest > 1) {
    if (__builtin_mul_overflow(a, rest, &a))
      throw OrderExceedsLimit("A(n) exceeds 64 bits");
  }
  return a;
}

double dirichlet_gap(unsigned long long n) {
  if (n < 2) throw InvalidParameter("dirichlet_gap needs n >= 2");
  double fn = static_cast<double>(dirichlet_f(n));
  double main = static_cast<double>(n) * (std::log((double)n) + 2 * kEulerGamma - 1);
  return (fn - main) / std::sqrt((double)n);
}

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned rest, unsigned maxpart) -> void {
    if (rest == 0) {
      out.push_back(Partition::of(cur));
      return;
    }
    for (unsigned next = std::min(rest, maxpart); next >= 1; --next) {
      cur.push_back(next);
      self(self, rest - next, next);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Group realize_abelian_p_group(const AbelianPGroup& g) {
  if (g.partition.parts.empty()) return Group::trivial();
  Group out = cyclic(static_cast<unsigned>(checked_pow(g.p, g.partition.parts[0])));
  for (std::size_t i = 1; i < g.partition.parts.size(); ++i)
    out = direct_product(
        out, cyclic(static_cast<unsigned>(checked_pow(g.p, g.partition.parts[i]))));
  return out;
}

Group min_nilpotent_cover(const std::vector<Group>& members,
                          const Catalog* per_prime_authority, const Limits& limits) {
  if (members.empty()) throw EmptyFamily("nilpotent cover of an empty family");
  for (const Group& m : members)
    if (!is_nilpotent(m)) throw NotNilpotent("family member is not nilpotent");

  // union of prime divisors
  std::vector<unsigned> primes;
  for (const Group& m : members) {
    unsigned long long n = m.order();
    for (unsigned long long p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        if (std::find(primes.begin(), primes.end(), p) == primes.end())
          primes.push_back(static_cast<unsigned>(p));
        while (n % p == 0) n /= p;
      }
    if (n > 1 && std::find(primes.begin(), primes.end(), n) == primes.end())
      primes.push_back(static_cast<unsigned>(n));
  }
  std::sort(primes.begin(), primes.end());

  std::vector<Group> components;
  for (unsigned p : primes) {
    std::vector<Group> sylows;
    unsigned long long max_order = 1, product = 1;
    for (const Group& m : members) {
      Group s = sylow_subgroup(m, p, limits);
      if (s.order() == 1) continue;
      max_order = std::max(max_order, s.order());
      if (__builtin_mul_overflow(product, s.order(), &product))
        throw OrderExceedsLimit("sylow product bound exceeds 64 bits");
      sylows.push_back(std::move(s));
    }
    if (sylows.empty()) continue;

    bool all_abelian = true;
    for (const Group& s : sylows)
      if (derived_subgroup(s).order() != 1) {
        all_abelian = false;
        break;
      }

    if (all_abelian) {
      std::vector<AbelianPGroup> parts;
      for (const Group& s : sylows) {
        auto inv = DenseTable::of(s, limits.element_limit)->abelian_invariants();
        auto it = inv.find(p);
        if (it == inv.end()) throw Error("abelian sylow lost its invariants");
        parts.push_back({p, Partition::of(it->second)});
      }
      components.push_back(realize_abelian_p_group(min_abelian_p_cover(parts)));
      continue;
    }

    if (!per_prime_authority)
      throw AuthorityGap("non-abelian sylow family needs a catalog authority");
    FamilySpec family = FamilySpec::of(sylows);
    bool found = false;
    for (unsigned long long m = max_order; m <= product && !found; m *= p) {
      if (!per_prime_authority->covers(m))
        throw AuthorityGap("authority lacks order " + std::to_string(m));
      for (const CatalogEntry* e : per_prime_authority->query(m)) {
        if (is_cover(e->realize(), family, nullptr, limits)) {
          components.push_back(e->realize());
          found = true;
          break;
        }
      }
    }
    if (!found) throw Error("sylow cover scan failed below the product bound");
  }

  if (components.empty()) return Group::trivial();
  Group result = components.front();
  for (std::size_t i = 1; i < components.size(); ++i)
    result = direct_product(result, components[i]);

  FamilySpec check = FamilySpec::of(members);
  if (!is_cover(result, check, nullptr, limits))
    throw Error("nilpotent cover postcondition failed");
  return result;
}

}  // namespace coverforge
