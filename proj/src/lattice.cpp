#include "coverforge/lattice.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "coverforge/constructors.hpp"
#include "coverforge/errors.hpp"

namespace coverforge {

namespace {

bool is_prime_u(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// SL2(q) on the q^2-1 nonzero vectors, q an odd prime.
Group sl2_prime(unsigned q) {
  unsigned n = q * q - 1;
  auto enc = [&](unsigned a, unsigned b) { return a * q + b - 1; };
  std::vector<Point> e1(n), e2(n);
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b) {
      if (a == 0 && b == 0) continue;
      e1[enc(a, b)] = static_cast<Point>(enc((a + b) % q, b));
      e2[enc(a, b)] = static_cast<Point>(enc(a, (a + b) % q));
    }
  Group g({Perm(std::move(e1)), Perm(std::move(e2))});
  if (g.order() != static_cast<unsigned long long>(q) * (q - 1) * (q + 1))
    throw Error("sl2 constructor postcondition failed");
  return g;
}

// Perfect groups that can occur as subgroups within the lattice bound.
Group perfect_registry_group(unsigned long long order) {
  switch (order) {
    case 60: return alt(5);
    case 120: return sl2_prime(5);
    case 168: return psl2(7);
    case 336: return sl2_prime(7);
    case 360: return alt(6);
    case 504: return psl2(8);
    case 660: return psl2(11);
    case 1092: return psl2(13);
    default: throw Error("no registry group of that order");
  }
}

constexpr unsigned long long kRegistryOrders[] = {60, 120, 168, 336, 360, 504, 660, 1092};
constexpr unsigned long long kUnsupportedPerfectOrders[] = {720, 960, 1080, 1320, 1344, 1920};

struct Builder {
  const DenseTable& t;
  std::size_t n;
  std::size_t words;
  std::optional<unsigned long long> cap;

  struct Sub {
    unsigned long long order;
    std::vector<EltIndex> elems;
    std::vector<EltIndex> gens;
    std::vector<std::uint64_t> bits;
  };

  std::vector<Sub> subs;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index;

  explicit Builder(const DenseTable& table, std::optional<unsigned long long> order_cap)
      : t(table), n(table.size()), words((table.size() + 63) / 64), cap(order_cap) {}

  static std::uint64_t key_of(const std::vector<EltIndex>& elems) {
    std::uint64_t h = 1469598103934665603ull;
    for (EltIndex e : elems) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }

  bool insert(std::vector<EltIndex> elems, std::vector<EltIndex> gens) {
    std::uint64_t key = key_of(elems);
    auto& bucket = index[key];
    for (std::size_t id : bucket)
      if (subs[id].elems == elems) return false;
    Sub s;
    s.order = elems.size();
    s.bits.assign(words, 0);
    for (EltIndex e : elems) s.bits[e >> 6] |= 1ull << (e & 63);
    s.elems = std::move(elems);
    s.gens = std::move(gens);
    bucket.push_back(subs.size());
    subs.push_back(std::move(s));
    return true;
  }

  bool member(const Sub& s, EltIndex x) const {
    return (s.bits[x >> 6] >> (x & 63)) & 1;
  }

  void extend_all() {
    // process by ascending order; extensions strictly increase order
    for (std::size_t i = 0; i < subs.size(); ++i) {
      // note: subs grows during iteration; order-sorted processing is not
      // required for completeness, every subgroup is extended eventually
      extend_one(i);
    }
  }

  void extend_one(std::size_t id) {
    for (std::size_t zi = 1; zi < n; ++zi) {
      EltIndex z = static_cast<EltIndex>(zi);
      const Sub& s = subs[id];  // re-read; vector may have reallocated
      if (member(s, z)) continue;
      // z must normalize S
      bool normalizes = true;
      for (EltIndex g : s.gens)
        if (!member(s, t.conj(g, z))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      // smallest k >= 1 with z^k in S must be prime
      unsigned k = 1;
      EltIndex zp = z;
      while (!member(s, zp)) {
        zp = t.mul(zp, z);
        ++k;
      }
      if (!is_prime_u(k)) continue;
      unsigned long long new_order = s.order * k;
      if (cap && new_order > *cap) continue;
      if (n % new_order != 0) continue;

      std::vector<EltIndex> elems;
      elems.reserve(new_order);
      elems.insert(elems.end(), s.elems.begin(), s.elems.end());
      EltIndex zpow = z;
      for (unsigned j = 1; j < k; ++j) {
        for (EltIndex e : s.elems) elems.push_back(t.mul(e, zpow));
        zpow = t.mul(zpow, z);
      }
      std::sort(elems.begin(), elems.end());
      std::vector<EltIndex> gens = s.gens;
      gens.push_back(z);
      insert(std::move(elems), std::move(gens));
    }
  }
};

}  // namespace

std::optional<unsigned> p_group_prime(unsigned long long order) {
  if (order < 2) return std::nullopt;
  unsigned long long p = 2;
  while (order % p != 0) {
    ++p;
    if (p * p > order) {
      p = order;
      break;
    }
  }
  unsigned long long m = order;
  while (m % p == 0) m /= p;
  if (m != 1) return std::nullopt;
  return static_cast<unsigned>(p);
}

SubgroupLattice subgroup_lattice(const Group& g,
                                 std::optional<unsigned long long> order_cap,
                                 const Limits& limits) {
  if (g.order() > limits.lattice_limit)
    throw OrderExceedsLimit("group exceeds the lattice limit");
  auto table = DenseTable::of(g, limits.lattice_limit);

  Builder b(*table, order_cap);
  b.insert({0}, {});

  if (!is_soluble(g)) {
    unsigned long long n = g.order();
    for (unsigned long long bad : kUnsupportedPerfectOrders)
      if (bad < n && n % bad == 0)
        throw UnsupportedStructure(
            "perfect subgroups of order " + std::to_string(bad) + " are unsupported");
    for (unsigned long long d : kRegistryOrders) {
      if (d >= n || n % d != 0) continue;
      Group p = perfect_registry_group(d);
      auto ptab = DenseTable::of(p, limits.element_limit);
      for (auto& copy : dense_subgroup_copies(*ptab, *table)) {
        auto sub = table->subgroup_table(copy);
        std::vector<EltIndex> gens;
        for (EltIndex lg : sub.greedy_generators()) gens.push_back(copy[lg]);
        b.insert(std::move(copy), std::move(gens));
      }
    }
    if ((!order_cap || *order_cap >= n) && is_perfect(g)) {
      std::vector<EltIndex> all(table->size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<EltIndex>(i);
      b.insert(std::move(all), table->generator_indices());
    }
  }

  b.extend_all();

  SubgroupLattice lat;
  lat.table = table;
  lat.order_cap = order_cap;
  std::vector<std::size_t> ids(b.subs.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  std::sort(ids.begin(), ids.end(), [&](std::size_t x, std::size_t y) {
    if (b.subs[x].order != b.subs[y].order) return b.subs[x].order < b.subs[y].order;
    return b.subs[x].elems < b.subs[y].elems;
  });
  for (std::size_t id : ids) {
    SubgroupLattice::Entry e;
    e.order = b.subs[id].order;
    e.elements = std::move(b.subs[id].elems);
    e.gens = std::move(b.subs[id].gens);
    lat.entries.push_back(std::move(e));
  }
  return lat;
}

Group SubgroupLattice::to_group(std::size_t i) const {
  const Entry& e = entries[i];
  std::vector<Perm> gens;
  for (EltIndex gi : e.gens) gens.push_back(table->perms()[gi]);
  return generated_group(table->degree(), std::move(gens));
}

void SubgroupLattice::ensure_bits() const {
  if (!bits_.empty()) return;
  std::size_t words = (table->size() + 63) / 64;
  bits_.resize(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    bits_[i].assign(words, 0);
    for (EltIndex e : entries[i].elements) bits_[i][e >> 6] |= 1ull << (e & 63);
  }
}

bool SubgroupLattice::contains_subgroup(std::size_t inner, std::size_t outer) const {
  ensure_bits();
  const auto& a = bits_[inner];
  const auto& bset = bits_[outer];
  for (std::size_t w = 0; w < a.size(); ++w)
    if ((a[w] & ~bset[w]) != 0) return false;
  return true;
}

const std::vector<bool>& SubgroupLattice::maximal_flags() const {
  if (maximal_) return *maximal_;
  ensure_bits();
  std::size_t n = table->size();
  maximal_ = std::vector<bool>(entries.size(), false);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].order == n) continue;  // the whole group
    bool maximal = true;
    for (std::size_t j = 0; j < entries.size() && maximal; ++j) {
      if (entries[j].order <= entries[i].order || entries[j].order == n) continue;
      if (entries[j].order % entries[i].order != 0) continue;
      if (contains_subgroup(i, j)) maximal = false;
    }
    (*maximal_)[i] = maximal;
  }
  return *maximal_;
}

const std::vector<bool>& SubgroupLattice::normal_flags() const {
  if (normal_) return *normal_;
  ensure_bits();
  normal_ = std::vector<bool>(entries.size(), false);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    bool normal = true;
    for (EltIndex s : entries[i].gens) {
      for (EltIndex g : table->generator_indices()) {
        EltIndex c = table->conj(s, g);
        if (!((bits_[i][c >> 6] >> (c & 63)) & 1)) {
          normal = false;
          break;
        }
      }
      if (!normal) break;
    }
    (*normal_)[i] = normal;
  }
  return *normal_;
}

std::vector<Group> maximal_subgroups(const Group& g, const Limits& limits) {
  auto p = p_group_prime(g.order());
  if (p) {
    // index-p preimages of the hyperplanes of G/Phi(G)
    unsigned prime = *p;
    if (g.order() == prime) return {generated_group(g.degree(), {})};
    Group phi = frattini_subgroup(g, limits);
    Group q = quotient(g, phi);

    // pick generators of g whose images form a basis of the F_p-space q
    std::vector<std::size_t> basis_idx;
    std::vector<Perm> basis_imgs;
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
      const Perm& img = q.generators()[i];
      Group span = generated_group(q.degree(), basis_imgs);
      if (!span.contains(img)) {
        basis_idx.push_back(i);
        basis_imgs.push_back(img);
      }
    }
    std::size_t k = basis_idx.size();
    if (q.order() != [&] {
          unsigned long long v = 1;
          for (std::size_t i = 0; i < k; ++i) v *= prime;
          return v;
        }())
      throw Error("frattini quotient basis extraction failed");

    std::vector<Group> out;
    // canonical covectors: first nonzero coordinate equal to 1
    std::vector<unsigned> phiv(k, 0);
    auto next_covector = [&]() -> bool {
      for (std::size_t i = k; i-- > 0;) {
        if (++phiv[i] < prime) return true;
        phiv[i] = 0;
      }
      return false;
    };
    while (next_covector()) {
      std::size_t first = 0;
      while (first < k && phiv[first] == 0) ++first;
      if (phiv[first] != 1) continue;  // scalar-normalized representatives only
      std::vector<Perm> gens = phi.generators();
      for (std::size_t j = 0; j < k; ++j) {
        if (j == first) continue;
        // v_j = e_j - phi_j * e_first lies in the kernel
        Perm lift = g.generators()[basis_idx[j]];
        unsigned c = (prime - phiv[j] % prime) % prime;
        Perm base = g.generators()[basis_idx[first]];
        Perm pw = Perm::identity(g.degree());
        for (unsigned t = 0; t < c; ++t) pw = pw * base;
        gens.push_back(lift * pw);
      }
      Group m(gens);
      if (m.order() * prime != g.order())
        throw Error("hyperplane preimage has wrong index");
      out.push_back(std::move(m));
    }
    return out;
  }

  SubgroupLattice lat = subgroup_lattice(g, std::nullopt, limits);
  const auto& flags = lat.maximal_flags();
  std::vector<Group> out;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (flags[i]) out.push_back(lat.to_group(i));
  return out;
}

std::vector<Group> normal_subgroups(const Group& g, const Limits& limits) {
  SubgroupLattice lat = subgroup_lattice(g, std::nullopt, limits);
  const auto& flags = lat.normal_flags();
  std::vector<Group> out;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (flags[i]) out.push_back(lat.to_group(i));
  return out;
}

Group sylow_subgroup(const Group& g, unsigned p, const Limits& limits) {
  if (!is_prime_u(p)) throw InvalidParameter("sylow_subgroup needs a prime");
  unsigned long long part = 1;
  unsigned long long n = g.order();
  while (n % p == 0) {
    part *= p;
    n /= p;
  }
  if (part == g.order()) return g;
  if (part == 1) return generated_group(g.degree(), {});
  SubgroupLattice lat = subgroup_lattice(g, part, limits);
  for (std::size_t i = 0; i < lat.entries.size(); ++i)
    if (lat.entries[i].order == part) return lat.to_group(i);
  throw Error("sylow subgroup enumeration failed");
}

Group frattini_subgroup(const Group& g, const Limits& limits) {
  if (g.order() == 1) return g;
  auto p = p_group_prime(g.order());
  if (p) {
    // Phi(G) = [G,G] G^p for p-groups
    std::vector<Perm> seed;
    const auto& gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        seed.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
    for (const Perm& x : gens) {
      Perm pw = Perm::identity(g.degree());
      for (unsigned t = 0; t < *p; ++t) pw = pw * x;
      seed.push_back(pw);
    }
    return normal_closure(g, seed);
  }
  SubgroupLattice lat = subgroup_lattice(g, std::nullopt, limits);
  const auto& flags = lat.maximal_flags();
  std::vector<bool> common(lat.table->size(), true);
  bool any = false;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (!flags[i]) continue;
    any = true;
    std::vector<bool> in(lat.table->size(), false);
    for (EltIndex e : lat.entries[i].elements) in[e] = true;
    for (std::size_t x = 0; x < common.size(); ++x)
      if (!in[x]) common[x] = false;
  }
  if (!any) return g;  // no proper maximal subgroup (trivial group)
  std::vector<EltIndex> elems;
  for (std::size_t x = 0; x < common.size(); ++x)
    if (common[x]) elems.push_back(static_cast<EltIndex>(x));
  auto sub = lat.table->subgroup_table(elems);
  std::vector<Perm> gens;
  for (EltIndex lg : sub.greedy_generators())
    if (elems[lg] != 0) gens.push_back(lat.table->perms()[elems[lg]]);
  return generated_group(g.degree(), std::move(gens));
}

}  // namespace coverforge
