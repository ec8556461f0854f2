#include "coverforge/covers.hpp"

#include <algorithm>
#include <numeric>

#include "coverforge/dense.hpp"
#include "coverforge/errors.hpp"
#include "coverforge/lattice.hpp"

namespace coverforge {

namespace {

std::vector<std::pair<unsigned long long, unsigned>> factorize(unsigned long long n) {
  std::vector<std::pair<unsigned long long, unsigned>> out;
  for (unsigned long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

// Spectrum compatibility: a subgroup cannot have more elements of any given
// order than the ambient group.
bool spectrum_compatible(const Group& h, const Group& g, const Limits& limits) {
  if (h.order() > limits.element_limit || g.order() > limits.element_limit) return true;
  std::map<unsigned long long, std::size_t> sh, sg;
  for (const Perm& e : h.elements(limits.element_limit)) ++sh[e.order()];
  for (const Perm& e : g.elements(limits.element_limit)) ++sg[e.order()];
  for (const auto& [o, c] : sh) {
    auto it = sg.find(o);
    if (it == sg.end() || it->second < c) return false;
  }
  return true;
}

void enforce_scan_inheritance(const FamilySpec& f, const Group& cover) {
  // lcm(F) divides every cover order
  if (cover.order() % f.lcm_order != 0)
    throw Error("scan consistency: cover order not divisible by the family lcm");
  // a minimal cover of p-groups must be a p-group
  auto p0 = p_group_prime(f.members.front().order());
  if (p0) {
    bool all_p = true;
    for (const Group& m : f.members) {
      auto p = p_group_prime(m.order());
      if (!p || (*p != *p0 && m.order() > 1)) {
        all_p = false;
        break;
      }
    }
    if (all_p && !p_group_prime(cover.order()))
      throw Error("scan consistency: minimal cover of p-groups is not a p-group");
  }
  // a minimal cover of perfect groups must be perfect
  bool all_perfect = true;
  for (const Group& m : f.members)
    if (!is_perfect(m)) {
      all_perfect = false;
      break;
    }
  if (all_perfect && !is_perfect(cover))
    throw Error("scan consistency: minimal cover of perfect groups is not perfect");
}

}  // namespace

FamilySpec FamilySpec::of(std::vector<Group> members) {
  if (members.empty()) throw EmptyFamily("family must be non-empty");
  FamilySpec f;
  f.members = std::move(members);
  f.lcm_order = 1;
  f.product_order = 1;
  for (const Group& m : f.members) {
    f.lcm_order = std::lcm(f.lcm_order, m.order());
    if (__builtin_mul_overflow(f.product_order, m.order(), &f.product_order))
      throw OrderExceedsLimit("family product order exceeds 2^64");
  }
  return f;
}

OrderBounds order_bounds(const FamilySpec& f) {
  OrderBounds b;
  b.lower = f.lcm_order;
  b.upper = f.product_order;
  b.coprime = true;
  for (std::size_t i = 0; i < f.members.size() && b.coprime; ++i)
    for (std::size_t j = i + 1; j < f.members.size(); ++j)
      if (std::gcd(f.members[i].order(), f.members[j].order()) != 1) {
        b.coprime = false;
        break;
      }
  return b;
}

bool is_cover(const Group& g, const FamilySpec& f,
              std::map<std::size_t, EmbeddingCertificate>* witnesses,
              const Limits& limits) {
  // shared order-capped lattice when the whole scan fits dense machinery
  unsigned long long cap = 0;
  bool lattice_route = g.order() <= limits.lattice_limit;
  for (const Group& m : f.members) cap = std::max(cap, m.order());

  std::optional<SubgroupLattice> lat;
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    const Group& m = f.members[i];
    if (m.order() == 1) {
      if (witnesses)
        (*witnesses)[i] = EmbeddingCertificate{{Perm::identity(m.degree())},
                                               {Perm::identity(g.degree())}};
      continue;
    }
    if (g.order() % m.order() != 0) return false;
    if (!spectrum_compatible(m, g, limits)) return false;

    if (lattice_route) {
      if (!lat) lat = subgroup_lattice(g, cap, limits);
      auto mt = DenseTable::of(m, limits.lattice_limit);
      bool found = false;
      for (std::size_t e = 0; e < lat->entries.size() && !found; ++e) {
        if (lat->entries[e].order != m.order()) continue;
        auto subt = lat->table->subgroup_table(lat->entries[e].elements);
        auto images = dense_iso(*mt, subt);
        if (!images) continue;
        found = true;
        if (witnesses) {
          EmbeddingCertificate cert;
          for (EltIndex si : mt->greedy_generators())
            cert.source_generators.push_back(mt->perms()[si]);
          for (EltIndex ii : *images) cert.images.push_back(subt.perms()[ii]);
          (*witnesses)[i] = std::move(cert);
        }
      }
      if (!found) return false;
    } else {
      auto cert = find_embedding_auto(m, g, limits);
      if (!cert) return false;
      if (witnesses) (*witnesses)[i] = std::move(*cert);
    }
  }
  return true;
}

bool is_minimal_cover(const Group& g, const FamilySpec& f, const Limits& limits) {
  if (!is_cover(g, f, nullptr, limits)) return false;
  for (const Group& m : maximal_subgroups(g, limits))
    if (is_cover(m, f, nullptr, limits)) return false;
  return true;
}

bool is_co_minimal_cover(const Group& g, const FamilySpec& f, const Limits& limits) {
  if (!is_cover(g, f, nullptr, limits)) return false;
  for (const Group& n : normal_subgroups(g, limits)) {
    if (n.order() == 1 || n.order() == g.order()) continue;
    if (is_cover(quotient(g, n), f, nullptr, limits)) return false;
  }
  return true;
}

bool is_minimum_cover(const Group& g, const FamilySpec& f, const Catalog& authority,
                      const Limits& limits) {
  if (!is_cover(g, f, nullptr, limits)) return false;
  for (unsigned long long m = f.lcm_order; m < g.order(); m += f.lcm_order) {
    if (!authority.covers(m))
      throw AuthorityGap("authority lacks order " + std::to_string(m));
    for (const CatalogEntry* e : authority.query(m))
      if (is_cover(e->realize(), f, nullptr, limits)) return false;
  }
  return true;
}

CoverVerdict cover_verdict(const Group& g, const FamilySpec& f, const Catalog* authority,
                           const Limits& limits) {
  CoverVerdict v;
  v.is_cover = is_cover(g, f, &v.witnesses, limits);
  if (v.is_cover) {
    v.is_minimal = is_minimal_cover(g, f, limits);
    v.is_co_minimal = is_co_minimal_cover(g, f, limits);
    v.is_strongly_minimal = v.is_minimal && v.is_co_minimal;
    if (authority) v.is_minimum = is_minimum_cover(g, f, *authority, limits);
  } else {
    v.witnesses.clear();
    if (authority) v.is_minimum = false;
  }
  // a minimum cover is strongly minimal; strong minimality splits by definition
  if (v.is_minimum && *v.is_minimum && !v.is_strongly_minimal)
    throw Error("verdict violates the minimum => strongly minimal implication");
  return v;
}

std::vector<CatalogRef> find_minimal_covers(const FamilySpec& f, const Catalog& c,
                                            unsigned long long max_order,
                                            const Limits& limits) {
  std::vector<CatalogRef> out;
  for (unsigned long long m = f.lcm_order; m <= max_order; m += f.lcm_order) {
    if (!c.covers(m)) throw AuthorityGap("catalog lacks order " + std::to_string(m));
    for (const CatalogEntry* e : c.query(m)) {
      Group g = e->realize();
      if (is_minimal_cover(g, f, limits)) {
        enforce_scan_inheritance(f, g);
        out.push_back({e->order, e->index});
      }
    }
  }
  return out;
}

std::vector<CatalogRef> find_minimum_covers(const FamilySpec& f, const Catalog& c,
                                            unsigned long long max_order,
                                            const Limits& limits) {
  for (unsigned long long m = f.lcm_order; m <= max_order; m += f.lcm_order) {
    if (!c.covers(m)) throw AuthorityGap("catalog lacks order " + std::to_string(m));
    std::vector<CatalogRef> found;
    for (const CatalogEntry* e : c.query(m))
      if (is_cover(e->realize(), f, nullptr, limits)) found.push_back({e->order, e->index});
    if (!found.empty()) return found;
  }
  return {};
}

bool is_n_witness(const Group& g, unsigned long long n, const Limits& limits) {
  if (n == 0) throw InvalidParameter("witness parameter must be positive");
  if (g.order() % n != 0) return false;
  for (const Group& m : maximal_subgroups(g, limits))
    if (m.order() % n == 0) return false;
  return true;
}

std::vector<CatalogRef> find_witnesses(unsigned long long n, const Catalog& c,
                                       unsigned long long max_order,
                                       const Limits& limits) {
  std::vector<CatalogRef> out;
  for (unsigned long long m = n; m <= max_order; m += n) {
    if (!c.covers(m)) throw AuthorityGap("catalog lacks order " + std::to_string(m));
    for (const CatalogEntry* e : c.query(m))
      if (is_n_witness(e->realize(), n, limits)) out.push_back({e->order, e->index});
  }
  return out;
}

bool is_dual_cover(const Group& g, const FamilySpec& f, const Limits& limits) {
  auto normals = normal_subgroups(g, limits);
  for (const Group& m : f.members) {
    if (g.order() % m.order() != 0) return false;
    bool found = false;
    unsigned long long want = g.order() / m.order();
    for (const Group& n : normals) {
      if (n.order() != want) continue;
      if (is_isomorphic(quotient(g, n), m, limits)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool is_minimal_dual_cover(const Group& g, const FamilySpec& f, const Limits& limits) {
  if (!is_dual_cover(g, f, limits)) return false;
  for (const Group& n : normal_subgroups(g, limits)) {
    if (n.order() == 1 || n.order() == g.order()) continue;
    if (is_dual_cover(quotient(g, n), f, limits)) return false;
  }
  return true;
}

bool is_co_minimal_dual_cover(const Group& g, const FamilySpec& f, const Limits& limits) {
  if (!is_dual_cover(g, f, limits)) return false;
  SubgroupLattice lat = subgroup_lattice(g, std::nullopt, limits);
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat.entries[i].order == g.order()) continue;
    if (is_dual_cover(lat.to_group(i), f, limits)) return false;
  }
  return true;
}

bool sylow_cover_check(const Group& g, unsigned long long n, const Catalog& authority,
                       const Limits& limits) {
  for (auto [p, e] : factorize(n)) {
    unsigned long long part = 1;
    for (unsigned i = 0; i < e; ++i) part *= p;
    if (!authority.covers(part))
      throw AuthorityGap("authority lacks order " + std::to_string(part));
    std::vector<Group> members;
    for (const CatalogEntry* entry : authority.query(part))
      members.push_back(entry->realize());
    Group sylow = sylow_subgroup(g, static_cast<unsigned>(p), limits);
    if (!is_cover(sylow, FamilySpec::of(std::move(members)), nullptr, limits))
      return false;
  }
  return true;
}

SelfCoverResult self_cover_check(const Group& g, const Limits& limits) {
  SelfCoverResult r;
  if (g.order() == 1) {
    // no proper subgroups at all; vacuously a minimal cover of them
    r.is_self_minimal = true;
    r.theorem_consistent = true;
    return r;
  }
  auto maxes = maximal_subgroups(g, limits);
  std::vector<Group> family;
  for (const Group& m : maxes) {
    bool dup = false;
    for (const Group& seen : family)
      if (is_isomorphic(m, seen, limits)) {
        dup = true;
        break;
      }
    if (!dup) family.push_back(m);
  }
  bool all_iso = family.size() == 1;
  r.is_self_minimal = is_minimal_cover(g, FamilySpec::of(std::move(family)), limits);
  r.theorem_consistent =
      r.is_self_minimal || (p_group_prime(g.order()).has_value() && all_iso);
  return r;
}

CensusRow census_row(unsigned long long order, const FamilySpec& family,
                     const Catalog& c, const Limits& limits) {
  CensusRow row;
  row.order = order;
  auto entries = c.query(order);
  row.groups = entries.size();
  for (const CatalogEntry* e : entries) {
    Group g = e->realize();
    if (!is_cover(g, family, nullptr, limits)) continue;
    ++row.covers;
    if (!is_minimal_cover(g, family, limits)) continue;
    ++row.minimal;
    if (is_co_minimal_cover(g, family, limits)) ++row.strongly_minimal;
  }
  return row;
}

}  // namespace coverforge
