#include "coverforge/dense.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "coverforge/errors.hpp"

namespace coverforge {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

void append_u64(std::string& s, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

}  // namespace

std::shared_ptr<const DenseTable> DenseTable::of(const Group& g, std::size_t limit) {
  if (auto cached = g.dense_cache_get())
    return std::static_pointer_cast<const DenseTable>(cached);
  if (g.order() > limit) throw OrderExceedsLimit("group too large to tabulate");

  auto table = std::make_shared<DenseTable>();
  DenseTable& t = *table;
  const auto& elems = g.elements(limit);
  t.n_ = elems.size();
  if (t.n_ > 65535) throw OrderExceedsLimit("element index overflow");
  t.degree_ = g.degree();
  t.perms_ = elems;

  std::unordered_map<Perm, EltIndex, PermHash> pos;
  pos.reserve(t.n_ * 2);
  for (std::size_t i = 0; i < t.n_; ++i) pos.emplace(elems[i], static_cast<EltIndex>(i));

  t.mul_.resize(t.n_ * t.n_);
  for (std::size_t i = 0; i < t.n_; ++i)
    for (std::size_t j = 0; j < t.n_; ++j)
      t.mul_[i * t.n_ + j] = pos.at(elems[i] * elems[j]);

  for (const Perm& s : g.generators()) {
    EltIndex idx = pos.at(s);
    if (idx != 0) t.gens_.push_back(idx);
  }
  if (t.gens_.empty()) t.gens_.push_back(0);

  t.init_tables();
  t.init_classes();
  g.dense_cache_put(table);
  return table;
}

DenseTable DenseTable::from_raw(std::size_t n, std::vector<EltIndex> table) {
  DenseTable t;
  t.n_ = n;
  t.mul_ = std::move(table);

  // Locate the identity and relabel it to index 0.
  std::size_t e = n;
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      if (t.mul_[i * n + j] != j) ok = false;
    if (ok) {
      e = i;
      break;
    }
  }
  if (e == n) throw InvalidParameter("raw table has no identity");
  if (e != 0) {
    auto relabel = [&](EltIndex x) -> EltIndex {
      if (x == e) return 0;
      if (x == 0) return static_cast<EltIndex>(e);
      return x;
    };
    std::vector<EltIndex> fixed(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        fixed[relabel(static_cast<EltIndex>(i)) * n + relabel(static_cast<EltIndex>(j))] =
            relabel(t.mul_[i * n + j]);
    t.mul_ = std::move(fixed);
  }

  t.init_tables();
  t.gens_ = t.greedy_generators();
  t.init_classes();
  return t;
}

void DenseTable::init_tables() {
  inv_.assign(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (mul_[i * n_ + j] == 0) {
        inv_[i] = static_cast<EltIndex>(j);
        break;
      }
  order_.assign(n_, 1);
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint32_t o = 1;
    EltIndex x = static_cast<EltIndex>(i);
    while (x != 0) {
      x = mul(x, static_cast<EltIndex>(i));
      ++o;
    }
    order_[i] = o;
  }
}

void DenseTable::init_classes() {
  class_of_.assign(n_, 0);
  std::vector<bool> assigned(n_, false);
  class_size_.clear();
  class_rep_.clear();
  for (std::size_t x = 0; x < n_; ++x) {
    if (assigned[x]) continue;
    EltIndex cls = static_cast<EltIndex>(class_size_.size());
    class_rep_.push_back(static_cast<EltIndex>(x));
    std::vector<EltIndex> orbit{static_cast<EltIndex>(x)};
    assigned[x] = true;
    class_of_[x] = cls;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t gi = 0; gi < n_; ++gi) {
        EltIndex y = conj(orbit[i], static_cast<EltIndex>(gi));
        if (!assigned[y]) {
          assigned[y] = true;
          class_of_[y] = cls;
          orbit.push_back(y);
        }
      }
    }
    class_size_.push_back(static_cast<std::uint32_t>(orbit.size()));
  }
}

std::optional<EltIndex> DenseTable::index_of(const Perm& p) const {
  auto it = std::lower_bound(perms_.begin(), perms_.end(), p);
  if (it == perms_.end() || !(*it == p)) return std::nullopt;
  return static_cast<EltIndex>(it - perms_.begin());
}

std::vector<EltIndex> DenseTable::closure(const std::vector<EltIndex>& seed) const {
  auto r = closure_capped(seed, n_);
  return *r;
}

std::optional<std::vector<EltIndex>> DenseTable::closure_capped(
    const std::vector<EltIndex>& seed, std::size_t cap) const {
  std::vector<bool> in(n_, false);
  std::vector<EltIndex> members{0};
  in[0] = true;
  for (EltIndex s : seed)
    if (!in[s]) {
      in[s] = true;
      members.push_back(s);
    }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (EltIndex s : seed) {
      EltIndex t = mul(members[i], s);
      if (!in[t]) {
        if (members.size() + 1 > cap) return std::nullopt;
        in[t] = true;
        members.push_back(t);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

DenseTable DenseTable::subgroup_table(const std::vector<EltIndex>& elems,
                                      std::vector<EltIndex>* orig) const {
  DenseTable t;
  t.n_ = elems.size();
  std::vector<int> local(n_, -1);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<int>(i);
  t.mul_.resize(t.n_ * t.n_);
  for (std::size_t i = 0; i < t.n_; ++i)
    for (std::size_t j = 0; j < t.n_; ++j) {
      int m = local[mul(elems[i], elems[j])];
      if (m < 0) throw InvalidParameter("index set is not closed under products");
      t.mul_[i * t.n_ + j] = static_cast<EltIndex>(m);
    }
  if (!perms_.empty()) {
    t.degree_ = degree_;
    t.perms_.reserve(t.n_);
    for (EltIndex e : elems) t.perms_.push_back(perms_[e]);
  }
  if (orig) *orig = elems;
  t.init_tables();
  t.gens_ = t.greedy_generators();
  t.init_classes();
  return t;
}

const std::vector<EltIndex>& DenseTable::greedy_generators() const {
  if (!greedy_.empty()) return greedy_;
  std::vector<EltIndex> gens;
  std::vector<std::size_t> prefix;
  std::size_t cur_order = 1;
  std::vector<bool> covered(n_, false);
  covered[0] = true;
  while (cur_order < n_) {
    std::size_t best_order = cur_order;
    EltIndex best = 0;
    std::vector<EltIndex> best_closure;
    for (std::size_t x = 1; x < n_; ++x) {
      if (covered[x]) continue;
      auto trial = gens;
      trial.push_back(static_cast<EltIndex>(x));
      auto cl = closure(trial);
      if (cl.size() > best_order) {
        best_order = cl.size();
        best = static_cast<EltIndex>(x);
        best_closure = std::move(cl);
        if (best_order == n_) break;
      }
    }
    gens.push_back(best);
    prefix.push_back(best_order);
    cur_order = best_order;
    std::fill(covered.begin(), covered.end(), false);
    for (EltIndex e : best_closure) covered[e] = true;
  }
  if (gens.empty()) {
    gens.push_back(0);
    prefix.push_back(1);
  }
  greedy_ = std::move(gens);
  greedy_prefix_ = std::move(prefix);
  return greedy_;
}

const std::vector<std::size_t>& DenseTable::greedy_prefix_orders() const {
  greedy_generators();
  return greedy_prefix_;
}

bool DenseTable::is_abelian() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (mul_[i * n_ + j] != mul_[j * n_ + i]) return false;
  return true;
}

unsigned long long DenseTable::exponent() const {
  unsigned long long e = 1;
  for (std::size_t i = 0; i < n_; ++i) e = std::lcm(e, (unsigned long long)order_[i]);
  return e;
}

std::vector<EltIndex> DenseTable::center() const {
  std::vector<EltIndex> z;
  for (std::size_t x = 0; x < n_; ++x) {
    bool central = true;
    for (EltIndex g : gens_)
      if (mul(static_cast<EltIndex>(x), g) != mul(g, static_cast<EltIndex>(x))) {
        central = false;
        break;
      }
    if (central) z.push_back(static_cast<EltIndex>(x));
  }
  return z;
}

std::vector<EltIndex> DenseTable::derived() const {
  // The set of all commutators is conjugation-invariant, so its closure is
  // already the (normal) derived subgroup.
  std::vector<bool> seen(n_, false);
  std::vector<EltIndex> comms;
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y) {
      EltIndex c = mul(mul(inv_[x], inv_[y]), mul(static_cast<EltIndex>(x), static_cast<EltIndex>(y)));
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return closure(comms);
}

std::vector<std::uint32_t> DenseTable::derived_series_sizes() const {
  std::vector<std::uint32_t> sizes{static_cast<std::uint32_t>(n_)};
  std::vector<EltIndex> cur(n_);
  std::iota(cur.begin(), cur.end(), 0);
  while (sizes.back() > 1) {
    // commutators within the current term
    std::vector<bool> seen(n_, false);
    std::vector<EltIndex> comms;
    for (EltIndex x : cur)
      for (EltIndex y : cur) {
        EltIndex c = mul(mul(inv_[x], inv_[y]), mul(x, y));
        if (!seen[c]) {
          seen[c] = true;
          comms.push_back(c);
        }
      }
    auto next = closure(comms);
    if (next.size() == cur.size()) break;
    sizes.push_back(static_cast<std::uint32_t>(next.size()));
    cur = std::move(next);
  }
  return sizes;
}

std::vector<std::uint32_t> DenseTable::lower_central_sizes() const {
  std::vector<std::uint32_t> sizes{static_cast<std::uint32_t>(n_)};
  std::vector<EltIndex> cur(n_);
  std::iota(cur.begin(), cur.end(), 0);
  while (sizes.back() > 1) {
    std::vector<bool> seen(n_, false);
    std::vector<EltIndex> comms;
    for (std::size_t x = 0; x < n_; ++x)
      for (EltIndex y : cur) {
        EltIndex c = mul(mul(inv_[x], inv_[y]), mul(static_cast<EltIndex>(x), y));
        if (!seen[c]) {
          seen[c] = true;
          comms.push_back(c);
        }
      }
    auto next = closure(comms);
    if (next.size() == cur.size()) break;
    sizes.push_back(static_cast<std::uint32_t>(next.size()));
    cur = std::move(next);
  }
  return sizes;
}

std::map<unsigned long long, std::size_t> DenseTable::spectrum() const {
  std::map<unsigned long long, std::size_t> spec;
  for (std::size_t i = 0; i < n_; ++i) ++spec[order_[i]];
  return spec;
}

std::map<unsigned, std::vector<unsigned>> DenseTable::abelian_invariants() const {
  std::map<unsigned, std::vector<unsigned>> out;
  std::vector<unsigned> primes;
  {
    std::size_t n = n_;
    for (unsigned p = 2; static_cast<unsigned long long>(p) * p <= n; ++p)
      if (n % p == 0) {
        primes.push_back(p);
        while (n % p == 0) n /= p;
      }
    if (n > 1) primes.push_back(static_cast<unsigned>(n));
  }
  for (unsigned p : primes) {
    // c_k = #{x : x^(p^k) = 1}; m_k = log_p(c_k / c_{k-1}) is the k-th part
    // of the conjugate partition, so the exponents are the conjugate of m.
    std::vector<unsigned> m;
    unsigned long long prev = 1;
    for (unsigned k = 1;; ++k) {
      unsigned long long pk = 1;
      for (unsigned i = 0; i < k; ++i) pk *= p;
      std::size_t count = 0;
      for (std::size_t x = 0; x < n_; ++x)
        if (pk % order_[x] == 0) ++count;
      if (count == prev) break;
      unsigned mk = 0;
      unsigned long long ratio = count / prev;
      while (ratio > 1) {
        ratio /= p;
        ++mk;
      }
      m.push_back(mk);
      prev = count;
    }
    std::vector<unsigned> lambda;
    for (unsigned j = 1; !m.empty() && j <= m.front(); ++j) {
      unsigned parts = 0;
      for (unsigned mk : m)
        if (mk >= j) ++parts;
      lambda.push_back(parts);
    }
    if (!lambda.empty()) out[p] = lambda;
  }
  return out;
}

void DenseTable::refine_class_keys() const {
  std::size_t nc = class_size_.size();
  class_key_.assign(nc, 0);

  // root counts for squares and cubes are class invariants
  std::vector<std::uint32_t> r2(n_, 0), r3(n_, 0);
  for (std::size_t y = 0; y < n_; ++y) {
    EltIndex y2 = mul(static_cast<EltIndex>(y), static_cast<EltIndex>(y));
    ++r2[y2];
    ++r3[mul(y2, static_cast<EltIndex>(y))];
  }

  for (std::size_t c = 0; c < nc; ++c) {
    EltIndex rep = class_rep_[c];
    std::uint64_t h = mix(0, order_[rep]);
    h = mix(h, class_size_[c]);
    h = mix(h, r2[rep]);
    h = mix(h, r3[rep]);
    class_key_[c] = h;
  }

  auto power_class = [&](EltIndex rep, unsigned k) {
    EltIndex x = 0;
    for (unsigned i = 0; i < k; ++i) x = mul(x, rep);
    return class_of_[x];
  };

  for (int round = 0; round < 2; ++round) {
    std::vector<std::uint64_t> next(nc);
    for (std::size_t c = 0; c < nc; ++c) {
      EltIndex rep = class_rep_[c];
      std::uint64_t h = class_key_[c];
      for (unsigned k : {2u, 3u, 5u, 7u}) h = mix(h, class_key_[power_class(rep, k)]);
      next[c] = h;
    }
    class_key_ = std::move(next);
  }

  // one centralizer-content round
  std::vector<std::uint64_t> next(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    EltIndex rep = class_rep_[c];
    std::vector<std::uint64_t> content;
    for (std::size_t y = 0; y < n_; ++y)
      if (mul(rep, static_cast<EltIndex>(y)) == mul(static_cast<EltIndex>(y), rep))
        content.push_back(class_key_[class_of_[y]]);
    std::sort(content.begin(), content.end());
    std::uint64_t h = class_key_[c];
    for (std::uint64_t v : content) h = mix(h, v);
    next[c] = h;
  }
  class_key_ = std::move(next);
}

std::uint64_t DenseTable::element_key(EltIndex i) const {
  if (class_key_.empty()) refine_class_keys();
  return class_key_[class_of_[i]];
}

const std::string& DenseTable::profile() const {
  if (!profile_.empty()) return profile_;
  std::string s;
  append_u64(s, n_);
  append_u64(s, exponent());
  auto z = center();
  append_u64(s, z.size());
  bool ab = is_abelian();
  s.push_back(ab ? 1 : 0);

  auto append_invariants = [&](const std::map<unsigned, std::vector<unsigned>>& inv) {
    append_u64(s, inv.size());
    for (const auto& [p, parts] : inv) {
      append_u64(s, p);
      append_u64(s, parts.size());
      for (unsigned v : parts) append_u64(s, v);
    }
  };

  if (ab) {
    append_invariants(abelian_invariants());
    profile_ = std::move(s);
    return profile_;
  }

  for (auto v : derived_series_sizes()) append_u64(s, v);
  append_u64(s, 0xfefe);
  for (auto v : lower_central_sizes()) append_u64(s, v);
  append_u64(s, 0xfdfd);

  // center and abelianization structure
  append_invariants(subgroup_table(center()).abelian_invariants());
  auto der = derived();
  {
    // quotient by the derived subgroup, as a raw coset table
    std::vector<int> coset(n_, -1);
    std::vector<EltIndex> reps;
    for (std::size_t x = 0; x < n_; ++x) {
      if (coset[x] >= 0) continue;
      int c = static_cast<int>(reps.size());
      reps.push_back(static_cast<EltIndex>(x));
      for (EltIndex d : der) coset[mul(static_cast<EltIndex>(x), d)] = c;
    }
    std::size_t q = reps.size();
    std::vector<EltIndex> qmul(q * q);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j)
        qmul[i * q + j] = static_cast<EltIndex>(coset[mul(reps[i], reps[j])]);
    append_invariants(DenseTable::from_raw(q, std::move(qmul)).abelian_invariants());
  }

  if (class_key_.empty()) refine_class_keys();
  std::vector<std::uint64_t> keys = class_key_;
  std::sort(keys.begin(), keys.end());
  append_u64(s, keys.size());
  for (auto k : keys) append_u64(s, k);

  profile_ = std::move(s);
  return profile_;
}

namespace {

// Backtracking generator-image search shared by dense_iso and
// dense_subgroup_copies. Calls `accept` for each monomorphism found
// (as the image tuple); stops early when accept returns false.
struct DenseSearch {
  const DenseTable& a;
  const DenseTable& b;
  std::vector<EltIndex> src_gens;
  std::vector<std::size_t> prefix_order;
  std::vector<std::vector<EltIndex>> pools;
  std::vector<EltIndex> chosen;
  // pair-closure scratch
  std::vector<std::uint32_t> stamp;
  std::uint32_t cur_stamp = 0;

  bool
  pairs_close_to(std::size_t depth, std::size_t want) {
    // closure of {(src_gens[i], chosen[i]) : i <= depth} inside a x b
    std::size_t nb = b.size();
    ++cur_stamp;
    std::vector<std::uint32_t> queue;
    auto code = [&](EltIndex x, EltIndex y) {
      return static_cast<std::uint32_t>(x) * static_cast<std::uint32_t>(nb) + y;
    };
    auto push = [&](EltIndex x, EltIndex y) -> bool {
      std::uint32_t cd = code(x, y);
      if (stamp[cd] == cur_stamp) return true;
      if (queue.size() + 1 > want) return false;
      stamp[cd] = cur_stamp;
      queue.push_back(cd);
      return true;
    };
    push(0, 0);
    for (std::size_t i = 0; i <= depth; ++i)
      if (!push(src_gens[i], chosen[i])) return false;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      EltIndex x = static_cast<EltIndex>(queue[i] / nb);
      EltIndex y = static_cast<EltIndex>(queue[i] % nb);
      for (std::size_t k = 0; k <= depth; ++k) {
        if (!push(a.mul(x, src_gens[k]), b.mul(y, chosen[k]))) return false;
      }
    }
    return queue.size() == want;
  }

  template <typename Accept>
  bool run(std::size_t depth, Accept&& accept) {
    if (depth == src_gens.size()) return accept(chosen);
    for (EltIndex cand : pools[depth]) {
      chosen[depth] = cand;
      if (pairs_close_to(depth, prefix_order[depth]))
        if (!run(depth + 1, accept)) return false;
    }
    return true;
  }
};

DenseSearch make_search(const DenseTable& a, const DenseTable& b, bool use_keys) {
  DenseSearch s{a, b, {}, {}, {}, {}, {}, 0};
  s.src_gens = a.greedy_generators();
  s.prefix_order = a.greedy_prefix_orders();
  s.pools.resize(s.src_gens.size());
  for (std::size_t i = 0; i < s.src_gens.size(); ++i) {
    EltIndex g = s.src_gens[i];
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (b.elt_order(static_cast<EltIndex>(y)) != a.elt_order(g)) continue;
      if (use_keys && b.element_key(static_cast<EltIndex>(y)) != a.element_key(g)) continue;
      s.pools[i].push_back(static_cast<EltIndex>(y));
    }
  }
  s.chosen.assign(s.src_gens.size(), 0);
  s.stamp.assign(a.size() * b.size(), 0);
  return s;
}

}  // namespace

std::optional<std::vector<EltIndex>> dense_iso(const DenseTable& a, const DenseTable& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.profile() != b.profile()) return std::nullopt;
  if (a.size() == 1) return std::vector<EltIndex>{};

  DenseSearch s = make_search(a, b, /*use_keys=*/true);
  std::optional<std::vector<EltIndex>> found;
  s.run(0, [&](const std::vector<EltIndex>& images) {
    if (b.closure(images).size() == b.size()) {
      found = images;
      return false;  // stop
    }
    return true;
  });
  return found;
}

bool dense_isomorphic(const DenseTable& a, const DenseTable& b) {
  return dense_iso(a, b).has_value();
}

std::vector<std::vector<EltIndex>> dense_subgroup_copies(const DenseTable& p,
                                                         const DenseTable& g) {
  std::vector<std::vector<EltIndex>> images;
  if (g.size() % p.size() != 0) return images;
  DenseSearch s = make_search(p, g, /*use_keys=*/false);
  s.run(0, [&](const std::vector<EltIndex>& tuple) {
    auto img = g.closure(tuple);
    if (img.size() == p.size() &&
        std::find(images.begin(), images.end(), img) == images.end())
      images.push_back(std::move(img));
    return true;  // keep enumerating
  });
  std::sort(images.begin(), images.end());
  return images;
}

}  // namespace coverforge
