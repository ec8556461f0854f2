#include "coverforge/group.hpp"

#include <algorithm>
#include <unordered_set>

#include "coverforge/errors.hpp"

namespace coverforge {

namespace detail {

namespace {

void recompute_orbit(unsigned degree, StabChain::Level& lev) {
  lev.orbit.clear();
  lev.orbit_pos.assign(degree, -1);
  lev.transversal.clear();
  lev.orbit.push_back(lev.base);
  lev.orbit_pos[lev.base] = 0;
  lev.transversal.push_back(Perm::identity(degree));
  for (std::size_t idx = 0; idx < lev.orbit.size(); ++idx) {
    for (const Perm& s : lev.gens) {
      Point q = s[lev.orbit[idx]];
      if (lev.orbit_pos[q] < 0) {
        lev.orbit_pos[q] = static_cast<int>(lev.orbit.size());
        lev.orbit.push_back(q);
        lev.transversal.push_back(lev.transversal[idx] * s);
      }
    }
  }
}

Point smallest_moved_point(const Perm& g) {
  for (Point x = 0; x < g.degree(); ++x)
    if (g[x] != x) return x;
  throw InvalidParameter("identity has no moved point");
}

}  // namespace

std::pair<Perm, std::size_t> StabChain::sift(const Perm& g) const {
  Perm h = g;
  for (std::size_t lev = 0; lev < levels.size(); ++lev) {
    const Level& L = levels[lev];
    Point p = h[L.base];
    int pos = L.orbit_pos[p];
    if (pos < 0) return {h, lev};
    h = h * L.transversal[pos].inverse();
  }
  return {h, levels.size()};
}

bool StabChain::contains(const Perm& g) const {
  auto [res, lev] = sift(g);
  return lev == levels.size() && res.is_identity();
}

StabChain build_chain(unsigned degree, const std::vector<Perm>& gens) {
  StabChain chain;
  chain.degree = degree;

  auto add_level = [&](Point base) {
    StabChain::Level lev;
    lev.base = base;
    chain.levels.push_back(std::move(lev));
  };

  // Place each input generator at every level whose base prefix it fixes.
  for (const Perm& g : gens) {
    if (g.is_identity()) continue;
    std::size_t j = 0;
    while (j < chain.levels.size() && g[chain.levels[j].base] == chain.levels[j].base)
      ++j;
    if (j == chain.levels.size()) add_level(smallest_moved_point(g));
    for (std::size_t k = 0; k <= j; ++k) chain.levels[k].gens.push_back(g);
  }

  if (chain.levels.empty()) return chain;  // trivial group

  for (auto& lev : chain.levels) recompute_orbit(degree, lev);

  // Bottom-up verification of the strong generating property by sifting
  // Schreier generators; deterministic throughout.
  std::size_t i = chain.levels.size() - 1;
  while (true) {
    StabChain::Level& L = chain.levels[i];
    bool dirty = false;
    for (std::size_t idx = 0; idx < L.orbit.size() && !dirty; ++idx) {
      for (const Perm& s : L.gens) {
        Point q = s[L.orbit[idx]];
        Perm schreier = L.transversal[idx] * s *
                        L.transversal[static_cast<std::size_t>(L.orbit_pos[q])].inverse();
        if (schreier.is_identity()) continue;
        // Sift from level i+1.
        Perm h = schreier;
        std::size_t j = i + 1;
        while (j < chain.levels.size()) {
          const StabChain::Level& M = chain.levels[j];
          int pos = M.orbit_pos[h[M.base]];
          if (pos < 0) break;
          h = h * M.transversal[static_cast<std::size_t>(pos)].inverse();
          ++j;
        }
        if (h.is_identity()) continue;
        if (j == chain.levels.size()) add_level(smallest_moved_point(h));
        for (std::size_t k = i + 1; k <= j; ++k) {
          chain.levels[k].gens.push_back(h);
          recompute_orbit(degree, chain.levels[k]);
        }
        i = j;
        dirty = true;
        break;
      }
    }
    if (dirty) continue;
    if (i == 0) break;
    --i;
  }

  chain.order = 1;
  for (const auto& lev : chain.levels) {
    unsigned long long next;
    if (__builtin_mul_overflow(chain.order,
                               static_cast<unsigned long long>(lev.orbit.size()), &next))
      throw OrderExceedsLimit("group order exceeds 2^64");
    chain.order = next;
  }
  return chain;
}

}  // namespace detail

struct Group::Cache {
  std::mutex mu;
  std::shared_ptr<const detail::StabChain> chain;
  std::shared_ptr<const std::vector<Perm>> elements;
  std::shared_ptr<void> dense;
};

std::shared_ptr<void> Group::dense_cache_get() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->dense;
}

void Group::dense_cache_put(std::shared_ptr<void> v) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->dense) cache_->dense = std::move(v);
}

Group::Group(std::vector<Perm> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw InvalidParameter("generator list must be non-empty");
  degree_ = gens_.front().degree();
  for (const Perm& g : gens_)
    if (g.degree() != degree_)
      throw DegreeMismatch("generators must share a common degree");
  cache_ = std::make_shared<Cache>();
}

Group Group::trivial() { return Group({Perm::identity(1)}); }

const detail::StabChain& Group::chain() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->chain)
    cache_->chain =
        std::make_shared<const detail::StabChain>(detail::build_chain(degree_, gens_));
  return *cache_->chain;
}

unsigned long long Group::order() const { return chain().order; }

bool Group::contains(const Perm& g) const {
  if (g.degree() != degree_)
    throw DegreeMismatch("membership test requires matching degree");
  return chain().contains(g);
}

const std::vector<Perm>& Group::elements(std::size_t limit) const {
  if (order() > limit) throw OrderExceedsLimit("group order exceeds element limit");
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->elements) return *cache_->elements;
  }
  std::vector<Perm> elems;
  std::unordered_set<Perm, PermHash> seen;
  elems.push_back(Perm::identity(degree_));
  seen.insert(elems.front());
  for (std::size_t idx = 0; idx < elems.size(); ++idx) {
    for (const Perm& s : gens_) {
      Perm t = elems[idx] * s;
      if (seen.insert(t).second) elems.push_back(std::move(t));
    }
  }
  std::sort(elems.begin(), elems.end());
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->elements)
    cache_->elements = std::make_shared<const std::vector<Perm>>(std::move(elems));
  return *cache_->elements;
}

std::vector<Point> Group::orbit(Point x) const {
  std::vector<Point> orb{x};
  std::vector<bool> seen(degree_, false);
  seen[x] = true;
  for (std::size_t idx = 0; idx < orb.size(); ++idx) {
    for (const Perm& s : gens_) {
      Point q = s[orb[idx]];
      if (!seen[q]) {
        seen[q] = true;
        orb.push_back(q);
      }
    }
  }
  return orb;
}

bool Group::is_transitive() const { return orbit(0).size() == degree_; }

Group generated_group(unsigned degree, std::vector<Perm> gens) {
  if (gens.empty()) return Group({Perm::identity(degree)});
  return Group(std::move(gens));
}

Group direct_product(const Group& a, const Group& b) {
  unsigned da = a.degree(), db = b.degree();
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) gens.push_back(g.extended(da + db));
  for (const Perm& g : b.generators()) {
    std::vector<Point> img(da + db);
    for (Point x = 0; x < da; ++x) img[x] = x;
    for (Point x = 0; x < db; ++x) img[da + x] = static_cast<Point>(da + g[x]);
    gens.emplace_back(std::move(img));
  }
  return Group(std::move(gens));
}

Group normal_closure(const Group& g, const std::vector<Perm>& seed) {
  std::vector<Perm> gens;
  for (const Perm& s : seed)
    if (!s.is_identity()) gens.push_back(s);
  Group h = generated_group(g.degree(), gens);
  while (true) {
    std::vector<Perm> missing;
    for (const Perm& s : h.generators()) {
      for (const Perm& x : g.generators()) {
        Perm c = s.conjugated_by(x);
        if (!h.contains(c)) missing.push_back(std::move(c));
      }
    }
    if (missing.empty()) return h;
    gens = h.generators();
    gens.insert(gens.end(), missing.begin(), missing.end());
    h = Group(std::move(gens));
  }
}

Group commutator_subgroup(const Group& g, const Group& a, const Group& b) {
  std::vector<Perm> comms;
  for (const Perm& x : a.generators())
    for (const Perm& y : b.generators())
      comms.push_back(x.inverse() * y.inverse() * x * y);
  return normal_closure(g, comms);
}

Group derived_subgroup(const Group& g) { return commutator_subgroup(g, g, g); }

std::vector<unsigned long long> derived_series_orders(const Group& g) {
  std::vector<unsigned long long> orders{g.order()};
  Group cur = g;
  while (orders.back() > 1) {
    Group next = derived_subgroup(cur);
    if (next.order() == orders.back()) break;  // perfect tail
    orders.push_back(next.order());
    cur = std::move(next);
  }
  return orders;
}

bool is_soluble(const Group& g) { return derived_series_orders(g).back() == 1; }

bool is_perfect(const Group& g) {
  return derived_subgroup(g).order() == g.order();
}

bool is_nilpotent(const Group& g) {
  Group term = g;
  unsigned long long prev = 0;
  while (term.order() > 1 && term.order() != prev) {
    prev = term.order();
    term = commutator_subgroup(g, g, term);
  }
  return term.order() == 1;
}

bool is_normal_in(const Group& g, const Group& n) {
  if (n.degree() != g.degree()) return false;
  for (const Perm& s : n.generators())
    if (!g.contains(s)) return false;
  for (const Perm& s : n.generators())
    for (const Perm& x : g.generators())
      if (!n.contains(s.conjugated_by(x))) return false;
  return true;
}

Group quotient(const Group& g, const Group& n) {
  if (!is_normal_in(g, n)) throw NotNormal("subgroup is not normal");
  unsigned long long index = g.order() / n.order();
  if (index > kMaxDegree) throw OrderExceedsLimit("quotient degree exceeds maximum");

  // Left cosets xN, identified through membership of r_j^-1 * x in N.
  std::vector<Perm> reps{Perm::identity(g.degree())};
  auto coset_of = [&](const Perm& x) -> int {
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (n.contains(reps[j].inverse() * x)) return static_cast<int>(j);
    return -1;
  };
  for (std::size_t idx = 0; idx < reps.size(); ++idx) {
    for (const Perm& s : g.generators()) {
      Perm t = s * reps[idx];
      if (coset_of(t) < 0) reps.push_back(std::move(t));
    }
  }
  if (reps.size() != index) throw NotNormal("coset enumeration does not match index");

  std::vector<Perm> images;
  for (const Perm& s : g.generators()) {
    std::vector<Point> img(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      int j = coset_of(s * reps[i]);
      img[i] = static_cast<Point>(j);
    }
    images.emplace_back(std::move(img));
  }
  Group q = generated_group(static_cast<unsigned>(reps.size()), std::move(images));
  if (q.order() != index) throw NotNormal("quotient order mismatch");
  return q;
}

}  // namespace coverforge
