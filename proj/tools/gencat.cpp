// Offline small-groups catalog generator.
//
// Enumerates all groups of each order up to a bound through elementary
// abelian extensions: every soluble group has a minimal normal subgroup
// V = (Z_p)^d on which the quotient Q acts irreducibly, so running over
// all Q of order n/p^d, all irreducible actions and all 2-cohomology
// classes (split only, when gcd(p, |Q|) = 1) reaches every group. A5 is
// added by hand at order 60. Results are deduplicated up to isomorphism
// and checked against the published group counts before anything is
// written.
//
// p-groups only need the d = 1 branch (any central subgroup of order p).

#include <algorithm>
#include <chrono>
#include <cstring>
#include <iostream>
#include <map>
#include <numeric>
#include <fstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "coverforge/catalog.hpp"
#include "coverforge/constructors.hpp"
#include "coverforge/dense.hpp"
#include "coverforge/errors.hpp"

using namespace coverforge;

namespace {

// published number of groups per order (A000001)
const std::map<unsigned, std::size_t> kGroupCounts = {
    {1, 1},   {2, 1},   {3, 1},   {4, 2},   {5, 1},   {6, 2},   {7, 1},
    {8, 5},   {9, 2},   {10, 2},  {11, 1},  {12, 5},  {13, 1},  {14, 2},
    {15, 1},  {16, 14}, {17, 1},  {18, 5},  {19, 1},  {20, 5},  {21, 2},
    {22, 2},  {23, 1},  {24, 15}, {25, 2},  {26, 2},  {27, 5},  {28, 4},
    {29, 1},  {30, 4},  {31, 1},  {32, 51}, {33, 1},  {34, 2},  {35, 1},
    {36, 14}, {37, 1},  {38, 2},  {39, 2},  {40, 14}, {41, 1},  {42, 6},
    {43, 1},  {44, 4},  {45, 2},  {46, 2},  {47, 1},  {48, 52}, {49, 2},
    {50, 5},  {51, 1},  {52, 5},  {53, 1},  {54, 15}, {55, 2},  {56, 13},
    {57, 2},  {58, 2},  {59, 1},  {60, 13}, {61, 1},  {62, 2},  {63, 4},
    {64, 267},{65, 1},  {66, 4},  {67, 1},  {68, 5},  {69, 1},  {70, 4},
    {71, 1},  {72, 50}, {73, 1},  {74, 2},  {75, 3},  {76, 4},  {77, 1},
    {78, 6},  {79, 1},  {80, 52}, {81, 15}, {82, 2},  {83, 1},  {84, 15},
    {85, 1},  {86, 2},  {87, 1},  {88, 12}, {89, 1},  {90, 10}, {91, 1},
    {92, 4},  {93, 2},  {94, 2},  {95, 1},  {96, 231},{97, 1},  {98, 5},
    {99, 2},  {100, 16},{243, 67}};

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---- small matrices over F_p ----

struct Mat {
  unsigned d = 0, p = 2;
  std::array<std::uint8_t, 36> e{};  // row-major, up to 6x6

  std::uint8_t at(unsigned r, unsigned c) const { return e[r * d + c]; }
  std::uint8_t& at(unsigned r, unsigned c) { return e[r * d + c]; }

  static Mat identity(unsigned d, unsigned p) {
    Mat m;
    m.d = d;
    m.p = p;
    for (unsigned i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
  }

  Mat operator*(const Mat& o) const {
    Mat r;
    r.d = d;
    r.p = p;
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j) {
        unsigned s = 0;
        for (unsigned k = 0; k < d; ++k) s += at(i, k) * o.at(k, j);
        r.at(i, j) = static_cast<std::uint8_t>(s % p);
      }
    return r;
  }

  bool operator==(const Mat& o) const {
    return d == o.d && std::equal(e.begin(), e.begin() + d * d, o.e.begin());
  }

  // vector index encoded base p, digit i = coordinate i
  unsigned apply(unsigned v) const {
    unsigned digits[6];
    for (unsigned i = 0; i < d; ++i) {
      digits[i] = v % p;
      v /= p;
    }
    unsigned out = 0;
    for (unsigned i = d; i-- > 0;) {
      unsigned s = 0;
      for (unsigned j = 0; j < d; ++j) s += at(i, j) * digits[j];
      out = out * p + (s % p);
    }
    return out;
  }

  unsigned order() const {
    Mat id = identity(d, p);
    Mat x = *this;
    unsigned o = 1;
    while (!(x == id)) {
      x = x * *this;
      ++o;
      if (o > 10000) throw Error("matrix order runaway");
    }
    return o;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (unsigned i = 0; i < d * d; ++i) {
      h ^= e[i];
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct MatHash {
  std::size_t operator()(const Mat& m) const { return m.hash(); }
};

// all invertible d x d matrices over F_p (feasible sizes only)
std::vector<Mat> enumerate_gl(unsigned d, unsigned p) {
  unsigned long long total = 1;
  for (unsigned i = 0; i < d * d; ++i) total *= p;
  if (total > (1u << 21)) throw Error("GL enumeration out of range");
  std::vector<Mat> out;
  for (unsigned long long code = 0; code < total; ++code) {
    Mat m;
    m.d = d;
    m.p = p;
    unsigned long long c = code;
    for (unsigned i = 0; i < d * d; ++i) {
      m.e[i] = static_cast<std::uint8_t>(c % p);
      c /= p;
    }
    // invertibility via Gaussian elimination
    Mat g = m;
    bool invertible = true;
    for (unsigned col = 0; col < d && invertible; ++col) {
      unsigned pivot = col;
      while (pivot < d && g.at(pivot, col) == 0) ++pivot;
      if (pivot == d) {
        invertible = false;
        break;
      }
      if (pivot != col)
        for (unsigned j = 0; j < d; ++j) std::swap(g.at(pivot, j), g.at(col, j));
      // normalize and eliminate below
      unsigned inv = 1;
      for (unsigned t = 1; t < p; ++t)
        if ((g.at(col, col) * t) % p == 1) inv = t;
      for (unsigned j = 0; j < d; ++j)
        g.at(col, j) = static_cast<std::uint8_t>((g.at(col, j) * inv) % p);
      for (unsigned r = col + 1; r < d; ++r) {
        unsigned f = g.at(r, col);
        if (!f) continue;
        for (unsigned j = 0; j < d; ++j)
          g.at(r, j) =
              static_cast<std::uint8_t>((g.at(r, j) + (p - f) * g.at(col, j)) % p);
      }
    }
    if (invertible) out.push_back(m);
  }
  return out;
}

// dimensions of irreducible F_p-modules of a cyclic group of order c
std::vector<unsigned> cyclic_irreducible_dims(unsigned c, unsigned p) {
  while (c % p == 0) c /= p;  // the p-part acts trivially on irreducibles
  std::vector<unsigned> dims{1};
  for (unsigned e = 2; e <= c; ++e) {
    if (c % e != 0) continue;
    unsigned o = 1;
    unsigned long long x = p % e;
    while (x != 1) {
      x = (x * p) % e;
      ++o;
    }
    dims.push_back(o);
  }
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  return dims;
}

// ---- irreducible actions of Q on F_p^d ----

struct Action {
  std::vector<Mat> by_element;  // indexed by Q element
};

std::vector<Action> irreducible_actions(const DenseTable& q, unsigned d, unsigned p) {
  std::size_t m = q.size();
  // cyclic groups admit an arithmetic dimension test
  if (q.exponent() == m) {
    auto dims = cyclic_irreducible_dims(static_cast<unsigned>(m), p);
    if (std::find(dims.begin(), dims.end(), d) == dims.end()) return {};
  }
  std::vector<Mat> gl = enumerate_gl(d, p);
  std::unordered_map<Mat, unsigned, MatHash> gl_index;
  for (unsigned i = 0; i < gl.size(); ++i) gl_index.emplace(gl[i], i);

  std::vector<EltIndex> gens = q.greedy_generators();
  std::vector<std::vector<unsigned>> pools(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    unsigned want = q.elt_order(gens[i]);
    for (unsigned gi = 0; gi < gl.size(); ++gi)
      if (want % gl[gi].order() == 0) pools[i].push_back(gi);
  }

  std::vector<Action> found;
  std::vector<unsigned> chosen(gens.size(), 0);

  // pair closure of {(gens[i], gl[chosen[i]])} capped at |Q|
  auto graph_of = [&](std::size_t depth) -> std::optional<std::vector<Mat>> {
    std::vector<std::pair<EltIndex, Mat>> pairs{{0, Mat::identity(d, p)}};
    std::unordered_map<EltIndex, Mat> seen;
    seen.emplace(0, Mat::identity(d, p));
    bool contradiction = false;
    for (std::size_t i = 0; i <= depth && !contradiction; ++i) {
      EltIndex x = gens[i];
      Mat mx = gl[chosen[i]];
      auto it = seen.find(x);
      if (it == seen.end()) {
        seen.emplace(x, mx);
        pairs.push_back({x, mx});
      } else if (!(it->second == mx)) {
        contradiction = true;
      }
    }
    for (std::size_t head = 0; head < pairs.size() && !contradiction; ++head) {
      for (std::size_t i = 0; i <= depth; ++i) {
        EltIndex y = q.mul(pairs[head].first, gens[i]);
        Mat my = pairs[head].second * gl[chosen[i]];
        auto it = seen.find(y);
        if (it == seen.end()) {
          seen.emplace(y, my);
          pairs.push_back({y, my});
        } else if (!(it->second == my)) {
          contradiction = true;
          break;
        }
      }
    }
    if (contradiction) return std::nullopt;
    if (depth + 1 == gens.size() && pairs.size() == m) {
      std::vector<Mat> map(m);
      for (auto& [x, mx] : pairs) map[x] = mx;
      return map;
    }
    return std::vector<Mat>{};  // consistent so far
  };

  auto irreducible = [&](const std::vector<Mat>& gens_mats) {
    unsigned vol = 1;
    for (unsigned i = 0; i < d; ++i) vol *= p;
    for (unsigned v = 1; v < vol; ++v) {
      // additive and action closure from v
      std::vector<bool> in(vol, false);
      std::vector<unsigned> span{0, v};
      in[0] = in[v] = true;
      for (std::size_t h = 0; h < span.size(); ++h) {
        for (const Mat& g : gens_mats) {
          unsigned w = g.apply(span[h]);
          if (!in[w]) {
            in[w] = true;
            span.push_back(w);
          }
        }
        // close under addition with all current members
        for (std::size_t k = 0; k < span.size(); ++k) {
          unsigned s = 0;
          unsigned a = span[h], b2 = span[k];
          unsigned scale = 1;
          for (unsigned i = 0; i < d; ++i) {
            s += scale * ((a % p + b2 % p) % p);
            a /= p;
            b2 /= p;
            scale *= p;
          }
          if (!in[s]) {
            in[s] = true;
            span.push_back(s);
          }
        }
      }
      if (span.size() != vol) return false;  // proper invariant subspace
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t depth) -> void {
    for (unsigned cand : pools[depth]) {
      chosen[depth] = cand;
      auto graph = graph_of(depth);
      if (!graph) continue;
      if (depth + 1 < gens.size()) {
        self(self, depth + 1);
        continue;
      }
      if (graph->empty()) continue;  // tuple closed on a proper subgroup
      std::vector<Mat> gens_mats;
      for (std::size_t i = 0; i < gens.size(); ++i) gens_mats.push_back(gl[chosen[i]]);
      if (d > 1 && !irreducible(gens_mats)) continue;
      found.push_back(Action{std::move(*graph)});
    }
  };
  rec(rec, 0);
  return found;
}

// ---- GF(p) linear algebra for 2-cohomology ----

struct Echelon {
  unsigned p;
  std::size_t vars;
  std::vector<std::vector<std::uint8_t>> rows;   // leading coefficient 1
  std::vector<std::size_t> pivot;                // parallel to rows
  std::vector<int> pivot_row;                    // var -> row id or -1

  Echelon(unsigned p_, std::size_t v) : p(p_), vars(v), pivot_row(v, -1) {}

  // leading-term reduction; returns the leading index or vars when the
  // vector reduces to zero
  std::size_t reduce(std::vector<std::uint8_t>& v) const {
    std::size_t lead = 0;
    while (lead < vars) {
      while (lead < vars && v[lead] == 0) ++lead;
      if (lead == vars) return vars;
      int r = pivot_row[lead];
      if (r < 0) return lead;
      std::uint8_t c = v[lead];
      const auto& row = rows[static_cast<std::size_t>(r)];
      for (std::size_t i = lead; i < vars; ++i)
        v[i] = static_cast<std::uint8_t>((v[i] + (p - c) * row[i]) % p);
    }
    return vars;
  }

  bool insert(std::vector<std::uint8_t> v) {
    std::size_t lead = reduce(v);
    if (lead == vars) return false;
    unsigned inv = 1;
    for (unsigned t = 1; t < p; ++t)
      if ((v[lead] * t) % p == 1) inv = t;
    if (inv != 1)
      for (std::size_t i = lead; i < vars; ++i)
        v[i] = static_cast<std::uint8_t>((v[i] * inv) % p);
    pivot_row[lead] = static_cast<int>(rows.size());
    rows.push_back(std::move(v));
    pivot.push_back(lead);
    return true;
  }
};

// GF(2) echelon on packed words
struct Echelon2 {
  std::size_t vars, words;
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::size_t> pivot;
  std::vector<int> pivot_row;

  explicit Echelon2(std::size_t v) : vars(v), words((v + 63) / 64), pivot_row(v, -1) {}

  static std::size_t lead_of(const std::vector<std::uint64_t>& v, std::size_t from_word) {
    for (std::size_t w = from_word; w < v.size(); ++w)
      if (v[w]) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w]));
    return SIZE_MAX;
  }

  std::size_t reduce(std::vector<std::uint64_t>& v) const {
    std::size_t lead = lead_of(v, 0);
    while (lead != SIZE_MAX) {
      int r = pivot_row[lead];
      if (r < 0) return lead;
      const auto& row = rows[static_cast<std::size_t>(r)];
      for (std::size_t w = lead / 64; w < v.size(); ++w) v[w] ^= row[w];
      lead = lead_of(v, lead / 64);
    }
    return SIZE_MAX;
  }

  bool insert(std::vector<std::uint64_t> v) {
    std::size_t lead = reduce(v);
    if (lead == SIZE_MAX) return false;
    pivot_row[lead] = static_cast<int>(rows.size());
    rows.push_back(std::move(v));
    pivot.push_back(lead);
    return true;
  }
};

// GF(2) specialization of the cohomology solver
std::vector<std::vector<std::uint8_t>> h2_representatives_gf2(const DenseTable& q,
                                                              const Action& act,
                                                              unsigned d) {
  std::size_t m = q.size();
  std::size_t vars = (m - 1) * (m - 1) * d;
  std::size_t words = (vars + 63) / 64;
  auto vid = [&](std::size_t x, std::size_t y, unsigned comp) {
    return ((x - 1) * (m - 1) + (y - 1)) * d + comp;
  };
  auto flip = [&](std::vector<std::uint64_t>& v, std::size_t i) { v[i >> 6] ^= 1ull << (i & 63); };

  Echelon2 relations(vars);
  std::vector<std::uint64_t> eq(words);
  for (std::size_t x = 1; x < m; ++x) {
    const Mat& mx = act.by_element[x];
    for (std::size_t y = 1; y < m; ++y) {
      EltIndex xy = q.mul(static_cast<EltIndex>(x), static_cast<EltIndex>(y));
      for (std::size_t z = 1; z < m; ++z) {
        EltIndex yz = q.mul(static_cast<EltIndex>(y), static_cast<EltIndex>(z));
        std::fill(eq.begin(), eq.end(), 0);
        for (unsigned c = 0; c < d; ++c) {
          for (unsigned j = 0; j < d; ++j)
            if (mx.at(c, j)) flip(eq, vid(y, z, j));
          if (xy != 0) flip(eq, vid(xy, z, c));
          if (yz != 0) flip(eq, vid(x, yz, c));
          flip(eq, vid(x, y, c));
        }
        relations.insert(eq);
      }
    }
  }

  // nullspace by back-substitution in descending pivot order
  std::vector<std::vector<std::uint64_t>> nullspace;
  {
    const auto& rows = relations.rows;
    const auto& piv = relations.pivot;
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return piv[a] > piv[b]; });
    std::vector<bool> is_pivot(vars, false);
    for (std::size_t pv : piv) is_pivot[pv] = true;
    for (std::size_t free = 0; free < vars; ++free) {
      if (is_pivot[free]) continue;
      std::vector<std::uint64_t> v(words, 0);
      flip(v, free);
      for (std::size_t r : order) {
        // the pivot bit of v is still clear here, so the parity is the
        // full dot product with the row tail
        const auto& row = rows[r];
        std::uint64_t total = 0;
        for (std::size_t w = 0; w < words; ++w) total += __builtin_popcountll(row[w] & v[w]);
        if (total & 1) flip(v, piv[r]);
      }
      nullspace.push_back(std::move(v));
    }
  }

  Echelon2 cobound(vars);
  for (std::size_t u = 1; u < m; ++u) {
    for (unsigned t = 0; t < d; ++t) {
      std::vector<std::uint64_t> v(words, 0);
      for (std::size_t x = 1; x < m; ++x) {
        const Mat& mx = act.by_element[x];
        for (std::size_t y = 1; y < m; ++y) {
          EltIndex xy = q.mul(static_cast<EltIndex>(x), static_cast<EltIndex>(y));
          for (unsigned c = 0; c < d; ++c) {
            unsigned val = 0;
            if (y == u) val ^= mx.at(c, t) & 1;
            if (xy == u && c == t) val ^= 1;
            if (x == u && c == t) val ^= 1;
            if (val) flip(v, vid(x, y, c));
          }
        }
      }
      cobound.insert(std::move(v));
    }
  }

  Echelon2 combined = cobound;
  std::vector<std::vector<std::uint64_t>> reps;
  for (auto& v : nullspace) {
    std::vector<std::uint64_t> copy = v;
    if (combined.insert(std::move(copy))) reps.push_back(v);
  }

  std::size_t k = reps.size();
  unsigned long long classes = 1;
  for (std::size_t i = 0; i < k; ++i) {
    classes *= 2;
    if (classes > 70000) throw Error("H^2 too large to enumerate");
  }
  std::vector<std::vector<std::uint8_t>> out;
  out.reserve(classes);
  for (unsigned long long mask = 0; mask < classes; ++mask) {
    std::vector<std::uint64_t> f(words, 0);
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1ull << i))
        for (std::size_t w = 0; w < words; ++w) f[w] ^= reps[i][w];
    std::vector<std::uint8_t> bytes(vars, 0);
    for (std::size_t i = 0; i < vars; ++i)
      bytes[i] = static_cast<std::uint8_t>((f[i >> 6] >> (i & 63)) & 1);
    out.push_back(std::move(bytes));
  }
  return out;
}

// representatives of H^2(Q, V) as normalized cocycle vectors
// var layout: f(x, y) for x, y in 1..m-1, d components each
std::vector<std::vector<std::uint8_t>> h2_representatives(const DenseTable& q,
                                                          const Action& act,
                                                          unsigned p, unsigned d) {
  if (p == 2) return h2_representatives_gf2(q, act, d);
  std::size_t m = q.size();
  std::size_t vars = (m - 1) * (m - 1) * d;
  auto vid = [&](std::size_t x, std::size_t y, unsigned comp) {
    return ((x - 1) * (m - 1) + (y - 1)) * d + comp;
  };

  Echelon cocycle_relations(p, vars);
  std::vector<std::uint8_t> eq(vars, 0);
  for (std::size_t x = 1; x < m; ++x) {
    const Mat& mx = act.by_element[x];
    for (std::size_t y = 1; y < m; ++y) {
      EltIndex xy = q.mul(static_cast<EltIndex>(x), static_cast<EltIndex>(y));
      for (std::size_t z = 1; z < m; ++z) {
        EltIndex yz = q.mul(static_cast<EltIndex>(y), static_cast<EltIndex>(z));
        // phi(x) f(y,z) - f(xy,z) + f(x,yz) - f(x,y) = 0
        std::fill(eq.begin(), eq.end(), 0);
        bool nontrivial = false;
        for (unsigned c = 0; c < d; ++c) {
          for (unsigned j = 0; j < d; ++j) {
            std::uint8_t coef = mx.at(c, j);
            if (!coef) continue;
            auto& slot = eq[vid(y, z, j)];
            slot = static_cast<std::uint8_t>((slot + coef) % p);
            nontrivial = true;
          }
          if (xy != 0) {
            auto& slot = eq[vid(xy, z, c)];
            slot = static_cast<std::uint8_t>((slot + p - 1) % p);
            nontrivial = true;
          }
          if (yz != 0) {
            auto& slot = eq[vid(x, yz, c)];
            slot = static_cast<std::uint8_t>((slot + 1) % p);
            nontrivial = true;
          }
          auto& slot = eq[vid(x, y, c)];
          slot = static_cast<std::uint8_t>((slot + p - 1) % p);
          nontrivial = true;
        }
        if (nontrivial) cocycle_relations.insert(eq);
      }
    }
  }

  // nullspace basis by back-substitution in descending pivot order
  std::vector<std::vector<std::uint8_t>> nullspace;
  {
    const auto& rows = cocycle_relations.rows;
    const auto& piv = cocycle_relations.pivot;
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return piv[a] > piv[b]; });
    std::vector<bool> is_pivot(vars, false);
    for (std::size_t pv : piv) is_pivot[pv] = true;
    for (std::size_t free = 0; free < vars; ++free) {
      if (is_pivot[free]) continue;
      std::vector<std::uint8_t> v(vars, 0);
      v[free] = 1;
      for (std::size_t r : order) {
        unsigned s = 0;
        const auto& row = rows[r];
        for (std::size_t i = piv[r] + 1; i < vars; ++i)
          if (row[i] && v[i]) s += row[i] * v[i];
        v[piv[r]] = static_cast<std::uint8_t>((p - s % p) % p);
      }
      nullspace.push_back(std::move(v));
    }
  }

  // coboundary span
  Echelon cobound(p, vars);
  for (std::size_t u = 1; u < m; ++u) {
    for (unsigned t = 0; t < d; ++t) {
      // c supported at u with value e_t; delta c(x,y) = phi(x)c(y) - c(xy) + c(x)
      std::vector<std::uint8_t> v(vars, 0);
      for (std::size_t x = 1; x < m; ++x) {
        const Mat& mx = act.by_element[x];
        for (std::size_t y = 1; y < m; ++y) {
          EltIndex xy = q.mul(static_cast<EltIndex>(x), static_cast<EltIndex>(y));
          unsigned val[6] = {0, 0, 0, 0, 0, 0};
          if (y == u)
            for (unsigned c = 0; c < d; ++c) val[c] += mx.at(c, t);
          if (xy == u) val[t] += p - 1;
          if (x == u) val[t] += 1;
          for (unsigned c = 0; c < d; ++c)
            if (val[c] % p)
              v[vid(x, y, c)] =
                  static_cast<std::uint8_t>((v[vid(x, y, c)] + val[c]) % p);
        }
      }
      cobound.insert(std::move(v));
    }
  }

  // quotient representatives: nullspace vectors independent modulo coboundaries
  Echelon combined = cobound;
  std::vector<std::vector<std::uint8_t>> reps;
  for (auto& v : nullspace) {
    std::vector<std::uint8_t> copy = v;
    if (combined.insert(std::move(copy))) reps.push_back(v);
  }

  // all F_p-combinations of the representatives
  std::size_t k = reps.size();
  unsigned long long classes = 1;
  for (std::size_t i = 0; i < k; ++i) {
    classes *= p;
    if (classes > 70000) throw Error("H^2 too large to enumerate");
  }
  std::vector<std::vector<std::uint8_t>> out;
  out.reserve(classes);
  std::vector<unsigned> lambda(k, 0);
  while (true) {
    std::vector<std::uint8_t> f(vars, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (!lambda[i]) continue;
      for (std::size_t j = 0; j < vars; ++j)
        f[j] = static_cast<std::uint8_t>((f[j] + lambda[i] * reps[i][j]) % p);
    }
    out.push_back(std::move(f));
    std::size_t pos = 0;
    while (pos < k && ++lambda[pos] == p) {
      lambda[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return out;
}

// ---- extension assembly ----

DenseTable build_extension(const DenseTable& q, const Action& act,
                           const std::vector<std::uint8_t>& f, unsigned p, unsigned d) {
  std::size_t m = q.size();
  unsigned vol = 1;
  for (unsigned i = 0; i < d; ++i) vol *= p;
  std::size_t n = vol * m;
  auto vid = [&](std::size_t x, std::size_t y, unsigned comp) {
    return ((x - 1) * (m - 1) + (y - 1)) * d + comp;
  };
  auto vadd = [&](unsigned a, unsigned b) {
    unsigned out = 0, scale = 1;
    for (unsigned i = 0; i < d; ++i) {
      out += scale * ((a % p + b % p) % p);
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  };

  std::vector<EltIndex> table(n * n);
  for (std::size_t v1 = 0; v1 < vol; ++v1)
    for (std::size_t q1 = 0; q1 < m; ++q1) {
      std::size_t a = v1 * m + q1;
      const Mat& mq1 = act.by_element[q1];
      for (std::size_t v2 = 0; v2 < vol; ++v2)
        for (std::size_t q2 = 0; q2 < m; ++q2) {
          std::size_t b = v2 * m + q2;
          unsigned v = vadd(static_cast<unsigned>(v1),
                            mq1.apply(static_cast<unsigned>(v2)));
          if (q1 != 0 && q2 != 0) {
            unsigned fv = 0, scale = 1;
            for (unsigned c = 0; c < d; ++c) {
              fv += scale * f[vid(q1, q2, c)];
              scale *= p;
            }
            v = vadd(v, fv);
          }
          EltIndex qq = q.mul(static_cast<EltIndex>(q1), static_cast<EltIndex>(q2));
          table[a * n + b] = static_cast<EltIndex>(v * m + qq);
        }
    }
  return DenseTable::from_raw(n, std::move(table));
}

// ---- per-order store with isomorphism rejection ----

struct PhaseTimers {
  double h2 = 0, build = 0, profile = 0, iso = 0;
  std::size_t extensions = 0;
};
PhaseTimers g_timers;

struct Ticker {
  double& slot;
  std::chrono::steady_clock::time_point start;
  explicit Ticker(double& s) : slot(s), start(std::chrono::steady_clock::now()) {}
  ~Ticker() {
    slot += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

struct Store {
  std::vector<DenseTable> groups;
  std::unordered_map<std::string, std::vector<std::size_t>> by_profile;

  bool add(DenseTable t) {
    ++g_timers.extensions;
    const std::string* key;
    {
      Ticker tick(g_timers.profile);
      key = &t.profile();
    }
    auto& bucket = by_profile[*key];
    {
      Ticker tick(g_timers.iso);
      for (std::size_t id : bucket)
        if (dense_isomorphic(groups[id], t)) return false;
    }
    bucket.push_back(groups.size());
    groups.push_back(std::move(t));
    return true;
  }
};

std::vector<std::pair<unsigned, unsigned>> prime_power_divisors(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> out;  // (p, d)
  for (unsigned p = 2; p <= n; ++p) {
    if (!is_prime(p) || n % p != 0) continue;
    unsigned pd = p, d = 1;
    while (n % pd == 0) {
      out.push_back({p, d});
      if (pd > n / p) break;
      pd *= p;
      ++d;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"small-groups catalog generator"};
  std::string out_path = "data/smallgroups.txt";
  std::string counts_path;
  unsigned max_order = 100;
  std::vector<unsigned> extra_orders;
  std::vector<unsigned> emit_orders;
  app.add_option("--out", out_path, "catalog output path");
  app.add_option("--counts", counts_path, "also write the expected-counts table");
  app.add_option("--max", max_order, "enumerate all orders up to this bound");
  app.add_option("--extra", extra_orders, "additional isolated orders (e.g. 243)");
  app.add_option("--emit", emit_orders, "restrict the output file to these orders");
  CLI11_PARSE(app, argc, argv);

  std::map<unsigned, Store> stores;
  std::vector<unsigned> targets;
  for (unsigned n = 1; n <= max_order; ++n) targets.push_back(n);
  for (unsigned n : extra_orders) targets.push_back(n);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  for (unsigned n : targets) {
    Store& store = stores[n];
    if (n == 1) {
      store.add(DenseTable::from_raw(1, {0}));
    } else if (is_prime(n)) {
      store.add(*DenseTable::of(cyclic(n), n + 1));
    } else {
      for (auto [p, d] : prime_power_divisors(n)) {
        // p-groups: any central subgroup of order p gives the d = 1 branch
        unsigned rest = n;
        while (rest % p == 0) rest /= p;
        if (rest == 1 && d > 1) continue;

        unsigned pd = 1;
        for (unsigned i = 0; i < d; ++i) pd *= p;
        unsigned m = n / pd;
        if (m == 1) continue;  // covered by the p-group d = 1 branch
        auto it = stores.find(m);
        if (it == stores.end()) throw Error("missing quotient order store");
        for (const DenseTable& q : it->second.groups) {
          for (const Action& act : irreducible_actions(q, d, p)) {
            if (q.size() % p == 0) {
              std::vector<std::vector<std::uint8_t>> reps;
              {
                Ticker tick(g_timers.h2);
                reps = h2_representatives(q, act, p, d);
              }
              for (const auto& f : reps) {
                std::optional<DenseTable> ext;
                {
                  Ticker tick(g_timers.build);
                  ext = build_extension(q, act, f, p, d);
                }
                store.add(std::move(*ext));
              }
            } else {
              std::vector<std::uint8_t> zero((q.size() - 1) * (q.size() - 1) * d, 0);
              std::optional<DenseTable> ext;
              {
                Ticker tick(g_timers.build);
                ext = build_extension(q, act, zero, p, d);
              }
              store.add(std::move(*ext));
            }
          }
        }
      }
      if (n == 60) store.add(*DenseTable::of(alt(5), 100));
    }

    auto expect = kGroupCounts.find(n);
    if (expect != kGroupCounts.end() && store.groups.size() != expect->second) {
      std::cerr << "count mismatch at order " << n << ": got " << store.groups.size()
                << ", expected " << expect->second << "\n";
      return 1;
    }
    std::cout << "order " << n << ": " << store.groups.size() << " group(s)"
              << "  [ext " << g_timers.extensions << ", h2 " << g_timers.h2
              << "s, build " << g_timers.build << "s, profile " << g_timers.profile
              << "s, iso " << g_timers.iso << "s]\n";
    g_timers = PhaseTimers{};
  }

  // deterministic ordering: cyclic first, then by profile bytes
  Catalog cat;
  for (unsigned n : targets) {
    if (!emit_orders.empty() &&
        std::find(emit_orders.begin(), emit_orders.end(), n) == emit_orders.end())
      continue;
    Store& store = stores[n];
    std::vector<std::size_t> ids(store.groups.size());
    std::iota(ids.begin(), ids.end(), 0);
    auto is_cyclic = [](const DenseTable& t) {
      for (std::size_t x = 0; x < t.size(); ++x)
        if (t.elt_order(static_cast<EltIndex>(x)) == t.size()) return true;
      return false;
    };
    std::stable_sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
      const DenseTable& ta = store.groups[a];
      const DenseTable& tb = store.groups[b];
      bool ca = is_cyclic(ta);
      bool cb = is_cyclic(tb);
      if (ca != cb) return ca;
      return ta.profile() < tb.profile();
    });
    unsigned index = 1;
    for (std::size_t id : ids) {
      const DenseTable& t = store.groups[id];
      CatalogEntry e;
      e.order = n;
      e.index = index++;
      e.degree = static_cast<unsigned>(t.size());
      for (EltIndex g : t.greedy_generators()) {
        std::vector<Point> img(t.size());
        for (std::size_t x = 0; x < t.size(); ++x)
          img[x] = static_cast<Point>(t.mul(static_cast<EltIndex>(x), g));
        e.generators.push_back(std::move(img));
      }
      if (is_cyclic(t)) e.label = "C" + std::to_string(n);
      cat.add(std::move(e));
    }
    cat.mark_complete(n);
  }
  save_catalog(cat, out_path);
  std::cout << "wrote " << out_path << "\n";

  if (!counts_path.empty()) {
    std::ofstream cf(counts_path);
    for (unsigned n : targets) {
      auto it = kGroupCounts.find(n);
      if (it != kGroupCounts.end())
        cf << "order " << n << " count " << it->second << "\n";
    }
    std::cout << "wrote " << counts_path << "\n";
  }
  return 0;
}
