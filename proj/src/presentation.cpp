#include "coverforge/presentation.hpp"

#include <algorithm>
#include <deque>

#include "coverforge/errors.hpp"

namespace coverforge {

namespace {

// Todd-Coxeter coset enumeration over the trivial subgroup.
// Columns: generator i forward = 2i, inverse = 2i+1.
class CosetTable {
 public:
  CosetTable(unsigned ngens, std::size_t max_cosets)
      : ngens_(ngens), max_(max_cosets) {
    add_coset();  // coset 0 = the subgroup (trivial)
  }

  std::size_t cols() const { return 2 * ngens_; }

  int get(std::size_t c, std::size_t x) const { return tab_[c * cols() + x]; }
  void set(std::size_t c, std::size_t x, int d) { tab_[c * cols() + x] = d; }

  bool alive(std::size_t c) const { return rep_[c] == c; }

  std::size_t define(std::size_t c, std::size_t x) {
    if (live_ >= max_) throw CosetLimitExceeded("coset table limit reached");
    std::size_t d = add_coset();
    set(c, x, static_cast<int>(d));
    set(d, x ^ 1, static_cast<int>(c));
    return d;
  }

  std::size_t find(std::size_t c) {
    while (rep_[c] != c) {
      rep_[c] = rep_[rep_[c]];
      c = rep_[c];
    }
    return c;
  }

  // Merge coset classes, keeping the smaller index; queues induced
  // coincidences until exhausted.
  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::pair<std::size_t, std::size_t>> queue{{a, b}};
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      rep_[y] = x;
      --live_;
      for (std::size_t col = 0; col < cols(); ++col) {
        int d = get(y, col);
        if (d < 0) continue;
        std::size_t dd = find(static_cast<std::size_t>(d));
        int e = get(x, col);
        if (e < 0) {
          set(x, col, static_cast<int>(dd));
          set(dd, col ^ 1, static_cast<int>(x));
        } else {
          std::size_t ee = find(static_cast<std::size_t>(e));
          if (ee != dd) queue.push_back({ee, dd});
          // make sure the surviving row points at live cosets
          set(x, col, static_cast<int>(std::min(ee, dd)));
        }
      }
    }
  }

  // Scan relator word at coset c, defining cosets to fill gaps.
  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& word) {
    while (true) {
      c = find(c);
      std::size_t f = c;
      std::size_t i = 0;
      // forward
      while (i < word.size()) {
        int next = get(f, word[i]);
        if (next < 0) break;
        f = find(static_cast<std::size_t>(next));
        ++i;
      }
      if (i == word.size()) {
        if (f != c) coincidence(f, c);
        return;
      }
      // backward
      std::size_t b = c;
      std::size_t j = word.size();
      while (j > i) {
        int prev = get(b, word[j - 1] ^ 1);
        if (prev < 0) break;
        b = find(static_cast<std::size_t>(prev));
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        // deduction closes the gap
        set(f, word[i], static_cast<int>(b));
        set(b, word[i] ^ 1, static_cast<int>(f));
        return;
      }
      define(f, word[i]);
    }
  }

  std::size_t live_count() const { return live_; }
  std::size_t total() const { return rep_.size(); }

 private:
  std::size_t add_coset() {
    std::size_t idx = rep_.size();
    rep_.push_back(idx);
    tab_.resize(tab_.size() + cols(), -1);
    ++live_;
    return idx;
  }

  unsigned ngens_;
  std::size_t max_;
  std::size_t live_ = 0;
  std::vector<int> tab_;
  std::vector<std::size_t> rep_;
};

}  // namespace

Group from_presentation(const Presentation& pres, std::size_t max_cosets) {
  if (pres.generator_count == 0) throw InvalidParameter("presentation needs generators");
  if (pres.relators.empty())
    throw InvalidParameter("finite realization needs at least one relator");

  // translate to column words
  std::vector<std::vector<std::size_t>> words;
  for (const auto& rel : pres.relators) {
    std::vector<std::size_t> w;
    for (int s : rel) {
      if (s == 0 || static_cast<unsigned>(std::abs(s)) > pres.generator_count)
        throw InvalidParameter("relator refers to an unknown generator");
      w.push_back(s > 0 ? 2 * (s - 1) : 2 * (-s - 1) + 1);
    }
    if (!w.empty()) words.push_back(std::move(w));
  }

  CosetTable tab(pres.generator_count, max_cosets);

  // systematic strategy: process live cosets in definition order
  for (std::size_t c = 0; c < tab.total(); ++c) {
    if (!tab.alive(c)) continue;
    for (const auto& w : words) {
      if (!tab.alive(c)) break;
      tab.scan_and_fill(c, w);
    }
    // fill remaining empty entries so every coset row is total
    if (tab.alive(c))
      for (std::size_t col = 0; col < tab.cols(); ++col)
        if (tab.alive(c) && tab.get(c, col) < 0) tab.define(c, col);
  }

  // compact live cosets and build the regular action
  std::vector<int> newid(tab.total(), -1);
  std::vector<std::size_t> live;
  for (std::size_t c = 0; c < tab.total(); ++c)
    if (tab.alive(c)) {
      newid[c] = static_cast<int>(live.size());
      live.push_back(c);
    }
  std::size_t n = live.size();
  if (n > kMaxDegree) throw CosetLimitExceeded("regular degree exceeds maximum");

  std::vector<Perm> gens;
  for (unsigned g = 0; g < pres.generator_count; ++g) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) {
      int d = tab.get(live[i], 2 * g);
      std::size_t dd = tab.find(static_cast<std::size_t>(d));
      img[i] = static_cast<Point>(newid[dd]);
    }
    gens.emplace_back(std::move(img));
  }
  Group result = generated_group(static_cast<unsigned>(n), std::move(gens));
  if (result.order() != n)
    throw CosetLimitExceeded("coset table closed on a non-regular action");
  return result;
}

}  // namespace coverforge
