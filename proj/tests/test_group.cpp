#include "doctest.h"

#include <unordered_set>

#include "coverforge/group.hpp"

using namespace coverforge;

namespace {

Perm cycle(unsigned degree, std::vector<Point> pts) {
  std::vector<Point> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < pts.size(); ++i)
    img[pts[i]] = pts[(i + 1) % pts.size()];
  return Perm(std::move(img));
}

Group symmetric(unsigned n) {
  std::vector<Point> full(n);
  for (unsigned i = 0; i < n; ++i) full[i] = static_cast<Point>(i);
  return Group({cycle(n, {0, 1}), Perm(std::vector<Point>(
                                      [&] {
                                        std::vector<Point> img(n);
                                        for (unsigned i = 0; i < n; ++i)
                                          img[i] = static_cast<Point>((i + 1) % n);
                                        return img;
                                      }()))});
}

// Chain-free closure used as the independent order oracle.
std::size_t brute_force_order(const Group& g, std::size_t cap) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> queue{Perm::identity(g.degree())};
  seen.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Perm& s : g.generators()) {
      Perm t = queue[i] * s;
      if (seen.size() > cap) return seen.size();
      if (seen.insert(t).second) queue.push_back(std::move(t));
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("orders of small symmetric groups") {
  CHECK(symmetric(3).order() == 6);
  CHECK(symmetric(4).order() == 24);
  CHECK(symmetric(5).order() == 120);
  CHECK(symmetric(8).order() == 40320);
}

TEST_CASE("chain order equals brute-force closure") {
  for (unsigned n = 2; n <= 6; ++n) {
    Group s = symmetric(n);
    CHECK(s.order() == brute_force_order(s, 3000));
  }
  Group d8({cycle(4, {0, 1, 2, 3}), Perm(std::vector<Point>{0, 3, 2, 1})});
  CHECK(d8.order() == 8);
  CHECK(d8.order() == brute_force_order(d8, 100));
}

TEST_CASE("membership via sifting") {
  Group s4 = symmetric(4);
  CHECK(s4.contains(cycle(4, {0, 2, 1, 3})));
  Group a4({cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})});
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.contains(cycle(4, {0, 1, 2, 3})));  // odd permutation
  CHECK(a4.contains(cycle(4, {0, 1}) * cycle(4, {2, 3})));
}

TEST_CASE("element enumeration is sorted and complete") {
  Group s3 = symmetric(3);
  const auto& elems = s3.elements(10);
  REQUIRE(elems.size() == 6);
  CHECK(std::is_sorted(elems.begin(), elems.end()));
  CHECK(elems.front().is_identity());
  CHECK_THROWS_AS(symmetric(5).elements(100), OrderExceedsLimit);
}

TEST_CASE("trivial group has degree 1") {
  Group t = Group::trivial();
  CHECK(t.order() == 1);
  CHECK(t.degree() == 1);
}

TEST_CASE("direct product multiplies orders on disjoint domains") {
  Group c2({cycle(2, {0, 1})});
  Group c3({cycle(3, {0, 1, 2})});
  Group p = direct_product(c2, c3);
  CHECK(p.degree() == 5);
  CHECK(p.order() == 6);
}

TEST_CASE("derived series of S4 descends to 1") {
  auto orders = derived_series_orders(symmetric(4));
  CHECK(orders == std::vector<unsigned long long>{24, 12, 4, 1});
  CHECK(is_soluble(symmetric(4)));
  CHECK_FALSE(is_nilpotent(symmetric(4)));
}

TEST_CASE("A5 is perfect and insoluble") {
  Group a5({cycle(5, {0, 1, 2}), cycle(5, {0, 1, 2, 3, 4})});
  CHECK(a5.order() == 60);
  CHECK(is_perfect(a5));
  CHECK_FALSE(is_soluble(a5));
}

TEST_CASE("quotient of cyclic six by order-three subgroup") {
  Group c6({cycle(6, {0, 1, 2, 3, 4, 5})});
  Group c3sub = generated_group(6, {cycle(6, {0, 2, 4}) * cycle(6, {1, 3, 5})});
  CHECK(c3sub.order() == 3);
  Group q = quotient(c6, c3sub);
  CHECK(q.order() == 2);
  CHECK(q.degree() == 2);
}

TEST_CASE("quotient rejects non-normal subgroups") {
  Group s3 = symmetric(3);
  Group flip = generated_group(3, {cycle(3, {0, 1})});
  CHECK_THROWS_AS(quotient(s3, flip), NotNormal);
}

TEST_CASE("normal closure of a transposition in S4 is S4") {
  Group s4 = symmetric(4);
  Group nc = normal_closure(s4, {cycle(4, {0, 1})});
  CHECK(nc.order() == 24);
}
