#include "doctest.h"

#include "coverforge/abelian.hpp"
#include "coverforge/constructors.hpp"
#include "coverforge/embed.hpp"

using namespace coverforge;

namespace {

Partition part(std::vector<unsigned> v) { return Partition::of(std::move(v)); }

}  // namespace

TEST_CASE("partition validation") {
  CHECK(part({3, 1, 1}).weight() == 5);
  CHECK(part({2, 1, 0, 0}).parts == std::vector<unsigned>{2, 1});
  CHECK_THROWS_AS(part({1, 2}), InvalidParameter);
}

TEST_CASE("componentwise embedding") {
  CHECK(abelian_embeds({2, part({2, 1})}, {2, part({3, 1})}));
  CHECK_FALSE(abelian_embeds({2, part({2, 2})}, {2, part({3, 1})}));
  CHECK_FALSE(abelian_embeds({2, part({1})}, {3, part({1})}));
  CHECK(abelian_embeds({2, part({})}, {3, part({1})}));  // trivial group
}

TEST_CASE("minimum abelian p-cover by slot maxima") {
  auto c = min_abelian_p_cover({{2, part({2})}, {2, part({1, 1})}});
  CHECK(c.partition == part({2, 1}));
  CHECK(c.order() == 8);

  auto single = min_abelian_p_cover({{3, part({2, 1})}});
  CHECK(single.partition == part({2, 1}));

  auto triple = min_abelian_p_cover({{2, part({3})}, {2, part({2, 1})}, {2, part({1, 1, 1})}});
  CHECK(triple.partition == part({3, 1, 1}));
}

TEST_CASE("minimality against exhaustive partition search") {
  // families of partitions of weight <= 5: the slot-max cover is the unique
  // weight-minimal dominating partition
  for (unsigned n : {3u, 4u, 5u}) {
    auto parts = partitions_of(n);
    std::vector<AbelianPGroup> family;
    for (const auto& p : parts) family.push_back({2, p});
    auto cover = min_abelian_p_cover(family);
    for (const auto& cand : partitions_of(cover.partition.weight() - 1)) {
      bool covers_all = true;
      for (const auto& m : family)
        if (!abelian_embeds(m, {2, cand})) {
          covers_all = false;
          break;
        }
      CHECK_FALSE(covers_all);
    }
  }
}

TEST_CASE("dirichlet f values") {
  CHECK(dirichlet_f(1) == 1);
  CHECK(dirichlet_f(2) == 3);
  CHECK(dirichlet_f(3) == 5);
  CHECK(dirichlet_f(12) == 35);
  // first ten terms
  std::vector<unsigned long long> expect{1, 3, 5, 8, 10, 14, 16, 20, 23, 27};
  for (unsigned n = 1; n <= 10; ++n) CHECK(dirichlet_f(n) == expect[n - 1]);
}

TEST_CASE("cover partition of all partitions of n") {
  CHECK(cover_partition_all(2) == part({2, 1}));
  CHECK(cover_partition_all(3) == part({3, 1, 1}));
  // f(n) equals the weight
  for (unsigned n = 1; n <= 40; ++n)
    CHECK(cover_partition_all(n).weight() == dirichlet_f(n));
  // brute force: slot maxima over the explicit partition list
  for (unsigned n = 1; n <= 12; ++n) {
    std::vector<AbelianPGroup> family;
    for (const auto& p : partitions_of(n)) family.push_back({2, p});
    CHECK(min_abelian_p_cover(family).partition == cover_partition_all(n));
  }
}

TEST_CASE("A(n) values") {
  CHECK(min_abelian_cover_order(30) == 30);
  CHECK(min_abelian_cover_order(4) == 8);
  CHECK(min_abelian_cover_order(12) == 24);
  CHECK(min_abelian_cover_order(1) == 1);
  // squarefree identity
  for (unsigned long long n : {2ull, 6ull, 10ull, 105ull, 210ull, 330ull})
    CHECK(min_abelian_cover_order(n) == n);
}

TEST_CASE("dirichlet gap stays bounded and f is monotone") {
  for (unsigned long long n : {10ull, 100ull, 1000ull, 50000ull})
    CHECK(std::abs(dirichlet_gap(n)) < 3.0);
  for (unsigned long long n = 1; n < 200; ++n)
    CHECK(dirichlet_f(n + 1) >= dirichlet_f(n) + 1);
}

TEST_CASE("realized abelian p-groups match the partition calculus") {
  Group g = realize_abelian_p_group({2, part({2, 1})});
  CHECK(g.order() == 8);
  CHECK(is_isomorphic(g, direct_product(cyclic(4), cyclic(2))));
}

TEST_CASE("nilpotent minimum cover of cyclic groups is the lcm") {
  Group c = min_nilpotent_cover({cyclic(12), cyclic(18)});
  CHECK(c.order() == 36);
  CHECK(is_isomorphic(c, cyclic(36)));
}

TEST_CASE("nilpotent cover with abelian sylow family") {
  Group c = min_nilpotent_cover({direct_product(cyclic(4), cyclic(2)), cyclic(8)});
  CHECK(c.order() == 16);
  CHECK(is_isomorphic(c, direct_product(cyclic(8), cyclic(2))));
}

TEST_CASE("non-nilpotent member is rejected") {
  CHECK_THROWS_AS(min_nilpotent_cover({sym(3)}), NotNilpotent);
}
