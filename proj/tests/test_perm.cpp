#include "doctest.h"

#include "coverforge/perm.hpp"

using namespace coverforge;

namespace {

// Deterministic pseudo-random permutations via Fisher-Yates with an LCG.
Perm scrambled(unsigned degree, std::uint64_t seed) {
  std::vector<Point> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  std::uint64_t s = seed * 6364136223846793005ull + 1442695040888963407ull;
  for (unsigned i = degree - 1; i > 0; --i) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    unsigned j = static_cast<unsigned>((s >> 33) % (i + 1));
    std::swap(img[i], img[j]);
  }
  return Perm(std::move(img));
}

}  // namespace

TEST_CASE("identity and basic composition") {
  Perm id = Perm::identity(5);
  CHECK(id.is_identity());
  Perm c(std::vector<Point>{1, 2, 3, 4, 0});
  CHECK((c * id) == c);
  CHECK((id * c) == c);
  CHECK(c.order() == 5);
  CHECK((c * c)[0] == 2);
}

TEST_CASE("inverse composes to identity") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Perm p = scrambled(12, seed);
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
  }
}

TEST_CASE("rejects non-bijections") {
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0, 1}), InvalidParameter);
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 3}), InvalidParameter);
}

TEST_CASE("degree mismatch rejected") {
  Perm a = Perm::identity(3);
  Perm b = Perm::identity(4);
  CHECK_THROWS_AS(a * b, DegreeMismatch);
}

TEST_CASE("order is lcm of cycle lengths") {
  // (0 1)(2 3 4): order 6
  Perm p(std::vector<Point>{1, 0, 3, 4, 2});
  CHECK(p.order() == 6);
}

TEST_CASE("extension fixes new points") {
  Perm p(std::vector<Point>{1, 0});
  Perm q = p.extended(4);
  CHECK(q.degree() == 4);
  CHECK(q[0] == 1);
  CHECK(q[2] == 2);
  CHECK(q[3] == 3);
}

TEST_CASE("conjugation relabels cycles") {
  Perm p(std::vector<Point>{1, 0, 2});  // (0 1)
  Perm h(std::vector<Point>{2, 1, 0});  // (0 2)
  Perm c = p.conjugated_by(h);          // (2 1)
  CHECK(c[1] == 2);
  CHECK(c[2] == 1);
  CHECK(c[0] == 0);
}
