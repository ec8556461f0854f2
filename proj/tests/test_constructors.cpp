#include "doctest.h"

#include "coverforge/constructors.hpp"
#include "coverforge/dense.hpp"
#include "coverforge/structure.hpp"

using namespace coverforge;

TEST_CASE("orders of the standard families") {
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic(12).order() == 12);
  CHECK(dihedral(10).order() == 10);
  CHECK(dihedral(8).order() == 8);
  CHECK(quaternion(8).order() == 8);
  CHECK(quaternion(16).order() == 16);
  CHECK(elementary_abelian(2, 3).order() == 8);
  CHECK(sym(4).order() == 24);
  CHECK(alt(5).order() == 60);
  CHECK(alt(4).order() == 12);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(cyclic(0), InvalidParameter);
  CHECK_THROWS_AS(dihedral(7), InvalidParameter);
  CHECK_THROWS_AS(dihedral(4), InvalidParameter);
  CHECK_THROWS_AS(quaternion(12), InvalidParameter);
  CHECK_THROWS_AS(elementary_abelian(4, 2), InvalidParameter);
  CHECK_THROWS_AS(semidihedral(8), InvalidParameter);
  CHECK_THROWS_AS(heisenberg(2), InvalidParameter);
  CHECK_THROWS_AS(psl2(32), UnsupportedField);
  CHECK_THROWS_AS(affine_frobenius(4, 5), InvalidParameter);
}

TEST_CASE("elementary abelian is a product of p-cycles") {
  Group e = elementary_abelian(2, 3);
  CHECK(e.degree() == 6);
  auto t = DenseTable::of(e, 100);
  CHECK(t->is_abelian());
  CHECK(t->exponent() == 2);
}

TEST_CASE("semidihedral structure") {
  Group sd16 = semidihedral(16);
  CHECK(sd16.order() == 16);
  CHECK(sd16.degree() == 8);
  auto t = DenseTable::of(sd16, 100);
  CHECK(t->center().size() == 2);

  // a*b has order 4
  Perm ab = sd16.generators()[0] * sd16.generators()[1];
  CHECK(ab.order() == 4);

  for (unsigned n : {32u, 64u}) {
    Group sd = semidihedral(n);
    CHECK(sd.order() == n);
    auto td = DenseTable::of(sd, 2048);
    CHECK(td->center().size() == 2);
    Perm prod = sd.generators()[0] * sd.generators()[1];
    CHECK(prod.order() == 4);
  }

  // not isomorphic to the dihedral group of the same order
  CHECK_FALSE(dense_isomorphic(*t, *DenseTable::of(dihedral(16), 100)));
  CHECK_FALSE(dense_isomorphic(*t, *DenseTable::of(quaternion(16), 100)));
}

TEST_CASE("heisenberg and modular groups of order 27") {
  Group h = heisenberg(3);
  Group m = modular_gp(3);
  CHECK(h.order() == 27);
  CHECK(m.order() == 27);
  auto th = DenseTable::of(h, 100);
  auto tm = DenseTable::of(m, 100);
  CHECK(th->exponent() == 3);
  CHECK(tm->exponent() == 9);
  CHECK_FALSE(dense_isomorphic(*th, *tm));
  CHECK_FALSE(th->is_abelian());
  CHECK_FALSE(tm->is_abelian());
}

TEST_CASE("affine frobenius groups") {
  Group a4like = affine_frobenius(2, 3);
  CHECK(a4like.order() == 12);
  CHECK(dense_isomorphic(*DenseTable::of(a4like, 100), *DenseTable::of(alt(4), 100)));

  Group g25 = affine_frobenius(2, 5);
  CHECK(g25.order() == 80);  // 2^4 * 5

  Group g37 = affine_frobenius(3, 7);
  CHECK(g37.order() == 5103);  // 3^6 * 7, since ord_7(3) = 6
}

TEST_CASE("psl2 orders") {
  CHECK(psl2(2).order() == 6);
  CHECK(psl2(3).order() == 12);
  CHECK(psl2(4).order() == 60);
  CHECK(psl2(5).order() == 60);
  CHECK(psl2(7).order() == 168);
  CHECK(psl2(8).order() == 504);
  CHECK(psl2(9).order() == 360);
  CHECK(psl2(11).order() == 660);
  CHECK(psl2(13).order() == 1092);
}

TEST_CASE("psl2 over tiny fields matches known groups") {
  CHECK(dense_isomorphic(*DenseTable::of(psl2(4), 100), *DenseTable::of(alt(5), 100)));
  CHECK(dense_isomorphic(*DenseTable::of(psl2(3), 100), *DenseTable::of(alt(4), 100)));
}

TEST_CASE("wreath towers") {
  Group w22 = sylow_wreath_tower(2, 2);
  CHECK(w22.order() == 8);
  CHECK(dense_isomorphic(*DenseTable::of(w22, 100), *DenseTable::of(dihedral(8), 100)));
  CHECK(sylow_wreath_tower(2, 3).order() == 128);
  CHECK(sylow_wreath_tower(3, 2).order() == 81);
  CHECK_THROWS_AS(sylow_wreath_tower(2, 7), OrderExceedsLimit);
}

TEST_CASE("m12 fixture loads and validates") {
  Group g = m12();
  CHECK(g.order() == 95040);
  CHECK(is_perfect(g));
  // sharply 5-transitive: |A12| = |A7| * |M12|
  CHECK(239500800ull == 2520ull * 95040ull);
}

TEST_CASE("structure report basics") {
  auto r = structure_report(alt(5));
  CHECK(r.is_perfect);
  CHECK_FALSE(r.is_soluble);
  CHECK(r.order == 60);
  CHECK(r.center_order == 1);
  REQUIRE(r.order_spectrum.has_value());
  CHECK((*r.order_spectrum).at(5) == 24);
  CHECK((*r.order_spectrum).at(3) == 20);
  CHECK((*r.order_spectrum).at(2) == 15);

  auto rd = structure_report(dihedral(10));
  CHECK(rd.is_soluble);
  CHECK_FALSE(rd.is_nilpotent);

  auto rc = structure_report(direct_product(cyclic(4), cyclic(2)));
  CHECK(rc.abelian_invariants.at(2) == std::vector<unsigned>{2, 1});
  CHECK(rc.is_nilpotent);

  // spectrum counts sum to the order
  std::size_t total = 0;
  for (auto& [o, c] : *r.order_spectrum) total += c;
  CHECK(total == 60);
}

TEST_CASE("heisenberg presentation realizes the same group") {
  Group viaPres = from_presentation(heisenberg_presentation(3));
  CHECK(viaPres.order() == 27);
  CHECK(dense_isomorphic(*DenseTable::of(viaPres, 100),
                         *DenseTable::of(heisenberg(3), 100)));
}
