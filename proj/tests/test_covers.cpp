#include "doctest.h"

#include "coverforge/constructors.hpp"
#include "coverforge/covers.hpp"

using namespace coverforge;

namespace {

FamilySpec fam(std::vector<Group> gs) { return FamilySpec::of(std::move(gs)); }

}  // namespace

TEST_CASE("A5 covers its Sylow family") {
  FamilySpec f = fam({cyclic(3), elementary_abelian(2, 2), cyclic(5)});
  std::map<std::size_t, EmbeddingCertificate> w;
  CHECK(is_cover(alt(5), f, &w));
  CHECK(w.size() == 3);
  // every recorded witness verifies
  for (auto& [i, cert] : w) CHECK(verify_certificate(f.members[i], alt(5), cert));
}

TEST_CASE("D8 covers the order-4 family, C8 does not cover the Klein group") {
  FamilySpec order4 = fam({cyclic(4), elementary_abelian(2, 2)});
  CHECK(is_cover(dihedral(8), order4));
  CHECK_FALSE(is_cover(cyclic(8), fam({elementary_abelian(2, 2)})));
}

TEST_CASE("order bounds") {
  FamilySpec f1 = fam({alt(5), psl2(8)});
  auto b1 = order_bounds(f1);
  CHECK(b1.lower == 2520);
  CHECK(b1.upper == 30240);
  CHECK_FALSE(b1.coprime);

  FamilySpec f2 = fam({cyclic(3), elementary_abelian(2, 2), cyclic(5)});
  auto b2 = order_bounds(f2);
  CHECK(b2.lower == 60);
  CHECK(b2.upper == 60);
  CHECK(b2.coprime);

  FamilySpec f3 = fam({sym(4)});
  auto b3 = order_bounds(f3);
  CHECK(b3.lower == 24);
  CHECK(b3.upper == 24);
}

TEST_CASE("minimal covers of {Z2, Z3}") {
  FamilySpec f = fam({cyclic(2), cyclic(3)});
  CHECK(is_minimal_cover(affine_frobenius(2, 3), f));  // A4
  CHECK(is_minimal_cover(cyclic(6), f));
  CHECK(is_minimal_cover(sym(3), f));
  CHECK_FALSE(is_minimal_cover(cyclic(12), f));  // contains Z6
  CHECK_FALSE(is_minimal_cover(sym(4), f));      // contains S3
}

TEST_CASE("co-minimal covers") {
  FamilySpec f = fam({cyclic(2), cyclic(3)});
  CHECK(is_co_minimal_cover(cyclic(6), f));
  // C2 x S3 has quotient S3 which still covers
  CHECK_FALSE(is_co_minimal_cover(direct_product(cyclic(2), sym(3)), f));
}

TEST_CASE("SD16 x C2 is a minimal and co-minimal 8-cover") {
  std::vector<Group> eight = {cyclic(8), direct_product(cyclic(4), cyclic(2)),
                              elementary_abelian(2, 3), dihedral(8), quaternion(8)};
  FamilySpec f = fam(eight);
  Group g = direct_product(semidihedral(16), cyclic(2));
  CHECK(is_cover(g, f));
  CHECK(is_minimal_cover(g, f));
  CHECK(is_co_minimal_cover(g, f));
}

TEST_CASE("witness predicate") {
  CHECK(is_n_witness(alt(5), 20));
  CHECK_FALSE(is_n_witness(sym(4), 6));  // S3 inside
  CHECK(is_n_witness(cyclic(6), 6));
  CHECK(is_n_witness(sym(3), 6));
  CHECK(is_n_witness(affine_frobenius(2, 3), 6));  // A4
  CHECK_FALSE(is_n_witness(alt(5), 7));
}

TEST_CASE("dual covers") {
  FamilySpec f = fam({cyclic(2), cyclic(3)});
  CHECK(is_dual_cover(cyclic(6), f));
  CHECK_FALSE(is_dual_cover(sym(3), fam({cyclic(3)})));
  // abelian groups: dual cover iff cover
  FamilySpec af = fam({cyclic(4), elementary_abelian(2, 2)});
  Group a = direct_product(cyclic(4), elementary_abelian(2, 2));
  CHECK(is_dual_cover(a, af) == is_cover(a, af));
  CHECK(is_minimal_dual_cover(cyclic(6), f));
  CHECK(is_co_minimal_dual_cover(cyclic(6), f));
}

TEST_CASE("self cover check") {
  auto s3 = self_cover_check(sym(3));
  CHECK(s3.is_self_minimal);
  CHECK(s3.theorem_consistent);

  auto c9 = self_cover_check(cyclic(9));
  CHECK_FALSE(c9.is_self_minimal);  // single maximal subgroup covers the family
  CHECK(c9.theorem_consistent);

  auto q8 = self_cover_check(quaternion(8));
  CHECK(q8.theorem_consistent);

  auto a5 = self_cover_check(alt(5));
  CHECK(a5.is_self_minimal);
  CHECK(a5.theorem_consistent);
}

TEST_CASE("verdict implication structure") {
  FamilySpec f = fam({cyclic(2), cyclic(3)});
  CoverVerdict v = cover_verdict(cyclic(6), f);
  CHECK(v.is_cover);
  CHECK(v.is_minimal);
  CHECK(v.is_co_minimal);
  bool strong_matches = v.is_strongly_minimal == (v.is_minimal && v.is_co_minimal);
  CHECK(strong_matches);
  bool min_implies_cover = (!v.is_minimal && !v.is_co_minimal) || v.is_cover;
  CHECK(min_implies_cover);

  CoverVerdict w = cover_verdict(cyclic(8), fam({elementary_abelian(2, 2)}));
  CHECK_FALSE(w.is_cover);
  CHECK_FALSE(w.is_minimal);
  CHECK(w.witnesses.empty());
}
