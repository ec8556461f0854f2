#include "doctest.h"

#include "coverforge/constructors.hpp"
#include "coverforge/embed.hpp"

using namespace coverforge;

TEST_CASE("natural inclusion certificate A6 into A7") {
  Group a6 = alt(6);
  Group a7 = alt(7);
  EmbeddingCertificate cert;
  for (const Perm& g : a6.generators()) {
    cert.source_generators.push_back(g);
    cert.images.push_back(g.extended(7));
  }
  CHECK(verify_certificate(a6, a7, cert));
}

TEST_CASE("identity certificate verifies") {
  Group h = sym(4);
  EmbeddingCertificate cert{h.generators(), h.generators()};
  CHECK(verify_certificate(h, h, cert));
}

TEST_CASE("non-injective pairing is rejected") {
  Group c4 = cyclic(4);
  Perm g = c4.generators()[0];
  EmbeddingCertificate cert{{g}, {g * g}};  // generator maps to its square
  CHECK_FALSE(verify_certificate(c4, c4, cert));
}

TEST_CASE("non-generating source tuple raises") {
  Group c4 = cyclic(4);
  Perm sq = c4.generators()[0] * c4.generators()[0];
  EmbeddingCertificate cert{{sq}, {sq}};
  CHECK_THROWS_AS(verify_certificate(c4, c4, cert), NotGenerating);
}

TEST_CASE("find_embedding C8 into SD16") {
  auto cert = find_embedding(cyclic(8), semidihedral(16));
  REQUIRE(cert.has_value());
  CHECK(verify_certificate(cyclic(8), semidihedral(16), *cert));
}

TEST_CASE("find_embedding elementary abelian into SD16 x C2") {
  Group target = direct_product(semidihedral(16), cyclic(2));
  Group e8 = elementary_abelian(2, 3);
  auto cert = find_embedding(e8, target);
  REQUIRE(cert.has_value());
  CHECK(verify_certificate(e8, target, *cert));
}

TEST_CASE("Q8 does not embed in D8 (authoritative)") {
  auto cert = find_embedding(quaternion(8), dihedral(8));
  CHECK_FALSE(cert.has_value());
  CHECK_FALSE(embeds(quaternion(8), dihedral(8)));
}

TEST_CASE("isomorphism checks") {
  CHECK(is_isomorphic(affine_frobenius(2, 3), alt(4)));
  CHECK_FALSE(is_isomorphic(cyclic(8), direct_product(cyclic(4), cyclic(2))));
  CHECK(is_isomorphic(from_presentation(semidihedral_presentation(16)), semidihedral(16)));
  CHECK(is_isomorphic(psl2(4), alt(5)));
  CHECK_FALSE(is_isomorphic(dihedral(12), alt(4)));
}

TEST_CASE("embeds strategy outcomes") {
  CHECK_FALSE(embeds(cyclic(6), alt(5)));          // A5 has no order-6 element
  CHECK(embeds(dihedral(10), alt(5)));
  CHECK(embeds(cyclic(5), alt(5)));
  CHECK(embeds(alt(4), alt(5)));
  CHECK_FALSE(embeds(cyclic(4), alt(5)));
}

TEST_CASE("psl2(8) does not embed in A7 or A8") {
  // |A7| = 2520 is not divisible by 504? It is: 2520 = 5 * 504. Order-9
  // elements decide: psl2(8) has them, neither alternating group does.
  CHECK_FALSE(embeds(psl2(8), alt(7)));
  Limits wide;
  wide.element_limit = 25000;  // A8 has 20160 elements
  CHECK_FALSE(embeds(psl2(8), alt(8), wide));
}

TEST_CASE("certificate round trip") {
  Group a6 = alt(6);
  Group a7 = alt(7);
  EmbeddingCertificate cert;
  for (const Perm& g : a6.generators()) {
    cert.source_generators.push_back(g);
    cert.images.push_back(g.extended(7));
  }
  std::string text = serialize_certificate(cert);
  EmbeddingCertificate back = parse_certificate(text);
  CHECK(back.source_generators == cert.source_generators);
  CHECK(back.images == cert.images);
  CHECK(serialize_certificate(back) == text);
}

TEST_CASE("iso invariants screen") {
  auto a = iso_invariants(dihedral(8));
  auto b = iso_invariants(quaternion(8));
  CHECK_FALSE(a == b);
  auto c = iso_invariants(from_presentation(semidihedral_presentation(16)));
  auto d = iso_invariants(semidihedral(16));
  CHECK(c == d);
}
