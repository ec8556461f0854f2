#pragma once

#include <optional>
#include <string>

#include "coverforge/group.hpp"
#include "coverforge/presentation.hpp"

namespace coverforge {

// Named families. Every constructor documents its faithful domain and
// asserts its advertised order on construction.

Group cyclic(unsigned n);                     // n points
Group dihedral(unsigned order);               // order 2n on n points, order >= 6
Group quaternion(unsigned order);             // generalized quaternion, regular action
Group elementary_abelian(unsigned p, unsigned k);  // k disjoint p-cycles
Group sym(unsigned n);
Group alt(unsigned n);
Group semidihedral(unsigned order);           // order 2^n (n >= 4) on 2^(n-1) points
Group heisenberg(unsigned p);                 // order p^3, exponent p, on p^3 points
Group modular_gp(unsigned p);                 // order p^3, exponent p^2, on p^2 points

// Affine group V : <M> where V = F_q^a, a = ord_r(q), and M is the companion
// matrix of an irreducible degree-a factor of (x^r - 1)/(x - 1) over F_q.
Group affine_frobenius(unsigned q, unsigned r);

// Projective special linear group on the q+1 points of the projective line;
// q prime <= 61, or q in {4, 8, 9} via built-in field tables.
Group psl2(unsigned q);

// Mathieu group on 12 points from the shipped generator fixture
// (order, 5-transitivity and perfectness are verified on construction).
Group m12();
Group m12(const std::string& fixture_path);

// Iterated wreath product of n copies of Z_p on p^n points (Sylow p-subgroup
// of the symmetric group of degree p^n); order p^((p^n - 1)/(p - 1)).
Group sylow_wreath_tower(unsigned p, unsigned n);

// Fixture directory: $COVERFORGE_DATA if set, else "data".
std::string default_data_dir();

// Presentations used by the shipped constructions.
Presentation semidihedral_presentation(unsigned order);
Presentation heisenberg_presentation(unsigned p);
// Non-split extension of Heis(p) by Z_{p^2}: adds a with a^(p^2) = z acting
// by x -> x, y -> xy; order p^5.
Presentation heisenberg_extension_presentation(unsigned p);

}  // namespace coverforge
