// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "reslab/rational.hpp"

namespace reslab {

// The unique (U, V) with A U + B V = 1, deg U <= n-2 and deg V <= n-1,
// where n = deg A. Exists exactly when gcd(A, B) = 1 (so B != 0).
struct BezoutForm {
  Poly u, v;
};
BezoutForm bezout_normal_form(const PointedMap& f);

// Monoid sum of pointed maps. With the Bezout forms (U_i, V_i) of the two
// operands it is the top row of the 2x2 matrix product
// [[A1, -V1], [B1, U1]] . [[A2, -V2], [B2, U2]]:
//   A3 = A1 A2 - V1 B2,  B3 = B1 A2 + U1 B2,
// and the bottom row (U3, V3) = (U1 U2 - B1 V2, A1 V2 + V1 U2) is already
// the Bezout normal form of the result. Degrees add. Associative, not
// commutative. Both operands must be coprime pairs.
PointedMap oplus(const PointedMap& x, const PointedMap& y);

// One continued-fraction part: a monic polynomial of degree >= 1 over a
// unit, the pointed map P/a.
struct DecompPart {
  Poly p;
  Fq a;
};

struct Decomposition {
  std::vector<DecompPart> parts;
  // Degrees of the parts, left to right: a composition of n.
  std::vector<uint64_t> composition() const;
};

// The unique sequence of parts whose left-to-right oplus fold gives back f.
// Throws when gcd(num, den) != 1.
Decomposition cf_decompose(const PointedMap& f);

// Left-to-right oplus fold. Throws on an empty decomposition.
PointedMap recompose(const Decomposition& d);

// (-1)^(sum of n_i n_j over i < j) for a composition (n_1, .., n_r).
int epsilon_sign(std::span<const uint64_t> composition);

// epsilon(composition) * prod a_i^(n_i), evaluated in the field. Equals the
// resultant of the recomposed map.
Fq resultant_from_decomposition(const Decomposition& d);

}  // namespace reslab
