// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "reslab/poly.hpp"

namespace reslab {

// Pair of monic degree-n polynomials (phi, psi), n >= 1. The coordinates on
// the space of degree-n maps P^1 -> P^1 sending infinity to 1.
struct MonicPair {
  Poly phi, psi;
  uint32_t n() const { return phi.deg(); }
};

// Rational map A/B with A monic of degree n >= 1 and deg B < n (B may be
// zero). The coordinates on the space of maps sending infinity to infinity.
struct PointedMap {
  Poly num, den;
  uint32_t n() const { return num.deg(); }
};

// Validating constructors; throw std::invalid_argument on degree or
// monicity violations.
MonicPair make_monic_pair(Poly phi, Poly psi);
PointedMap make_pointed_map(Poly num, Poly den);

// The degree-preserving change of coordinates between the two charts:
// (phi, psi) <-> (A, B) with A = psi and B = phi - psi. It preserves the
// resultant on the nose in both directions.
PointedMap convert_conventions(const MonicPair& m);
MonicPair convert_conventions(const PointedMap& f);

}  // namespace reslab
