// SPDX-License-Identifier: Apache-2.0
#include "reslab/rational.hpp"

#include <stdexcept>

namespace reslab {

MonicPair make_monic_pair(Poly phi, Poly psi) {
  if (!phi.field().same(psi.field()))
    throw std::invalid_argument("monic pair: operands live in different fields");
  if (phi.is_zero() || psi.is_zero() || !phi.is_monic() || !psi.is_monic())
    throw std::invalid_argument("monic pair: both entries must be monic");
  if (phi.deg() != psi.deg() || phi.deg() < 1)
    throw std::invalid_argument("monic pair: entries must share a degree n >= 1");
  return {std::move(phi), std::move(psi)};
}

PointedMap make_pointed_map(Poly num, Poly den) {
  if (!num.field().same(den.field()))
    throw std::invalid_argument("pointed map: operands live in different fields");
  if (num.is_zero() || !num.is_monic() || num.deg() < 1)
    throw std::invalid_argument("pointed map: numerator must be monic of degree >= 1");
  if (!den.is_zero() && den.deg() >= num.deg())
    throw std::invalid_argument("pointed map: denominator degree must be below the numerator's");
  return {std::move(num), std::move(den)};
}

PointedMap convert_conventions(const MonicPair& m) {
  return make_pointed_map(m.psi, m.phi - m.psi);
}

MonicPair convert_conventions(const PointedMap& f) {
  return make_monic_pair(f.num + f.den, f.num);
}

}  // namespace reslab
