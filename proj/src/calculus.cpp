// SPDX-License-Identifier: Apache-2.0
#include "reslab/calculus.hpp"

#include <stdexcept>

namespace reslab {

BezoutForm bezout_normal_form(const PointedMap& f) {
  const Field& F = f.num.field();
  if (f.den.is_zero())
    throw std::invalid_argument("bezout: numerator and denominator are not coprime");
  XGcd e = xgcd(f.num, f.den);
  if (e.g != Poly::one(F))
    throw std::invalid_argument("bezout: numerator and denominator are not coprime");
  Poly v = divrem(e.v, f.num).second;       // deg V <= n-1
  Poly u_num = Poly::one(F) - f.den * v;
  auto [u, rem] = divrem(u_num, f.num);     // exact: A U = 1 - B V
  if (!rem.is_zero()) throw std::logic_error("bezout: normalization failed");
  return {std::move(u), std::move(v)};
}

PointedMap oplus(const PointedMap& x, const PointedMap& y) {
  if (!x.num.field().same(y.num.field()))
    throw std::invalid_argument("oplus: operands live in different fields");
  const Field& F = x.num.field();
  if (y.den.is_zero() || gcd(y.num, y.den) != Poly::one(F))
    throw std::invalid_argument("oplus: right operand is not a coprime pair");
  BezoutForm bx = bezout_normal_form(x);
  Poly a3 = x.num * y.num - bx.v * y.den;
  Poly b3 = x.den * y.num + bx.u * y.den;
  return make_pointed_map(std::move(a3), std::move(b3));
}

std::vector<uint64_t> Decomposition::composition() const {
  std::vector<uint64_t> c;
  c.reserve(parts.size());
  for (const DecompPart& part : parts) c.push_back(part.p.deg());
  return c;
}

Decomposition cf_decompose(const PointedMap& f) {
  const Field& F = f.num.field();
  if (f.den.is_zero() || gcd(f.num, f.den) != Poly::one(F))
    throw std::invalid_argument("cf_decompose: numerator and denominator are not coprime");
  Decomposition out;
  Poly a = f.num, b = f.den;
  while (!b.is_zero() && b.deg() >= 1) {
    Fq lc = b.lc();
    Poly next_a = scale(F.inv(lc), b);
    auto [quot, rem] = divrem(scale(lc, a), b);
    out.parts.push_back({std::move(quot), lc});
    a = std::move(next_a);
    b = -rem;
  }
  if (b.is_zero()) throw std::logic_error("cf_decompose: coprimality lost");
  out.parts.push_back({std::move(a), b.coeff(0)});
  return out;
}

PointedMap recompose(const Decomposition& d) {
  if (d.parts.empty()) throw std::invalid_argument("recompose: empty decomposition");
  const Field& F = d.parts.front().p.field();
  auto as_map = [&](const DecompPart& part) {
    return make_pointed_map(part.p, Poly::constant(F, part.a));
  };
  PointedMap acc = as_map(d.parts.front());
  for (size_t i = 1; i < d.parts.size(); ++i) acc = oplus(acc, as_map(d.parts[i]));
  return acc;
}

int epsilon_sign(std::span<const uint64_t> composition) {
  uint64_t prefix = 0, cross = 0;
  for (uint64_t ni : composition) {
    cross ^= (prefix & ni) & 1u;
    prefix += ni;
  }
  return cross ? -1 : 1;
}

Fq resultant_from_decomposition(const Decomposition& d) {
  if (d.parts.empty()) throw std::invalid_argument("resultant_from_decomposition: empty decomposition");
  const Field& F = d.parts.front().p.field();
  auto comp = d.composition();
  Fq r = epsilon_sign(comp) == 1 ? F.one() : F.from_int(-1);
  for (const DecompPart& part : d.parts) {
    if (part.a.v == 0) throw std::invalid_argument("resultant_from_decomposition: unit part is zero");
    r = F.mul(r, F.pow(part.a, static_cast<uint64_t>(part.p.deg())));
  }
  return r;
}

}  // namespace reslab
