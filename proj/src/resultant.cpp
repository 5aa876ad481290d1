// SPDX-License-Identifier: Apache-2.0
#include "reslab/resultant.hpp"

#include <stdexcept>
#include <utility>

namespace reslab {

namespace detail {

uint32_t resultant_euclid_raw(const Field& F, uint16_t* f, size_t nf, uint16_t* g, size_t ng) {
  const size_t q = F.q();
  const uint16_t* add = F.add_table();
  const uint16_t* mul = F.mul_table();
  const uint16_t* neg = F.neg_table();
  const uint16_t* inv = F.inv_table();

  while (nf && !f[nf - 1]) --nf;
  while (ng && !g[ng - 1]) --ng;
  if (!nf && !ng) throw std::invalid_argument("resultant: both inputs are zero");
  if (!nf) return ng == 1 ? 1u : 0u;
  if (!ng) return nf == 1 ? 1u : 0u;

  auto fmul = [&](uint32_t a, uint32_t b) -> uint32_t { return mul[a * q + b]; };
  auto fpow = [&](uint32_t a, size_t e) -> uint32_t {
    uint32_t r = 1;
    while (e) {
      if (e & 1) r = fmul(r, a);
      a = fmul(a, a);
      e >>= 1;
    }
    return r;
  };

  uint32_t scale = 1;
  unsigned parity = 0;
  for (;;) {
    if (nf < ng) {
      std::swap(f, g);
      std::swap(nf, ng);
      parity ^= ((nf - 1) * (ng - 1)) & 1u;
    }
    if (ng == 1) {
      uint32_t res = fmul(scale, fpow(g[0], nf - 1));
      return parity ? neg[res] : res;
    }
    size_t deg_f = nf - 1, deg_g = ng - 1;
    uint32_t ilc = inv[g[ng - 1]];
    while (nf >= ng) {
      uint32_t c = fmul(f[nf - 1], ilc);
      if (c) {
        for (size_t j = 0; j + 1 < ng; ++j) {
          uint32_t t = fmul(c, g[j]);
          size_t k = nf - ng + j;
          f[k] = add[static_cast<size_t>(f[k]) * q + neg[t]];
        }
      }
      --nf;
      while (nf && !f[nf - 1]) --nf;
    }
    if (!nf) return 0;  // nonconstant common factor
    size_t deg_r = nf - 1;
    scale = fmul(scale, fpow(g[ng - 1], deg_f - deg_r));
    parity ^= (deg_r * deg_g) & 1u;
    std::swap(f, g);
    std::swap(nf, ng);
  }
}

}  // namespace detail

namespace {

void check_resultant_input(const Poly& f, const Poly& g) {
  if (!f.field().same(g.field()))
    throw std::invalid_argument("resultant: operands live in different fields");
}

}  // namespace

SylvesterMatrix sylvester_matrix(const Poly& f, const Poly& g) {
  check_resultant_input(f, g);
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("sylvester_matrix: inputs must be nonzero");
  uint32_t m = f.deg(), k = g.deg();
  if (m + k > kMaxResultantDegree)
    throw std::invalid_argument("sylvester_matrix: degree sum exceeds the bound");
  const Field& F = f.field();
  uint32_t n = m + k;
  SylvesterMatrix s{F, n, std::vector<Fq>(static_cast<size_t>(n) * n, F.zero())};
  for (uint32_t row = 0; row < k; ++row)
    for (uint32_t t = 0; t <= m; ++t)
      s.entries[static_cast<size_t>(row) * n + row + t] = f.coeff(t);
  for (uint32_t row = 0; row < m; ++row)
    for (uint32_t t = 0; t <= k; ++t)
      s.entries[static_cast<size_t>(k + row) * n + row + t] = g.coeff(t);
  return s;
}

Fq determinant(SylvesterMatrix m) {
  const Field& F = m.field;
  uint32_t n = m.size;
  if (n == 0) return F.one();
  auto& a = m.entries;
  auto at = [&](uint32_t r, uint32_t c) -> Fq& { return a[static_cast<size_t>(r) * n + c]; };
  Fq det = F.one();
  bool negate = false;
  for (uint32_t col = 0; col < n; ++col) {
    uint32_t pivot = col;
    while (pivot < n && at(pivot, col).v == 0) ++pivot;
    if (pivot == n) return F.zero();
    if (pivot != col) {
      for (uint32_t c = col; c < n; ++c) std::swap(at(pivot, c), at(col, c));
      negate = !negate;
    }
    Fq pv = at(col, col);
    det = F.mul(det, pv);
    Fq ipv = F.inv(pv);
    for (uint32_t r = col + 1; r < n; ++r) {
      Fq factor = F.mul(at(r, col), ipv);
      if (factor.v == 0) continue;
      for (uint32_t c = col; c < n; ++c)
        at(r, c) = F.sub(at(r, c), F.mul(factor, at(col, c)));
    }
  }
  return negate ? F.neg(det) : det;
}

Fq resultant(const Poly& f, const Poly& g, ResultantMethod method) {
  check_resultant_input(f, g);
  const Field& F = f.field();
  if (f.is_zero() && g.is_zero())
    throw std::invalid_argument("resultant: both inputs are zero");
  if (f.is_zero()) return g.deg() == 0 ? F.one() : F.zero();
  if (g.is_zero()) return f.deg() == 0 ? F.one() : F.zero();
  if (f.deg() + g.deg() > kMaxResultantDegree)
    throw std::invalid_argument("resultant: degree sum exceeds the bound");
  if (method == ResultantMethod::kSylvester) return determinant(sylvester_matrix(f, g));
  std::vector<uint16_t> fb(f.coeffs().size()), gb(g.coeffs().size());
  for (size_t i = 0; i < fb.size(); ++i) fb[i] = static_cast<uint16_t>(f.coeffs()[i].v);
  for (size_t i = 0; i < gb.size(); ++i) gb[i] = static_cast<uint16_t>(g.coeffs()[i].v);
  return {detail::resultant_euclid_raw(F, fb.data(), fb.size(), gb.data(), gb.size())};
}

Fq resultant(const MonicPair& m, ResultantMethod method) {
  return resultant(m.phi, m.psi, method);
}

Fq resultant(const PointedMap& f, ResultantMethod method) {
  return resultant(f.den, f.num, method);
}

MonicPair mu_action(Fq lambda, const MonicPair& x) {
  const Field& F = x.phi.field();
  uint32_t n = x.n();
  if (lambda.v == 0 || F.pow(lambda, static_cast<uint64_t>(n)) != F.one())
    throw std::invalid_argument("mu_action: lambda is not an n-th root of unity");
  Poly phi = x.psi + scale(lambda, x.phi - x.psi);
  return {std::move(phi), x.psi};
}

std::optional<Poly> monic_kth_root(const Poly& f, uint64_t k) {
  if (k == 0) throw std::invalid_argument("monic_kth_root: k must be positive");
  if (f.is_zero() || !f.is_monic())
    throw std::invalid_argument("monic_kth_root: input must be monic");
  if (k == 1) return f;
  if (f.deg() % k) return std::nullopt;
  const Field& F = f.field();
  uint64_t p = F.p();

  std::vector<uint64_t> primes;
  for (uint64_t t = k, c = 2; c * c <= t; ++c)
    while (t % c == 0) {
      primes.push_back(c);
      t /= c;
    }
  {
    uint64_t rest = k;
    for (uint64_t c : primes) rest /= c;
    if (rest > 1) primes.push_back(rest);
  }

  Poly cur = f;
  for (uint64_t l : primes) {
    uint32_t big = cur.deg();
    uint32_t m = static_cast<uint32_t>(big / l);
    if (l == p) {
      std::vector<Fq> s(m + 1, F.zero());
      for (uint32_t i = 0; i <= big; ++i) {
        Fq c = cur.coeff(i);
        if (c.v == 0) continue;
        if (i % p) return std::nullopt;  // support must sit on multiples of p
        s[i / p] = F.pow(c, F.q() / p);  // inverse Frobenius
      }
      cur = Poly::from_coeffs(F, std::move(s));
    } else {
      Poly root = Poly::monomial(F, F.one(), m);
      Fq il = F.inv(F.from_int(static_cast<int64_t>(l % p)));
      for (uint32_t t = 1; t <= m; ++t) {
        Poly pw = pow(root, l);
        Fq delta = F.mul(F.sub(cur.coeff(big - t), pw.coeff(big - t)), il);
        if (delta.v) root = root + Poly::monomial(F, delta, m - t);
      }
      cur = root;
    }
  }
  if (pow(cur, k) == f) return cur;
  return std::nullopt;
}

YSplit y_split(const MonicPair& x, uint64_t a) {
  uint32_t n = x.n();
  if (a < 1 || n % a) throw std::invalid_argument("y_split: a must divide n");
  const Field& F = x.phi.field();
  if (resultant(x) != F.one())
    throw std::invalid_argument("y_split: pair is not in the resultant-one locus");
  auto chi = monic_kth_root(x.psi, n / a);
  if (!chi)
    throw std::invalid_argument("y_split: psi is not a perfect power of the required index");
  auto [phi0, phi1] = divrem(x.phi, *chi);
  return {std::move(*chi), std::move(phi1), std::move(phi0)};
}

}  // namespace reslab
