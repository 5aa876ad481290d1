// SPDX-License-Identifier: Apache-2.0
#include "reslab/field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "reslab/arith.hpp"
#include "reslab/errors.hpp"

namespace reslab {
namespace detail {

struct FieldData {
  uint64_t p = 0;
  uint32_t d = 0;
  uint64_t q = 0;
  std::vector<uint64_t> modulus;  // empty for d == 1
  uint64_t generator = 0;
  std::vector<uint16_t> add, mul, neg, inv;  // q*q, q*q, q, q
  std::vector<uint16_t> exp_;                // exp_[k] = g^k, k in [0, q-1)
  std::vector<uint16_t> log_;                // log_[exp_[k]] = k, log_[0] unused
};

namespace {

using Coeffs = std::vector<uint64_t>;  // polynomial over GF(p), ascending

size_t pdeg(const Coeffs& a) {
  size_t i = a.size();
  while (i > 0 && a[i - 1] == 0) --i;
  return i;  // number of meaningful coefficients; 0 for the zero polynomial
}

Coeffs pmulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, uint64_t p) {
  size_t na = pdeg(a), nb = pdeg(b), nf = pdeg(f);
  if (na == 0 || nb == 0) return Coeffs(nf - 1, 0);
  Coeffs r(na + nb - 1, 0);
  for (size_t i = 0; i < na; ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < nb; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  for (size_t i = r.size(); i-- > nf - 1;) {
    uint64_t c = r[i];
    if (!c) continue;
    r[i] = 0;
    for (size_t j = 0; j + 1 < nf; ++j) {
      size_t k = i - (nf - 1) + j;
      r[k] = (r[k] + (p - f[j]) * c) % p;
    }
  }
  r.resize(nf - 1, 0);
  return r;
}

Coeffs ppowmod(Coeffs base, uint64_t e, const Coeffs& f, uint64_t p) {
  Coeffs r{1};
  while (e) {
    if (e & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Coeffs pgcd(Coeffs a, Coeffs b, uint64_t p) {
  auto inv_mod_p = [p](uint64_t x) {
    uint64_t r = 1, e = p - 2, b2 = x % p;
    while (e) {
      if (e & 1) r = r * b2 % p;
      b2 = b2 * b2 % p;
      e >>= 1;
    }
    return r;
  };
  while (pdeg(b) > 0) {
    size_t na = pdeg(a), nb = pdeg(b);
    if (na < nb) {
      std::swap(a, b);
      continue;
    }
    uint64_t c = a[na - 1] * inv_mod_p(b[nb - 1]) % p;
    for (size_t j = 0; j < nb; ++j) {
      size_t k = na - nb + j;
      a[k] = (a[k] + (p - c % p) * b[j]) % p;
    }
    a.resize(pdeg(a));
  }
  return a;
}

// Subtracts x in place, padding first if needed.
void sub_x(Coeffs& g, uint64_t p) {
  if (g.size() < 2) g.resize(2, 0);
  g[1] = (g[1] + p - 1) % p;
}

bool is_irreducible(const Coeffs& f, uint64_t p, uint32_t d) {
  if (f[0] == 0) return false;  // divisible by x
  // x^(p^d) == x mod f, and gcd(x^(p^(d/l)) - x, f) = 1 for prime l | d
  std::vector<Coeffs> frob(d + 1);  // frob[j] = x^(p^j) mod f
  frob[0] = Coeffs{0, 1};
  for (uint32_t j = 1; j <= d; ++j) frob[j] = ppowmod(frob[j - 1], p, f, p);
  Coeffs diff = frob[d];
  sub_x(diff, p);
  if (pdeg(diff) != 0) return false;
  for (uint32_t l = 2; l <= d; ++l) {
    if (d % l) continue;
    bool prime = true;
    for (uint32_t t = 2; t * t <= l; ++t)
      if (l % t == 0) prime = false;
    if (!prime) continue;
    Coeffs g = frob[d / l];
    sub_x(g, p);
    if (pdeg(pgcd(f, g, p)) != 1) return false;
  }
  return true;
}

}  // namespace
}  // namespace detail

using detail::FieldData;

namespace {

std::shared_ptr<const FieldData> build_field(uint64_t p, uint32_t d, uint64_t max_q) {
  if (!is_prime(p)) throw std::invalid_argument("field: p must be prime");
  if (d < 1) throw std::invalid_argument("field: d must be at least 1");
  uint64_t cap = std::min<uint64_t>(max_q, kMaxFieldSize);
  uint64_t q = 1;
  for (uint32_t i = 0; i < d; ++i) {
    if (q > cap / p) throw std::invalid_argument("field: q exceeds the size bound");
    q *= p;
  }
  if (q > cap) throw std::invalid_argument("field: q exceeds the size bound");

  auto data = std::make_shared<FieldData>();
  data->p = p;
  data->d = d;
  data->q = q;

  if (d > 1) {
    // Smallest monic irreducible of degree d: scan constant-through-top
    // tails in ascending integer encoding.
    detail::Coeffs f(d + 1, 0);
    f[d] = 1;
    bool found = false;
    for (uint64_t tail = 0; tail < q; ++tail) {
      uint64_t t = tail;
      for (uint32_t i = 0; i < d; ++i) {
        f[i] = t % p;
        t /= p;
      }
      if (detail::is_irreducible(f, p, d)) {
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("field: no irreducible modulus found");
    data->modulus = f;
  }

  // Element coordinates for table building.
  std::vector<std::vector<uint64_t>> coords(q, std::vector<uint64_t>(d, 0));
  for (uint64_t a = 1; a < q; ++a) {
    coords[a] = coords[a - 1];
    for (uint32_t i = 0; i < d; ++i) {
      if (++coords[a][i] < p) break;
      coords[a][i] = 0;
    }
  }
  auto encode = [&](const std::vector<uint64_t>& c) {
    uint64_t idx = 0;
    for (uint32_t i = d; i-- > 0;) idx = idx * p + c[i] % p;
    return idx;
  };

  // Coordinate-level multiplication (used only during construction).
  detail::Coeffs fmod = d > 1 ? data->modulus : detail::Coeffs{};
  auto raw_mul = [&](uint64_t a, uint64_t b) -> uint64_t {
    if (d == 1) return a * b % p;
    detail::Coeffs r = detail::pmulmod(coords[a], coords[b], fmod, p);
    r.resize(d, 0);
    return encode(r);
  };
  auto raw_pow = [&](uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = raw_mul(r, a);
      a = raw_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  // Generator: smallest index whose order is q-1.
  uint64_t m = q - 1;
  std::vector<uint64_t> prime_factors;
  {
    uint64_t t = m;
    for (uint64_t c = 2; c * c <= t; ++c) {
      if (t % c) continue;
      prime_factors.push_back(c);
      while (t % c == 0) t /= c;
    }
    if (t > 1) prime_factors.push_back(t);
  }
  uint64_t g = 1;
  if (m > 1) {
    for (uint64_t cand = 2; cand < q; ++cand) {
      bool primitive = true;
      for (uint64_t l : prime_factors) {
        if (raw_pow(cand, m / l) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g = cand;
        break;
      }
    }
  }
  data->generator = g;

  data->exp_.resize(m > 0 ? m : 1);
  data->log_.assign(q, 0);
  uint64_t acc = 1;
  for (uint64_t k = 0; k < m; ++k) {
    data->exp_[k] = static_cast<uint16_t>(acc);
    data->log_[acc] = static_cast<uint16_t>(k);
    acc = raw_mul(acc, g);
  }

  data->add.resize(q * q);
  data->neg.resize(q);
  std::vector<uint64_t> sum(d);
  for (uint64_t a = 0; a < q; ++a) {
    for (uint64_t b = 0; b < q; ++b) {
      for (uint32_t i = 0; i < d; ++i) sum[i] = (coords[a][i] + coords[b][i]) % p;
      data->add[a * q + b] = static_cast<uint16_t>(encode(sum));
    }
    for (uint32_t i = 0; i < d; ++i) sum[i] = (p - coords[a][i]) % p;
    data->neg[a] = static_cast<uint16_t>(encode(sum));
  }

  data->mul.assign(q * q, 0);
  data->inv.assign(q, 0);
  for (uint64_t a = 1; a < q; ++a) {
    uint64_t la = data->log_[a];
    for (uint64_t b = 1; b < q; ++b)
      data->mul[a * q + b] = data->exp_[(la + data->log_[b]) % m];
    data->inv[a] = data->exp_[(m - la) % m];
  }
  return data;
}

}  // namespace

Field Field::make(uint64_t p, uint32_t d, uint64_t max_q) {
  return Field(build_field(p, d, max_q));
}

uint64_t Field::p() const { return data_->p; }
uint32_t Field::d() const { return data_->d; }
uint64_t Field::q() const { return data_->q; }
const std::vector<uint64_t>& Field::modulus() const { return data_->modulus; }

namespace {
inline void check_elt(const FieldData& f, Fq x) {
  if (x.v >= f.q) throw std::invalid_argument("field: element index out of range");
}
}  // namespace

Fq Field::element(uint64_t index) const {
  if (index >= q()) throw std::invalid_argument("field: element index out of range");
  return {static_cast<uint32_t>(index)};
}

Fq Field::from_int(int64_t value) const {
  int64_t p_ = static_cast<int64_t>(p());
  int64_t r = value % p_;
  if (r < 0) r += p_;
  return {static_cast<uint32_t>(r)};
}

std::vector<uint64_t> Field::coords(Fq x) const {
  check_elt(*data_, x);
  std::vector<uint64_t> c(d());
  uint64_t t = x.v;
  for (uint32_t i = 0; i < d(); ++i) {
    c[i] = t % p();
    t /= p();
  }
  return c;
}

Fq Field::add(Fq a, Fq b) const {
  check_elt(*data_, a);
  check_elt(*data_, b);
  return {data_->add[static_cast<uint64_t>(a.v) * q() + b.v]};
}

Fq Field::neg(Fq a) const {
  check_elt(*data_, a);
  return {data_->neg[a.v]};
}

Fq Field::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq Field::mul(Fq a, Fq b) const {
  check_elt(*data_, a);
  check_elt(*data_, b);
  return {data_->mul[static_cast<uint64_t>(a.v) * q() + b.v]};
}

Fq Field::inv(Fq a) const {
  check_elt(*data_, a);
  if (a.v == 0) throw std::invalid_argument("field: inverse of zero");
  return {data_->inv[a.v]};
}

Fq Field::div(Fq a, Fq b) const { return mul(a, inv(b)); }

Fq Field::pow(Fq a, uint64_t e) const {
  check_elt(*data_, a);
  if (a.v == 0) return e == 0 ? one() : zero();
  uint64_t m = q() - 1;
  uint64_t k = (static_cast<uint64_t>(data_->log_[a.v]) * (e % m)) % m;
  return {data_->exp_[k]};
}

Fq Field::pow(Fq a, const BigInt& e) const {
  if (e < 0) throw std::invalid_argument("field: negative exponent");
  check_elt(*data_, a);
  if (a.v == 0) return e == 0 ? one() : zero();
  BigInt m = q() - 1;
  uint64_t r = static_cast<uint64_t>(e % m);
  return pow(a, r);
}

uint64_t Field::multiplicative_order(Fq x) const {
  check_elt(*data_, x);
  if (x.v == 0) throw std::invalid_argument("field: order of zero");
  uint64_t m = q() - 1;
  if (m == 0) return 1;
  return m / std::gcd<uint64_t>(data_->log_[x.v], m);
}

std::vector<Fq> Field::roots_of_unity(uint64_t n) const {
  if (n == 0) throw std::invalid_argument("field: roots_of_unity needs n >= 1");
  uint64_t m = q() - 1;
  if (m == 0) return {one()};
  uint64_t g = std::gcd(n, m);
  std::vector<Fq> out;
  out.reserve(g);
  for (uint64_t j = 0; j < g; ++j) out.push_back(Fq{data_->exp_[j * (m / g)]});
  std::sort(out.begin(), out.end());
  return out;
}

Fq Field::generator() const { return {static_cast<uint32_t>(data_->generator)}; }

std::string Field::format(Fq x) const {
  check_elt(*data_, x);
  auto c = coords(x);
  std::string out;
  for (uint32_t i = 0; i < d(); ++i) {
    if (i) out += ':';
    out += std::to_string(c[i]);
  }
  return out;
}

Fq Field::parse(std::string_view text) const {
  if (text.empty()) throw ParseError("element literal is empty");
  std::vector<uint64_t> digits;
  uint64_t cur = 0;
  bool have = false;
  for (char ch : text) {
    if (ch == ':') {
      if (!have) throw ParseError("element literal has an empty digit");
      digits.push_back(cur);
      cur = 0;
      have = false;
    } else if (ch >= '0' && ch <= '9') {
      cur = cur * 10 + static_cast<uint64_t>(ch - '0');
      if (cur > kMaxFieldSize) throw ParseError("element literal digit too large");
      have = true;
    } else {
      throw ParseError("element literal has a bad character");
    }
  }
  if (!have) throw ParseError("element literal has an empty digit");
  digits.push_back(cur);
  if (digits.size() == 1) {
    // bare index (coincides with the digit form over prime fields)
    if (digits[0] >= q()) throw ParseError("element literal out of range");
    return {static_cast<uint32_t>(digits[0])};
  }
  if (digits.size() != d()) throw ParseError("element literal has the wrong digit count");
  uint64_t idx = 0;
  for (uint32_t i = d(); i-- > 0;) {
    if (digits[i] >= p()) throw ParseError("element literal digit exceeds p");
    idx = idx * p() + digits[i];
  }
  return {static_cast<uint32_t>(idx)};
}

const uint16_t* Field::add_table() const { return data_->add.data(); }
const uint16_t* Field::mul_table() const { return data_->mul.data(); }
const uint16_t* Field::neg_table() const { return data_->neg.data(); }
const uint16_t* Field::inv_table() const { return data_->inv.data(); }

}  // namespace reslab
