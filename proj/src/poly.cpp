// SPDX-License-Identifier: Apache-2.0
#include "reslab/poly.hpp"

#include <stdexcept>

#include "reslab/bigint.hpp"

namespace reslab {

namespace {

void trim(std::vector<Fq>& c) {
  while (!c.empty() && c.back().v == 0) c.pop_back();
}

void check_same_field(const Poly& a, const Poly& b, const char* op) {
  if (!a.field().same(b.field()))
    throw std::invalid_argument(std::string(op) + ": operands live in different fields");
}

}  // namespace

Poly Poly::zero(const Field& f) { return Poly(f, {}); }

Poly Poly::one(const Field& f) { return constant(f, f.one()); }

Poly Poly::constant(const Field& f, Fq c) {
  std::vector<Fq> v;
  if (c.v != 0) v.push_back(c);
  f.element(c.v);  // range check
  return Poly(f, std::move(v));
}

Poly Poly::from_coeffs(const Field& f, std::vector<Fq> c) {
  for (Fq x : c) f.element(x.v);  // range check
  trim(c);
  return Poly(f, std::move(c));
}

Poly Poly::monomial(const Field& f, Fq c, uint32_t k) {
  if (c.v == 0) return zero(f);
  std::vector<Fq> v(k + 1, f.zero());
  v[k] = c;
  return from_coeffs(f, std::move(v));
}

Poly Poly::parse(const Field& f, std::string_view text) {
  if (text.empty()) throw ParseError("polynomial literal is empty");
  std::vector<Fq> c;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    size_t end = comma == std::string_view::npos ? text.size() : comma;
    c.push_back(f.parse(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return from_coeffs(f, std::move(c));
}

std::string Poly::format() const {
  if (is_zero()) return f_.format(f_.zero());
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += f_.format(c_[i]);
  }
  return out;
}

uint32_t Poly::deg() const {
  if (is_zero()) throw std::invalid_argument("deg: the zero polynomial has no degree");
  return static_cast<uint32_t>(c_.size() - 1);
}

Fq Poly::lc() const {
  if (is_zero()) throw std::invalid_argument("lc: the zero polynomial has no leading coefficient");
  return c_.back();
}

bool Poly::is_monic() const { return !is_zero() && c_.back() == f_.one(); }

Fq Poly::coeff(uint32_t i) const { return i < c_.size() ? c_[i] : f_.zero(); }

Fq Poly::operator()(Fq x) const {
  Fq acc = f_.zero();
  for (size_t i = c_.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x), c_[i]);
  return acc;
}

bool operator==(const Poly& a, const Poly& b) {
  check_same_field(a, b, "==");
  return a.c_ == b.c_;
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same_field(a, b, "+");
  const Field& f = a.field();
  std::vector<Fq> c(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
  for (size_t i = 0; i < c.size(); ++i) {
    Fq x = i < a.coeffs().size() ? a.coeffs()[i] : f.zero();
    Fq y = i < b.coeffs().size() ? b.coeffs()[i] : f.zero();
    c[i] = f.add(x, y);
  }
  return Poly::from_coeffs(f, std::move(c));
}

Poly operator-(const Poly& a) {
  const Field& f = a.field();
  std::vector<Fq> c = a.coeffs();
  for (Fq& x : c) x = f.neg(x);
  return Poly::from_coeffs(f, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  check_same_field(a, b, "*");
  const Field& f = a.field();
  if (a.is_zero() || b.is_zero()) return Poly::zero(f);
  std::vector<Fq> c(a.coeffs().size() + b.coeffs().size() - 1, f.zero());
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].v == 0) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
  }
  return Poly::from_coeffs(f, std::move(c));
}

Poly scale(Fq c, const Poly& a) {
  const Field& f = a.field();
  std::vector<Fq> v = a.coeffs();
  for (Fq& x : v) x = f.mul(c, x);
  return Poly::from_coeffs(f, std::move(v));
}

Poly pow(const Poly& a, uint64_t e) {
  Poly r = Poly::one(a.field());
  Poly base = a;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  check_same_field(a, b, "divrem");
  const Field& f = a.field();
  if (b.is_zero()) throw std::invalid_argument("divrem: division by the zero polynomial");
  if (a.is_zero() || (!a.is_zero() && !b.is_zero() && a.coeffs().size() < b.coeffs().size()))
    return {Poly::zero(f), a};
  Fq ilc = f.inv(b.lc());
  std::vector<Fq> r = a.coeffs();
  size_t nb = b.coeffs().size();
  std::vector<Fq> qt(r.size() - nb + 1, f.zero());
  for (size_t i = r.size(); i-- >= nb;) {
    Fq c = f.mul(r[i], ilc);
    if (c.v != 0) {
      qt[i - nb + 1] = c;
      for (size_t j = 0; j < nb; ++j)
        r[i - nb + 1 + j] = f.sub(r[i - nb + 1 + j], f.mul(c, b.coeffs()[j]));
    }
    if (i == 0) break;
  }
  return {Poly::from_coeffs(f, std::move(qt)), Poly::from_coeffs(f, std::move(r))};
}

XGcd xgcd(const Poly& a, const Poly& b) {
  check_same_field(a, b, "xgcd");
  const Field& f = a.field();
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("xgcd: both inputs are zero");
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::one(f), u1 = Poly::zero(f);
  Poly v0 = Poly::zero(f), v1 = Poly::one(f);
  while (!r1.is_zero()) {
    auto [q, r2] = divrem(r0, r1);
    Poly u2 = u0 - q * u1;
    Poly v2 = v0 - q * v1;
    r0 = r1; r1 = r2;
    u0 = u1; u1 = u2;
    v0 = v1; v1 = v2;
  }
  Fq c = f.inv(r0.lc());
  return {scale(c, r0), scale(c, u0), scale(c, v0)};
}

Poly gcd(const Poly& a, const Poly& b) { return xgcd(a, b).g; }

MonicRange::MonicRange(Field f, uint32_t n, uint64_t budget) : f_(std::move(f)), n_(n) {
  BigInt total = bigpow(BigInt(f_.q()), n);
  if (total > budget) throw BudgetError(total.str(), budget);
  size_ = static_cast<uint64_t>(total);
}

Poly MonicRange::at(uint64_t k) const {
  if (k >= size_) throw std::out_of_range("MonicRange: index out of range");
  std::vector<Fq> c(n_ + 1, f_.zero());
  for (uint32_t j = 0; j < n_; ++j) {
    c[j] = f_.element(k % f_.q());
    k /= f_.q();
  }
  c[n_] = f_.one();
  return Poly::from_coeffs(f_, std::move(c));
}

}  // namespace reslab
