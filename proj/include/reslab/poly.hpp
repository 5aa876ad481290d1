// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reslab/errors.hpp"
#include "reslab/field.hpp"

namespace reslab {

// Univariate polynomial over a finite field. Coefficients are stored
// ascending and kept normalized (no trailing zeros); the zero polynomial is
// the empty coefficient list. The zero polynomial has no degree: deg() and
// lc() throw on it, so callers must branch on is_zero() explicitly.
class Poly {
 public:
  static Poly zero(const Field& f);
  static Poly one(const Field& f);
  static Poly constant(const Field& f, Fq c);
  // c may have trailing zeros; they are trimmed.
  static Poly from_coeffs(const Field& f, std::vector<Fq> c);
  static Poly monomial(const Field& f, Fq c, uint32_t k);  // c z^k
  // Comma-separated coefficient literals, ascending: "2,0,1" is z^2 + 2.
  static Poly parse(const Field& f, std::string_view text);
  std::string format() const;

  const Field& field() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  uint32_t deg() const;                      // throws on zero
  Fq lc() const;                             // leading coefficient, throws on zero
  bool is_monic() const;
  Fq coeff(uint32_t i) const;                // 0 beyond the stored length
  const std::vector<Fq>& coeffs() const { return c_; }

  Fq operator()(Fq x) const;                 // evaluation

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  Poly(Field f, std::vector<Fq> c) : f_(std::move(f)), c_(std::move(c)) {}
  Field f_;
  std::vector<Fq> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(Fq c, const Poly& a);
Poly pow(const Poly& a, uint64_t e);

// Quotient and remainder with deg r < deg b. Throws when b is zero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

struct XGcd {
  Poly g, u, v;  // g monic (or zero), a u + b v = g
};

// Extended Euclid with the gcd normalized monic. Throws when both inputs
// are zero.
XGcd xgcd(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);

// The k-th monic polynomial of degree n: coefficient of z^j is element
// (k / q^j) mod q, so enumeration starts at z^n and the constant term moves
// fastest. Checked against the budget before anything is touched.
class MonicRange {
 public:
  MonicRange(Field f, uint32_t n, uint64_t budget = kDefaultBudget);
  uint64_t size() const { return size_; }
  Poly at(uint64_t k) const;

 private:
  Field f_;
  uint32_t n_;
  uint64_t size_;
};

}  // namespace reslab
