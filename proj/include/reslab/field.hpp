// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "reslab/bigint.hpp"

namespace reslab {

// Largest field size the table-based representation accepts. Construction
// stores q x q add/mul tables, so the cap keeps memory bounded.
inline constexpr uint64_t kMaxFieldSize = 2048;

// Element of GF(q), identified by its index in the canonical enumeration:
// an element with coordinate vector (c_0, .., c_{d-1}) over GF(p) has index
// sum c_i p^i. Only meaningful together with the Field that produced it.
struct Fq {
  uint32_t v = 0;
  friend constexpr bool operator==(Fq, Fq) = default;
  friend constexpr auto operator<=>(Fq, Fq) = default;
};

namespace detail {
struct FieldData;
}

// Immutable finite field GF(p^d) with table-driven arithmetic. Handles are
// cheap to copy and share one representation. Construction is deterministic:
// the modulus is the monic irreducible of degree d over GF(p) with the
// smallest integer encoding, so equal (p, d) always give identical tables.
class Field {
 public:
  // Builds GF(p^d). Throws std::invalid_argument when p is not prime,
  // d < 1, or p^d exceeds min(max_q, kMaxFieldSize).
  static Field make(uint64_t p, uint32_t d, uint64_t max_q = kMaxFieldSize);

  uint64_t p() const;
  uint32_t d() const;
  uint64_t q() const;

  // Coefficients of the defining modulus, ascending, over GF(p), length d+1.
  // Empty for prime fields (d == 1), which need no extension modulus.
  const std::vector<uint64_t>& modulus() const;

  Fq zero() const { return {0}; }
  Fq one() const { return {1}; }

  // Element by index; throws when index >= q.
  Fq element(uint64_t index) const;
  // Reduction of a (possibly negative) integer along GF(p) in the constants.
  Fq from_int(int64_t value) const;
  // Coordinates of x over GF(p), ascending, length d.
  std::vector<uint64_t> coords(Fq x) const;

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;  // throws on zero
  Fq div(Fq a, Fq b) const;
  Fq pow(Fq a, uint64_t e) const;
  Fq pow(Fq a, const BigInt& e) const;  // requires e >= 0

  // Order of x in the unit group; throws on zero.
  uint64_t multiplicative_order(Fq x) const;
  // All solutions of x^n = 1, ascending by element index.
  std::vector<Fq> roots_of_unity(uint64_t n) const;
  // A fixed generator of the unit group (smallest primitive element index).
  Fq generator() const;

  // Literal form: base-p digits of the index, least significant first,
  // joined by ':'. parse() also accepts a bare decimal index.
  std::string format(Fq x) const;
  Fq parse(std::string_view text) const;

  bool same(const Field& other) const { return p() == other.p() && d() == other.d(); }

  // Raw table access for hot loops. Tables stay valid while any handle to
  // this field lives. add/mul are q x q row-major, neg/inv have length q.
  const uint16_t* add_table() const;
  const uint16_t* mul_table() const;
  const uint16_t* neg_table() const;
  const uint16_t* inv_table() const;

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

}  // namespace reslab
