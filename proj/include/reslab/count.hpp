// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reslab/arith.hpp"
#include "reslab/bigint.hpp"
#include "reslab/errors.hpp"
#include "reslab/field.hpp"

namespace reslab {

// All counts are exact integers of unbounded size. q must be a prime power
// and n >= 1 unless stated otherwise.

// sum over divisors a of n with q = 1 (mod n/a) of phi(n/a) q^(n-1+a).
BigInt count_divisor_form(uint64_t n, uint64_t q);

// q^n * sum over ordered triples abc = n of mu(a) q^(b-1) gcd(c, q-1).
BigInt count_convolution_form(uint64_t n, uint64_t q);

// The same number assembled from the continued-fraction stratification:
// q^n * sum over compositions (n_1..n_r) of n of the number of unit tuples
// with prod a_i^(n_i) = epsilon(n_1..n_r). Every composition contributes
// (q-1)^(r-1) gcd(q-1, gcd(n_i)), so the sum collapses to composition
// counts by length and gcd; that aggregate is what gets evaluated.
BigInt count_structured(uint64_t n, uint64_t q);

// Points of the whole coprime locus: q^(2n) - q^(2n-1).
BigInt count_mn(uint64_t n, uint64_t q);

// Points of the slice with vanishing subleading psi-coefficient and
// resultant one. Requires gcd(q, n) = 1; equals the resultant-one count
// divided by q (exactly).
BigInt count_xn(uint64_t n, uint64_t q);

// Pairs with resultant equal to the unit x: q^n * sum over abc = n of
// mu(a) q^(b-1) g(c), where g(c) = gcd(c, q-1) when that gcd divides
// (q-1) / order(x) and 0 otherwise.
BigInt count_value_x(uint64_t n, const Field& field, Fq x);

// Number of unit tuples (u_1..u_r) with prod u_i^(n_i) = x. Writing
// g0 = gcd(q-1, n_1, .., n_r): zero unless order(x) divides (q-1)/g0, in
// which case (q-1)^(r-1) g0.
BigInt unit_solution_count(const Field& field, std::span<const uint64_t> parts, Fq x);

// Compositions of n into exactly r ordered parts: C(n-1, r-1).
BigInt compositions_into_parts(uint64_t n, uint64_t r);
// Those whose parts have gcd exactly d (requires d | n).
BigInt compositions_with_gcd(uint64_t n, uint64_t r, uint64_t d);

// Visits every composition of n (ascending binary-mask order). Test-scale
// only: throws when n > 30.
template <typename Fn>
void for_each_composition(uint32_t n, Fn&& fn) {
  if (n == 0 || n > 30) throw std::invalid_argument("for_each_composition: n out of range");
  uint64_t limit = 1ull << (n - 1);
  std::vector<uint64_t> parts;
  for (uint64_t mask = 0; mask < limit; ++mask) {
    parts.clear();
    uint64_t run = 1;
    for (uint32_t i = 0; i + 1 < n; ++i) {
      if (mask >> i & 1) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    fn(std::span<const uint64_t>(parts));
  }
}

enum class Variety { kRes, kMn, kXn, kFn };

struct Target {
  enum Kind { kOne, kUnit, kAllNonzero };
  Kind kind = kOne;
  Fq x{1};
};

struct CountQuery {
  uint32_t n;
  Field field;
  Variety variety = Variety::kRes;
  Target target{};
};

// Exhaustive enumeration oracle. Returns the census of resultant values:
// entry v counts the configurations whose resultant is element v. The
// enumerated space is monic pairs for kRes/kMn (q^2n), pointed maps for
// kFn (q^2n), and the pinned-coefficient slice for kXn (q^(2n-1)). Refuses
// with BudgetError beyond the budget. Deterministic for any worker count.
std::vector<uint64_t> brute_force_tally(const Field& field, uint32_t n, Variety variety,
                                        uint64_t budget = kDefaultBudget, unsigned workers = 1);

// Single number out of the census, selected by the query's variety and
// target (kRes/kXn default to resultant one, kMn to all nonzero).
BigInt brute_force_count(const CountQuery& query, uint64_t budget = kDefaultBudget,
                         unsigned workers = 1);

// One grid point of the verification sweep: every closed form, plus the
// Lefschetz route when gcd(q, n) = 1, plus the oracle when it fits the
// budget. agree is the conjunction of pairwise equality.
struct VerifyRecord {
  uint64_t n = 0;
  uint64_t q = 0;
  std::vector<std::pair<std::string, BigInt>> methods;
  bool agree = true;
  std::string notes;
};

VerifyRecord verify_point(uint32_t n, const Field& field, uint64_t budget = kDefaultBudget,
                          unsigned workers = 1);

// One JSON object per record, counts as decimal strings, stable key order.
std::string to_json_line(const VerifyRecord& record);

}  // namespace reslab
