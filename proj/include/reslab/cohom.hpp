// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reslab/bigint.hpp"

namespace reslab {

// One cohomology row of the resultant-one space in degree 2i (i = n - a,
// one row per divisor a of n): rank phi(n/a), pure of weight i, and a Tate
// twist exactly when the ground field satisfies q = 1 (mod n/a). The a = n
// row is degree 0 with rank 1. Ranks over all rows sum to n.
struct CohomRow {
  uint64_t degree;        // 2 (n - a)
  uint64_t a;             // the divisor indexing the row
  uint64_t rank;          // phi(n/a)
  uint64_t weight;        // n - a
  uint64_t tate_modulus;  // n / a: the row is Tate iff q = 1 (mod this)
};

struct CohomTable {
  uint64_t n;
  std::vector<CohomRow> rows;  // ascending degree
};

CohomTable betti_table(uint64_t n);

// The basis of the degree-2(n-a) row is indexed by O_a, the residues
// m in [1, n] with gcd(m, n) = a; Frobenius permutes it by m -> q m (mod n)
// (representatives in [1, n]). Requires a | n and gcd(q, n) = 1. Each fixed
// basis vector contributes q^(n-a) to the trace in that degree; the
// fixed count is phi(n/a) when q = 1 (mod n/a) and 0 otherwise.
struct FrobeniusAction {
  uint64_t n, a, q;
  std::vector<uint64_t> orbit;        // O_a, ascending
  std::vector<uint64_t> image;        // image[i] = q * orbit[i] mod n
  uint64_t fixed_count;
  std::vector<uint64_t> cycle_type;   // cycle lengths, ascending
  BigInt trace;                       // q^(n-a) * fixed_count
};

FrobeniusAction frobenius_action(uint64_t n, uint64_t a, uint64_t q);

// Character-level refinement. When q = 1 (mod n) Frobenius fixes every
// character and the table resolves into n rank-one rows labeled by
// m = 0 .. n-1 (m = 0 in degree 0, m >= 1 in degree 2(n - gcd(m, n))).
// Otherwise only the divisor blocks are stable and the rows are the blocks.
struct IsotypicRow {
  uint64_t label;   // m, or the divisor a in block mode
  uint64_t degree;
  uint64_t rank;
};

struct IsotypicTable {
  uint64_t n, q;
  bool per_character;  // true iff q = 1 (mod n)
  std::vector<IsotypicRow> rows;
};

IsotypicTable isotypic_table(uint64_t n, uint64_t q);

// Point count assembled from the table: sum over rows of
// q^((2n-1) - weight) * fixed_count. Requires gcd(q, n) = 1.
BigInt lefschetz_count(uint64_t n, uint64_t q);

// Renderings of the table together with the Frobenius data at q.
// JSON schema: {"n":…, "q":…, "lefschetz":"<decimal>", "rows":[{"degree":…,
// "a":…, "rank":…, "weight":…, "fixed":…, "trace_contribution":"<decimal>",
// "tate":bool}]}, where trace_contribution is the point-count summand
// q^((2n-1) - weight) * fixed.
std::string betti_json(uint64_t n, uint64_t q);
std::string betti_text(uint64_t n, uint64_t q);

}  // namespace reslab
