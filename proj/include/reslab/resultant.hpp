// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "reslab/rational.hpp"

namespace reslab {

// Degree-sum ceiling for a single resultant evaluation.
inline constexpr uint32_t kMaxResultantDegree = 1024;

enum class ResultantMethod { kSylvester, kEuclid };

// Sylvester matrix in ascending-coefficient layout. For f of degree m and
// g of degree k the matrix has size (m + k): first k rows carry the
// coefficients a_0 .. a_m of f, row j starting at column j; the next m rows
// carry b_0 .. b_k of g the same way. Its determinant is
// lc(g)^m * prod f(beta) over the roots beta of g (with multiplicity).
struct SylvesterMatrix {
  Field field;
  uint32_t size;
  std::vector<Fq> entries;  // row-major, size * size
  Fq at(uint32_t row, uint32_t col) const { return entries[static_cast<size_t>(row) * size + col]; }
};

// Requires both polynomials nonzero. Throws on degree-bound violations.
SylvesterMatrix sylvester_matrix(const Poly& f, const Poly& g);

// Determinant by in-place Gaussian elimination.
Fq determinant(SylvesterMatrix m);

// resultant(f, g) = lc(g)^deg(f) * prod of f over the roots of g; equal to
// the Sylvester determinant above, and computed either that way or by the
// Euclidean remainder recurrence. The two methods agree on nonzero inputs.
// Zero edges keep "resultant = 0 iff gcd is nonconstant": both inputs zero
// is an error; zero against a nonzero constant gives 1; zero against
// positive degree gives 0.
Fq resultant(const Poly& f, const Poly& g,
             ResultantMethod method = ResultantMethod::kEuclid);

// prod of phi over the roots of psi.
Fq resultant(const MonicPair& m, ResultantMethod method = ResultantMethod::kEuclid);
// prod of den over the roots of num.
Fq resultant(const PointedMap& f, ResultantMethod method = ResultantMethod::kEuclid);

// The scaling action of a root of unity: lambda . (phi, psi) =
// (psi + lambda (phi - psi), psi). Requires lambda^n = 1 where n is the
// pair's degree; scales the resultant by lambda^n, hence preserves it.
MonicPair mu_action(Fq lambda, const MonicPair& x);

// Exact monic k-th root. Returns nothing when f is not a k-th power.
// f must be monic; k >= 1. No factorization: prime-index roots are pulled
// out one at a time (undetermined coefficients from the top degree down,
// or the inverse Frobenius for the characteristic), then the power is
// verified exactly.
std::optional<Poly> monic_kth_root(const Poly& f, uint64_t k);

// Splitting data on the stratum where psi is an (n/a)-th power: psi =
// chi^(n/a) with chi monic of degree a, and phi = phi0 chi + phi1 with
// phi0 monic of degree exactly n - a and deg phi1 < a. Requires a | n,
// resultant(phi, psi) = 1, and psi a perfect power; throws otherwise.
struct YSplit {
  Poly chi, phi1, phi0;
};
YSplit y_split(const MonicPair& x, uint64_t a);

namespace detail {
// Shared Euclidean kernel over raw coefficient index arrays (ascending,
// sizes nf and ng are coefficient counts, 0 for the zero polynomial).
// Destroys the buffers. Implements the zero-edge rules of resultant().
// Requires not both inputs zero.
uint32_t resultant_euclid_raw(const Field& F, uint16_t* f, size_t nf, uint16_t* g, size_t ng);
}  // namespace detail

}  // namespace reslab
