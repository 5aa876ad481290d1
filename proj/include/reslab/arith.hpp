// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "reslab/bigint.hpp"

namespace reslab {

// Moebius function. 0 when n has a square factor, else (-1)^(#prime factors).
int mobius(uint64_t n);

// Euler totient.
uint64_t totient(uint64_t n);

// Divisors of n in ascending order.
std::vector<uint64_t> divisors(uint64_t n);

bool is_prime(uint64_t n);

// Factors q as p^d with p prime, d >= 1. Returns false when q is not a
// prime power (including q < 2).
bool factor_prime_power(uint64_t q, uint64_t& p, uint32_t& d);

// Dirichlet convolution (f * g)(n) = sum over d | n of f(d) g(n/d).
BigInt dirichlet_convolve(const std::function<BigInt(uint64_t)>& f,
                          const std::function<BigInt(uint64_t)>& g, uint64_t n);

// Binomial coefficient, 0 when k > n.
BigInt binomial(uint64_t n, uint64_t k);

}  // namespace reslab
