// SPDX-License-Identifier: Apache-2.0
#include "reslab/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace reslab {

int mobius(uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius: n must be positive");
  int sign = 1;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

uint64_t totient(uint64_t n) {
  if (n == 0) throw std::invalid_argument("totient: n must be positive");
  uint64_t r = n;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

std::vector<uint64_t> divisors(uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<uint64_t> lo, hi;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool factor_prime_power(uint64_t q, uint64_t& p, uint32_t& d) {
  if (q < 2) return false;
  uint64_t base = q;
  for (uint64_t c = 2; c * c <= q; ++c) {
    if (q % c == 0) {
      base = c;
      break;
    }
  }
  uint32_t e = 0;
  uint64_t rest = q;
  while (rest % base == 0) {
    rest /= base;
    ++e;
  }
  if (rest != 1) return false;
  p = base;
  d = e;
  return true;
}

BigInt dirichlet_convolve(const std::function<BigInt(uint64_t)>& f,
                          const std::function<BigInt(uint64_t)>& g, uint64_t n) {
  BigInt total = 0;
  for (uint64_t d : divisors(n)) total += f(d) * g(n / d);
  return total;
}

BigInt binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace reslab
