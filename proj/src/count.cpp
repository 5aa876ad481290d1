// SPDX-License-Identifier: Apache-2.0
#include "reslab/count.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "reslab/cohom.hpp"
#include "reslab/resultant.hpp"

namespace reslab {

namespace {

void check_nq(uint64_t n, uint64_t q) {
  if (n < 1) throw std::invalid_argument("count: n must be at least 1");
  uint64_t p;
  uint32_t d;
  if (!factor_prime_power(q, p, d))
    throw std::invalid_argument("count: q must be a prime power");
}

}  // namespace

BigInt count_divisor_form(uint64_t n, uint64_t q) {
  check_nq(n, q);
  BigInt total = 0;
  for (uint64_t a : divisors(n)) {
    uint64_t m = n / a;
    if ((q - 1) % m) continue;
    total += BigInt(totient(m)) * bigpow(q, n - 1 + a);
  }
  return total;
}

BigInt count_convolution_form(uint64_t n, uint64_t q) {
  check_nq(n, q);
  BigInt inner = 0;
  for (uint64_t a : divisors(n)) {
    int mu = mobius(a);
    if (!mu) continue;
    for (uint64_t b : divisors(n / a)) {
      uint64_t c = n / a / b;
      inner += BigInt(mu) * bigpow(q, b - 1) * std::gcd(c, q - 1);
    }
  }
  return bigpow(q, n) * inner;
}

BigInt count_structured(uint64_t n, uint64_t q) {
  check_nq(n, q);
  BigInt total = 0;
  for (uint64_t r = 1; r <= n; ++r) {
    BigInt layer = 0;
    for (uint64_t d : divisors(n))
      layer += compositions_with_gcd(n, r, d) * std::gcd(d, q - 1);
    total += bigpow(q - 1, r - 1) * layer;
  }
  return bigpow(q, n) * total;
}

BigInt count_mn(uint64_t n, uint64_t q) {
  check_nq(n, q);
  return bigpow(q, 2 * n) - bigpow(q, 2 * n - 1);
}

BigInt count_xn(uint64_t n, uint64_t q) {
  check_nq(n, q);
  if (std::gcd(n, q) != 1)
    throw std::invalid_argument("count_xn: requires gcd(q, n) = 1");
  BigInt total = count_convolution_form(n, q);
  if (total % q != 0) throw std::logic_error("count_xn: total not divisible by q");
  return total / q;
}

BigInt count_value_x(uint64_t n, const Field& field, Fq x) {
  uint64_t q = field.q();
  check_nq(n, q);
  if (x.v == 0) throw std::invalid_argument("count_value_x: x must be a unit");
  uint64_t cap = (q - 1) / field.multiplicative_order(x);
  BigInt inner = 0;
  for (uint64_t a : divisors(n)) {
    int mu = mobius(a);
    if (!mu) continue;
    for (uint64_t b : divisors(n / a)) {
      uint64_t c = n / a / b;
      uint64_t g = std::gcd(c, q - 1);
      if (cap % g) continue;
      inner += BigInt(mu) * bigpow(q, b - 1) * g;
    }
  }
  return bigpow(q, n) * inner;
}

BigInt unit_solution_count(const Field& field, std::span<const uint64_t> parts, Fq x) {
  if (parts.empty()) throw std::invalid_argument("unit_solution_count: empty composition");
  if (x.v == 0) throw std::invalid_argument("unit_solution_count: x must be a unit");
  uint64_t q = field.q();
  uint64_t g0 = q - 1;
  for (uint64_t ni : parts) {
    if (ni < 1) throw std::invalid_argument("unit_solution_count: parts must be positive");
    g0 = std::gcd(g0, ni);
  }
  if (((q - 1) / g0) % field.multiplicative_order(x)) return 0;
  return bigpow(q - 1, parts.size() - 1) * g0;
}

BigInt compositions_into_parts(uint64_t n, uint64_t r) {
  if (n < 1 || r < 1) throw std::invalid_argument("compositions: n and r must be positive");
  return binomial(n - 1, r - 1);
}

BigInt compositions_with_gcd(uint64_t n, uint64_t r, uint64_t d) {
  if (n < 1 || r < 1) throw std::invalid_argument("compositions: n and r must be positive");
  if (d < 1 || n % d) throw std::invalid_argument("compositions: d must divide n");
  BigInt total = 0;
  for (uint64_t e : divisors(n / d)) {
    int mu = mobius(e);
    if (!mu) continue;
    total += BigInt(mu) * binomial(n / (d * e) - 1, r - 1);
  }
  return total;
}

namespace {

uint64_t pow_checked(uint64_t base, uint32_t e, uint64_t budget) {
  BigInt total = bigpow(base, e);
  if (total > budget) throw BudgetError(total.str(), budget);
  return static_cast<uint64_t>(total);
}

// Census of resultant values over one contiguous slice of the outer index
// range. The outer polynomial is monic of degree n (its subleading
// coefficient pinned to zero for kXn); the inner one is monic of degree n
// for kRes/kMn and unrestricted of degree < n for kFn/kXn.
void tally_slice(const Field& F, uint32_t n, Variety var, uint64_t lo, uint64_t hi,
                 std::vector<uint64_t>& tally) {
  const uint64_t q = F.q();
  const bool inner_monic = var == Variety::kRes || var == Variety::kMn;
  const bool outer_pinned = var == Variety::kXn;
  const uint32_t outer_digits = outer_pinned ? n - 1 : n;
  uint64_t inner_total = 1;
  for (uint32_t i = 0; i < n; ++i) inner_total *= q;

  std::vector<uint16_t> outer(n + 1, 0), inner(n + 1, 0);
  std::vector<uint16_t> fb(n + 1), gb(n + 1);
  outer[n] = 1;
  const size_t f_len = inner_monic ? n + 1 : n;

  for (uint64_t ok = lo; ok < hi; ++ok) {
    uint64_t t = ok;
    for (uint32_t i = 0; i < outer_digits; ++i) {
      outer[i] = static_cast<uint16_t>(t % q);
      t /= q;
    }
    if (outer_pinned) outer[n - 1] = 0;

    std::fill(inner.begin(), inner.end(), 0);
    if (inner_monic) inner[n] = 1;
    for (uint64_t ik = 0; ik < inner_total; ++ik) {
      std::copy_n(inner.data(), f_len, fb.data());
      std::copy_n(outer.data(), n + 1, gb.data());
      uint32_t r = detail::resultant_euclid_raw(F, fb.data(), f_len, gb.data(), n + 1);
      ++tally[r];
      for (uint32_t j = 0; j < n; ++j) {
        if (++inner[j] < q) break;
        inner[j] = 0;
      }
    }
  }
}

}  // namespace

std::vector<uint64_t> brute_force_tally(const Field& field, uint32_t n, Variety variety,
                                        uint64_t budget, unsigned workers) {
  if (n < 1) throw std::invalid_argument("brute_force: n must be at least 1");
  const uint64_t q = field.q();
  const uint32_t outer_digits = variety == Variety::kXn ? n - 1 : n;
  BigInt cost = bigpow(q, outer_digits + n);
  if (cost > budget) throw BudgetError(cost.str(), budget);
  uint64_t outer_total = pow_checked(q, outer_digits, budget);

  workers = std::max(1u, workers);
  if (workers == 1 || outer_total < 2 * workers) {
    std::vector<uint64_t> tally(q, 0);
    tally_slice(field, n, variety, 0, outer_total, tally);
    return tally;
  }
  std::vector<std::vector<uint64_t>> partial(workers, std::vector<uint64_t>(q, 0));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    uint64_t lo = outer_total * w / workers;
    uint64_t hi = outer_total * (w + 1) / workers;
    pool.emplace_back([&, lo, hi, w] { tally_slice(field, n, variety, lo, hi, partial[w]); });
  }
  for (auto& th : pool) th.join();
  std::vector<uint64_t> tally(q, 0);
  for (const auto& part : partial)
    for (uint64_t v = 0; v < q; ++v) tally[v] += part[v];
  return tally;
}

BigInt brute_force_count(const CountQuery& query, uint64_t budget, unsigned workers) {
  auto tally = brute_force_tally(query.field, query.n, query.variety, budget, workers);
  auto sum_nonzero = [&] {
    BigInt s = 0;
    for (size_t v = 1; v < tally.size(); ++v) s += tally[v];
    return s;
  };
  switch (query.variety) {
    case Variety::kMn:
      return sum_nonzero();
    case Variety::kXn:
      return tally[1];
    case Variety::kRes:
    case Variety::kFn:
      break;
  }
  switch (query.target.kind) {
    case Target::kOne:
      return tally[1];
    case Target::kUnit:
      if (query.target.x.v == 0 || query.target.x.v >= tally.size())
        throw std::invalid_argument("brute_force: target value must be a unit");
      return tally[query.target.x.v];
    case Target::kAllNonzero:
      return sum_nonzero();
  }
  throw std::logic_error("brute_force: unreachable");
}

VerifyRecord verify_point(uint32_t n, const Field& field, uint64_t budget, unsigned workers) {
  const uint64_t q = field.q();
  VerifyRecord rec;
  rec.n = n;
  rec.q = q;
  rec.methods.emplace_back("divisor", count_divisor_form(n, q));
  rec.methods.emplace_back("convolution", count_convolution_form(n, q));
  rec.methods.emplace_back("structured", count_structured(n, q));
  if (std::gcd(q, static_cast<uint64_t>(n)) == 1)
    rec.methods.emplace_back("lefschetz", lefschetz_count(n, q));
  BigInt cost = bigpow(q, 2 * n);
  if (cost <= budget) {
    CountQuery query{n, field, Variety::kRes, {}};
    rec.methods.emplace_back("brute", brute_force_count(query, budget, workers));
  } else {
    rec.notes = "brute force skipped: needs " + cost.str() + " enumerations, budget " +
                std::to_string(budget);
  }
  rec.agree = true;
  for (const auto& [name, value] : rec.methods)
    if (value != rec.methods.front().second) rec.agree = false;
  return rec;
}

std::string to_json_line(const VerifyRecord& record) {
  nlohmann::json methods = nlohmann::json::object();
  for (const auto& [name, value] : record.methods) methods[name] = value.str();
  nlohmann::json j{{"n", record.n},
                   {"q", record.q},
                   {"methods", methods},
                   {"agree", record.agree},
                   {"notes", record.notes}};
  return j.dump();
}

}  // namespace reslab
