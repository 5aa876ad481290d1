// SPDX-License-Identifier: Apache-2.0
#include "reslab/cohom.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "reslab/arith.hpp"

namespace reslab {

namespace {

void check_n(uint64_t n) {
  if (n < 1) throw std::invalid_argument("cohom: n must be at least 1");
}

void check_coprime(uint64_t n, uint64_t q) {
  if (q < 2) throw std::invalid_argument("cohom: q must be at least 2");
  if (std::gcd(n, q) != 1) throw std::invalid_argument("cohom: requires gcd(q, n) = 1");
}

}  // namespace

CohomTable betti_table(uint64_t n) {
  check_n(n);
  CohomTable t{n, {}};
  std::vector<uint64_t> divs = divisors(n);
  // ascending degree 2(n - a) means descending divisor a
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    uint64_t a = *it;
    t.rows.push_back({2 * (n - a), a, totient(n / a), n - a, n / a});
  }
  return t;
}

FrobeniusAction frobenius_action(uint64_t n, uint64_t a, uint64_t q) {
  check_n(n);
  check_coprime(n, q);
  if (a < 1 || n % a) throw std::invalid_argument("cohom: a must divide n");
  FrobeniusAction act{n, a, q, {}, {}, 0, {}, 0};
  for (uint64_t m = 1; m <= n; ++m)
    if (std::gcd(m, n) == a) act.orbit.push_back(m);
  act.image.reserve(act.orbit.size());
  for (uint64_t m : act.orbit) {
    uint64_t im = (q % n) * m % n;
    if (im == 0) im = n;
    act.image.push_back(im);
    if (im == m) ++act.fixed_count;
  }
  // cycle type of the permutation
  std::vector<bool> seen(act.orbit.size(), false);
  auto index_of = [&](uint64_t m) {
    return static_cast<size_t>(std::lower_bound(act.orbit.begin(), act.orbit.end(), m) -
                               act.orbit.begin());
  };
  for (size_t i = 0; i < act.orbit.size(); ++i) {
    if (seen[i]) continue;
    uint64_t len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      j = index_of(act.image[j]);
    }
    act.cycle_type.push_back(len);
  }
  std::sort(act.cycle_type.begin(), act.cycle_type.end());
  act.trace = bigpow(q, n - a) * act.fixed_count;
  return act;
}

IsotypicTable isotypic_table(uint64_t n, uint64_t q) {
  check_n(n);
  check_coprime(n, q);
  IsotypicTable t{n, q, (q - 1) % n == 0, {}};
  if (t.per_character) {
    t.rows.push_back({0, 0, 1});
    for (uint64_t m = 1; m < n; ++m)
      t.rows.push_back({m, 2 * (n - std::gcd(m, n)), 1});
  } else {
    for (const CohomRow& row : betti_table(n).rows)
      t.rows.push_back({row.a, row.degree, row.rank});
  }
  return t;
}

BigInt lefschetz_count(uint64_t n, uint64_t q) {
  check_n(n);
  check_coprime(n, q);
  BigInt total = 0;
  for (const CohomRow& row : betti_table(n).rows) {
    FrobeniusAction act = frobenius_action(n, row.a, q);
    total += bigpow(q, (2 * n - 1) - row.weight) * act.fixed_count;
  }
  return total;
}

namespace {

nlohmann::json betti_rows_json(uint64_t n, uint64_t q) {
  nlohmann::json rows = nlohmann::json::array();
  for (const CohomRow& row : betti_table(n).rows) {
    FrobeniusAction act = frobenius_action(n, row.a, q);
    BigInt contribution = bigpow(q, (2 * n - 1) - row.weight) * act.fixed_count;
    rows.push_back({{"degree", row.degree},
                    {"a", row.a},
                    {"rank", row.rank},
                    {"weight", row.weight},
                    {"fixed", act.fixed_count},
                    {"trace_contribution", contribution.str()},
                    {"tate", (q - 1) % row.tate_modulus == 0}});
  }
  return rows;
}

}  // namespace

std::string betti_json(uint64_t n, uint64_t q) {
  nlohmann::json j{{"n", n},
                   {"q", q},
                   {"lefschetz", lefschetz_count(n, q).str()},
                   {"rows", betti_rows_json(n, q)}};
  return j.dump();
}

std::string betti_text(uint64_t n, uint64_t q) {
  std::ostringstream out;
  out << "cohomology of the resultant-one space, n = " << n << ", q = " << q << "\n";
  out << "degree  a  rank  weight  fixed  tate  trace_contribution\n";
  for (const CohomRow& row : betti_table(n).rows) {
    FrobeniusAction act = frobenius_action(n, row.a, q);
    BigInt contribution = bigpow(q, (2 * n - 1) - row.weight) * act.fixed_count;
    bool tate = (q - 1) % row.tate_modulus == 0;
    out << row.degree << "  " << row.a << "  " << row.rank << "  " << row.weight << "  "
        << act.fixed_count << "  " << (tate ? "yes" : "no") << "  " << contribution.str() << "\n";
  }
  out << "lefschetz " << lefschetz_count(n, q).str() << "\n";
  return out.str();
}

}  // namespace reslab
