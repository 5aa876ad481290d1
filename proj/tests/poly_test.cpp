// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reslab/errors.hpp"
#include "reslab/poly.hpp"
#include "reslab/rational.hpp"

using namespace reslab;

namespace {

Poly P(const Field& f, std::string_view s) { return Poly::parse(f, s); }

// every polynomial with at most `len` coefficients, each < q
std::vector<Poly> all_polys(const Field& f, uint32_t len) {
  std::vector<Poly> out;
  uint64_t total = 1;
  for (uint32_t i = 0; i < len; ++i) total *= f.q();
  for (uint64_t k = 0; k < total; ++k) {
    std::vector<Fq> c;
    uint64_t t = k;
    for (uint32_t i = 0; i < len; ++i) {
      c.push_back(f.element(t % f.q()));
      t /= f.q();
    }
    out.push_back(Poly::from_coeffs(f, c));
  }
  return out;
}

}  // namespace

TEST_CASE("zero polynomial has no degree") {
  Field f = Field::make(3, 1);
  Poly z = Poly::zero(f);
  CHECK(z.is_zero());
  CHECK_THROWS_AS(z.deg(), std::invalid_argument);
  CHECK_THROWS_AS(z.lc(), std::invalid_argument);
  CHECK(z.coeff(7) == f.zero());
  CHECK(Poly::from_coeffs(f, {f.zero(), f.zero()}).is_zero());
}

TEST_CASE("literals round-trip") {
  Field f3 = Field::make(3, 1);
  Poly p = P(f3, "2,0,1");
  CHECK(p.deg() == 2);
  CHECK(p.coeff(0) == f3.element(2));
  CHECK(p.coeff(1) == f3.zero());
  CHECK(p.is_monic());
  CHECK(p.format() == "2,0,1");
  CHECK(Poly::parse(f3, p.format()) == p);

  Field f4 = Field::make(2, 2);
  Poly q = P(f4, "1:1,0:1,1:0");
  CHECK(q.deg() == 2);
  CHECK(q.coeff(0) == f4.element(3));
  CHECK(q.coeff(1) == f4.element(2));
  CHECK(Poly::parse(f4, q.format()) == q);

  CHECK(Poly::zero(f3).format() == "0");
  CHECK_THROWS_AS(Poly::parse(f3, ""), ParseError);
  CHECK_THROWS_AS(Poly::parse(f3, "1,,2"), ParseError);
  CHECK_THROWS_AS(Poly::parse(f3, "1,3"), ParseError);
}

TEST_CASE("mixed-field operands are rejected") {
  Field f3 = Field::make(3, 1);
  Field f4 = Field::make(2, 2);
  Poly a = P(f3, "1,1");
  Poly b = P(f4, "1,1");
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(divrem(a, b), std::invalid_argument);
  // two handles to the same field are interchangeable
  Field f3b = Field::make(3, 1);
  CHECK(P(f3b, "1,1") == a);
}

TEST_CASE("division examples") {
  Field f2 = Field::make(2, 1);
  auto [q1, r1] = divrem(P(f2, "1,0,1"), P(f2, "1,1"));
  CHECK(q1 == P(f2, "1,1"));
  CHECK(r1.is_zero());

  Field f3 = Field::make(3, 1);
  auto [q2, r2] = divrem(P(f3, "1,0,1"), P(f3, "0,1"));
  CHECK(q2 == P(f3, "0,1"));
  CHECK(r2 == Poly::one(f3));

  Poly a = P(f3, "2,1,1");
  auto [q3, r3] = divrem(a, a);
  CHECK(q3 == Poly::one(f3));
  CHECK(r3.is_zero());

  CHECK_THROWS_AS(divrem(a, Poly::zero(f3)), std::invalid_argument);
}

TEST_CASE("division is exact and unique on a small grid") {
  for (uint64_t qq : {2, 3}) {
    Field f = Field::make(qq, 1);
    auto as = all_polys(f, 4);
    auto bs = all_polys(f, 3);
    for (const Poly& a : as)
      for (const Poly& b : bs) {
        if (b.is_zero()) continue;
        auto [quo, rem] = divrem(a, b);
        CHECK(quo * b + rem == a);
        if (!rem.is_zero()) CHECK(rem.deg() < b.deg());
      }
  }
}

TEST_CASE("extended gcd") {
  Field f3 = Field::make(3, 1);
  XGcd e = xgcd(P(f3, "1,0,1"), P(f3, "0,1"));
  CHECK(e.g == Poly::one(f3));
  CHECK(e.u == Poly::one(f3));
  CHECK(e.v == P(f3, "0,2"));

  Poly a = P(f3, "2,0,2");  // 2 z^2 + 2, not monic
  XGcd e2 = xgcd(a, Poly::zero(f3));
  CHECK(e2.g == P(f3, "1,0,1"));
  CHECK(e2.u == Poly::constant(f3, f3.element(2)));
  CHECK(e2.v.is_zero());

  Field f2 = Field::make(2, 1);
  CHECK(gcd(P(f2, "0,0,1"), P(f2, "0,1,1")) == P(f2, "0,1"));

  CHECK_THROWS_AS(xgcd(Poly::zero(f3), Poly::zero(f3)), std::invalid_argument);
}

TEST_CASE("extended gcd identity holds exhaustively") {
  Field f = Field::make(2, 2);
  auto as = all_polys(f, 3);
  for (const Poly& a : as)
    for (const Poly& b : as) {
      if (a.is_zero() && b.is_zero()) continue;
      XGcd e = xgcd(a, b);
      CHECK(a * e.u + b * e.v == e.g);
      CHECK(e.g.is_monic());
      if (!a.is_zero()) CHECK(divrem(a, e.g).second.is_zero());
      if (!b.is_zero()) CHECK(divrem(b, e.g).second.is_zero());
    }
}

TEST_CASE("evaluation and powers") {
  Field f5 = Field::make(5, 1);
  Poly p = P(f5, "1,2,3");  // 3z^2 + 2z + 1
  CHECK(p(f5.zero()) == f5.one());
  CHECK(p(f5.one()) == f5.element(1));          // 3+2+1 = 6 = 1
  CHECK(p(f5.element(2)) == f5.element(2));     // 12+4+1 = 17 = 2
  CHECK(pow(p, 0) == Poly::one(f5));
  CHECK(pow(p, 3) == p * p * p);
  CHECK(scale(f5.element(2), p) == P(f5, "2,4,1"));
}

TEST_CASE("monic enumeration order and bounds") {
  Field f3 = Field::make(3, 1);
  MonicRange r(f3, 2);
  CHECK(r.size() == 9);
  CHECK(r.at(0) == P(f3, "0,0,1"));  // z^2 first
  CHECK(r.at(1) == P(f3, "1,0,1"));
  CHECK(r.at(3) == P(f3, "0,1,1"));  // constant term moves fastest
  CHECK(r.at(8) == P(f3, "2,2,1"));
  for (uint64_t k = 0; k < r.size(); ++k) {
    CHECK(r.at(k).is_monic());
    CHECK(r.at(k).deg() == 2);
  }
  CHECK_THROWS_AS(r.at(9), std::out_of_range);

  MonicRange r0(f3, 0);
  CHECK(r0.size() == 1);
  CHECK(r0.at(0) == Poly::one(f3));

  CHECK_THROWS_AS(MonicRange(Field::make(5, 1), 20, 1000), BudgetError);
  try {
    MonicRange(Field::make(5, 1), 20, 1000);
  } catch (const BudgetError& e) {
    CHECK(e.required == "95367431640625");
    CHECK(e.budget == 1000);
  }
}

TEST_CASE("chart conversion") {
  Field f3 = Field::make(3, 1);
  MonicPair m = make_monic_pair(P(f3, "1,1"), P(f3, "0,1"));
  PointedMap f = convert_conventions(m);
  CHECK(f.num == P(f3, "0,1"));
  CHECK(f.den == Poly::one(f3));
  MonicPair back = convert_conventions(f);
  CHECK(back.phi == m.phi);
  CHECK(back.psi == m.psi);

  // bijection on the full degree-2 grid over GF(3)
  MonicRange deg2(f3, 2);
  int seen = 0;
  for (uint64_t i = 0; i < deg2.size(); ++i)
    for (uint64_t j = 0; j < deg2.size(); ++j) {
      MonicPair x{deg2.at(i), deg2.at(j)};
      PointedMap y = convert_conventions(x);
      CHECK(y.num.is_monic());
      CHECK(y.num.deg() == 2);
      if (!y.den.is_zero()) CHECK(y.den.deg() < 2);
      MonicPair z = convert_conventions(y);
      CHECK(z.phi == x.phi);
      CHECK(z.psi == x.psi);
      ++seen;
    }
  CHECK(seen == 81);
}

TEST_CASE("pair and map validation") {
  Field f3 = Field::make(3, 1);
  CHECK_THROWS_AS(make_monic_pair(P(f3, "0,2"), P(f3, "0,1")), std::invalid_argument);
  CHECK_THROWS_AS(make_monic_pair(P(f3, "0,1"), P(f3, "0,0,1")), std::invalid_argument);
  CHECK_THROWS_AS(make_monic_pair(Poly::one(f3), Poly::one(f3)), std::invalid_argument);
  CHECK_THROWS_AS(make_pointed_map(P(f3, "0,1"), P(f3, "1,1")), std::invalid_argument);
  CHECK_THROWS_AS(make_pointed_map(P(f3, "0,2"), Poly::one(f3)), std::invalid_argument);
  CHECK_NOTHROW(make_pointed_map(P(f3, "0,0,1"), Poly::zero(f3)));
}
