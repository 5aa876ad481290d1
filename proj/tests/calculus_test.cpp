// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "reslab/calculus.hpp"
#include "reslab/count.hpp"
#include "reslab/resultant.hpp"

using namespace reslab;

namespace {

Poly P(const Field& f, std::string_view s) { return Poly::parse(f, s); }

// all pointed maps of degree n with coprime entries
std::vector<PointedMap> coprime_maps(const Field& f, uint32_t n) {
  std::vector<PointedMap> out;
  MonicRange nums(f, n);
  uint64_t den_total = 1;
  for (uint32_t i = 0; i < n; ++i) den_total *= f.q();
  for (uint64_t i = 0; i < nums.size(); ++i) {
    Poly a = nums.at(i);
    for (uint64_t k = 0; k < den_total; ++k) {
      std::vector<Fq> c;
      uint64_t t = k;
      for (uint32_t j = 0; j < n; ++j) {
        c.push_back(f.element(t % f.q()));
        t /= f.q();
      }
      Poly b = Poly::from_coeffs(f, c);
      if (b.is_zero()) continue;
      if (gcd(a, b) == Poly::one(f)) out.push_back({a, b});
    }
  }
  return out;
}

std::string key(const PointedMap& m) { return m.num.format() + "|" + m.den.format(); }

}  // namespace

TEST_CASE("bezout normal form examples") {
  Field f3 = Field::make(3, 1);
  BezoutForm b = bezout_normal_form({P(f3, "0,0,1"), P(f3, "1,1")});
  CHECK(b.u == Poly::one(f3));
  CHECK(b.v == P(f3, "1,2"));

  BezoutForm b2 = bezout_normal_form({P(f3, "0,0,0,1"), Poly::one(f3)});
  CHECK(b2.u.is_zero());
  CHECK(b2.v == Poly::one(f3));

  BezoutForm b3 = bezout_normal_form({P(f3, "0,1"), Poly::constant(f3, f3.element(2))});
  CHECK(b3.u.is_zero());
  CHECK(b3.v == Poly::constant(f3, f3.element(2)));  // 1/2 = 2

  CHECK_THROWS_AS(bezout_normal_form({P(f3, "0,0,1"), P(f3, "0,1")}), std::invalid_argument);
  CHECK_THROWS_AS(bezout_normal_form({P(f3, "0,0,1"), Poly::zero(f3)}), std::invalid_argument);
}

TEST_CASE("bezout form is the unique degree-bounded solution") {
  Field f = Field::make(3, 1);
  for (const PointedMap& m : coprime_maps(f, 2)) {
    BezoutForm b = bezout_normal_form(m);
    CHECK(m.num * b.u + m.den * b.v == Poly::one(f));
    if (!b.u.is_zero()) CHECK(b.u.deg() <= 0);
    if (!b.v.is_zero()) CHECK(b.v.deg() <= 1);
    // count all degree-bounded solutions directly
    int solutions = 0;
    for (uint64_t uu = 0; uu < 3; ++uu)
      for (uint64_t vv = 0; vv < 9; ++vv) {
        Poly u = Poly::constant(f, f.element(uu));
        Poly v = Poly::from_coeffs(f, {f.element(vv % 3), f.element(vv / 3)});
        if (m.num * u + m.den * v == Poly::one(f)) ++solutions;
      }
    CHECK(solutions == 1);
  }
}

TEST_CASE("oplus worked example") {
  Field f3 = Field::make(3, 1);
  PointedMap z1{P(f3, "0,1"), Poly::one(f3)};
  PointedMap s = oplus(z1, z1);
  CHECK(s.num == P(f3, "2,0,1"));  // z^2 - 1
  CHECK(s.den == P(f3, "0,1"));
}

TEST_CASE("oplus structure on the degree-2 chart") {
  Field f = Field::make(3, 1);
  auto deg1 = coprime_maps(f, 1);
  for (const PointedMap& x : deg1)
    for (const PointedMap& y : deg1) {
      PointedMap s = oplus(x, y);
      CHECK(s.num.deg() == 2);  // degrees add
      BezoutForm bx = bezout_normal_form(x);
      BezoutForm by = bezout_normal_form(y);
      // bottom row of the matrix product is the Bezout form of the sum
      Poly u3 = bx.u * by.u - x.den * by.v;
      Poly v3 = x.num * by.v + bx.v * by.u;
      BezoutForm bs = bezout_normal_form(s);
      CHECK(bs.u == u3);
      CHECK(bs.v == v3);
      CHECK(s.num * u3 + s.den * v3 == Poly::one(f));
    }
}

TEST_CASE("oplus is associative but not commutative") {
  Field f = Field::make(3, 1);
  auto deg1 = coprime_maps(f, 1);
  bool commuted_everywhere = true;
  for (size_t i = 0; i < deg1.size(); ++i)
    for (size_t j = 0; j < deg1.size(); ++j) {
      PointedMap xy = oplus(deg1[i], deg1[j]);
      PointedMap yx = oplus(deg1[j], deg1[i]);
      if (key(xy) != key(yx)) commuted_everywhere = false;
      for (size_t k = 0; k < deg1.size(); k += 3) {
        PointedMap l = oplus(xy, deg1[k]);
        PointedMap r = oplus(deg1[i], oplus(deg1[j], deg1[k]));
        CHECK(key(l) == key(r));
      }
    }
  CHECK(!commuted_everywhere);
}

TEST_CASE("resultant transforms predictably under oplus with a polynomial part") {
  for (uint64_t qq : {3, 5}) {
    Field f = Field::make(qq, 1);
    for (uint32_t d = 1; d <= 2; ++d) {
      MonicRange ps(f, d);
      auto maps = coprime_maps(f, 2);
      for (uint64_t pi = 0; pi < ps.size(); pi += 2)
        for (uint64_t ai = 1; ai < qq; ai += 2) {
          PointedMap part{ps.at(pi), Poly::constant(f, f.element(ai))};
          for (size_t mi = 0; mi < maps.size(); mi += 7) {
            const PointedMap& m = maps[mi];
            Fq got = resultant(oplus(part, m));
            Fq want = f.mul(f.pow(f.element(ai), d), resultant(m));
            if ((d * m.num.deg()) % 2) want = f.neg(want);
            CHECK(got == want);
          }
        }
    }
  }
}

TEST_CASE("continued-fraction decomposition examples") {
  Field f3 = Field::make(3, 1);
  Decomposition d = cf_decompose({P(f3, "2,0,1"), P(f3, "0,1")});
  REQUIRE(d.parts.size() == 2);
  CHECK(d.parts[0].p == P(f3, "0,1"));
  CHECK(d.parts[0].a == f3.one());
  CHECK(d.parts[1].p == P(f3, "0,1"));
  CHECK(d.parts[1].a == f3.one());
  CHECK(d.composition() == std::vector<uint64_t>{1, 1});

  Decomposition single = cf_decompose({P(f3, "1,2,0,1"), Poly::constant(f3, f3.element(2))});
  REQUIRE(single.parts.size() == 1);
  CHECK(single.parts[0].p == P(f3, "1,2,0,1"));
  CHECK(single.parts[0].a == f3.element(2));

  CHECK_THROWS_AS(cf_decompose({P(f3, "0,0,1"), P(f3, "0,1")}), std::invalid_argument);
  CHECK_THROWS_AS(recompose(Decomposition{}), std::invalid_argument);
}

TEST_CASE("decomposition and recomposition are mutually inverse bijections") {
  for (uint64_t qq : {2, 3}) {
    Field f = Field::make(qq, 1);
    for (uint32_t n = 1; n <= 3; ++n) {
      auto maps = coprime_maps(f, n);
      // every coprime map decomposes and comes back
      std::set<std::string> seen;
      for (const PointedMap& m : maps) {
        Decomposition d = cf_decompose(m);
        uint64_t degsum = 0;
        for (const auto& part : d.parts) {
          CHECK(part.p.is_monic());
          CHECK(part.p.deg() >= 1);
          CHECK(part.a.v != 0);
          degsum += part.p.deg();
        }
        CHECK(degsum == n);
        PointedMap back = recompose(d);
        CHECK(key(back) == key(m));
        seen.insert(key(m));
      }
      // every part sequence recomposes to a distinct coprime map
      std::set<std::string> produced;
      uint64_t sequences = 0;
      for_each_composition(n, [&](std::span<const uint64_t> comp) {
        std::vector<uint64_t> radix;  // enumerate parts per slot
        uint64_t total = 1;
        for (uint64_t ni : comp) {
          uint64_t monics = 1;
          for (uint64_t i = 0; i < ni; ++i) monics *= qq;
          radix.push_back(monics * (qq - 1));
          total *= radix.back();
        }
        for (uint64_t code = 0; code < total; ++code) {
          uint64_t t = code;
          Decomposition d;
          for (size_t s = 0; s < comp.size(); ++s) {
            uint64_t c = t % radix[s];
            t /= radix[s];
            uint64_t unit = 1 + c % (qq - 1);
            uint64_t monic_index = c / (qq - 1);
            MonicRange mr(f, static_cast<uint32_t>(comp[s]));
            d.parts.push_back({mr.at(monic_index), f.element(unit)});
          }
          PointedMap m = recompose(d);
          CHECK(produced.insert(key(m)).second);  // injective
          ++sequences;
          // decomposing recovers exactly the same parts
          Decomposition d2 = cf_decompose(m);
          REQUIRE(d2.parts.size() == d.parts.size());
          for (size_t s = 0; s < d.parts.size(); ++s) {
            CHECK(d2.parts[s].p == d.parts[s].p);
            CHECK(d2.parts[s].a == d.parts[s].a);
          }
        }
      });
      // the image is exactly the coprime locus: q^(2n-1)(q-1) maps
      CHECK(BigInt(sequences) == count_mn(n, qq));
      CHECK(produced == seen);
    }
  }
}

TEST_CASE("epsilon sign") {
  auto eps = [](std::initializer_list<uint64_t> c) {
    std::vector<uint64_t> v(c);
    return epsilon_sign(v);
  };
  CHECK(eps({5}) == 1);
  CHECK(eps({1, 1}) == -1);
  CHECK(eps({2, 2}) == 1);
  CHECK(eps({1, 1, 1}) == -1);
  CHECK(eps({2, 4, 6}) == 1);
  CHECK(eps({1, 2}) == 1);   // cross sum 2
  CHECK(eps({3, 1, 2}) == -1);  // 3+6+2 = 11
  // matches the closed form (-1)^((n^2 - sum of squares)/2)
  for_each_composition(7, [&](std::span<const uint64_t> comp) {
    uint64_t sq = 0;
    for (uint64_t x : comp) sq += x * x;
    int want = ((49 - sq) / 2) % 2 ? -1 : 1;
    CHECK(epsilon_sign(comp) == want);
  });
}

TEST_CASE("resultant from the decomposition data") {
  Field f3 = Field::make(3, 1);
  Decomposition d = cf_decompose({P(f3, "2,0,1"), P(f3, "0,1")});
  CHECK(resultant_from_decomposition(d) == f3.element(2));

  for (uint64_t qq : {2, 3, 4}) {
    Field f = qq == 4 ? Field::make(2, 2) : Field::make(qq, 1);
    for (uint32_t n = 1; n <= 3; ++n)
      for (const PointedMap& m : coprime_maps(f, n)) {
        Fq direct = resultant(m, ResultantMethod::kSylvester);
        CHECK(resultant_from_decomposition(cf_decompose(m)) == direct);
      }
  }
}
