#include <random>
#include <stdexcept>

#include "doctest.h"
#include "sigmagb/shift_monoid.hpp"

using namespace sigmagb;

namespace {
const SigmaOrder kDrl{SigmaOrderKind::degrevlex};
const SigmaOrder kLex{SigmaOrderKind::lex};
}  // namespace

TEST_CASE("monoid product, gcd and monus") {
  CHECK(mul({1, 0}, {0, 1}) == ShiftExponent{1, 1});
  CHECK(mul({2, 3}, {0, 0}) == ShiftExponent{2, 3});
  CHECK(mul({0, 1}, {1, 1}) == ShiftExponent{1, 2});

  CHECK(gcd({2, 1}, {1, 3}) == ShiftExponent{1, 1});
  CHECK(gcd({2, 3}, {0, 0}) == ShiftExponent{0, 0});
  CHECK(gcd({1, 0}, {0, 1}) == ShiftExponent{0, 0});

  CHECK(monus({2, 0}, {1, 1}) == ShiftExponent{1, 0});
  CHECK(monus({1, 1}, {2, 0}) == ShiftExponent{0, 1});
  CHECK(monus({3, 2}, {3, 2}).is_identity());

  CHECK_THROWS_AS(mul({1, 0}, {1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(gcd({1}, {1, 0}), std::invalid_argument);
}

TEST_CASE("degree on the dioid") {
  CHECK(deg(WeightValue(ShiftExponent{2, 1})) == OrderValue(3));
  CHECK(deg(WeightValue::zero()).is_neg_infinity());
  CHECK(deg(WeightValue(ShiftExponent{0, 0})) == OrderValue(0));
  CHECK(OrderValue::neg_infinity() < OrderValue(0));
  CHECK(max(OrderValue::neg_infinity(), OrderValue(2)) == OrderValue(2));
}

TEST_CASE("Sigma orders") {
  CHECK(kDrl.compare({1, 0}, {0, 1}) > 0);
  CHECK(kDrl.compare({2, 0}, {1, 1}) > 0);
  CHECK(kDrl.compare({1, 1}, {0, 2}) > 0);
  CHECK(kDrl.compare({0, 3}, {2, 0}) > 0);
  CHECK(kLex.compare({2, 0}, {0, 3}) > 0);
  CHECK(kDrl.compare({4, 1}, {4, 1}) == 0);
  CHECK(kLex.compare({4, 1}, {4, 1}) == 0);
  CHECK(kDrl.is_sequential());
  CHECK_FALSE(kLex.is_sequential());
}

TEST_CASE("enumeration of windows") {
  CHECK(enumerate_upto(kDrl, {0, 1}) == std::vector<ShiftExponent>{{0, 0}, {0, 1}});
  CHECK(enumerate_upto(kDrl, {1, 0}) == std::vector<ShiftExponent>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(enumerate_upto(kDrl, {0, 0, 0}) == std::vector<ShiftExponent>{{0, 0, 0}});
  CHECK_THROWS_AS(enumerate_upto(kLex, {1, 0}), std::invalid_argument);

  const auto d1 = enumerate_upto_deg(2, 1);
  CHECK(d1.size() == 3);
  for (const ShiftExponent& s : {ShiftExponent{0, 0}, ShiftExponent{1, 0}, ShiftExponent{0, 1}})
    CHECK(std::find(d1.begin(), d1.end(), s) != d1.end());
  CHECK(enumerate_upto_deg(3, 2).size() == 10);
  CHECK(enumerate_upto_deg(1, 4) == std::vector<ShiftExponent>{{0}, {1}, {2}, {3}, {4}});
}

TEST_CASE("monoid laws on random elements") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(0, 6);
  auto draw = [&] {
    ShiftExponent s(3);
    for (int i = 0; i < 3; ++i) s.set(i, coord(rng));
    return s;
  };
  for (int k = 0; k < 2000; ++k) {
    const ShiftExponent s = draw(), t = draw(), u = draw();
    for (const SigmaOrder& o : {kDrl, kLex}) {
      if (o.less(s, t)) {
        REQUIRE(o.less(mul(u, s), mul(u, t)));
      }
      REQUIRE((o.compare(s, t) == 0) == (s == t));
    }
    if (s.degree() < t.degree()) {
      REQUIRE(kDrl.less(s, t));
    }
    const ShiftExponent g = gcd(s, t), l = lcm(s, t);
    for (int i = 0; i < 3; ++i) {
      REQUIRE(g[i] + l[i] == s[i] + t[i]);
      REQUIRE(monus(s, t)[i] + g[i] == s[i]);
    }
    REQUIRE(gcd(monus(s, t), monus(t, s)).is_identity());
  }
  // Down-sets of degrevlex are finite and exactly the elements below.
  for (int k = 0; k < 50; ++k) {
    ShiftExponent b(2);
    b.set(0, coord(rng) % 4);
    b.set(1, coord(rng) % 4);
    const auto below = enumerate_upto(kDrl, b);
    std::size_t expected = 0;
    for (const auto& s : enumerate_upto_deg(2, b.degree()))
      if (kDrl.compare(s, b) <= 0) ++expected;
    REQUIRE(below.size() == expected);
    for (const auto& s : below) REQUIRE(kDrl.compare(s, b) <= 0);
  }
}
