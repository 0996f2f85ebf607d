#include <doctest.h>

#include <random>

#include "qshapo/scalars.hpp"

using namespace qshapo;

namespace {

RatQ v() { return RatQ::v_pow(1); }

// Defining formula (v^r - v^-r)/(v - v^-1), evaluated with field operations only.
RatQ qint_oracle(int r) { return (v().pow(r) - v().pow(-r)) / (v() - v().inverse()); }

ZPoly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), co(-4, 4);
  std::vector<BigInt> c(deg(rng) + 1);
  for (auto& x : c) x = co(rng);
  return ZPoly(std::move(c));
}

RatQ random_ratq(std::mt19937_64& rng) {
  ZPoly den;
  while (den.is_zero()) den = random_poly(rng, 3);
  std::uniform_int_distribution<int> shift(0, 2);
  return RatQ(random_poly(rng, 4), den) * RatQ::q_pow(-shift(rng));
}

}  // namespace

TEST_CASE("zpoly gcd and exact division") {
  ZPoly a({-1, 0, 1});        // q^2 - 1
  ZPoly b({1, 2, 1});         // (q+1)^2
  CHECK(ZPoly::gcd(a, b) == ZPoly({1, 1}));
  CHECK(ZPoly::divexact(a, ZPoly({1, 1})) == ZPoly({-1, 1}));
  CHECK_THROWS(ZPoly::divexact(a, ZPoly({2, 1})));
  CHECK(ZPoly::gcd(ZPoly::monomial(6, 3), ZPoly({0, 0, 4, 2})) == ZPoly::monomial(2, 2));
  CHECK(ZPoly::gcd(ZPoly({2, 4}), ZPoly({3, 6})) == ZPoly({1, 2}));
}

TEST_CASE("ratq canonical form") {
  RatQ x(ZPoly({-2, 0, 2}), ZPoly({-1, -1}));  // (2q^2-2)/(-q-1) = 2-2q
  CHECK(x.den().is_one());
  CHECK(x.to_string() == "-2q+2");
  RatQ y(ZPoly({1}), ZPoly({0, 0, -2}));
  CHECK(y.to_string() == "-1/(2q^2)");
  CHECK(RatQ::q_pow(-3).to_string() == "1/q^3");
  CHECK(RatQ(0).to_string() == "0");
}

TEST_CASE("qint examples") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1).is_one());
  CHECK(qint(2).to_string() == "(q^4+1)/q^2");
  CHECK(qint(3).to_string() == "(q^8+q^4+1)/q^4");
  CHECK(qint(-2) == -qint(2));
}

TEST_CASE("qint agrees with the defining quotient") {
  for (int r = -12; r <= 12; ++r) CHECK(qint(r) == qint_oracle(r));
}

TEST_CASE("qint Pascal-type identity") {
  for (int a = -10; a <= 10; ++a)
    for (int b = -10; b <= 10; ++b) {
      RatQ lhs = qint(a + b) * (v() - v().inverse());
      RatQ rhs = v().pow(b) * (v().pow(a) - v().pow(-a)) + v().pow(-a) * (v().pow(b) - v().pow(-b));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("qbinom examples and symmetry") {
  CHECK(qbinom(2, 1) == v() + v().inverse());
  CHECK(qbinom(5, 0).is_one());
  CHECK(qbinom(1, 2).is_zero());
  // [4 choose 2] = v^4+v^2+2+v^-2+v^-4, expanded by hand.
  CHECK(qbinom(4, 2).to_string() == "(q^16+q^12+2q^8+q^4+1)/q^8");
  for (int n = 0; n <= 12; ++n)
    for (int i = 0; i <= n; ++i) CHECK(qbinom(n, i) == qbinom(n, n - i));
  for (int n = 0; n < 6; ++n)
    for (int i = n + 1; i < 8; ++i) CHECK(qbinom(n, i).is_zero());
}

TEST_CASE("Gaussian binomial three-term identity") {
  for (int l = 2; l <= 12; ++l)
    for (int i = 1; i <= l - 1; ++i) {
      RatQ lhs = RatQ::v_pow(-i * (l - 1 - i)) * qbinom(l - 1, i) +
                 RatQ::v_pow(-(i + 1) * (l - i)) * qbinom(l - 1, i - 1);
      CHECK(lhs == RatQ::v_pow(-i * (l - i)) * qbinom(l, i));
    }
}

TEST_CASE("qbinom_formal") {
  CHECK(qbinom_formal(0) == WeightScalar(1, RatQ(1)));
  WeightScalar t = WeightScalar::var(1, 1);
  WeightScalar expect = (t - t.pow(-1)) * (v() - v().inverse()).inverse();
  CHECK(qbinom_formal(1) == expect);
  CHECK(eval_formal(qbinom_formal(1), 3) == qint(3));
  for (int i = 0; i <= 5; ++i)
    for (int n = -8; n <= 8; ++n) CHECK(eval_formal(qbinom_formal(i), n) == qbinom(n, i));
}

TEST_CASE("ws_eval examples") {
  WeightScalar y1 = WeightScalar::var(2, 1), y2 = WeightScalar::var(2, 2);
  CHECK(ws_eval(y1, {3, 0}) == RatQ::q_pow(3));
  CHECK(ws_eval(y1.pow(2) * y2.pow(-2), {1, 1}).is_one());
  WeightScalar s = (y1.pow(2) - y1.pow(-2)) * (RatQ::q_pow(2) - RatQ::q_pow(-2)).inverse();
  CHECK(ws_eval(s, {2, 0}) == qint(2));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    RatQ a = random_ratq(rng), b = random_ratq(rng), c = random_ratq(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    CHECK(RatQ::parse(a.to_string()) == a);
    CHECK(a.den().lead() > 0);
    CHECK(ZPoly::gcd(a.num(), a.den()).is_one());
  }
}

TEST_CASE("ws_eval is a ring homomorphism") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> ex(-3, 3);
  auto rand_ws = [&] {
    WeightScalar s(3);
    for (int k = 0; k < 4; ++k)
      s += WeightScalar::monomial({ex(rng), ex(rng), ex(rng)}, random_ratq(rng));
    return s;
  };
  for (int trial = 0; trial < 50; ++trial) {
    WeightScalar a = rand_ws(), b = rand_ws();
    std::vector<int> pt{ex(rng), ex(rng), ex(rng)};
    CHECK(ws_eval(a * b, pt) == ws_eval(a, pt) * ws_eval(b, pt));
    CHECK(ws_eval(a + b, pt) == ws_eval(a, pt) + ws_eval(b, pt));
  }
}

TEST_CASE("ratq parser") {
  CHECK(RatQ::parse("(q^4+1)/q^2") == qint(2));
  CHECK(RatQ::parse("-3q^2 + q - 7") == RatQ(ZPoly({-7, 1, -3})));
  CHECK(RatQ::parse("1/(2q^2)") == RatQ(ZPoly(1), ZPoly::monomial(2, 2)));
  CHECK_THROWS(RatQ::parse("q^"));
  CHECK_THROWS(RatQ::parse("1/0"));
  CHECK_THROWS(RatQ::parse("(q+1"));
}
