#include <doctest.h>

#include <random>

#include "qsc/qarith.hpp"

using namespace qsc;

namespace {

LaurentPoly q_pow(long e) { return LaurentPoly::q_power(e); }

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expd(-4, 4), coef(-5, 5);
  LaurentPoly p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) p.add_term(expd(rng), Rat(coef(rng)));
  return p;
}

} // namespace

TEST_CASE("q-integers expand as balanced Laurent polynomials") {
  // [3]_q = q^2 + 1 + q^-2
  LaurentPoly three = qnum(3);
  LaurentPoly expect = q_pow(2) + q_pow(0) + q_pow(-2);
  CHECK(three == expect);
  CHECK(qnum(1) == LaurentPoly(1));
  CHECK(qnum(0).is_zero());
  // q_i variants rescale exponents
  CHECK(qnum(2, 2) == q_pow(2) + q_pow(-2));
}

TEST_CASE("q-binomials") {
  CHECK(qbinom(5, 0) == LaurentPoly(1));
  CHECK(qbinom(2, 1) == qnum(2));
  CHECK(qbinom(4, 2) == qbinom(4, 2).bar());  // bar symmetry
  // Gaussian positivity: q^{m(n-m)} [n choose m]_q has nonnegative integer
  // coefficients
  for (long n = 1; n <= 6; ++n)
    for (long m = 0; m <= n; ++m) {
      LaurentPoly g = qbinom(n, m).shifted(m * (n - m));
      CHECK(g.min_exp() >= 0);
      for (const auto& [e, c] : g.terms()) {
        CHECK(c > 0);
        CHECK(c.get_den() == 1);
      }
    }
}

TEST_CASE("bar symmetry of qnum/qfact/qbinom") {
  for (long n = 0; n <= 6; ++n) {
    CHECK(qnum(n) == qnum(n).bar());
    CHECK(qfact(n) == qfact(n).bar());
  }
  CHECK(qbinom(6, 2, 2) == qbinom(6, 2, 2).bar());
}

TEST_CASE("exact division is exact or loudly fails") {
  LaurentPoly a = (q_pow(2) - q_pow(-2));
  LaurentPoly b = (q_pow(1) - q_pow(-1));
  CHECK(a.div_exact(b) == q_pow(1) + q_pow(-1));
  CHECK_THROWS_AS((q_pow(1) + LaurentPoly(1)).div_exact(b), arithmetic_error);
}

TEST_CASE("ring axioms on random operands") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("RatFunc normalization is canonical") {
  // denominator: min exponent 0 and monic
  RatFunc r(q_pow(2) - q_pow(-2), q_pow(1) - q_pow(-1));
  CHECK(r.is_polynomial());
  CHECK(r == RatFunc(q_pow(1) + q_pow(-1)));
  RatFunc s(LaurentPoly(1), q_pow(3) - q_pow(1));
  CHECK(s.den().min_exp() == 0);
  CHECK(s.den().terms().back().second == 1);
  // same value built two ways compares equal
  RatFunc t1 = RatFunc(LaurentPoly(2), q_pow(1) - q_pow(-1));
  RatFunc t2 = RatFunc(LaurentPoly(4), (q_pow(1) - q_pow(-1)).scaled(Rat(2)));
  CHECK(t1 == t2);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    RatFunc x(a, b);
    CHECK(x * RatFunc(b) == RatFunc(a));
  }
}

TEST_CASE("rendering matches the documented shape") {
  CHECK(qnum(3).str() == "q^2 + 1 + q^-2");
  CHECK(LaurentPoly().str() == "0");
  auto triples = qnum(2).json_triples();
  REQUIRE(triples.size() == 2);
  CHECK(triples[0][0] == "-1");
  CHECK(triples[0][1] == "1");
  CHECK(triples[0][2] == "1");
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(RatFunc(LaurentPoly(1), LaurentPoly()), arithmetic_error);
  CHECK_THROWS_AS(RatFunc().inv(), arithmetic_error);
  CHECK_THROWS_AS(LaurentPoly().min_exp(), arithmetic_error);
  CHECK_THROWS_AS(qbinom(2, 3), arithmetic_error);
  CHECK_THROWS_AS(qnum(-1), arithmetic_error);
}
