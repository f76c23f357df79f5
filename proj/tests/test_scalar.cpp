#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace quatpol;
using testsupport::qlit;

TEST_CASE("quaternion multiplication table") {
  const Quaternion i = Quaternion::unit_i();
  const Quaternion j = Quaternion::unit_j();
  const Quaternion k = Quaternion::unit_k();
  CHECK(i * i == -Quaternion::one());
  CHECK(j * j == -Quaternion::one());
  CHECK(k * k == -Quaternion::one());
  CHECK(i * j * k == -Quaternion::one());
  // noncommutativity witness
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(i * j != j * i);
}

TEST_CASE("parse_quaternion literals") {
  CHECK(qlit("1/2+3i-j") == Quaternion(Rational(1, 2), Rational(3), Rational(-1), Rational(0)));
  CHECK(qlit("0") == Quaternion::zero());
  CHECK(qlit("k-k") == Quaternion::zero());
  CHECK(qlit("-i") == -Quaternion::unit_i());
  CHECK(qlit("2/3k") == Quaternion(Rational(0), Rational(0), Rational(0), Rational(2, 3)));
  CHECK(qlit(" 1 + 2 i ") == Quaternion(Rational(1), Rational(2), Rational(0), Rational(0)));
  CHECK(qlit("3") == Quaternion(3));
  CHECK(qlit("2-3") == Quaternion(-1));
}

TEST_CASE("parse_quaternion rejects malformed literals with positions") {
  CHECK_THROWS_AS(qlit(""), ParseError);
  CHECK_THROWS_AS(qlit("1+"), ParseError);
  CHECK_THROWS_AS(qlit("x"), ParseError);
  CHECK_THROWS_AS(qlit("1/"), ParseError);
  CHECK_THROWS_AS(qlit("1/0"), ParseError);
  CHECK_THROWS_AS(qlit("ij"), ParseError);
  try {
    qlit("1+?");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("print/parse roundtrip is idempotent") {
  Rng rng(7);
  for (int t = 0; t < 500; ++t) {
    const Quaternion q = random_quaternion(rng, 9, 9);
    const std::string s = to_string(q);
    CHECK(parse_quaternion(s) == q);
    CHECK(to_string(parse_quaternion(s)) == s);
  }
  CHECK(to_string(Quaternion::zero()) == "0");
  CHECK(to_string(Quaternion::unit_i()) == "i");
  CHECK(to_string(-Quaternion::unit_i()) == "-i");
  CHECK(to_string(qlit("1/2+3i-j")) == "1/2+3i-j");
}

TEST_CASE("inverse") {
  CHECK(Quaternion::unit_i().inverse() == -Quaternion::unit_i());
  CHECK(qlit("1+j").inverse() == qlit("1/2-1/2j"));
  CHECK(Quaternion(2).inverse() == Quaternion(Rational(1, 2)));
  CHECK_THROWS_AS(Quaternion::zero().inverse(), std::domain_error);
  Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    Quaternion q = random_quaternion(rng, 9, 9);
    if (q.is_zero()) q = Quaternion::one();
    CHECK(q * q.inverse() == Quaternion::one());
    CHECK(q.inverse() * q == Quaternion::one());
  }
}

TEST_CASE("is_central") {
  CHECK(qlit("3/2").is_central());
  CHECK_FALSE(Quaternion::unit_i().is_central());
  CHECK(qlit("1+0i").is_central());
}

TEST_CASE("realification is a unital ring homomorphism") {
  // frozen 4x4 for the basis order (1, i, j, k): realify(i) * realify(j)
  // must be realify(k), computed here by explicit multiplication
  const RationalMatrix ri = realify_scalar(Quaternion::unit_i());
  const RationalMatrix rj = realify_scalar(Quaternion::unit_j());
  const RationalMatrix rk = realify_scalar(Quaternion::unit_k());
  CHECK(ri * rj == rk);
  CHECK(realify_scalar(Quaternion::one()) == RationalMatrix::identity(4));
  CHECK(ri * ri == realify_scalar(Quaternion(-1)));

  Rng rng(13);
  for (int t = 0; t < 500; ++t) {
    const Quaternion x = random_quaternion(rng, 9, 9);
    const Quaternion y = random_quaternion(rng, 9, 9);
    CHECK(realify_scalar(x + y) == realify_scalar(x) + realify_scalar(y));
    CHECK(realify_scalar(x * y) == realify_scalar(x) * realify_scalar(y));
    CHECK(realify_scalar(x).is_zero() == x.is_zero());
  }
}

TEST_CASE("right regular representation is the opposite-side action") {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const Quaternion q = random_quaternion(rng, 5, 5);
    const Quaternion x = random_quaternion(rng, 5, 5);
    // vec(q x) = realify(q) vec(x), vec(x q) = realify_right(q) vec(x)
    const auto vx = vec4(x);
    RationalMatrix col(4, 1);
    for (std::size_t s = 0; s < 4; ++s) col.at(s, 0) = vx[s];
    const RationalMatrix lhs = realify_scalar(q) * col;
    const auto lq = vec4(q * x);
    for (std::size_t s = 0; s < 4; ++s) CHECK(lhs.at(s, 0) == lq[s]);
    const RationalMatrix rhs = realify_scalar_right(q) * col;
    const auto rq = vec4(x * q);
    for (std::size_t s = 0; s < 4; ++s) CHECK(rhs.at(s, 0) == rq[s]);
    // the two representations commute
    const Quaternion r = random_quaternion(rng, 5, 5);
    CHECK(realify_scalar(q) * realify_scalar_right(r) ==
          realify_scalar_right(r) * realify_scalar(q));
  }
}
