#include "qlie/prng.hpp"
#include "qlie/scalars.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qlie;

TEST_CASE("quaternion unit relations") {
  Quaternion i = Quaternion::unit_i(), j = Quaternion::unit_j(), k = Quaternion::unit_k();
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(i * i == -Quaternion::one());
  CHECK(j * j == -Quaternion::one());
  CHECK(k * k == -Quaternion::one());
  CHECK(i * j * k == -Quaternion::one());

  Quaternion q{Rational(2), Rational(-1), Rational(1, 2), Rational(3)};
  CHECK(q * Quaternion::one() == q);
  // (1+i)(1+j) = 1 + i + j + k
  Quaternion a = Quaternion::one() + i, b = Quaternion::one() + j;
  CHECK(a * b == Quaternion{Rational(1), Rational(1), Rational(1), Rational(1)});
}

TEST_CASE("conjugation") {
  CHECK(conj(Quaternion::unit_i()) == -Quaternion::unit_i());
  CHECK(conj(Quaternion::one()) == Quaternion::one());
  Quaternion q{Rational(2), Rational(3), Rational(-1), Rational(0)};
  CHECK(conj(q) == Quaternion{Rational(2), Rational(-3), Rational(1), Rational(0)});
}

TEST_CASE("product identities on random quaternions") {
  Prng rng(2024);
  for (int t = 0; t < 200; ++t) {
    Quaternion p = rng.quaternion(), q = rng.quaternion();
    CHECK(re_part(p * q) == re_part(q * p));
    CHECK(conj(p * q) == conj(q) * conj(p));
    Quaternion n = q * conj(q);
    CHECK(n.is_real());
    CHECK(n.re >= 0);
    CHECK(n.re == norm_squared(q));
  }
}

TEST_CASE("gaussian rationals embed as a subring") {
  Prng rng(7);
  for (int t = 0; t < 100; ++t) {
    GaussianRational z{rng.rational(), rng.rational()}, w{rng.rational(), rng.rational()};
    CHECK(to_quaternion(z + w) == to_quaternion(z) + to_quaternion(w));
    CHECK(to_quaternion(z * w) == to_quaternion(z) * to_quaternion(w));
    CHECK(to_quaternion(conj(z)) == conj(to_quaternion(z)));
    CHECK(to_quaternion(z).is_gaussian());
  }
}

TEST_CASE("rational strings round-trip") {
  CHECK(rational_to_string(Rational(-3, 2)) == "-3/2");
  CHECK(rational_to_string(Rational(4, 2)) == "2");
  CHECK(*rational_from_string("-3/2") == Rational(-3, 2));
  CHECK(*rational_from_string("6/4") == Rational(3, 2));
  CHECK(*rational_from_string("17") == Rational(17));
  CHECK(!rational_from_string("1/0"));
  CHECK(!rational_from_string("x"));
  CHECK(!rational_from_string(""));
  CHECK(!rational_from_string("1/ 2"));
  Prng rng(99);
  for (int t = 0; t < 100; ++t) {
    Rational r = rng.rational(1000, 997);
    CHECK(*rational_from_string(rational_to_string(r)) == r);
  }
}
