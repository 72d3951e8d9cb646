#include "qlie/json_io.hpp"
#include "qlie/prng.hpp"
#include "qlie/spfactory.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qlie;

TEST_CASE("scalar and matrix json round trips") {
  Prng rng(44);
  for (int t = 0; t < 25; ++t) {
    Rational r = rng.rational(50, 47);
    CHECK(rational_from_json(to_json(r)) == r);
    Quaternion q = rng.quaternion(9, 7);
    CHECK(quaternion_from_json(to_json(q)) == q);
  }
  MatrixQ m(2, 3);
  for (auto& e : m.entries) e = rng.quaternion(5, 3);
  MatrixQ back = matrix_from_json(to_json(m));
  CHECK(back == m);
  CHECK(to_json(m).at("entries").size() == 6);
}

TEST_CASE("subspace json keeps the canonical basis") {
  Subspace s = Subspace::from_spanning(
      3, {{Rational(2), Rational(4), Rational(0)}, {Rational(0), Rational(1), Rational(1)}});
  Subspace back = subspace_from_json(to_json(s));
  CHECK(back == s);
  CHECK(to_json(s).at("ambient_dim") == 3);
}

TEST_CASE("lie algebra json round trip") {
  LieAlgebra a = build_sp({1, 1});
  Json j = to_json(a);
  CHECK(j.at("matrix_size") == 2);
  CHECK(j.at("basis").size() == 10);
  LieAlgebra back = lie_algebra_from_json(j);
  CHECK(back.name == a.name);
  CHECK(back.basis == a.basis);
  for (int x = 0; x < a.dim(); ++x)
    for (int y = x + 1; y < a.dim(); ++y)
      CHECK(back.structure.at_upper(x, y) == a.structure.at_upper(x, y));
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS(rational_from_json(Json("7/x")));
  CHECK_THROWS(quaternion_from_json(Json::array({"1", "2"})));
  Json m{{"rows", 2}, {"cols", 2}, {"entries", Json::array()}};
  CHECK_THROWS(matrix_from_json(m));
}
