#include "qlie/liecore.hpp"
#include "qlie/prng.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qlie;

namespace {

MatrixQ diag1(const Quaternion& q) {
  MatrixQ m(1, 1);
  m.at(0, 0) = q;
  return m;
}

LieAlgebra sp1() {
  return close_and_structure(
      "sp(1)", {diag1(Quaternion::unit_i()), diag1(Quaternion::unit_j()),
                diag1(Quaternion::unit_k())});
}

LieAlgebra abelian2() {
  MatrixQ e11(2, 2), e22(2, 2);
  e11.at(0, 0) = Quaternion::one();
  e22.at(1, 1) = Quaternion::one();
  return close_and_structure("abelian2", {e11, e22});
}

// small product that is antisymmetric but violates Jacobi:
// [e1,e2] = e1, [e1,e3] = e2, [e2,e3] = 0
StructureTensor crooked() {
  StructureTensor t = StructureTensor::empty(3);
  t.set_upper(0, 1, {{0, Rational(1)}});
  t.set_upper(0, 2, {{1, Rational(1)}});
  return t;
}

}  // namespace

TEST_CASE("close_and_structure on sp(1)") {
  LieAlgebra a = sp1();
  CHECK(a.is_closed);
  CHECK(a.dim() == 3);
  // [i,j] = 2k and cyclic
  CHECK(a.structure.bracket_basis(0, 1) == RealVector{Rational(0), Rational(0), Rational(2)});
  CHECK(a.structure.bracket_basis(1, 2) == RealVector{Rational(2), Rational(0), Rational(0)});
  CHECK(a.structure.bracket_basis(2, 0) == RealVector{Rational(0), Rational(2), Rational(0)});
}

TEST_CASE("close_and_structure flags escapes and rejects dependence") {
  MatrixQ e12(2, 2), e21(2, 2);
  e12.at(0, 1) = Quaternion::one();
  e21.at(1, 0) = Quaternion::one();
  LieAlgebra bad = close_and_structure("sl2-partial", {e12, e21});
  CHECK(!bad.is_closed);
  REQUIRE(bad.escape_witness.has_value());
  CHECK(*bad.escape_witness == std::make_pair(0, 1));

  MatrixQ a(1, 1), b(1, 1);
  a.at(0, 0) = Quaternion::unit_i();
  b.at(0, 0) = Rational(2) * Quaternion::unit_i();
  CHECK_THROWS(close_and_structure("dep", {a, b}));

  // a single nonzero matrix closes as an abelian line
  LieAlgebra line = close_and_structure("line", {diag1(Quaternion::unit_i())});
  CHECK(line.is_closed);
  CHECK(line.dim() == 1);
}

TEST_CASE("center") {
  CHECK(center(sp1()).dim() == 0);
  CHECK(center(abelian2()).dim() == 2);
}

TEST_CASE("centralizer") {
  LieAlgebra a = sp1();
  CHECK(centralizer(a, Subspace::zero(3)).dim() == 3);
  CHECK(centralizer(a, Subspace::full(3)).dim() == 0);
  // centralizer of a single unit in sp(1) is its own line
  Subspace line = Subspace::from_spanning(3, {unit_vector(3, 0)});
  CHECK(centralizer(a, line) == line);
}

TEST_CASE("derivations of small algebras") {
  CHECK(derivations(abelian2().structure).dim() == 4);

  LieAlgebra a = sp1();
  Subspace der = derivations(a.structure);
  CHECK(der.dim() == 3);
  std::vector<RealVector> ads;
  for (int t = 0; t < 3; ++t) ads.push_back(ad_endo(a.structure, unit_vector(3, t)));
  for (const auto& v : ads) CHECK(der.contains(v));
  CHECK(Subspace::from_spanning(9, ads) == der);
}

TEST_CASE("serial and parallel derivation solves agree") {
  LieAlgebra a = sp1();
  CHECK(derivations(a.structure) == derivations_serial(a.structure));
  StructureTensor t = crooked();
  CHECK(derivations(t) == derivations_serial(t));
}

TEST_CASE("jacobiator") {
  LieAlgebra a = sp1();
  Prng rng(5);
  for (int t = 0; t < 20; ++t) {
    RealVector x(3), y(3), z(3);
    for (int c = 0; c < 3; ++c) {
      x[c] = rng.rational(4, 3);
      y[c] = rng.rational(4, 3);
      z[c] = rng.rational(4, 3);
    }
    CHECK(vec_is_zero(jacobiator(a.structure, x, y, z)));
  }

  StructureTensor t = crooked();
  // degenerate triples cancel even without Jacobi
  RealVector u{Rational(1), Rational(2), Rational(-1)};
  RealVector v{Rational(0), Rational(1), Rational(3)};
  CHECK(vec_is_zero(jacobiator(t, u, u, v)));
  CHECK(!vec_is_zero(jacobiator(t, unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2))));
}

TEST_CASE("is_lie_algebra") {
  CHECK(is_lie_algebra(sp1().structure).is_lie);
  LieCheck bad = is_lie_algebra(crooked());
  CHECK(!bad.is_lie);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == std::array<int, 3>{0, 1, 2});
}

TEST_CASE("invariant symmetric forms") {
  // zero action: every symmetric form is invariant
  LieAlgebra a2 = abelian2();
  InvariantForms all = invariant_symmetric_forms(a2, Subspace::full(2));
  CHECK(all.forms.dim() == 3);

  // sp(1) acting on itself: multiples of the trace form only
  LieAlgebra a = sp1();
  InvariantForms killing = invariant_symmetric_forms(a, Subspace::full(3));
  CHECK(killing.forms.dim() == 1);
  RealVector tr_form(6, Rational(0));
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      tr_form[sym_index(3, i, j)] = re_trace_form(a.basis[i], a.basis[j]);
  CHECK(killing.forms.contains(tr_form));
}

TEST_CASE("instability is reported with a witness") {
  LieAlgebra a = sp1();
  Subspace line = Subspace::from_spanning(3, {unit_vector(3, 0)});
  // [j, i] leaves the line spanned by i
  try {
    invariant_symmetric_forms(a, line);
    FAIL("expected an ad-stability error");
  } catch (const AdStabilityError& err) {
    CHECK(err.algebra_index == 1);
    CHECK(err.module_index == 0);
  }
}

TEST_CASE("symmetric pair check") {
  LieAlgebra a = sp1();
  CHECK(symmetric_pair_check(a, Subspace::full(3), Subspace::zero(3)));
  // the span of one unit against the other two is not a symmetric pair
  Subspace t = Subspace::from_spanning(3, {unit_vector(3, 0)});
  Subspace w = Subspace::from_spanning(3, {unit_vector(3, 1), unit_vector(3, 2)});
  CHECK(symmetric_pair_check(a, t, w));  // [w,w] = span(k_0) for sp(1)
  CHECK_THROWS(symmetric_pair_check(a, Subspace::full(3), w));
}

TEST_CASE("decomposition validation") {
  LieAlgebra a = sp1();
  GradedDecomposition d;
  d.parts.emplace_back("x", Subspace::from_spanning(3, {unit_vector(3, 0)}));
  d.parts.emplace_back("yz",
                       Subspace::from_spanning(3, {unit_vector(3, 1), unit_vector(3, 2)}));
  auto rep = validate_decomposition(a, d, true);
  CHECK(rep.direct_sum);
  CHECK(rep.b_orthogonal);  // Re tr(i j) = 0 and Re tr(i k) = 0
}
