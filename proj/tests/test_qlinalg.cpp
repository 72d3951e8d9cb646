#include "qlie/prng.hpp"
#include "qlie/qlinalg.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qlie;

namespace {

MatrixQ random_matrix(Prng& rng, int r, int c) {
  MatrixQ m(r, c);
  for (auto& e : m.entries) e = rng.quaternion(4, 3);
  return m;
}

MatrixQ diag1(const Quaternion& q) {
  MatrixQ m(1, 1);
  m.at(0, 0) = q;
  return m;
}

}  // namespace

TEST_CASE("matrix product basics") {
  Prng rng(11);
  MatrixQ a = random_matrix(rng, 3, 3);
  CHECK(mat_mul(MatrixQ::identity(3), a) == a);
  CHECK(mat_mul(a, MatrixQ::identity(3)) == a);

  CHECK(mat_mul(diag1(Quaternion::unit_i()), diag1(Quaternion::unit_j())) ==
        diag1(Quaternion::unit_k()));

  MatrixQ e12(2, 2), e21(2, 2), e11(2, 2);
  e12.at(0, 1) = Quaternion::one();
  e21.at(1, 0) = Quaternion::one();
  e11.at(0, 0) = Quaternion::one();
  CHECK(mat_mul(e12, e21) == e11);

  CHECK_THROWS(mat_mul(random_matrix(rng, 2, 3), random_matrix(rng, 2, 3)));
}

TEST_CASE("commutator basics") {
  Prng rng(12);
  MatrixQ a = random_matrix(rng, 3, 3), b = random_matrix(rng, 3, 3);
  CHECK(commutator(a, a).is_zero());
  CHECK(commutator(MatrixQ::identity(3), b).is_zero());
  CHECK(commutator(diag1(Quaternion::unit_i()), diag1(Quaternion::unit_j())) ==
        diag1(Rational(2) * Quaternion::unit_k()));
  CHECK_THROWS(commutator(random_matrix(rng, 2, 3), random_matrix(rng, 2, 3)));
  CHECK_THROWS(re_trace_form(random_matrix(rng, 2, 2), random_matrix(rng, 3, 3)));
}

TEST_CASE("conjugate transpose is an antihomomorphism") {
  Prng rng(13);
  for (int t = 0; t < 20; ++t) {
    MatrixQ a = random_matrix(rng, 3, 2), b = random_matrix(rng, 2, 4);
    CHECK(conj_transpose(mat_mul(a, b)) == mat_mul(conj_transpose(b), conj_transpose(a)));
  }
}

TEST_CASE("trace form") {
  CHECK(re_trace_form(MatrixQ::identity(4), MatrixQ::identity(4)) == 4);
  CHECK(re_trace_form(diag1(Quaternion::unit_i()), diag1(Quaternion::unit_i())) == -1);
  Prng rng(14);
  for (int t = 0; t < 20; ++t) {
    MatrixQ a = random_matrix(rng, 3, 3), b = random_matrix(rng, 3, 3);
    CHECK(re_trace_form(a, b) == re_trace_form(b, a));
  }
}

TEST_CASE("flatten is linear and injective") {
  Prng rng(15);
  MatrixQ a = random_matrix(rng, 2, 3), b = random_matrix(rng, 2, 3);
  Rational s(3, 7), u(-2, 5);
  RealVector lhs = flatten(s * a + u * b);
  RealVector rhs = vec_add(vec_scale(s, flatten(a)), vec_scale(u, flatten(b)));
  CHECK(lhs == rhs);
  CHECK(flatten(a).size() == 4u * 2 * 3);
  CHECK(!vec_is_zero(flatten(a)));
}

TEST_CASE("quaternion to complex blocks") {
  // 1x1 matrix (j) -> [[0,-1],[1,0]]
  MatrixQ j1 = diag1(Quaternion::unit_j());
  MatrixQ img = quat_to_complex(j1);
  CHECK(img.at(0, 0).is_zero());
  CHECK(img.at(0, 1) == -Quaternion::one());
  CHECK(img.at(1, 0) == Quaternion::one());
  CHECK(img.at(1, 1).is_zero());

  CHECK(quat_to_complex(MatrixQ::identity(3)) == MatrixQ::identity(6));

  Prng rng(16);
  for (int t = 0; t < 15; ++t) {
    MatrixQ a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
    CHECK(quat_to_complex(mat_mul(a, b)) ==
          mat_mul(quat_to_complex(a), quat_to_complex(b)));
    CHECK(quat_to_complex(conj_transpose(a)) == conj_transpose(quat_to_complex(a)));
    for (const auto& e : quat_to_complex(a).entries) CHECK(e.is_gaussian());
  }
}

TEST_CASE("kernel basics") {
  // zero map on Q^3
  std::vector<RealVector> zero_rows{RealVector(3, Rational(0))};
  CHECK(kernel(zero_rows).dim() == 3);

  // identity rows
  std::vector<RealVector> id_rows;
  for (int t = 0; t < 3; ++t) id_rows.push_back(unit_vector(3, t));
  CHECK(kernel(id_rows).dim() == 0);

  // single row (1,1)
  std::vector<RealVector> one_row{{Rational(1), Rational(1)}};
  Subspace ker = kernel(one_row);
  CHECK(ker.dim() == 1);
  CHECK(ker.contains({Rational(1), Rational(-1)}));
}

TEST_CASE("rank-nullity on random systems") {
  Prng rng(17);
  for (int t = 0; t < 25; ++t) {
    int rows_n = static_cast<int>(rng.range(1, 12));
    int cols = static_cast<int>(rng.range(1, 10));
    std::vector<RealVector> rows;
    for (int r = 0; r < rows_n; ++r) {
      RealVector row(cols);
      for (auto& x : row) x = rng.range(0, 2) ? rng.rational(4, 3) : Rational(0);
      rows.push_back(std::move(row));
    }
    Subspace ker = kernel(rows);
    Subspace row_space = Subspace::from_spanning(cols, rows);
    CHECK(ker.dim() + row_space.dim() == cols);
    for (const auto& v : ker.basis()) {
      for (const auto& row : rows) {
        Rational dot(0);
        for (int c = 0; c < cols; ++c) dot += row[c] * v[c];
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("serial and parallel elimination agree") {
  Prng rng(18);
  for (int t = 0; t < 10; ++t) {
    int rows_n = static_cast<int>(rng.range(5, 60));
    int cols = static_cast<int>(rng.range(4, 40));
    std::vector<RealVector> rows;
    for (int r = 0; r < rows_n; ++r) {
      RealVector row(cols, Rational(0));
      for (int c = 0; c < cols; ++c)
        if (rng.range(0, 3) == 0) row[c] = rng.rational(6, 4);
      rows.push_back(std::move(row));
    }
    CHECK(kernel(rows) == kernel_serial(rows));
  }
}

namespace {

// textbook dense reduced echelon form, used as an independent oracle
std::vector<RealVector> naive_rref(std::vector<RealVector> rows, int cols) {
  std::size_t rank = 0;
  for (int c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Rational lead = rows[rank][c];
    for (int t = 0; t < cols; ++t) rows[rank][t] /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational f = rows[r][c];
      for (int t = 0; t < cols; ++t) rows[r][t] -= f * rows[rank][t];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

}  // namespace

TEST_CASE("echelon form agrees with a naive dense elimination") {
  Prng rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    int rows_n = static_cast<int>(rng.range(1, 25));
    int cols = static_cast<int>(rng.range(1, 14));
    std::vector<RealVector> rows;
    for (int r = 0; r < rows_n; ++r) {
      RealVector row(cols, Rational(0));
      for (int c = 0; c < cols; ++c)
        if (rng.range(0, 2) == 0) row[c] = rng.rational(5, 4);
      rows.push_back(std::move(row));
    }
    Subspace fast = Subspace::from_spanning(cols, rows);
    std::vector<RealVector> slow = naive_rref(rows, cols);
    REQUIRE(fast.dim() == static_cast<int>(slow.size()));
    CHECK(fast.basis() == slow);
  }
}

TEST_CASE("span membership") {
  RealVector v{Rational(1), Rational(2)};
  Subspace s = Subspace::from_spanning(2, {v});
  CHECK(span_membership(v, s));
  CHECK(span_membership(RealVector(2, Rational(0)), s));
  CHECK(span_membership({Rational(-3), Rational(-6)}, s));
  Subspace e2 = Subspace::from_spanning(2, {{Rational(0), Rational(1)}});
  CHECK(!span_membership({Rational(1), Rational(0)}, e2));
  CHECK_THROWS(span_membership({Rational(1), Rational(0), Rational(0)}, e2));
}

TEST_CASE("subspace canonical form decides equality") {
  std::vector<RealVector> a{{Rational(1), Rational(1), Rational(0)},
                            {Rational(0), Rational(1), Rational(1)}};
  std::vector<RealVector> b{{Rational(2), Rational(2), Rational(0)},
                            {Rational(1), Rational(2), Rational(1)},
                            {Rational(1), Rational(0), Rational(-1)}};
  CHECK(Subspace::from_spanning(3, a) == Subspace::from_spanning(3, b));
  CHECK(Subspace::from_spanning(3, a) != Subspace::full(3));
}

TEST_CASE("span solver expresses targets") {
  SpanSolver solver(3);
  CHECK(solver.add({Rational(1), Rational(0), Rational(1)}));
  CHECK(solver.add({Rational(0), Rational(1), Rational(1)}));
  CHECK(!solver.add({Rational(1), Rational(1), Rational(2)}));  // dependent
  auto c = solver.express({Rational(2), Rational(3), Rational(5)});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 3);
  CHECK(!solver.express({Rational(1), Rational(0), Rational(0)}).has_value());
}
