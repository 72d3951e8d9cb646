#pragma once

/*
 * Dense matrices over the rational quaternions, flattening to exact real
 * coordinate vectors, and exact linear solving: fraction-free Gaussian
 * elimination over primitive integer rows, reduced echelon subspaces,
 * kernels, span membership.
 *
 * The elimination engine exists in two builds of the same algorithm: a
 * serial reference (`RrefBuilder::insert` row by row) and an OpenMP batch
 * path (`insert_batch`) that pre-reduces panels of rows in parallel. Both
 * produce the same reduced echelon form: the reduced form of a row space
 * is canonical, so results are independent of insertion order and thread
 * count.
 */

#include "qlie/scalars.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace qlie {

using RealVector = std::vector<Rational>;
// Sparse rational coordinates: (index, value) pairs.
using SparseCoords = std::vector<std::pair<int, Rational>>;

RealVector vec_add(const RealVector& a, const RealVector& b);
RealVector vec_sub(const RealVector& a, const RealVector& b);
RealVector vec_scale(const Rational& s, const RealVector& a);
bool vec_is_zero(const RealVector& a);
RealVector unit_vector(std::size_t ambient, std::size_t index);

struct MatrixQ {
  int rows = 0, cols = 0;
  std::vector<Quaternion> entries;  // row-major, size rows*cols

  MatrixQ() = default;
  MatrixQ(int r, int c);

  static MatrixQ identity(int n);

  Quaternion& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  const Quaternion& at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }

  bool is_zero() const;
  bool is_square() const { return rows == cols; }

  MatrixQ operator-() const;
  friend MatrixQ operator+(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator-(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator*(const Rational& s, const MatrixQ& a);
  friend bool operator==(const MatrixQ& a, const MatrixQ& b) = default;
};

// Exact quaternionic product, entry order A_{is} B_{sj}; throws on mismatch.
MatrixQ mat_mul(const MatrixQ& a, const MatrixQ& b);
// AB - BA for square matrices of equal size.
MatrixQ commutator(const MatrixQ& a, const MatrixQ& b);
MatrixQ conj_transpose(const MatrixQ& a);
MatrixQ transpose(const MatrixQ& a);
Quaternion trace(const MatrixQ& a);
// B(A,B) = Re tr(AB); symmetric.
Rational re_trace_form(const MatrixQ& a, const MatrixQ& b);

// Linear injection M(r x c, H) -> Q^{4rc}; component order (1,i,j,k) per
// entry, entries row-major.
RealVector flatten(const MatrixQ& m);
std::vector<std::pair<int, Rational>> flatten_sparse(const MatrixQ& m);

/*
 * q = z + j w with z, w in Q(i) maps to the 2x2 complex block
 * [[z, -conj(w)], [w, conj(z)]]; an n x n quaternionic matrix maps to the
 * 2n x 2n complex matrix assembled from the four n x n blocks, matching the
 * coordinate split (x, x') of a quaternionic column x + j x'. Ring
 * homomorphism; intertwines conjugate-transpose.
 */
MatrixQ quat_to_complex(const MatrixQ& a);

// ---------------------------------------------------------------------------
// Exact elimination engine.

// Sparse integer row: strictly increasing indices, nonzero coefficients.
// Normal form: content 1, leading coefficient positive.
struct SparseRow {
  std::vector<std::pair<int, BigInt>> nz;

  bool empty() const { return nz.empty(); }
  int lead() const { return nz.front().first; }
};

SparseRow sparse_from_rational(const RealVector& v);
SparseRow sparse_from_pairs(std::vector<std::pair<int, Rational>> entries);

class RrefBuilder {
 public:
  explicit RrefBuilder(int ambient) : ambient_(ambient) {}

  // Serial reference path. Returns true when the row enlarged the span.
  bool insert(SparseRow row);
  // OpenMP batch path; same final state as inserting rows one by one.
  void insert_batch(std::vector<SparseRow> rows);

  int ambient() const { return ambient_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  std::vector<int> pivot_columns() const;
  // Leading-1 reduced echelon rows ordered by pivot column.
  std::vector<RealVector> rational_rows() const;

  // Null space of the linear map whose matrix rows are the inserted rows.
  std::vector<RealVector> kernel_vectors() const;

 private:
  void reduce(SparseRow& row) const;

  int ambient_;
  std::vector<SparseRow> rows_;      // ordered by pivot column
  std::vector<int> pivot_of_row_;    // parallel to rows_
  std::vector<int> row_of_col_;      // lazily sized; -1 when col is free
};

// Subspace of Q^n in canonical form: reduced echelon basis with leading 1s.
// Equality of subspaces is equality of the stored bases.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace from_spanning(int ambient, const std::vector<RealVector>& vectors);
  static Subspace from_rref(int ambient, std::vector<RealVector> rref_rows);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<RealVector>& basis() const { return basis_; }

  bool contains(const RealVector& v) const;
  bool contains(const Subspace& other) const;
  // v reduced modulo the subspace; zero iff contained.
  RealVector reduce(RealVector v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  int ambient_ = 0;
  std::vector<RealVector> basis_;
  std::vector<int> pivots_;
};

// dim(A) + dim(B) == dim(A + B) iff the intersection is trivial.
Subspace subspace_sum(const Subspace& a, const Subspace& b);

// Exact null space basis { x : M x = 0 } with M given by rows.
// All rows must have the stated ambient length.
Subspace kernel(const std::vector<RealVector>& rows);
Subspace kernel_serial(const std::vector<RealVector>& rows);
Subspace kernel_sparse(int ambient, std::vector<SparseRow> rows);
Subspace kernel_sparse_serial(int ambient, std::vector<SparseRow> rows);

bool span_membership(const RealVector& v, const Subspace& s);

// Reduced echelon span with combination tracking: express() returns the
// coefficients of the target over the added generators, or nullopt when the
// target lies outside the span. Rows are kept sparse; generators that do not
// enlarge the span are rejected by add().
class SpanSolver {
 public:
  explicit SpanSolver(int ambient) : ambient_(ambient) {}

  bool add(const RealVector& gen);
  bool add_sparse(const std::vector<std::pair<int, Rational>>& gen);
  int rank() const { return static_cast<int>(rows_.size()); }
  int generators() const { return n_gens_; }

  std::optional<std::vector<Rational>> express(const RealVector& target) const;
  std::optional<std::vector<Rational>> express_sparse(
      const std::vector<std::pair<int, Rational>>& target) const;

 private:
  using SRat = std::vector<std::pair<int, Rational>>;  // sparse rational row

  struct Row {
    SRat main;            // reduced echelon over the ambient coordinates
    std::vector<Rational> comb;  // combination of generators producing main
  };

  // Reduce target in place, accumulating the combination; returns remainder.
  SRat reduce(SRat target, std::vector<Rational>& comb) const;

  int ambient_;
  int n_gens_ = 0;
  std::vector<Row> rows_;        // ordered by pivot
  std::vector<int> pivot_of_row_;
};

}  // namespace qlie
