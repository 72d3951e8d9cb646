#pragma once

/*
 * Finite-dimensional real Lie (and non-associative) algebras over a matrix
 * basis: structure constants, brackets in coordinates, centers and
 * centralizers, derivation algebras, the Jacobiator, invariant symmetric
 * bilinear forms and symmetric-pair tests.
 *
 * All queries run against the structure-constant tensor, so they apply
 * equally to honest Lie algebras and to deformed or projected products
 * that need not satisfy the Jacobi identity.
 */

#include "qlie/qlinalg.hpp"

#include <array>
#include <stdexcept>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qlie {

// Antisymmetric product tensor c with [x_a, x_b] = sum_e c[a][b][e] x_e.
// Only pairs a < b are stored; the rest follows from antisymmetry.
struct StructureTensor {
  int dim = 0;
  std::vector<SparseCoords> upper;  // index a*dim + b for a < b

  static StructureTensor empty(int dim);

  const SparseCoords& at_upper(int a, int b) const;  // requires a < b
  void set_upper(int a, int b, SparseCoords coords);

  // signed lookup, any a != b
  SparseCoords bracket_basis_sparse(int a, int b) const;
  RealVector bracket_basis(int a, int b) const;
  RealVector bracket(const RealVector& x, const RealVector& y) const;
};

struct LieAlgebra {
  std::string name;
  std::vector<MatrixQ> basis;  // all square, same size, independent
  StructureTensor structure;
  bool is_closed = true;
  // set when a commutator escapes the span; structure is then partial
  std::optional<std::pair<int, int>> escape_witness;

  int dim() const { return static_cast<int>(basis.size()); }
  int matrix_size() const { return basis.empty() ? 0 : basis.front().rows; }
  MatrixQ matrix_of(const RealVector& coords) const;
};

struct CloseOptions {
  bool check_jacobi = true;  // re-verify Jacobi on the assembled tensor
};

// Computes all pairwise commutators of the given independent matrices.
// When every commutator stays inside the span, returns a closed algebra
// with its exact structure tensor; otherwise flags not-closed with the
// first escaping pair as witness. Throws on a dependent basis.
LieAlgebra close_and_structure(std::string name, std::vector<MatrixQ> basis,
                               const CloseOptions& options = {});

// { x : [x, L] = 0 }, coordinates in the basis of L.
Subspace center(const LieAlgebra& algebra);

// { x in L : [x, s] = 0 for all s in S }; S lives in the coordinate space
// of L (same ambient dimension), otherwise an exception is thrown.
Subspace centralizer(const LieAlgebra& algebra, const Subspace& s);

// Endomorphisms are row-major d x d rational matrices acting on algebra
// coordinates, flattened to length d*d.
RealVector ad_endo(const StructureTensor& t, const RealVector& x);

// Exact solution space of T[x,y] = [Tx,y] + [x,Ty] over all basis pairs,
// as a subspace of the d^2-dimensional endomorphism space. The default
// entry point assembles and eliminates with the OpenMP engine; the serial
// variant is the reference implementation.
Subspace derivations(const StructureTensor& t);
Subspace derivations_serial(const StructureTensor& t);
std::vector<SparseRow> derivation_rows(const StructureTensor& t);

// [[y,z],x] + [[x,y],z] + [[z,x],y]; identically zero iff the product is Lie.
RealVector jacobiator(const StructureTensor& t, const RealVector& x, const RealVector& y,
                      const RealVector& z);

struct LieCheck {
  bool is_lie = false;
  std::optional<std::array<int, 3>> witness;  // first failing basis triple
};
LieCheck is_lie_algebra(const StructureTensor& t);

// Upper-triangle coordinates for symmetric m x m forms: (i,j), i <= j,
// row-major; ambient dimension m(m+1)/2.
int sym_index(int m, int i, int j);

struct AdStabilityError : std::runtime_error {
  AdStabilityError(int a, int j)
      : std::runtime_error("module is not ad-stable"), algebra_index(a), module_index(j) {}
  int algebra_index;  // basis element of L
  int module_index;   // basis element of M
};

struct InvariantForms {
  Subspace forms;                          // in sym_index coordinates
  std::vector<std::vector<RealVector>> actions;  // R_a, columns = images
};

// Solution space of B(ad_X u, v) + B(u, ad_X v) = 0 over all X in the given
// acting set and u, v in the basis of M, restricted to symmetric B. The
// actions are taken inside `algebra`; M must be stable under each acting
// element, otherwise AdStabilityError is thrown with a witness.
InvariantForms invariant_symmetric_forms(const LieAlgebra& algebra,
                                         const std::vector<RealVector>& acting,
                                         const Subspace& m);
// Acting set = the full basis of the algebra.
InvariantForms invariant_symmetric_forms(const LieAlgebra& algebra, const Subspace& m);

// Coordinates of v relative to the reduced echelon basis of s; nullopt when
// v is outside s.
std::optional<RealVector> coords_in_subspace(const Subspace& s, const RealVector& v);

// true iff [t,t] c t, [t,W] c W, [W,W] c t. Throws unless t + W = L directly.
bool symmetric_pair_check(const LieAlgebra& algebra, const Subspace& t, const Subspace& w);

struct GradedDecomposition {
  std::vector<std::pair<std::string, Subspace>> parts;  // parent coordinates

  const Subspace& part(const std::string& label) const;
};

struct DecompositionReport {
  bool direct_sum = false;    // parts independent and spanning
  bool b_orthogonal = false;  // Re tr vanishes between distinct parts
};

DecompositionReport validate_decomposition(const LieAlgebra& parent,
                                           const GradedDecomposition& decomposition,
                                           bool check_b_orthogonality);

// Product on a subspace of an ambient Lie algebra (or a deformation of it);
// antisymmetric but not necessarily Lie.
struct NonAssocAlgebra {
  std::string name;
  std::shared_ptr<const LieAlgebra> ambient;   // may be null for standalone use
  std::vector<RealVector> basis_in_ambient;    // ordered basis, ambient coords
  Subspace m_basis;                            // echelon span of the above
  StructureTensor product;

  int dim() const { return product.dim; }
};

inline Subspace derivations(const NonAssocAlgebra& a) { return derivations(a.product); }
inline Subspace derivations(const LieAlgebra& a) { return derivations(a.structure); }
inline LieCheck is_lie_algebra(const NonAssocAlgebra& a) { return is_lie_algebra(a.product); }

}  // namespace qlie
