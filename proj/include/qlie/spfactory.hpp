#pragma once

/*
 * Concrete matrix constructions: the quaternionic symplectic algebras
 * sp(k,l), the complex and real orthogonal pictures su(2k,2l) and
 * so(4k,4l) with their module decompositions, the block embeddings of
 * sp(k,l) + sp(1) into the next symplectic algebra, the bracket map on
 * the complement and its (r,s)-deformations, and the projected product
 * on m = g + V.
 *
 * Conventions fixed here and used everywhere:
 *  - signature matrix I_{k,l} = diag(I_k, -I_l); sign of slot d (0-based)
 *    is +1 for d < k and -1 otherwise;
 *  - complex coordinates on C^{2n} are ordered (e_1..e_n, e^1..e^n);
 *    the hermitian form is <x,y> = sum_s eps_s (conj(x_s) y_s + conj(x^s) y^s)
 *    and the symplectic form is w(x,y) = x^t J_{k,l} y with
 *    J_{k,l} = [[0, I_{k,l}], [-I_{k,l}, 0]];
 *  - real coordinates on the realification are ordered
 *    (e_s, e^s, i e_s, i e^s), i.e. all real parts then all imaginary parts;
 *  - quaternionic columns x + j x' correspond to complex columns (x, x').
 */

#include "qlie/liecore.hpp"

#include <array>
#include <memory>
#include <utility>
#include <vector>

namespace qlie {

struct Signature {
  int k = 0, l = 0;

  int n() const { return k + l; }
  // sign of diagonal slot d, 0-based
  int slot_sign(int d) const { return d < k ? 1 : -1; }
  friend bool operator==(const Signature& a, const Signature& b) = default;
};

enum class Variant { add_to_l, add_to_k };

const char* variant_name(Variant v);

// Basis of sp(k,l) = { X : X* I_{k,l} + I_{k,l} X = 0 }: the imaginary units
// at each diagonal slot, then for each slot pair d < e and q in {1,i,j,k}
// the matrix with q at (d,e) and -s_d s_e conj(q) at (e,d). Closed, of real
// dimension n(2n+1).
LieAlgebra build_sp(const Signature& sig);

// Complex vectors in the (e_s, e^s) coordinate order.
using CVec = std::vector<GaussianRational>;

CVec cvec_unit(int two_n, int index);
GaussianRational hermitian_form(const Signature& sig, const CVec& x, const CVec& y);
GaussianRational symplectic_form(const Signature& sig, const CVec& x, const CVec& y);

// sigma(X) = J_{k,l} X^t J_{k,l}; involutive automorphism of su(2k,2l).
MatrixQ sigma_involution(const Signature& sig, const MatrixQ& x);

// Complex linear map as a real operator on the realification.
MatrixQ realify_linear(const MatrixQ& complex_mat);
// Conjugate-linear map z -> M conj(z) as a real operator.
MatrixQ realify_antilinear(const MatrixQ& complex_mat);

struct SuDecomposition {
  Signature sig;
  LieAlgebra su;         // complex matrices (Gaussian entries), closed
  Subspace sp_part, w0;  // +1 / -1 eigenspaces of sigma, in su coordinates
  std::vector<RealVector> psi_coords;  // coords of quat_to_complex(sp basis)
};

// su(2k,2l) split into eigenspaces of sigma; the +1 part is the image of
// sp(k,l) under quat_to_complex and the -1 part is its module complement.
SuDecomposition build_su(const Signature& sig);

// S_{x^y}(z) = w(x,z) y - w(y,z) x as a complex 2n x 2n matrix.
MatrixQ build_S_map(const Signature& sig, const CVec& x, const CVec& y);

// Complex matrices behind the T^s operators: T^0 is complex linear, T^1 is
// conjugate linear (returned matrix M acts as z -> M conj(z)).
MatrixQ t0_complex(const Signature& sig, const CVec& x, const CVec& y);
MatrixQ t1_antilinear(const Signature& sig, const CVec& x, const CVec& y);

// T^s_{x^y} as a real 4n x 4n matrix on the realification; s in {0,1,2}.
// B_1(x,y) = B_0(y,x) = <y,x>, B_2(x,y) = Re<x,y>.
MatrixQ build_T_map(int s, const Signature& sig, const CVec& x, const CVec& y);

struct SoDecomposition {
  Signature sig;
  // adapted basis order: sp(k,l) | sp(1) | V0 | V1 | V2
  LieAlgebra so;
  GradedDecomposition parts;
  int dim_sp = 0, dim_module = 0;  // n(2n+1) and n(2n-1)-1

  std::array<int, 2> part_range(const char* label) const;
};

// so(4k,4l) in the ordered real basis above, decomposed as
// sp(k,l) + sp(1) + V0 + V1 + V2 with V0 the realified -1 eigenspace of
// sigma in su(2k,2l), V1 = T^1 of its wedge preimage and V2 = T^1 of i times
// that preimage; the sp(1) factor is spanned by the three explicit operators
// (multiplication by i up to sign, T_theta, i T_theta).
SoDecomposition build_so_decomposition(const Signature& sig);

struct EmbeddingData {
  Signature sig;       // signature of g = sp(k,l)
  Variant variant = Variant::add_to_l;
  Signature h_sig;     // signature of h
  std::shared_ptr<const LieAlgebra> h;  // basis adapted to g | k | V
  int dim_g = 0, dim_k = 3, dim_v = 0;
  GradedDecomposition parts;  // labels "g", "k", "V"

  int g_begin() const { return 0; }
  int k_begin() const { return dim_g; }
  int v_begin() const { return dim_g + dim_k; }
  int dim() const { return dim_g + dim_k + dim_v; }
  // index of the V basis vector with quaternion unit q (0..3 = 1,i,j,k)
  // at slot d of H^{k,l}
  int v_index(int d, int q) const { return v_begin() + 4 * d + q; }

  // block inclusion (X, zeta, Z) -> h; X is n x n, Z a quaternionic column
  MatrixQ iota(const MatrixQ& x, const Quaternion& zeta,
               const std::vector<Quaternion>& z) const;
  MatrixQ iota_v(const std::vector<Quaternion>& z) const;
};

// h = sp(k,l+1) or sp(k+1,l) with its basis reordered along g | k | V;
// dimension counts, B-orthogonality of the grading and the symmetric-pair
// property are all verified during construction.
EmbeddingData build_embedding(const Signature& sig, Variant variant);

struct OmegaValue {
  MatrixQ g_part;      // n x n, lies in sp(k,l)
  Quaternion k_part;   // imaginary
};

// The bracket map Lambda^2 V -> g + k evaluated on columns Z, W of H^{k,l},
// via the closed block formula of the inclusion in use (Z_0 = -I_{k,l} Z).
// Equals the graded decomposition of the ambient commutator [iota Z, iota W].
OmegaValue omega_bracket(const EmbeddingData& e, const std::vector<Quaternion>& z,
                         const std::vector<Quaternion>& w);

struct OmegaParams {
  Rational r, s;
};

// Deformed algebra on g + k + V: all brackets of h except that the V x V
// products are replaced by r * (g-part) + s * (k-part).
NonAssocAlgebra build_h_rs(const EmbeddingData& e, const OmegaParams& p);

struct PhiRescaleResult {
  bool is_isomorphism = false;
  RealVector endo;  // diag(1,..,1, t,..,t) in adapted coordinates, row-major
};

// Phi(X + v) = X + t v, checked to intertwine the brackets of h_{t^2,t^2}
// and h on every basis pair. Throws for t = 0.
PhiRescaleResult phi_rescale_iso(const EmbeddingData& e, const Rational& t);

// Projected product on m = g + V: the bracket of h followed by the
// B-orthogonal projection along k. Nondegeneracy of B on k and on m is
// checked before the k-components are dropped.
NonAssocAlgebra build_m_algebra(const EmbeddingData& e);

// Index of a coordinate of m = g + V given its adapted h-coordinate.
int m_index_of_h_index(const EmbeddingData& e, int h_index);

struct WitnessTriple {
  int slot = 0;                      // diagonal slot of g carrying the block
  std::array<RealVector, 3> xyz;     // coordinates in the m-algebra
  std::array<int, 2> block;          // h matrix positions of the 2x2 block
};

// The three V-elements supported on a single compact 2x2 block of h, whose
// projected brackets produce the nonvanishing Jacobiator.
WitnessTriple pa2_witness(const EmbeddingData& e);

// Rank of the Gram matrix of Re tr on the given matrices.
int gram_rank(const std::vector<MatrixQ>& mats);

}  // namespace qlie
