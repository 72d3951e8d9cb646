#pragma once

/*
 * Type C_n weight combinatorics: dominant weights, the closed-form
 * dimension product for irreducibles, alternating-power dimension
 * identities and bounded enumeration of small representations.
 */

#include "qlie/scalars.hpp"

#include <vector>

namespace qlie {

// lambda = m_1 w_1 + ... + m_n w_n with nonnegative integer coefficients.
struct DominantWeight {
  int n = 0;
  std::vector<int> coeffs;  // size n, all >= 0

  DominantWeight(int rank, std::vector<int> m);
  // w_k, 1-based k
  static DominantWeight fundamental(int rank, int k);
  static DominantWeight zero(int rank);

  friend bool operator==(const DominantWeight& a, const DominantWeight& b) = default;
  friend auto operator<=>(const DominantWeight& a, const DominantWeight& b) = default;

  std::string to_string() const;  // "m1,m2,...,mn"
};

BigInt binomial(int n, int k);

// Exact dimension of the irreducible with highest weight lambda, computed
// as the triple product over positive roots in rational arithmetic and
// asserted integral and positive.
BigInt weyl_dim(const DominantWeight& lambda);

// C(2n,k) - C(2n,k-2); agrees with weyl_dim of the k-th fundamental weight.
BigInt fundamental_dim(int k, int n);

// Quoted closed forms for specific highest weights.
BigInt dim_first_fundamental(int n);            // 2n
BigInt dim_adjoint(int n);                      // n(2n+1), weight 2 w_1
BigInt dim_second_fundamental(int n);           // n(2n-1) - 1
BigInt dim_w1_plus_w3(int n);                   // (n+1)(2n+1)(2n-1)(n-2)/2
BigInt dim_two_w2(int n);                       // n(n-1)(2n-1)(2n+3)/3
BigInt dim_w1_plus_w2(int n);                   // 8n(n-1)(n+1)/3

// true iff dim V(w_k) > n(2n+1) for every 3 <= k <= n; requires n > 3.
bool check_L14(int n);

// All nonzero dominant weights with weyl_dim <= bound, in graded
// lexicographic order. Pruning relies on the strict monotonicity of the
// dimension under adding a fundamental weight; rank is capped at 8.
std::vector<DominantWeight> enumerate_small_reps(int n, const BigInt& bound);

// n(2n+1) + dim V(w_1 + w_3) == C(dim V(w_2), 2); requires n >= 3.
bool check_L11_dims(int n);

// weyl_dim agrees with the closed forms for 2 w_2 and w_1 + w_2, and both
// exceed n(2n+1); requires n >= 3.
bool check_C12_exclusions(int n);

}  // namespace qlie
