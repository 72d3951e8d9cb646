#include "qlie/weights.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qlie {

DominantWeight::DominantWeight(int rank, std::vector<int> m) : n(rank), coeffs(std::move(m)) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (static_cast<int>(coeffs.size()) != n)
    throw std::invalid_argument("weight needs exactly n coefficients");
  for (int c : coeffs)
    if (c < 0) throw std::invalid_argument("dominant weights have nonnegative coefficients");
}

DominantWeight DominantWeight::fundamental(int rank, int k) {
  if (k < 1 || k > rank) throw std::invalid_argument("fundamental weight index out of range");
  std::vector<int> m(rank, 0);
  m[k - 1] = 1;
  return DominantWeight(rank, std::move(m));
}

DominantWeight DominantWeight::zero(int rank) {
  return DominantWeight(rank, std::vector<int>(rank, 0));
}

std::string DominantWeight::to_string() const {
  std::string s;
  for (int t = 0; t < n; ++t) {
    if (t) s += ",";
    s += std::to_string(coeffs[t]);
  }
  return s;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r(1);
  for (int t = 0; t < k; ++t) {
    r *= (n - t);
    r /= (t + 1);
  }
  return r;
}

BigInt weyl_dim(const DominantWeight& lambda) {
  const int n = lambda.n;
  const auto& m = lambda.coeffs;
  // suffix[t] = m_t + ... + m_{n-1}
  std::vector<long> suffix(n + 1, 0);
  for (int t = n - 1; t >= 0; --t) suffix[t] = suffix[t + 1] + m[t];

  Rational prod(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long mid = suffix[i] - suffix[j];  // m_i + ... + m_{j-1}
      prod *= Rational(j - i + mid, j - i);
      long num = mid + 2 * suffix[j];
      prod *= Rational(2 * n - j - i + num, 2 * n - j - i);
    }
  for (int i = 0; i < n; ++i) prod *= Rational(n - i + suffix[i], n - i);

  if (denominator(prod) != 1 || prod <= 0)
    throw std::logic_error("dimension product must be a positive integer");
  return numerator(prod);
}

BigInt fundamental_dim(int k, int n) {
  if (k < 1 || k > n) throw std::invalid_argument("fundamental weight index out of range");
  return binomial(2 * n, k) - binomial(2 * n, k - 2);
}

BigInt dim_first_fundamental(int n) { return BigInt(2) * n; }

BigInt dim_adjoint(int n) { return BigInt(n) * (2 * n + 1); }

BigInt dim_second_fundamental(int n) { return BigInt(n) * (2 * n - 1) - 1; }

BigInt dim_w1_plus_w3(int n) {
  BigInt num = BigInt(n + 1) * (2 * n + 1) * (2 * n - 1) * (n - 2);
  if (num % 2 != 0) throw std::logic_error("closed form must be integral");
  return num / 2;
}

BigInt dim_two_w2(int n) {
  BigInt num = BigInt(n) * (n - 1) * (2 * n - 1) * (2 * n + 3);
  if (num % 3 != 0) throw std::logic_error("closed form must be integral");
  return num / 3;
}

BigInt dim_w1_plus_w2(int n) {
  BigInt num = BigInt(8) * n * (n - 1) * (n + 1);
  if (num % 3 != 0) throw std::logic_error("closed form must be integral");
  return num / 3;
}

bool check_L14(int n) {
  if (n <= 3) throw std::invalid_argument("the bound only applies for n > 3");
  const BigInt adj = dim_adjoint(n);
  for (int k = 3; k <= n; ++k)
    if (fundamental_dim(k, n) <= adj) return false;
  return true;
}

std::vector<DominantWeight> enumerate_small_reps(int n, const BigInt& bound) {
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  if (n > 8) throw std::invalid_argument("enumeration rank capped at 8");

  std::set<std::vector<int>> seen, accepted;
  std::vector<std::vector<int>> queue;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> m(n, 0);
    m[k - 1] = 1;
    queue.push_back(std::move(m));
  }
  while (!queue.empty()) {
    std::vector<int> m = std::move(queue.back());
    queue.pop_back();
    if (!seen.insert(m).second) continue;
    // monotone in every coefficient, so everything above a rejected
    // weight is rejected too
    if (weyl_dim(DominantWeight(n, m)) > bound) continue;
    accepted.insert(m);
    for (int t = 0; t < n; ++t) {
      std::vector<int> up = m;
      ++up[t];
      if (!seen.count(up)) queue.push_back(std::move(up));
    }
  }

  std::vector<DominantWeight> out;
  for (const auto& m : accepted) out.emplace_back(n, m);
  std::sort(out.begin(), out.end(), [](const DominantWeight& a, const DominantWeight& b) {
    int ta = 0, tb = 0;
    for (int c : a.coeffs) ta += c;
    for (int c : b.coeffs) tb += c;
    if (ta != tb) return ta < tb;
    return a.coeffs > b.coeffs;  // within a grade: w_1 before w_2 before w_3
  });
  return out;
}

bool check_L11_dims(int n) {
  if (n < 3) throw std::invalid_argument("identity needs n >= 3");
  std::vector<int> m(n, 0);
  m[0] = 1;
  m[2] = 1;
  BigInt mixed = weyl_dim(DominantWeight(n, std::move(m)));
  if (mixed != dim_w1_plus_w3(n)) return false;
  BigInt d = weyl_dim(DominantWeight::fundamental(n, 2));
  return dim_adjoint(n) + mixed == d * (d - 1) / 2;
}

bool check_C12_exclusions(int n) {
  if (n < 3) throw std::invalid_argument("exclusions need n >= 3");
  const BigInt adj = dim_adjoint(n);
  std::vector<int> two_w2(n, 0);
  two_w2[1] = 2;
  BigInt a = weyl_dim(DominantWeight(n, std::move(two_w2)));
  std::vector<int> w1w2(n, 0);
  w1w2[0] = 1;
  w1w2[1] = 1;
  BigInt b = weyl_dim(DominantWeight(n, std::move(w1w2)));
  return a == dim_two_w2(n) && b == dim_w1_plus_w2(n) && a > adj && b > adj;
}

}  // namespace qlie
