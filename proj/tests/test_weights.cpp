#include "qlie/weights.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qlie;

namespace {

DominantWeight wt(int n, std::vector<int> m) { return DominantWeight(n, std::move(m)); }

}  // namespace

TEST_CASE("dimension product on quoted examples") {
  CHECK(weyl_dim(wt(3, {1, 0, 0})) == 6);
  CHECK(weyl_dim(wt(3, {2, 0, 0})) == 21);
  CHECK(weyl_dim(wt(3, {0, 1, 0})) == 14);
  CHECK(weyl_dim(wt(3, {0, 0, 1})) == 14);
  // independent oracle: (n+1)(2n+1)(2n-1)(n-2)/2 at n = 3 is 4*7*5*1/2 = 70
  CHECK(dim_w1_plus_w3(3) == 70);
  CHECK(weyl_dim(wt(3, {1, 0, 1})) == 70);
  CHECK(weyl_dim(DominantWeight::zero(4)) == 1);
}

TEST_CASE("fundamental dimension identity") {
  CHECK(fundamental_dim(1, 5) == 10);  // 2n
  CHECK(fundamental_dim(2, 3) == binomial(6, 2) - binomial(6, 0));
  CHECK(fundamental_dim(2, 3) == 14);
  CHECK(fundamental_dim(3, 4) == binomial(8, 3) - binomial(8, 1));
  CHECK(fundamental_dim(3, 4) == 48);
  CHECK_THROWS(fundamental_dim(0, 3));
  CHECK_THROWS(fundamental_dim(4, 3));
  // the two independent formulas agree for every rank up to 8
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(weyl_dim(DominantWeight::fundamental(n, k)) == fundamental_dim(k, n));
}

TEST_CASE("third-and-higher fundamentals outgrow the adjoint") {
  CHECK(check_L14(4));  // 48 > 36
  CHECK(check_L14(5));
  CHECK(check_L14(6));
  CHECK_THROWS(check_L14(3));  // excluded: at n = 3, D_3 = 14 < 21
  CHECK(fundamental_dim(3, 3) == 14);
  CHECK(dim_adjoint(3) == 21);
}

TEST_CASE("bounded enumeration") {
  auto names = [](const std::vector<DominantWeight>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(w.to_string());
    return out;
  };
  CHECK(names(enumerate_small_reps(4, BigInt(36))) ==
        std::vector<std::string>{"1,0,0,0", "0,1,0,0", "2,0,0,0"});
  CHECK(names(enumerate_small_reps(3, BigInt(21))) ==
        std::vector<std::string>{"1,0,0", "0,1,0", "0,0,1", "2,0,0"});
  CHECK(enumerate_small_reps(3, BigInt(5)).empty());  // smallest nontrivial dim is 6
  CHECK_THROWS(enumerate_small_reps(9, BigInt(10)));
  CHECK_THROWS(enumerate_small_reps(3, BigInt(0)));
}

TEST_CASE("alternating square identity") {
  // 21 + 70 = 91 = C(14,2)
  CHECK(dim_adjoint(3) + dim_w1_plus_w3(3) == 91);
  CHECK(binomial(14, 2) == 91);
  for (int n = 3; n <= 6; ++n) CHECK(check_L11_dims(n));
}

TEST_CASE("exclusion closed forms") {
  CHECK(dim_two_w2(3) == 90);
  CHECK(dim_w1_plus_w2(3) == 64);
  for (int n = 3; n <= 6; ++n) CHECK(check_C12_exclusions(n));
}

TEST_CASE("monotonicity under adding a fundamental weight") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::vector<int>> grid;
    grid.push_back(std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<int> m(n, 0);
        m[i] += 1;
        m[j] += 1;
        grid.push_back(std::move(m));
      }
    for (const auto& m : grid) {
      BigInt base = weyl_dim(wt(n, m));
      for (int i = 0; i < n; ++i) {
        std::vector<int> up = m;
        ++up[i];
        CHECK(weyl_dim(wt(n, up)) > base);
      }
    }
  }
}

TEST_CASE("weight validation") {
  CHECK_THROWS(wt(3, {1, -1, 0}));
  CHECK_THROWS(wt(3, {1, 0}));
  CHECK(wt(3, {0, 1, 0}).to_string() == "0,1,0");
}
