#pragma once

#include "qlie/scalars.hpp"

#include <cstdint>

namespace qlie {

// splitmix64: fully specified, identical on every platform. Used only for
// randomized spot checks, never for anything the reports depend on beyond
// the recorded seed.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi]
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long max_num = 9, long max_den = 9) {
    return Rational(range(-max_num, max_num), range(1, max_den));
  }

  Quaternion quaternion(long max_num = 9, long max_den = 9) {
    return {rational(max_num, max_den), rational(max_num, max_den),
            rational(max_num, max_den), rational(max_num, max_den)};
  }

 private:
  std::uint64_t state_;
};

}  // namespace qlie
