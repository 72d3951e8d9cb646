#include "qlie/scalars.hpp"

#include <stdexcept>

namespace qlie {

std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::optional<Rational> rational_from_string(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(s)) return std::nullopt;
      return Rational(BigInt(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    BigInt d(den);
    if (d == 0) return std::nullopt;
    return Rational(BigInt(num), d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Quaternion Quaternion::unit(int c) {
  switch (c) {
    case 0: return one();
    case 1: return unit_i();
    case 2: return unit_j();
    case 3: return unit_k();
  }
  throw std::out_of_range("quaternion component index");
}

const Rational& Quaternion::component(int c) const {
  switch (c) {
    case 0: return re;
    case 1: return im_i;
    case 2: return im_j;
    case 3: return im_k;
  }
  throw std::out_of_range("quaternion component index");
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  re += o.re;
  im_i += o.im_i;
  im_j += o.im_j;
  im_k += o.im_k;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  re -= o.re;
  im_i -= o.im_i;
  im_j -= o.im_j;
  im_k -= o.im_k;
  return *this;
}

// Hamilton product; ij = k, ji = -k.
Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {
      a.re * b.re - a.im_i * b.im_i - a.im_j * b.im_j - a.im_k * b.im_k,
      a.re * b.im_i + a.im_i * b.re + a.im_j * b.im_k - a.im_k * b.im_j,
      a.re * b.im_j - a.im_i * b.im_k + a.im_j * b.re + a.im_k * b.im_i,
      a.re * b.im_k + a.im_i * b.im_j - a.im_j * b.im_i + a.im_k * b.re,
  };
}

Quaternion conj(const Quaternion& q) { return {q.re, -q.im_i, -q.im_j, -q.im_k}; }

Rational norm_squared(const Quaternion& q) {
  return q.re * q.re + q.im_i * q.im_i + q.im_j * q.im_j + q.im_k * q.im_k;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  os << "(" << rational_to_string(q.re) << ", " << rational_to_string(q.im_i) << "i, "
     << rational_to_string(q.im_j) << "j, " << rational_to_string(q.im_k) << "k)";
  return os;
}

}  // namespace qlie
