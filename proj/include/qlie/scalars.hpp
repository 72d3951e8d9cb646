#pragma once

/*
 * Exact scalar arithmetic: rationals, Gaussian rationals and quaternions
 * with rational coefficients. Everything here is a value type and every
 * operation is exact; there is no floating point anywhere in the library.
 *
 * The component order (1, i, j, k) is fixed globally and is the order used
 * by all flattenings and serialized forms.
 */

#include <boost/multiprecision/gmp.hpp>

#include <array>
#include <optional>
#include <ostream>
#include <string>

namespace qlie {

// Canonical by construction: lowest terms, denominator > 0.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rational& r);

// Accepts "p" and "p/q" with optional sign; rejects everything else.
std::optional<Rational> rational_from_string(const std::string& s);

struct Quaternion {
  Rational re, im_i, im_j, im_k;

  Quaternion() = default;
  Quaternion(Rational r, Rational i, Rational j, Rational k)
      : re(std::move(r)), im_i(std::move(i)), im_j(std::move(j)), im_k(std::move(k)) {}
  explicit Quaternion(Rational r) : re(std::move(r)) {}
  explicit Quaternion(long r) : re(r) {}

  static Quaternion zero() { return Quaternion(); }
  static Quaternion one() { return Quaternion(Rational(1)); }
  static Quaternion unit_i() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
  static Quaternion unit_j() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
  static Quaternion unit_k() { return {Rational(0), Rational(0), Rational(0), Rational(1)}; }
  // unit(0..3) = 1, i, j, k
  static Quaternion unit(int c);

  bool is_zero() const { return re == 0 && im_i == 0 && im_j == 0 && im_k == 0; }
  bool is_real() const { return im_i == 0 && im_j == 0 && im_k == 0; }
  bool is_imaginary() const { return re == 0; }
  // true when the j and k components vanish, i.e. the entry lies in Q(i)
  bool is_gaussian() const { return im_j == 0 && im_k == 0; }

  const Rational& component(int c) const;

  Quaternion operator-() const { return {-re, -im_i, -im_j, -im_k}; }
  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator*(const Rational& s, const Quaternion& q) {
    return {s * q.re, s * q.im_i, s * q.im_j, s * q.im_k};
  }
  friend bool operator==(const Quaternion& a, const Quaternion& b) = default;
};

Quaternion conj(const Quaternion& q);
inline const Rational& re_part(const Quaternion& q) { return q.re; }
// q q* = |q|^2, real and nonnegative
Rational norm_squared(const Quaternion& q);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

// Complex numbers with rational parts; the scalar subring Q(i) of the
// quaternions used by the complex matrix realizations.
struct GaussianRational {
  Rational re, im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussianRational(long r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRational operator-() const { return {-re, -im}; }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

// Ring embedding Q(i) -> H(Q); im_j = im_k = 0.
inline Quaternion to_quaternion(const GaussianRational& z) {
  return {z.re, z.im, Rational(0), Rational(0)};
}

}  // namespace qlie
