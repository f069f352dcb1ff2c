#pragma once

// Exact scalars: GMP integers and rationals, plus the Gaussian rationals Q(i)
// and a small prime-field element type used by the generic linear algebra.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace wittcob {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a/b" (either part may carry a sign) or an integer literal. Throws std::invalid_argument on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline int sign_of(const Rational& value) { return sgn(value); }
inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

/// Element of Q(i). Arithmetic is exact.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(int value) : re(value) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational real) : re(std::move(real)) {}  // NOLINT
  Gaussian(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  Gaussian conj() const { return {re, -im}; }
  bool is_real() const { return sgn(im) == 0; }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return {Rational(a.re + b.re), Rational(a.im + b.im)};
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return {Rational(a.re - b.re), Rational(a.im - b.im)};
  }
  friend Gaussian operator-(const Gaussian& a) { return {Rational(-a.re), Rational(-a.im)}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b);
  Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
  Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline bool is_zero(const Gaussian& value) { return sgn(value.re) == 0 && sgn(value.im) == 0; }

/// i^k for any integer k.
Gaussian i_power(long k);

std::string to_string(const Gaussian& value);

/// Element of F_p for p < 2^31. A modulus of 0 marks an unbound literal
/// (produced by the integer constructor) that adopts the modulus of the
/// other operand, so generic code can write ModP(0) and ModP(1).
class ModP {
 public:
  ModP() = default;
  ModP(int literal) : value_(literal), modulus_(0) {}  // NOLINT(google-explicit-constructor)
  ModP(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }
  ModP inverse() const;

  friend ModP operator+(const ModP& a, const ModP& b);
  friend ModP operator-(const ModP& a, const ModP& b);
  friend ModP operator-(const ModP& a);
  friend ModP operator*(const ModP& a, const ModP& b);
  friend ModP operator/(const ModP& a, const ModP& b);
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  friend bool operator==(const ModP& a, const ModP& b);

 private:
  std::int64_t value_ = 0;
  std::int64_t modulus_ = 0;
};

inline bool is_zero(const ModP& value) { return value.value() == 0; }

}  // namespace wittcob
