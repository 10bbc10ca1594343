#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ubenford {

/// Smallest precision any BigReal carries, in significant decimal digits.
inline constexpr int kMinDigits = 16;

/// Arbitrary-precision real with an explicit decimal-digit precision.
///
/// The value lives in an MPFR float whose mantissa holds `digits()` decimal
/// digits plus a few guard bits. A value is `exact()` when it is known to equal
/// the mathematical quantity it represents (integers built from GMP integers,
/// doubles, and results of correctly rounded operations that reported no
/// rounding). Arithmetic results carry the minimum precision of their inexact
/// inputs; the guard bits absorb the half-ulp rounding of each correctly
/// rounded operation, so no decimal digit is charged per operation. Sums,
/// differences and products of two exact values widen to stay exact.
class BigReal {
 public:
  BigReal();
  explicit BigReal(int digits);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  static BigReal from_integer(const mpz_class& value, int digits = kMinDigits);
  static BigReal from_integer(long value, int digits = kMinDigits);
  /// The exact binary value of `value`.
  static BigReal from_double(double value, int digits = kMinDigits);
  /// Decimal literal such as "3.14159" or "-2.5e-3", rounded to `digits`.
  static BigReal from_string(std::string_view text, int digits);

  int digits() const noexcept { return digits_; }
  bool exact() const noexcept { return exact_; }
  mpfr_prec_t bits() const noexcept { return mpfr_get_prec(value_); }

  /// Copy rounded to a different precision; exactness survives only if the
  /// rounding was exact.
  BigReal with_digits(int digits) const;

  bool is_zero() const;
  int sign() const;
  bool is_integer() const;

  double to_double() const;
  /// Approximate log10|x| as a double; finite for any nonzero value,
  /// including ones far outside double range.
  double log10_magnitude() const;
  /// Number of decimal digits in |floor(x)|, 0 when |x| < 1.
  long integer_digits() const;

  BigReal floor() const;
  /// x - floor(x) as a BigReal (exact operation).
  BigReal frac_part() const;
  mpz_class to_integer_floor() const;

  std::string to_string(int significant_digits) const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a);
  friend bool operator<(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, const BigReal& b);

  friend BigReal sqrt(const BigReal& x);
  friend BigReal square(const BigReal& x);
  friend BigReal log(const BigReal& x);
  friend BigReal log10(const BigReal& x);
  friend BigReal exp(const BigReal& x);
  friend BigReal pow(const BigReal& x, unsigned long n);
  friend BigReal pow(const BigReal& x, const BigReal& y);

  mpfr_srcptr raw() const noexcept { return value_; }
  mpfr_ptr raw() noexcept { return value_; }
  void set_exact(bool exact) noexcept { exact_ = exact; }

 private:
  mpfr_t value_;
  int digits_;
  bool exact_ = false;
};

mpfr_prec_t digits_to_bits(int digits);

}  // namespace ubenford
