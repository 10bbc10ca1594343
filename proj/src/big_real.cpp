#include "ubenford/big_real.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ubenford/error.hpp"

namespace ubenford {

namespace {

constexpr mpfr_prec_t kGuardBits = 16;
constexpr double kLog2Of10 = 3.321928094887362347870319429489390175864831393;

// Exact operands do not limit the precision of a result.
int result_digits(const BigReal& a, const BigReal& b) {
  if (a.exact() && b.exact()) return std::max(a.digits(), b.digits());
  if (a.exact()) return b.digits();
  if (b.exact()) return a.digits();
  return std::min(a.digits(), b.digits());
}

enum class ExactKind { Sum, Product, Other };

// Digits that hold the exact result of a sum or product of two exact values,
// or 0 if that is not attempted.
int exact_result_digits(const BigReal& a, const BigReal& b, ExactKind kind) {
  constexpr long kMaxExactBits = 40'000'000;
  if (!a.exact() || !b.exact() || kind == ExactKind::Other) return 0;
  long bits;
  if (kind == ExactKind::Product) {
    bits = static_cast<long>(a.bits()) + static_cast<long>(b.bits());
  } else if (a.is_zero() || b.is_zero()) {
    bits = static_cast<long>(std::max(a.bits(), b.bits()));
  } else {
    const long ea = mpfr_get_exp(a.raw()), eb = mpfr_get_exp(b.raw());
    const long lo = std::min(ea - static_cast<long>(a.bits()), eb - static_cast<long>(b.bits()));
    bits = std::max(ea, eb) - lo + 1;
  }
  if (bits > kMaxExactBits) return 0;
  return static_cast<int>(std::ceil(static_cast<double>(bits) / kLog2Of10));
}

template <typename Op>
BigReal binary(const BigReal& a, const BigReal& b, Op op, ExactKind kind = ExactKind::Other) {
  BigReal r(std::max(result_digits(a, b), exact_result_digits(a, b, kind)));
  const int ternary = op(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  r.set_exact(a.exact() && b.exact() && ternary == 0);
  return r;
}

template <typename Op>
BigReal unary(const BigReal& x, Op op) {
  BigReal r(x.digits());
  const int ternary = op(r.raw(), x.raw(), MPFR_RNDN);
  r.set_exact(x.exact() && ternary == 0);
  return r;
}

}  // namespace

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(std::max(digits, kMinDigits) * kLog2Of10)) + kGuardBits;
}

BigReal::BigReal() : BigReal(kMinDigits) {}

BigReal::BigReal(int digits) : digits_(std::max(digits, kMinDigits)) {
  mpfr_init2(value_, digits_to_bits(digits_));
  mpfr_set_zero(value_, 1);
  exact_ = true;
}

BigReal::BigReal(const BigReal& other) : digits_(other.digits_), exact_(other.exact_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : digits_(other.digits_), exact_(other.exact_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
    exact_ = other.exact_;
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
  std::swap(exact_, other.exact_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::from_integer(const mpz_class& value, int digits) {
  const auto needed = static_cast<int>(mpz_sizeinbase(value.get_mpz_t(), 10));
  BigReal r(std::max(digits, needed + 1));
  mpfr_set_z(r.value_, value.get_mpz_t(), MPFR_RNDN);
  r.exact_ = true;
  return r;
}

BigReal BigReal::from_integer(long value, int digits) {
  return from_integer(mpz_class(value), digits);
}

BigReal BigReal::from_double(double value, int digits) {
  if (!std::isfinite(value)) throw Error(ErrorKind::DomainError, "non-finite double");
  BigReal r(std::max(digits, 17));
  mpfr_set_d(r.value_, value, MPFR_RNDN);
  r.exact_ = true;
  return r;
}

BigReal BigReal::from_string(std::string_view text, int digits) {
  BigReal r(digits);
  const std::string s(text);
  if (mpfr_set_str(r.value_, s.c_str(), 10, MPFR_RNDN) != 0 && !mpfr_number_p(r.value_)) {
    throw Error(ErrorKind::DomainError, "not a decimal number: " + s);
  }
  r.exact_ = false;
  return r;
}

BigReal BigReal::with_digits(int digits) const {
  BigReal r(digits);
  const int ternary = mpfr_set(r.value_, value_, MPFR_RNDN);
  r.exact_ = exact_ && ternary == 0;
  return r;
}

bool BigReal::is_zero() const { return mpfr_zero_p(value_) != 0; }
int BigReal::sign() const { return mpfr_sgn(value_); }
bool BigReal::is_integer() const { return mpfr_integer_p(value_) != 0; }

double BigReal::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

double BigReal::log10_magnitude() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, value_, MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * 0.30102999566398119521;
}

long BigReal::integer_digits() const {
  mpz_class n = to_integer_floor();
  if (n < 0) n = -n;
  if (n == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10));
}

BigReal BigReal::floor() const { return unary(*this, [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t) {
  return mpfr_floor(r, x);
}); }

BigReal BigReal::frac_part() const {
  // x - floor(x) fits in the precision of x, so the subtraction is exact.
  BigReal f = floor();
  BigReal r(digits_);
  mpfr_set_prec(r.value_, mpfr_get_prec(value_));
  mpfr_sub(r.value_, value_, f.value_, MPFR_RNDN);
  r.exact_ = exact_;
  return r;
}

mpz_class BigReal::to_integer_floor() const {
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDD);
  return out;
}

std::string BigReal::to_string(int significant_digits) const {
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(significant_digits), value_,
                           MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  if (is_zero()) return "0";
  if (exp10 > 0 && exp10 <= static_cast<mpfr_exp_t>(mant.size())) {
    const auto point = static_cast<size_t>(exp10);
    std::string out = sign + mant.substr(0, point);
    if (point < mant.size()) out += "." + mant.substr(point);
    return out;
  }
  return sign + "0." + mant + "e" + std::to_string(exp10);
}

BigReal operator+(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_add, ExactKind::Sum); }
BigReal operator-(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_sub, ExactKind::Sum); }
BigReal operator*(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_mul, ExactKind::Product); }
BigReal operator/(const BigReal& a, const BigReal& b) {
  if (b.is_zero()) throw Error(ErrorKind::DomainError, "division by zero");
  return binary(a, b, mpfr_div);
}
BigReal operator-(const BigReal& a) { return unary(a, mpfr_neg); }
bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw Error(ErrorKind::DomainError, "square root of a negative value");
  return unary(x, mpfr_sqrt);
}

BigReal square(const BigReal& x) {
  if (x.exact()) {
    // Square of an exact value: give the result room for twice the digits.
    BigReal wide = x.with_digits(2 * x.digits() + 1);
    return wide * wide;
  }
  return unary(x, mpfr_sqr);
}

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw Error(ErrorKind::DomainError, "logarithm of a non-positive value");
  return unary(x, mpfr_log);
}

BigReal log10(const BigReal& x) {
  if (x.sign() <= 0) throw Error(ErrorKind::DomainError, "logarithm of a non-positive value");
  return unary(x, mpfr_log10);
}

BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }

BigReal pow(const BigReal& x, unsigned long n) {
  BigReal r(x.digits());
  const int ternary = mpfr_pow_ui(r.raw(), x.raw(), n, MPFR_RNDN);
  r.set_exact(x.exact() && ternary == 0);
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  if (x.sign() <= 0) throw Error(ErrorKind::DomainError, "real power of a non-positive value");
  return binary(x, y, mpfr_pow);
}

}  // namespace ubenford
