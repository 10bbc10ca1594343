#include "doctest.h"

#include <mpfr.h>

#include <cmath>
#include <random>

#include "ubenford/error.hpp"
#include "ubenford/pi.hpp"
#include "ubenford/transform.hpp"

using namespace ubenford;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::IoError;
}

// Fractional part of sqrt(m) from integer square roots at fixed-point scale d:
// isqrt(m 10^(2d)) / 10^d.
double sqrt_frac_oracle(const mpz_class& m, int d) {
  mpz_class scale, r;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(d));
  mpz_class scaled = m * scale * scale;
  mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
  const mpz_class frac_digits = r % scale;
  mpfr_t f;
  mpfr_init2(f, 200);
  mpfr_set_z(f, frac_digits.get_mpz_t(), MPFR_RNDN);
  mpfr_div_z(f, f, scale.get_mpz_t(), MPFR_RNDN);
  const double out = mpfr_get_d(f, MPFR_RNDN);
  mpfr_clear(f);
  return out;
}

const TransformSpec kAll[] = {TransformSpec::log_log(), TransformSpec::log(10), TransformSpec::log(2),
                              TransformSpec::sqrt(), TransformSpec::pi_square(), TransformSpec::identity()};

}  // namespace

TEST_CASE("frac of plain values") {
  CHECK(frac(BigReal::from_string("3.7", 30)) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(frac(BigReal::from_double(-0.25)) == 0.75);
  CHECK(frac(-0.25) == 0.75);
  CHECK(frac(3.7) == doctest::Approx(0.7));
}

TEST_CASE("frac never returns 1") {
  const BigReal just_below = BigReal::from_string("0.99999999999999999999999999", 40);
  const double f = frac(just_below);
  CHECK(f < 1.0);
  CHECK(f >= 0.0);
}

TEST_CASE("frac refuses values without 12 fractional digits") {
  const BigReal coarse = BigReal::from_string("123456789.123456789", 16);
  CHECK(kind_of([&] { (void)frac(coarse); }) == ErrorKind::InsufficientPrecision);
}

TEST_CASE("frac of sqrt 2 at 30 digits") {
  const BigReal r = sqrt(BigReal::from_integer(2, 30));
  CHECK(frac(r) == doctest::Approx(sqrt_frac_oracle(2, 30)).epsilon(1e-15));
  CHECK(std::fabs(frac(r) - 0.414213562373) < 1e-12);
}

TEST_CASE("log base 10 of 100 is exactly 2") {
  const BigReal y = eval_transform(TransformSpec::log(10), BigReal::from_integer(100));
  CHECK(y.is_integer());
  CHECK(y.to_double() == 2.0);
  CHECK(frac(y) == 0.0);
}

TEST_CASE("pi x^2 at x = 10") {
  const BigReal y = eval_transform(TransformSpec::pi_square(), BigReal::from_integer(10));
  mpfr_t ref;
  mpfr_init2(ref, 256);
  mpfr_const_pi(ref, MPFR_RNDN);
  mpfr_mul_ui(ref, ref, 100, MPFR_RNDN);
  mpfr_frac(ref, ref, MPFR_RNDN);
  CHECK(std::fabs(frac(y) - mpfr_get_d(ref, MPFR_RNDN)) < 1e-15);
  CHECK(std::fabs(frac(y) - 0.15926535) < 1e-8);
  mpfr_clear(ref);
}

TEST_CASE("sqrt of 10!") {
  const mpz_class f10 = 3628800;
  const double a = sqrt_frac_oracle(f10, 25);
  const double b = sqrt_frac_oracle(f10, 35);
  REQUIRE(std::fabs(a - b) < 1e-15);
  const BigReal y = eval_transform(TransformSpec::sqrt(), BigReal::from_integer(f10));
  CHECK(std::fabs(frac(y) - a) < 1e-12);
  CHECK(std::fabs(frac(y) - 0.9409) < 1e-4);
}

TEST_CASE("pi (1000^1000)^2 needs thousands of digits and succeeds") {
  mpz_class x;
  mpz_ui_pow_ui(x.get_mpz_t(), 1000, 1000);
  const BigReal y = eval_transform(TransformSpec::pi_square(), BigReal::from_integer(x));
  // pi 10^6000: the fractional part is the digits of pi after position 6001.
  const BigReal ref = pi_digits(6100);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 6000);
  const BigReal expected = ref * BigReal::from_integer(scale);
  CHECK(std::fabs(frac(y) - frac(expected.with_digits(6080))) < 1e-12);
}

TEST_CASE("domain errors") {
  CHECK(kind_of([] { (void)eval_transform(TransformSpec::log_log(), BigReal::from_integer(1)); }) ==
        ErrorKind::DomainError);
  CHECK(kind_of([] { (void)eval_transform(TransformSpec::log(10), BigReal::from_integer(0)); }) ==
        ErrorKind::DomainError);
  CHECK(kind_of([] { (void)eval_transform(TransformSpec::sqrt(), BigReal::from_integer(-4)); }) ==
        ErrorKind::DomainError);
  CHECK(kind_of([] { (void)derivative(TransformSpec::log_log(), 0.5); }) == ErrorKind::DomainError);
}

TEST_CASE("precision cap is reported") {
  PrecisionPolicy p;
  p.initial_digits = 16;
  p.max_digits = 40;
  mpz_class x;
  mpz_ui_pow_ui(x.get_mpz_t(), 3, 200);  // about 96 integer digits in sqrt... and 192 in pi x^2
  CHECK(kind_of([&] { (void)eval_transform(TransformSpec::pi_square(), BigReal::from_integer(x), p); }) ==
        ErrorKind::PrecisionCapExceeded);
}

TEST_CASE("derivative examples") {
  CHECK(derivative(TransformSpec::sqrt(), 4.0) == doctest::Approx(0.25));
  CHECK(derivative(TransformSpec::log(10), 1.0) == doctest::Approx(1.0 / std::log(10.0)));
  CHECK(derivative(TransformSpec::pi_square(), 0.5) == doctest::Approx(M_PI));
  CHECK(derivative(TransformSpec::identity(), 7.0) == 1.0);
}

TEST_CASE("parse_transform round-trips names") {
  for (const auto& u : kAll) CHECK(parse_transform(u.name()) == u);
  CHECK(parse_transform("pi2") == TransformSpec::pi_square());
  CHECK(kind_of([] { (void)parse_transform("cube"); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("property: eval_transform is strictly increasing") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lg(-3.0, 8.0);
  for (const auto& u : kAll) {
    for (int i = 0; i < 200; ++i) {
      double a = std::pow(10.0, lg(rng));
      double b = std::pow(10.0, lg(rng));
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (u.kind == TransformKind::LogLog && a <= 1.0) a += 1.0, b += 1.0;
      if (a == b) continue;
      const BigReal ua = eval_transform(u, BigReal::from_double(a));
      const BigReal ub = eval_transform(u, BigReal::from_double(b));
      CHECK(ua < ub);
    }
  }
}

TEST_CASE("property: frac is invariant under integer shifts") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<long> shift(-1000000000L, 1000000000L);
  for (int i = 0; i < 500; ++i) {
    const BigReal x = BigReal::from_double(unit(rng) * 1000.0 - 500.0);
    const long n = shift(rng);
    const BigReal shifted = x + BigReal::from_integer(n);
    CHECK(shifted.exact());
    CHECK(frac(shifted) == frac(x));
  }
}

TEST_CASE("property: doubling precision moves an accepted frac by < 1e-12") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> lg(0.1, 12.0);
  PrecisionPolicy hi;
  hi.initial_digits = 128;
  for (const auto& u : kAll) {
    for (int i = 0; i < 50; ++i) {
      const double x = std::pow(10.0, lg(rng));
      const double a = frac(eval_transform(u, BigReal::from_double(x)));
      const double b = frac(eval_transform(u, BigReal::from_double(x), hi));
      const double d = std::fabs(a - b);
      CHECK(std::min(d, 1.0 - d) < 1e-12);
    }
  }
}

TEST_CASE("property: derivative matches a centred difference") {
  for (const auto& u : kAll) {
    for (int e = -3; e <= 6; ++e) {
      for (double m : {1.0, 3.0}) {
        double x = m * std::pow(10.0, e);
        if (u.kind == TransformKind::LogLog && x <= 1.5) continue;
        const double h = x * 1e-5;
        const BigReal lo = eval_transform(u, BigReal::from_double(x - h));
        const BigReal hi = eval_transform(u, BigReal::from_double(x + h));
        const double fd = (hi - lo).to_double() / (2.0 * h);
        CHECK(fd == doctest::Approx(derivative(u, x)).epsilon(1e-6));
      }
    }
  }
}
