#include "doctest.h"

#include <mpfr.h>

#include <string>

#include "ubenford/big_real.hpp"
#include "ubenford/error.hpp"
#include "ubenford/pi.hpp"

using namespace ubenford;

namespace {

// Significant digits of an MPFR value, computed by MPFR alone.
std::string mpfr_digits(mpfr_srcptr x, int n) {
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(n), x, MPFR_RNDZ);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string digits_of(const BigReal& x, int n) { return mpfr_digits(x.raw(), n); }

}  // namespace

TEST_CASE("pi agrees with the stored 1000-digit constant") {
  const std::string_view ref = pi_reference_digits();
  REQUIRE(ref.size() >= 1000);
  for (int d : {20, 100, 500, 990}) {
    CHECK(digits_of(pi_digits(d), d - 2) == std::string(ref.substr(0, d - 2)));
  }
}

TEST_CASE("pi agrees with MPFR's own constant") {
  constexpr int d = 3000;
  mpfr_t ref;
  mpfr_init2(ref, digits_to_bits(d + 10));
  mpfr_const_pi(ref, MPFR_RNDN);
  CHECK(digits_of(pi_digits(d), d - 2) == mpfr_digits(ref, d - 2));
  mpfr_clear(ref);
}

TEST_CASE("arctan(1/q) by binary splitting matches mpfr_atan") {
  for (unsigned long q : {2ul, 5ul, 239ul}) {
    mpfr_t ref;
    mpfr_init2(ref, digits_to_bits(210));
    mpfr_set_ui(ref, 1, MPFR_RNDN);
    mpfr_div_ui(ref, ref, q, MPFR_RNDN);
    mpfr_atan(ref, ref, MPFR_RNDN);
    CHECK(digits_of(arctan_inverse(q, 200), 195) == mpfr_digits(ref, 195));
    mpfr_clear(ref);
  }
}

TEST_CASE("pi beyond the precision cap") {
  PrecisionPolicy p;
  p.max_digits = 100;
  CHECK_THROWS_AS(pi_digits(500, p), Error);
  try {
    pi_digits(500, p);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PrecisionCapExceeded);
  }
}

TEST_CASE("exactness tracking") {
  const BigReal a = BigReal::from_integer(12345);
  const BigReal b = BigReal::from_integer(678);
  CHECK(a.exact());
  CHECK((a * b).exact());
  CHECK((a + b).exact());
  CHECK((a * b).to_integer_floor() == mpz_class(12345L * 678L));
  CHECK_FALSE((a / b).exact());
  CHECK(sqrt(BigReal::from_integer(144)).exact());
  CHECK_FALSE(sqrt(BigReal::from_integer(2)).exact());
  CHECK(BigReal::from_double(0.1).exact());
  CHECK_FALSE(BigReal::from_string("0.1", 30).exact());
}

TEST_CASE("integers wider than the requested precision stay exact") {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 7, 500);
  const BigReal x = BigReal::from_integer(big, 16);
  CHECK(x.exact());
  CHECK(x.to_integer_floor() == big);
  CHECK(x.integer_digits() == static_cast<long>(big.get_str().size()));
}

TEST_CASE("floor and frac_part") {
  const BigReal x = BigReal::from_double(-2.25);
  CHECK(x.floor().to_double() == -3.0);
  CHECK(x.frac_part().to_double() == 0.75);
  CHECK(BigReal::from_integer(5).is_integer());
  CHECK_FALSE(BigReal::from_double(5.5).is_integer());
}

TEST_CASE("log10 magnitude far outside double range") {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 4000);
  const BigReal x = BigReal::from_integer(big);
  CHECK(x.log10_magnitude() == doctest::Approx(4000.0).epsilon(1e-12));
}
