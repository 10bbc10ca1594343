#include "ubenford/pi.hpp"

#include <cmath>
#include <mutex>
#include <optional>

#include "ubenford/error.hpp"

namespace ubenford {

namespace {

#include "pi_reference.inc"

// Partial sums of sum_k (-1)^k / ((2k+1) q^(2k)) over [a, b), kept as the
// integer triple (Q, B, T) with sum = T / (B * Q). P is (-1)^(b-a) (or the
// sign of term a when a == 0) and is folded into T on the fly.
struct Split {
  mpz_class p;
  mpz_class q;
  mpz_class b;
  mpz_class t;
};

Split split(unsigned long a, unsigned long b, const mpz_class& q2) {
  if (b - a == 1) {
    Split s;
    s.p = a == 0 ? 1 : -1;
    s.q = a == 0 ? mpz_class(1) : q2;
    s.b = 2 * a + 1;
    s.t = s.p;
    return s;
  }
  const unsigned long m = a + (b - a) / 2;
  Split l = split(a, m, q2);
  Split r = split(m, b, q2);
  Split s;
  s.t = r.b * r.q * l.t + l.b * l.p * r.t;
  s.p = l.p * r.p;
  s.q = l.q * r.q;
  s.b = l.b * r.b;
  return s;
}

struct PiMemo {
  std::mutex mutex;
  std::optional<BigReal> value;
};

PiMemo& memo() {
  static PiMemo m;
  return m;
}

BigReal compute_pi(int digits) {
  const int work = digits + 10;
  BigReal a5 = arctan_inverse(5, work);
  BigReal a239 = arctan_inverse(239, work);
  BigReal pi = BigReal::from_integer(16) * a5 - BigReal::from_integer(4) * a239;
  return pi.with_digits(digits);
}

}  // namespace

void PrecisionPolicy::validate() const {
  if (guard_digits < 15) throw Error(ErrorKind::InvalidParameter, "guard digits must be >= 15");
  if (agreement_digits < 12) {
    throw Error(ErrorKind::InvalidParameter, "agreement threshold must be >= 12 digits");
  }
  if (initial_digits < kMinDigits) {
    throw Error(ErrorKind::InvalidParameter, "initial precision must be >= 16 digits");
  }
  if (max_digits < 2 * initial_digits) {
    throw Error(ErrorKind::InvalidParameter, "precision cap must be >= twice the initial precision");
  }
}

BigReal arctan_inverse(unsigned long q, int digits) {
  if (q < 2) throw Error(ErrorKind::InvalidParameter, "arctan_inverse needs q >= 2");
  // Terms fall by a factor q^2 each, so this many reach 10^-(digits + 2).
  const double per_term = 2.0 * std::log10(static_cast<double>(q));
  const auto terms = static_cast<unsigned long>(std::ceil((digits + 2) / per_term)) + 1;
  const mpz_class q2 = mpz_class(q) * q;
  const Split s = split(0, terms, q2);
  BigReal num = BigReal::from_integer(s.t);
  BigReal den = BigReal::from_integer(mpz_class(s.b * s.q * q));
  return num.with_digits(digits) / den.with_digits(digits);
}

BigReal pi_digits(int digits, const PrecisionPolicy& policy) {
  if (digits > policy.max_digits) {
    throw Error(ErrorKind::PrecisionCapExceeded,
                "pi requested at " + std::to_string(digits) + " digits, cap is " +
                    std::to_string(policy.max_digits));
  }
  digits = std::max(digits, kMinDigits);
  PiMemo& m = memo();
  {
    std::lock_guard lock(m.mutex);
    if (m.value && m.value->digits() >= digits) return m.value->with_digits(digits);
  }
  // Compute outside the lock; a racing thread may duplicate the work, which
  // is harmless since both results are identical.
  const int target = digits + digits / 4;
  BigReal fresh = compute_pi(target);
  std::lock_guard lock(m.mutex);
  if (!m.value || m.value->digits() < fresh.digits()) m.value = fresh;
  return m.value->with_digits(digits);
}

std::string_view pi_reference_digits() { return kPiReferenceDigits; }

}  // namespace ubenford
