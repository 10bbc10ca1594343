#include "ubenford/transform.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "ubenford/error.hpp"
#include "ubenford/pi.hpp"

namespace ubenford {

namespace {

double circular_distance(double a, double b) {
  const double d = std::fabs(a - b);
  return std::min(d, 1.0 - d);
}

double distance_to_integer(double f) { return std::min(f, 1.0 - f); }

void require_domain(const TransformSpec& u, const BigReal& x) {
  switch (u.kind) {
    case TransformKind::Identity:
      return;
    case TransformKind::LogLog:
      if (!(BigReal::from_integer(1) < x)) {
        throw Error(ErrorKind::DomainError, "log(log(x)) needs x > 1");
      }
      return;
    default:
      if (x.sign() <= 0) throw Error(ErrorKind::DomainError, u.name() + " needs x > 0");
  }
}

// If x is an exact positive integer equal to base^k, returns k.
std::optional<long> exact_power_of(const BigReal& x, int base) {
  if (!x.exact() || !x.is_integer() || x.sign() <= 0) return std::nullopt;
  mpz_class n = x.to_integer_floor();
  mpz_class b(base);
  const auto k = static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), b.get_mpz_t()));
  if (n != 1) return std::nullopt;
  return k;
}

// Decimal magnitude of u(x) and of the sensitivity |x u'(x)|, from log10|x|.
double required_magnitude(const TransformSpec& u, double log10_x) {
  double mag = 0.0;
  switch (u.kind) {
    case TransformKind::Identity:
      mag = log10_x;
      break;
    case TransformKind::Log:
      mag = std::log10(std::max(std::fabs(log10_x) / std::log10(u.base), 1.0));
      break;
    case TransformKind::LogLog:
      mag = std::log10(std::max(std::fabs(std::log10(std::max(log10_x, 1e-300))), 1.0));
      break;
    case TransformKind::Sqrt:
      mag = log10_x / 2.0;
      break;
    case TransformKind::PiSquare:
      mag = 2.0 * log10_x + std::log10(2.0 * std::numbers::pi);
      break;
  }
  return std::max(mag, 0.0);
}

}  // namespace

TransformSpec TransformSpec::log(int base) {
  if (base < 2) throw Error(ErrorKind::InvalidParameter, "log base must be an integer >= 2");
  return {TransformKind::Log, base};
}

double TransformSpec::domain_lower() const {
  switch (kind) {
    case TransformKind::LogLog: return 1.0;
    case TransformKind::Identity: return -std::numeric_limits<double>::infinity();
    default: return 0.0;
  }
}

bool TransformSpec::in_domain(double x) const { return x > domain_lower(); }

std::string TransformSpec::name() const {
  switch (kind) {
    case TransformKind::LogLog: return "loglog";
    case TransformKind::Log: return base == 10 ? "log" : "log" + std::to_string(base);
    case TransformKind::Sqrt: return "sqrt";
    case TransformKind::PiSquare: return "pisquare";
    case TransformKind::Identity: return "identity";
  }
  return "?";
}

TransformSpec parse_transform(std::string_view name) {
  if (name == "loglog") return TransformSpec::log_log();
  if (name == "log" || name == "log10") return TransformSpec::log(10);
  if (name == "sqrt") return TransformSpec::sqrt();
  if (name == "pisquare" || name == "pi2") return TransformSpec::pi_square();
  if (name == "identity" || name == "id") return TransformSpec::identity();
  if (name.starts_with("log")) {
    const std::string digits(name.substr(3));
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      return TransformSpec::log(std::stoi(digits));
    }
  }
  throw Error(ErrorKind::InvalidParameter, "unknown transform '" + std::string(name) + "'");
}

double frac(const BigReal& x) {
  if (!x.exact()) {
    const long fractional_digits = x.digits() - x.integer_digits();
    if (fractional_digits < 12) {
      throw Error(ErrorKind::InsufficientPrecision,
                  "only " + std::to_string(fractional_digits) +
                      " digits below the decimal point, 12 required");
    }
  }
  double f = x.frac_part().to_double();
  if (f >= 1.0) f = std::nextafter(1.0, 0.0);
  return f == 0.0 ? 0.0 : f;
}

double frac(double x) {
  double f = x - std::floor(x);
  if (f >= 1.0) f = std::nextafter(1.0, 0.0);
  return f == 0.0 ? 0.0 : f;
}

BigReal apply_transform(const TransformSpec& u, const BigReal& x, int digits) {
  require_domain(u, x);
  const BigReal xr = x.with_digits(digits);
  switch (u.kind) {
    case TransformKind::Identity:
      return xr;
    case TransformKind::Sqrt:
      return sqrt(xr);
    case TransformKind::PiSquare:
      return pi_digits(digits, PrecisionPolicy{16, 15, 12, std::numeric_limits<int>::max()}) *
             square(xr);
    case TransformKind::Log: {
      if (auto k = exact_power_of(x, u.base)) return BigReal::from_integer(*k, digits);
      if (u.base == 10) return log10(xr);
      return log(xr) / log(BigReal::from_integer(u.base, digits).with_digits(digits));
    }
    case TransformKind::LogLog: {
      BigReal inner = log10(xr);
      if (inner.sign() <= 0) throw Error(ErrorKind::DomainError, "log(log(x)) needs x > 1");
      return log10(inner);
    }
  }
  return xr;
}

BigReal eval_transform(const TransformSpec& u, const TermGenerator& x, const PrecisionPolicy& policy) {
  policy.validate();
  const BigReal probe = x(policy.initial_digits);
  require_domain(u, probe);

  const double mag = required_magnitude(u, probe.log10_magnitude());
  int p = std::max(policy.initial_digits,
                   static_cast<int>(std::ceil(mag)) + policy.guard_digits);
  const double agree = std::pow(10.0, -policy.agreement_digits);

  auto over_cap = [&](int digits) {
    if (digits > policy.max_digits) {
      throw Error(ErrorKind::PrecisionCapExceeded,
                  u.name() + " needs more than " + std::to_string(policy.max_digits) +
                      " digits to certify the fractional part");
    }
  };

  over_cap(2 * p);
  BigReal lo = apply_transform(u, x(p), p);
  bool near_integer_escalated = false;
  for (;;) {
    over_cap(2 * p);
    BigReal hi = apply_transform(u, x(2 * p), 2 * p);
    const double f_lo = lo.frac_part().to_double();
    const double f_hi = hi.frac_part().to_double();
    if (circular_distance(f_lo, f_hi) < agree) {
      if (hi.exact() || distance_to_integer(f_hi) >= agree) return hi;
      if (!near_integer_escalated) {
        near_integer_escalated = true;
        lo = std::move(hi);
        p *= 2;
        continue;
      }
      // Still on an integer after the extra doubling: snap if both
      // evaluations sit at the rounding-noise floor of their precision.
      const double noise_lo = std::pow(10.0, -(p - lo.integer_digits() - 5));
      if (distance_to_integer(f_lo) < std::max(noise_lo, 1e-300) &&
          distance_to_integer(f_hi) < std::max(noise_lo, 1e-300)) {
        mpz_class n = hi.to_integer_floor();
        if (f_hi > 0.5) n += 1;
        return BigReal::from_integer(n, 2 * p);
      }
      return hi;
    }
    lo = std::move(hi);
    p *= 2;
  }
}

BigReal eval_transform(const TransformSpec& u, const BigReal& x, const PrecisionPolicy& policy) {
  require_domain(u, x);
  if (!x.exact()) {
    const double lx = x.log10_magnitude();
    double sensitivity = 0.0;
    switch (u.kind) {
      case TransformKind::Identity: sensitivity = lx; break;
      case TransformKind::Log: sensitivity = -std::log10(std::log(u.base)); break;
      case TransformKind::LogLog: sensitivity = -std::log10(std::max(lx, 1e-300) * std::log(10.0) * std::log(10.0)); break;
      case TransformKind::Sqrt: sensitivity = lx / 2.0 - std::log10(2.0); break;
      case TransformKind::PiSquare: sensitivity = 2.0 * lx + std::log10(2.0 * std::numbers::pi); break;
    }
    const double available = x.digits() - std::max(sensitivity, 0.0);
    if (available < policy.agreement_digits) {
      throw Error(ErrorKind::InsufficientPrecision,
                  "argument carries " + std::to_string(x.digits()) + " digits, " + u.name() +
                      " leaves fewer than " + std::to_string(policy.agreement_digits) +
                      " certified fractional digits");
    }
  }
  return eval_transform(u, [&x](int) { return x; }, policy);
}

double derivative(const TransformSpec& u, double x) {
  if (!(x > 0.0) || !u.in_domain(x)) {
    if (u.kind != TransformKind::Identity || !std::isfinite(x)) {
      throw Error(ErrorKind::DomainError, "derivative of " + u.name() + " outside its domain");
    }
  }
  switch (u.kind) {
    case TransformKind::LogLog: return 1.0 / (x * std::log(x) * std::numbers::ln10);
    case TransformKind::Log: return 1.0 / (x * std::log(static_cast<double>(u.base)));
    case TransformKind::Sqrt: return 1.0 / (2.0 * std::sqrt(x));
    case TransformKind::PiSquare: return 2.0 * std::numbers::pi * x;
    case TransformKind::Identity: return 1.0;
  }
  return 0.0;
}

double apply(const TransformSpec& u, double x) {
  switch (u.kind) {
    case TransformKind::LogLog: return std::log10(std::log10(x));
    case TransformKind::Log: return std::log(x) / std::log(static_cast<double>(u.base));
    case TransformKind::Sqrt: return std::sqrt(x);
    case TransformKind::PiSquare: return std::numbers::pi * x * x;
    case TransformKind::Identity: return x;
  }
  return x;
}

double inverse(const TransformSpec& u, double y) {
  switch (u.kind) {
    case TransformKind::LogLog: return std::pow(10.0, std::pow(10.0, y));
    case TransformKind::Log: return std::pow(static_cast<double>(u.base), y);
    case TransformKind::Sqrt: return y * y;
    case TransformKind::PiSquare: return std::sqrt(y / std::numbers::pi);
    case TransformKind::Identity: return y;
  }
  return y;
}

}  // namespace ubenford
