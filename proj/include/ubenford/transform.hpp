#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "ubenford/big_real.hpp"
#include "ubenford/precision.hpp"

namespace ubenford {

enum class TransformKind { LogLog, Log, Sqrt, PiSquare, Identity };

/// One of the u-functions: log10(log10 x), log_b x, sqrt x, pi x^2, x.
/// Every kind is strictly increasing and C^1 on its domain.
struct TransformSpec {
  TransformKind kind = TransformKind::Identity;
  int base = 10;  ///< only meaningful for Log

  static TransformSpec log_log() { return {TransformKind::LogLog, 10}; }
  static TransformSpec log(int base = 10);
  static TransformSpec sqrt() { return {TransformKind::Sqrt, 10}; }
  static TransformSpec pi_square() { return {TransformKind::PiSquare, 10}; }
  static TransformSpec identity() { return {TransformKind::Identity, 10}; }

  /// Open lower end of the domain: 1 for LogLog, 0 for Log, Sqrt and PiSquare.
  /// Identity is defined on the whole line and reports -infinity.
  double domain_lower() const;
  bool in_domain(double x) const;

  /// "loglog", "log" (or "log2", "log16", ...), "sqrt", "pisquare", "identity".
  std::string name() const;
  friend bool operator==(const TransformSpec&, const TransformSpec&) = default;
};

/// Inverse of `name()`; also accepts "pi2" and "id". Throws InvalidParameter.
TransformSpec parse_transform(std::string_view name);

/// {x} = x - floor(x) as a double in [0, 1).
///
/// Never returns 1.0: a fractional part that rounds up to 1 comes back as the
/// largest double below 1. Inexact inputs must carry at least 12 digits below
/// the decimal point, otherwise InsufficientPrecision is thrown.
double frac(const BigReal& x);

/// Fractional part of a plain double (floor-based, so frac(-0.25) = 0.75).
double frac(double x);

/// Produces a value at (at least) the requested number of decimal digits.
/// Lets eval_transform regenerate its argument when it escalates precision.
using TermGenerator = std::function<BigReal(int digits)>;

/// u(x) with a certified fractional part.
///
/// Starts at max(initial, digits of u(x)'s integer part + guard), evaluates at
/// that precision and at twice it, and accepts once the two fractional parts
/// agree to `agreement_digits` (distance measured mod 1). A fractional part
/// within 10^-agreement of an integer triggers one more doubling; values that
/// stay on an integer at both precisions are snapped to it.
///
/// Throws DomainError outside u's domain and PrecisionCapExceeded when the
/// doubling runs past `policy.max_digits`.
BigReal eval_transform(const TransformSpec& u, const TermGenerator& x, const PrecisionPolicy& policy = {});

/// Same with a fixed argument. An inexact `x` must be precise enough for u's
/// sensitivity |x u'(x)| to leave `agreement_digits` certified fractional
/// digits, otherwise InsufficientPrecision is thrown.
BigReal eval_transform(const TransformSpec& u, const BigReal& x, const PrecisionPolicy& policy = {});

/// Applies u at exactly the working precision of `x`, no certification.
BigReal apply_transform(const TransformSpec& u, const BigReal& x, int digits);

/// Analytic u'(x): LogLog 1/(x ln x ln 10), Log 1/(x ln b), Sqrt 1/(2 sqrt x),
/// PiSquare 2 pi x, Identity 1. Requires x > 0 inside the domain.
double derivative(const TransformSpec& u, double x);

/// u(x) and u^-1(y) in double precision.
double apply(const TransformSpec& u, double x);
double inverse(const TransformSpec& u, double y);

}  // namespace ubenford
