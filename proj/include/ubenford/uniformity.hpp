#pragma once

#include <span>
#include <string>
#include <vector>

#include "ubenford/big_real.hpp"
#include "ubenford/sequences.hpp"

namespace ubenford {

/// What the empirical c.d.f. is compared against.
///  - UnitInterval: the uniform c.d.f. on [0, 1).
///  - SampleRange: the uniform c.d.f. on [min, max] of the sample, the
///    convention of SPSS's one-sample K-S procedure.
enum class KsReference { UnitInterval, SampleRange };

std::string to_string(KsReference r);
/// "unit" or "range".
KsReference parse_ks_reference(std::string_view name);

struct UniformityReport {
  std::size_t n = 0;
  double d = 0.0;  ///< sup |F_n - F|
  double z = 0.0;  ///< sqrt(n) d
  double p = 1.0;  ///< Q(z)
  double alpha = 0.05;
  bool reject = false;  ///< p < alpha
  KsReference reference = KsReference::UnitInterval;
};

/// One-sample Kolmogorov-Smirnov test for uniformity. Ties are kept.
/// Throws EmptySample for an empty sample and DomainError for values outside
/// [0, 1) under UnitInterval. Under SampleRange a constant sample has D = 1.
UniformityReport ks_uniform(std::span<const double> values, KsReference reference = KsReference::UnitInterval,
                            double alpha = 0.05);
UniformityReport ks_uniform(const FracSample& sample, KsReference reference = KsReference::UnitInterval,
                            double alpha = 0.05);

/// Asymptotic Kolmogorov tail Q(z) = 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 z^2),
/// clamped to [0, 1]. For z < 1 the equivalent Jacobi theta form is summed
/// instead, since the alternating series converges slowly there.
double kolmogorov_q(double z);

/// First significant digit of x > 0 in base b >= 2.
int leading_digit(double x, int base = 10);
/// Same for a BigReal; digits near a boundary b^k are resolved at the value's
/// own precision, and escalation failures are reported, not guessed.
int leading_digit(const BigReal& x, int base = 10);

struct DigitHistogram {
  int base = 10;
  std::vector<long> counts;       ///< index d-1 for digit d = 1..b-1
  std::vector<double> expected;   ///< log_b(1 + 1/d)
  std::size_t n = 0;
  bool has_chi_square = false;    ///< only when n >= 5 (b - 1)
  double chi_square = 0.0;
  int degrees_of_freedom = 0;     ///< b - 2
};

/// Benford's first-digit law log_b(1 + 1/d), d = 1..b-1.
std::vector<double> benford_frequencies(int base);

DigitHistogram digit_report(std::span<const double> values, int base = 10);
DigitHistogram digit_report(const std::vector<BigReal>& values, int base = 10);

}  // namespace ubenford
