#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ubenford/big_real.hpp"
#include "ubenford/precision.hpp"
#include "ubenford/transform.hpp"

namespace ubenford {

enum class SequenceKind { SqrtN, PiN, Primes, ExpN, Factorial, NPowN, PowerLaw };

struct SequenceSpec {
  SequenceKind kind = SequenceKind::SqrtN;
  long count = 1;       ///< N, number of indices visited
  long start = 1;       ///< first index n
  double alpha = 1.0;   ///< exponent of PowerLaw, n^alpha
  /// Indices for which this returns true are skipped before anything is computed.
  std::function<bool(long)> exclude;
  std::string exclusion_label;

  std::string name() const;
};

/// Index filter used for the sqrt(n^n) re-run: drops even n and perfect squares.
bool even_or_perfect_square(long n);

/// Term n of the sequence at `digits` significant digits. Integer kinds
/// (primes, n!, n^n) come back exact whatever `digits` is.
BigReal nth_term(const SequenceSpec& spec, long n, int digits);

/// Terms for n = start .. start + count - 1 (filter applied).
std::vector<BigReal> nth_terms(const SequenceSpec& spec, int digits = kMinDigits);

/// First `count` primes by an Eratosthenes sieve that grows until enough are found.
std::vector<std::uint64_t> first_primes(long count);

struct FracSample {
  std::vector<double> values;
  long requested = 0;      ///< indices visited
  long filtered = 0;       ///< removed by the spec's exclusion predicate
  long out_of_domain = 0;  ///< removed because u is undefined at the term
  std::string sequence;
  std::string transform;
  std::string exclusions;

  std::size_t size() const { return values.size(); }
};

/// {u(v_n)} for the spec's indices, every value certified by eval_transform.
///
/// Terms outside u's domain (e.g. log log at v_n = 1) are dropped and counted.
/// Work is split over `threads` contiguous chunks; the result does not depend
/// on the chunking. Throws EmptySample if nothing is left.
FracSample frac_sample(const SequenceSpec& spec, const TransformSpec& u,
                       const PrecisionPolicy& policy = {}, unsigned threads = 0);

struct GrowthDiagnostic {
  std::vector<double> values;  ///< [ln f^-1]'(x) on the grid
  double limit_estimate = 0.0;
  bool uniformity_expected = false;
};

/// Heuristic check of [ln f^-1]'(x) -> 0 on an increasing grid. Positive iff
/// the last value is < 1e-2 and below half the first one.
GrowthDiagnostic growth_criterion(const std::function<double(double)>& log_derivative_of_inverse,
                                  const std::vector<double>& x_grid);

/// [ln f^-1]' for f(x) = x^alpha, i.e. 1 / (alpha x).
std::function<double(double)> power_law_inverse_log_derivative(double alpha);
/// [ln f^-1]' for f = log_b, the constant ln b.
std::function<double(double)> log_inverse_log_derivative(int base = 10);

}  // namespace ubenford
