#pragma once

#include <string>
#include <vector>

#include "ubenford/distributions.hpp"
#include "ubenford/transform.hpp"

namespace ubenford {

/// Law of {Y}, Y = u(X), on a uniform grid z_i = i / n, i = 0..n-1.
struct Mod1Law {
  std::vector<double> z;
  std::vector<double> values;  ///< P({Y} < z_i)
  double truncation_mass = 0.0;  ///< mass of Y outside the summed window
  long index_lo = 0;             ///< first integer j summed
  long index_hi = 0;             ///< last integer j summed
};

inline constexpr int kDefaultZGrid = 1024;
inline constexpr long kDefaultIndexBudget = 20'000'000;

/// P({u(X)} < z) = sum_j [G(j+z) - G(j)], G the c.d.f. of u(X).
///
/// The window of integers j is cut where each tail of Y carries less than
/// 1e-14. Throws TruncationFailure if the window needs more than
/// `index_budget` integers, DomainError if u is undefined on part of X's support.
Mod1Law mod1_law(const DistributionModel& model, const TransformSpec& u, int z_grid = kDefaultZGrid,
                 long index_budget = kDefaultIndexBudget);

/// sup_i |P({Y} < z_i) - z_i|.
double sup_discrepancy(const Mod1Law& law);

enum class Theorem { T1, T2 };
std::string to_string(Theorem t);

struct BoundCertificate {
  Theorem theorem = Theorem::T1;
  std::string model;
  std::string transform;
  double m = 0.0;        ///< sup of x f(x) (T1) or f/u' (T2)
  double argmax = 0.0;
  double bound = 0.0;    ///< 2 ln(10) m (T1) or 2 m (T2)
  double measured_discrepancy = 0.0;
  double discrepancy_at_z = 0.0;  ///< grid point where the discrepancy peaks
  int z_grid = kDefaultZGrid;
  /// Largest increment of the law between neighbouring grid points; the true
  /// sup over [0,1) exceeds the grid sup by at most this plus one cell width.
  double grid_error = 0.0;
  double truncation_mass = 0.0;
  std::string diagnostic;
  Mod1Law law;
};

/// Checks Theorem 1 (u must be log base 10) or Theorem 2 for (model, u).
///
/// The strict inequality of the theorems is tested as
/// measured <= bound + truncation_mass + 1e-12. Throws CertificateViolation if
/// that fails, HypothesisViolated if the shape condition fails (T1) and
/// NotUnimodal from the supremum search (T2).
BoundCertificate certify(Theorem theorem, const DistributionModel& model, const TransformSpec& u,
                         int z_grid = kDefaultZGrid);

struct PDelta {
  double lower = 0.0;
  double p = 0.0;
  double upper = 0.0;
  long terms = 0;           ///< series terms summed explicitly
  double tail_estimate = 0.0;  ///< size of the last tail correction, 0 if none
};

/// P({pi X^2} < delta) for X ~ U(0, k], summed exactly over the
/// floor(pi k^2) + 1 intervals, with the envelope
///   delta/a [sqrt(J+1+delta) - sqrt(delta)] <= P <= sqrt(delta)/a + delta/a sqrt(J+1),
/// a = k sqrt(pi), J = floor(a^2 - delta). Throws CertificateViolation if p
/// leaves the envelope.
PDelta p_delta_uniform(double k, double delta);

/// P({pi X^2} < delta) for X ~ Exp(lambda): sum_j e^{-mu sqrt j} - e^{-mu sqrt(j+delta)},
/// mu = lambda / sqrt(pi). Terms are summed until they drop below 1e-16 p or
/// `direct_budget` is reached; the remainder is closed with an Euler-Maclaurin
/// tail. Envelope: delta e^{-mu sqrt delta} <= P <= 1 - e^{-mu sqrt delta} + delta.
PDelta p_delta_exponential(double lambda, double delta, long direct_budget = 2'000'000);

}  // namespace ubenford
