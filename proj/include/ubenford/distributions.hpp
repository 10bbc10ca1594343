#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ubenford/transform.hpp"

namespace ubenford {

/// Density alpha x0^alpha / x^(alpha+1) on [x0, inf).
struct ParetoI {
  double alpha;
  double x0;
};
/// Density b / (1+x)^(b+1) on [0, inf).
struct ParetoII {
  double b;
};
/// log10(X) ~ N(mu, sigma^2).
struct Lognormal {
  double mu;
  double sigma;
};
/// Uniform on (0, k].
struct UniformOnZeroK {
  double k;
};
struct Exponential {
  double lambda;
};
/// |N(0, sigma^2)|.
struct HalfNormal {
  double sigma;
};

/// One of the six continuous families. Construct through the factories,
/// which reject non-positive parameters with InvalidParameter.
class DistributionModel {
 public:
  using Family = std::variant<ParetoI, ParetoII, Lognormal, UniformOnZeroK, Exponential, HalfNormal>;

  static DistributionModel pareto1(double alpha, double x0 = 1.0);
  static DistributionModel pareto2(double b);
  static DistributionModel lognormal(double mu, double sigma);
  static DistributionModel uniform(double k);
  static DistributionModel exponential(double lambda);
  static DistributionModel half_normal(double sigma);

  const Family& family() const { return family_; }
  /// e.g. "ParetoI(alpha=0.5,x0=1)".
  std::string name() const;
  /// Short family key: pareto1, pareto2, lognormal, uniform, exponential, halfnormal.
  std::string key() const;
  /// The family's main parameter (alpha, b, sigma, k, lambda, sigma).
  double parameter() const;

  /// Closed support [lower, upper]; upper may be +infinity.
  double support_lower() const;
  double support_upper() const;

 private:
  explicit DistributionModel(Family f) : family_(f) {}
  Family family_;
};

/// Builds a model from its key and main parameter (x0 = 1, mu = 0).
DistributionModel make_model(std::string_view key, double parameter);

double pdf(const DistributionModel& m, double x);
double cdf(const DistributionModel& m, double x);
/// 1 - cdf, computed without cancellation.
double sf(const DistributionModel& m, double x);
double quantile(const DistributionModel& m, double p);

/// cdf and sf as functions of L = log10 x, valid far outside double range.
double cdf_log10(const DistributionModel& m, double log10_x);
double sf_log10(const DistributionModel& m, double log10_x);
/// log10 of the p-quantile and of the upper s-quantile (sf(x) = s).
double quantile_log10(const DistributionModel& m, double p);
double isf_log10(const DistributionModel& m, double s);

struct Supremum {
  double m = 0.0;
  double argmax = 0.0;              ///< location in X-space
  double argmax_transformed = 0.0;  ///< u(argmax)
  bool analytic = false;
  std::string diagnostic;           ///< set when the grid oracle overruled the closed form
};

/// sup of x -> x f(x) and its location.
Supremum sup_id_f(const DistributionModel& m);

/// sup of x -> f(x) / u'(x) (the density of u(X) at u(x)).
/// Throws NotUnimodal if the function is not increasing-then-decreasing on the
/// support, and HypothesisViolated if the supremum is infinite.
Supremum sup_f_over_uprime(const DistributionModel& m, const TransformSpec& u);

/// Deterministic sampler: std::mt19937_64 (bit-exact across platforms by the
/// standard), 53-bit uniforms on the open interval (0, 1), then the inverse
/// c.d.f. Normal variates use normal_quantile. Not shareable across threads.
class SeededSampler {
 public:
  SeededSampler(DistributionModel model, std::uint64_t seed);

  double next();
  std::vector<double> sample(std::size_t n);

  const DistributionModel& model() const { return model_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

 private:
  double uniform_open();

  DistributionModel model_;
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  std::mt19937_64 engine_;
};

}  // namespace ubenford
