#include "ubenford/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "ubenford/error.hpp"

namespace ubenford {

namespace {

constexpr double kTailMass = 1e-14;

class NeumaierSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      c_ += (sum_ - t) + v;
    } else {
      c_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + c_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

// C.d.f. and survival function of Y = u(X), evaluated without leaving double
// range for the logarithmic transforms.
class TransformedLaw {
 public:
  TransformedLaw(const DistributionModel& m, const TransformSpec& u) : m_(m), u_(u) {
    if (u.kind == TransformKind::LogLog && cdf(m, 1.0) > 0.0) {
      throw Error(ErrorKind::DomainError, "log(log(x)) is undefined on part of the support of " + m.name());
    }
  }

  double G(double y) const { return eval(y, false); }
  double S(double y) const { return eval(y, true); }

  // Y-values below/above which each tail carries less than `eps`.
  std::pair<double, double> window(double eps) const {
    return {to_y(quantile_log10(m_, eps)), to_y(isf_log10(m_, eps))};
  }

 private:
  double eval(double y, bool upper) const {
    switch (u_.kind) {
      case TransformKind::Log: {
        const double L = y * std::log10(static_cast<double>(u_.base));
        return upper ? sf_log10(m_, L) : cdf_log10(m_, L);
      }
      case TransformKind::LogLog: {
        const double L = y > 308.0 ? std::numeric_limits<double>::infinity() : std::pow(10.0, y);
        return upper ? sf_log10(m_, L) : cdf_log10(m_, L);
      }
      default:
        break;
    }
    double x;
    if (u_.kind == TransformKind::Identity) {
      x = y;
    } else {
      if (y <= 0.0) return upper ? 1.0 : 0.0;
      x = inverse(u_, y);
    }
    return upper ? sf(m_, x) : cdf(m_, x);
  }

  double to_y(double log10_x) const {
    switch (u_.kind) {
      case TransformKind::Log:
        return log10_x / std::log10(static_cast<double>(u_.base));
      case TransformKind::LogLog:
        if (log10_x <= 0.0) return -std::numeric_limits<double>::infinity();
        return std::log10(log10_x);
      default:
        if (log10_x > 300.0) {
          throw Error(ErrorKind::TruncationFailure,
                      m_.name() + " under " + u_.name() + " spreads beyond double range");
        }
        return apply(u_, std::pow(10.0, log10_x));
    }
  }

  const DistributionModel& m_;
  const TransformSpec& u_;
};

}  // namespace

Mod1Law mod1_law(const DistributionModel& model, const TransformSpec& u, int z_grid, long index_budget) {
  if (z_grid < 2) throw Error(ErrorKind::InvalidParameter, "z grid needs at least 2 points");
  const TransformedLaw law(model, u);
  auto [y_lo, y_hi] = law.window(kTailMass);
  if (!std::isfinite(y_lo)) y_lo = -static_cast<double>(index_budget);
  if (!std::isfinite(y_hi) || y_hi - y_lo > static_cast<double>(index_budget)) {
    throw Error(ErrorKind::TruncationFailure,
                "tails of " + model.name() + " under " + u.name() + " need more than " +
                    std::to_string(index_budget) + " integer intervals");
  }
  Mod1Law out;
  out.index_lo = static_cast<long>(std::floor(y_lo));
  out.index_hi = static_cast<long>(std::floor(y_hi));
  const std::size_t count = static_cast<std::size_t>(out.index_hi - out.index_lo + 1);

  std::vector<double> g(count), s(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double j = static_cast<double>(out.index_lo + static_cast<long>(k));
    g[k] = law.G(j);
    s[k] = law.S(j);
  }
  out.truncation_mass = law.G(static_cast<double>(out.index_lo)) +
                        law.S(static_cast<double>(out.index_hi + 1));

  out.z.resize(static_cast<std::size_t>(z_grid));
  out.values.resize(static_cast<std::size_t>(z_grid));
  for (int i = 0; i < z_grid; ++i) {
    const double z = static_cast<double>(i) / z_grid;
    out.z[i] = z;
    if (i == 0) {
      out.values[i] = 0.0;
      continue;
    }
    NeumaierSum sum;
    for (std::size_t k = 0; k < count; ++k) {
      const double j = static_cast<double>(out.index_lo + static_cast<long>(k));
      // Difference on the side of the median where it does not cancel.
      const double inc = g[k] <= 0.5 ? law.G(j + z) - g[k] : s[k] - law.S(j + z);
      sum.add(inc);
    }
    out.values[i] = std::clamp(sum.value(), 0.0, 1.0);
  }
  return out;
}

double sup_discrepancy(const Mod1Law& law) {
  double d = 0.0;
  for (std::size_t i = 0; i < law.z.size(); ++i) d = std::max(d, std::fabs(law.values[i] - law.z[i]));
  return d;
}

std::string to_string(Theorem t) { return t == Theorem::T1 ? "T1" : "T2"; }

BoundCertificate certify(Theorem theorem, const DistributionModel& model, const TransformSpec& u, int z_grid) {
  BoundCertificate c;
  c.theorem = theorem;
  c.model = model.name();
  c.transform = u.name();
  c.z_grid = z_grid;

  Supremum sup;
  if (theorem == Theorem::T1) {
    if (u != TransformSpec::log(10)) {
      throw Error(ErrorKind::InvalidParameter, "Theorem 1 applies to u = log base 10 only");
    }
    try {
      sup = sup_id_f(model);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotUnimodal) throw Error(ErrorKind::HypothesisViolated, e.what());
      throw;
    }
    c.bound = 2.0 * std::numbers::ln10 * sup.m;
  } else {
    sup = sup_f_over_uprime(model, u);
    c.bound = 2.0 * sup.m;
  }
  c.m = sup.m;
  c.argmax = sup.argmax;
  c.diagnostic = sup.diagnostic;

  c.law = mod1_law(model, u, z_grid);
  c.truncation_mass = c.law.truncation_mass;
  for (std::size_t i = 0; i < c.law.z.size(); ++i) {
    const double d = std::fabs(c.law.values[i] - c.law.z[i]);
    if (d > c.measured_discrepancy) {
      c.measured_discrepancy = d;
      c.discrepancy_at_z = c.law.z[i];
    }
    const double next = i + 1 < c.law.values.size() ? c.law.values[i + 1] : 1.0 - c.truncation_mass;
    c.grid_error = std::max(c.grid_error, next - c.law.values[i]);
  }
  if (c.measured_discrepancy > c.bound + c.truncation_mass + 1e-12) {
    throw Error(ErrorKind::CertificateViolation,
                to_string(theorem) + " bound " + std::to_string(c.bound) + " exceeded by measured " +
                    std::to_string(c.measured_discrepancy) + " for " + c.model + " under " + c.transform);
  }
  return c;
}

namespace {

void require_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorKind::InvalidParameter, "delta must lie in (0, 1)");
}

void check_envelope(const PDelta& r, const char* what) {
  constexpr double slack = 1e-12;
  if (r.p < r.lower - slack || r.p > r.upper + slack) {
    throw Error(ErrorKind::CertificateViolation,
                std::string(what) + ": P_delta " + std::to_string(r.p) + " outside [" +
                    std::to_string(r.lower) + ", " + std::to_string(r.upper) + "]");
  }
}

}  // namespace

PDelta p_delta_uniform(double k, double delta) {
  if (!(k > 0.0) || !std::isfinite(k)) throw Error(ErrorKind::InvalidParameter, "k must be > 0");
  require_delta(delta);
  const double a = k * std::sqrt(std::numbers::pi);
  const double a2 = a * a;
  if (a2 > 5e8) throw Error(ErrorKind::TruncationFailure, "pi k^2 too large to sum term by term");

  PDelta r;
  NeumaierSum sum;
  const auto last = static_cast<long>(std::floor(a2));
  for (long j = 0; j <= last; ++j) {
    const double lo = static_cast<double>(j);
    const double hi = std::min(lo + delta, a2);
    if (hi <= lo) break;
    // sqrt(hi) - sqrt(lo) without cancellation
    sum.add((hi - lo) / (std::sqrt(hi) + std::sqrt(lo)));
    ++r.terms;
  }
  r.p = sum.value() / a;

  const double J = std::floor(a2 - delta);
  r.lower = J < 0.0 ? 0.0 : delta / a * (std::sqrt(J + 1.0 + delta) - std::sqrt(delta));
  r.upper = std::sqrt(delta) / a + (J < 0.0 ? 0.0 : delta / a * std::sqrt(J + 1.0));
  check_envelope(r, "uniform");
  return r;
}

PDelta p_delta_exponential(double lambda, double delta, long direct_budget) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw Error(ErrorKind::InvalidParameter, "lambda must be > 0");
  require_delta(delta);
  if (direct_budget < 16) throw Error(ErrorKind::InvalidParameter, "direct budget too small");
  const double mu = lambda / std::sqrt(std::numbers::pi);

  // h(t) = e^{-mu sqrt t} - e^{-mu sqrt(t+delta)}
  auto h = [mu, delta](double t) {
    const double st = std::sqrt(t);
    const double gap = delta / (std::sqrt(t + delta) + st);
    return std::exp(-mu * st) * -std::expm1(-mu * gap);
  };

  PDelta r;
  NeumaierSum sum;
  long j = 0;
  bool converged = false;
  for (; j < direct_budget; ++j) {
    const double term = h(static_cast<double>(j));
    sum.add(term);
    ++r.terms;
    if (term < 1e-16 * sum.value() && j > 0) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    // Euler-Maclaurin from J: sum_{t>=J} h = int_J^inf h + h(J)/2 - h'(J)/12 + ...
    // with int_J^inf h = int_J^{J+delta} e^{-mu sqrt t} dt (8-point Gauss-Legendre).
    const double J = static_cast<double>(j);
    static constexpr std::array<double, 4> nodes = {0.1834346424956498, 0.5255324099163290,
                                                    0.7966664774136267, 0.9602898564975363};
    static constexpr std::array<double, 4> weights = {0.3626837833783620, 0.3137066458778873,
                                                      0.2223810344533745, 0.1012285362903763};
    double integral = 0.0;
    const double mid = J + 0.5 * delta;
    const double half = 0.5 * delta;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      integral += weights[i] * (std::exp(-mu * std::sqrt(mid - half * nodes[i])) +
                                std::exp(-mu * std::sqrt(mid + half * nodes[i])));
    }
    integral *= half;
    auto dE = [mu](double t) { return -mu / (2.0 * std::sqrt(t)) * std::exp(-mu * std::sqrt(t)); };
    const double h_prime = dE(J) - dE(J + delta);
    const double correction = -h_prime / 12.0;
    // The sum so far covers j < J; the tail starts at J itself.
    sum.add(integral + 0.5 * h(J) + correction);
    r.tail_estimate = std::fabs(correction);
    if (r.tail_estimate > 1e-9) {
      throw Error(ErrorKind::TruncationFailure,
                  "exponential P_delta tail correction too large at the direct budget");
    }
  }
  r.p = sum.value();
  const double e = std::exp(-mu * std::sqrt(delta));
  r.lower = delta * e;
  r.upper = 1.0 - e + delta;
  check_envelope(r, "exponential");
  return r;
}

}  // namespace ubenford
