#include "ubenford/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ubenford/error.hpp"
#include "ubenford/special_functions.hpp"

namespace ubenford {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn10 = std::numbers::ln10;
constexpr double kTailMass = 1e-15;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorKind::InvalidParameter, std::string(what) + " must be a positive finite number");
  }
}

double pow10_clamped(double L) {
  if (L > 308.0) return kInf;
  if (L < -330.0) return 0.0;
  return std::pow(10.0, L);
}

// log1p(10^L) without overflow.
double log1p_pow10(double L) {
  if (L > 15.0) return L * kLn10 + std::log1p(std::pow(10.0, -L));
  return std::log1p(std::pow(10.0, L));
}

// log10(expm1(t)) without overflow, t > 0.
double log10_expm1(double t) {
  if (t > 30.0) return (t + std::log1p(-std::exp(-t))) / kLn10;
  return std::log10(std::expm1(t));
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

DistributionModel DistributionModel::pareto1(double alpha, double x0) {
  require_positive(alpha, "ParetoI alpha");
  require_positive(x0, "ParetoI x0");
  return DistributionModel(ParetoI{alpha, x0});
}
DistributionModel DistributionModel::pareto2(double b) {
  require_positive(b, "ParetoII b");
  return DistributionModel(ParetoII{b});
}
DistributionModel DistributionModel::lognormal(double mu, double sigma) {
  if (!std::isfinite(mu)) throw Error(ErrorKind::InvalidParameter, "Lognormal mu must be finite");
  require_positive(sigma, "Lognormal sigma");
  return DistributionModel(Lognormal{mu, sigma});
}
DistributionModel DistributionModel::uniform(double k) {
  require_positive(k, "Uniform k");
  return DistributionModel(UniformOnZeroK{k});
}
DistributionModel DistributionModel::exponential(double lambda) {
  require_positive(lambda, "Exponential lambda");
  return DistributionModel(Exponential{lambda});
}
DistributionModel DistributionModel::half_normal(double sigma) {
  require_positive(sigma, "HalfNormal sigma");
  return DistributionModel(HalfNormal{sigma});
}

DistributionModel make_model(std::string_view key, double parameter) {
  if (key == "pareto1") return DistributionModel::pareto1(parameter);
  if (key == "pareto2") return DistributionModel::pareto2(parameter);
  if (key == "lognormal") return DistributionModel::lognormal(0.0, parameter);
  if (key == "uniform") return DistributionModel::uniform(parameter);
  if (key == "exponential") return DistributionModel::exponential(parameter);
  if (key == "halfnormal") return DistributionModel::half_normal(parameter);
  throw Error(ErrorKind::InvalidParameter, "unknown distribution family '" + std::string(key) + "'");
}

std::string DistributionModel::name() const {
  return std::visit(
      overloaded{
          [](const ParetoI& d) { return "ParetoI(alpha=" + fmt(d.alpha) + ",x0=" + fmt(d.x0) + ")"; },
          [](const ParetoII& d) { return "ParetoII(b=" + fmt(d.b) + ")"; },
          [](const Lognormal& d) { return "Lognormal(mu=" + fmt(d.mu) + ",sigma=" + fmt(d.sigma) + ")"; },
          [](const UniformOnZeroK& d) { return "Uniform(0," + fmt(d.k) + "]"; },
          [](const Exponential& d) { return "Exponential(lambda=" + fmt(d.lambda) + ")"; },
          [](const HalfNormal& d) { return "HalfNormal(sigma=" + fmt(d.sigma) + ")"; },
      },
      family_);
}

std::string DistributionModel::key() const {
  return std::visit(overloaded{
                        [](const ParetoI&) { return "pareto1"; },
                        [](const ParetoII&) { return "pareto2"; },
                        [](const Lognormal&) { return "lognormal"; },
                        [](const UniformOnZeroK&) { return "uniform"; },
                        [](const Exponential&) { return "exponential"; },
                        [](const HalfNormal&) { return "halfnormal"; },
                    },
                    family_);
}

double DistributionModel::parameter() const {
  return std::visit(overloaded{
                        [](const ParetoI& d) { return d.alpha; },
                        [](const ParetoII& d) { return d.b; },
                        [](const Lognormal& d) { return d.sigma; },
                        [](const UniformOnZeroK& d) { return d.k; },
                        [](const Exponential& d) { return d.lambda; },
                        [](const HalfNormal& d) { return d.sigma; },
                    },
                    family_);
}

double DistributionModel::support_lower() const {
  if (const auto* p = std::get_if<ParetoI>(&family_)) return p->x0;
  return 0.0;
}

double DistributionModel::support_upper() const {
  if (const auto* u = std::get_if<UniformOnZeroK>(&family_)) return u->k;
  return kInf;
}

double pdf(const DistributionModel& m, double x) {
  return std::visit(
      overloaded{
          [x](const ParetoI& d) { return x < d.x0 ? 0.0 : d.alpha / x * std::pow(d.x0 / x, d.alpha); },
          [x](const ParetoII& d) { return x < 0.0 ? 0.0 : d.b * std::exp(-(d.b + 1.0) * std::log1p(x)); },
          [x](const Lognormal& d) {
            if (x <= 0.0) return 0.0;
            const double z = (std::log10(x) - d.mu) / d.sigma;
            return std::exp(-0.5 * z * z) / (d.sigma * x * kLn10 * std::sqrt(2.0 * std::numbers::pi));
          },
          [x](const UniformOnZeroK& d) { return (x > 0.0 && x <= d.k) ? 1.0 / d.k : 0.0; },
          [x](const Exponential& d) { return x < 0.0 ? 0.0 : d.lambda * std::exp(-d.lambda * x); },
          [x](const HalfNormal& d) {
            if (x < 0.0) return 0.0;
            const double z = x / d.sigma;
            return 2.0 * std::exp(-0.5 * z * z) / (d.sigma * std::sqrt(2.0 * std::numbers::pi));
          },
      },
      m.family());
}

double cdf(const DistributionModel& m, double x) {
  return std::visit(
      overloaded{
          [x](const ParetoI& d) { return x <= d.x0 ? 0.0 : -std::expm1(d.alpha * std::log(d.x0 / x)); },
          [x](const ParetoII& d) { return x <= 0.0 ? 0.0 : -std::expm1(-d.b * std::log1p(x)); },
          [x](const Lognormal& d) { return x <= 0.0 ? 0.0 : normal_cdf((std::log10(x) - d.mu) / d.sigma); },
          [x](const UniformOnZeroK& d) { return x <= 0.0 ? 0.0 : std::min(1.0, x / d.k); },
          [x](const Exponential& d) { return x <= 0.0 ? 0.0 : -std::expm1(-d.lambda * x); },
          [x](const HalfNormal& d) { return x <= 0.0 ? 0.0 : erf(x / (d.sigma * std::numbers::sqrt2)); },
      },
      m.family());
}

double sf(const DistributionModel& m, double x) {
  return std::visit(
      overloaded{
          [x](const ParetoI& d) { return x <= d.x0 ? 1.0 : std::pow(d.x0 / x, d.alpha); },
          [x](const ParetoII& d) { return x <= 0.0 ? 1.0 : std::exp(-d.b * std::log1p(x)); },
          [x](const Lognormal& d) { return x <= 0.0 ? 1.0 : normal_sf((std::log10(x) - d.mu) / d.sigma); },
          [x](const UniformOnZeroK& d) { return x <= 0.0 ? 1.0 : std::max(0.0, 1.0 - x / d.k); },
          [x](const Exponential& d) { return x <= 0.0 ? 1.0 : std::exp(-d.lambda * x); },
          [x](const HalfNormal& d) { return x <= 0.0 ? 1.0 : erfc(x / (d.sigma * std::numbers::sqrt2)); },
      },
      m.family());
}

double quantile(const DistributionModel& m, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::DomainError, "quantile needs p in [0, 1]");
  return std::visit(
      overloaded{
          [p](const ParetoI& d) { return d.x0 * std::exp(-std::log1p(-p) / d.alpha); },
          [p](const ParetoII& d) { return std::expm1(-std::log1p(-p) / d.b); },
          [p](const Lognormal& d) { return std::pow(10.0, d.mu + d.sigma * normal_quantile(p)); },
          [p](const UniformOnZeroK& d) { return d.k * p; },
          [p](const Exponential& d) { return -std::log1p(-p) / d.lambda; },
          [p](const HalfNormal& d) { return -d.sigma * normal_quantile(0.5 * (1.0 - p)); },
      },
      m.family());
}

double cdf_log10(const DistributionModel& m, double L) {
  return std::visit(
      overloaded{
          [L](const ParetoI& d) {
            const double l0 = std::log10(d.x0);
            return L <= l0 ? 0.0 : -std::expm1(d.alpha * kLn10 * (l0 - L));
          },
          [L](const ParetoII& d) { return -std::expm1(-d.b * log1p_pow10(L)); },
          [L](const Lognormal& d) { return normal_cdf((L - d.mu) / d.sigma); },
          [&m, L](const auto&) { return cdf(m, pow10_clamped(L)); },
      },
      m.family());
}

double sf_log10(const DistributionModel& m, double L) {
  return std::visit(
      overloaded{
          [L](const ParetoI& d) {
            const double l0 = std::log10(d.x0);
            return L <= l0 ? 1.0 : std::exp(d.alpha * kLn10 * (l0 - L));
          },
          [L](const ParetoII& d) { return std::exp(-d.b * log1p_pow10(L)); },
          [L](const Lognormal& d) { return normal_sf((L - d.mu) / d.sigma); },
          [&m, L](const auto&) { return sf(m, pow10_clamped(L)); },
      },
      m.family());
}

double quantile_log10(const DistributionModel& m, double p) {
  return std::visit(
      overloaded{
          [p](const ParetoI& d) { return std::log10(d.x0) - std::log1p(-p) / (d.alpha * kLn10); },
          [p](const ParetoII& d) { return log10_expm1(-std::log1p(-p) / d.b); },
          [p](const Lognormal& d) { return d.mu + d.sigma * normal_quantile(p); },
          [&m, p](const auto&) { return std::log10(quantile(m, p)); },
      },
      m.family());
}

double isf_log10(const DistributionModel& m, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw Error(ErrorKind::DomainError, "isf needs s in (0, 1]");
  return std::visit(
      overloaded{
          [s](const ParetoI& d) { return std::log10(d.x0) - std::log10(s) / d.alpha; },
          [s](const ParetoII& d) { return log10_expm1(-std::log(s) / d.b); },
          [s](const Lognormal& d) { return d.mu - d.sigma * normal_quantile(s); },
          [s](const UniformOnZeroK& d) { return std::log10(d.k * (1.0 - s)); },
          [s](const Exponential& d) { return std::log10(-std::log(s) / d.lambda); },
          [s](const HalfNormal& d) { return std::log10(-d.sigma * normal_quantile(0.5 * s)); },
      },
      m.family());
}

namespace {

struct NumericMax {
  double m;
  double argmax;
  bool left_edge;
  bool right_edge;
};

// Maximizes h over [lo, hi] (log-spaced in x). Checks the increasing-then-
// decreasing shape on a dense grid, then refines by golden-section search.
template <class H>
NumericMax maximize_unimodal(const H& h, double lo, double hi) {
  constexpr int kGrid = 4097;
  const double tlo = std::log(lo);
  const double thi = std::log(hi);
  std::vector<double> t(kGrid), v(kGrid);
  for (int i = 0; i < kGrid; ++i) {
    t[i] = tlo + (thi - tlo) * i / (kGrid - 1);
    v[i] = h(std::exp(t[i]));
  }
  t.front() = tlo;
  t.back() = thi;
  v.front() = h(lo);
  v.back() = h(hi);
  const double vmax = *std::max_element(v.begin(), v.end());
  const double flat = 1e-9 * vmax;
  bool decreasing_seen = false;
  for (int i = 1; i < kGrid; ++i) {
    const double dv = v[i] - v[i - 1];
    if (dv < -flat) decreasing_seen = true;
    if (dv > flat && decreasing_seen) {
      throw Error(ErrorKind::NotUnimodal,
                  "density ratio increases again near x = " + fmt(std::exp(t[i])));
    }
  }
  const auto best = static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
  double a = t[std::max(best - 1, 0)];
  double b = t[std::min(best + 1, kGrid - 1)];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double hc = h(std::exp(c));
  double hd = h(std::exp(d));
  for (int it = 0; it < 200 && (b - a) > 1e-13 * std::max(1.0, std::fabs(a)); ++it) {
    if (hc >= hd) {
      b = d;
      d = c;
      hd = hc;
      c = b - inv_phi * (b - a);
      hc = h(std::exp(c));
    } else {
      a = c;
      c = d;
      hc = hd;
      d = a + inv_phi * (b - a);
      hd = h(std::exp(d));
    }
  }
  double targ = 0.5 * (a + b);
  double best_v = h(std::exp(targ));
  // Endpoint maxima: golden section approaches them but never lands there.
  if (v.front() >= best_v) {
    targ = tlo;
    best_v = v.front();
  }
  if (v.back() >= best_v) {
    targ = thi;
    best_v = v.back();
  }
  if (best_v < vmax * (1.0 - 1e-12)) best_v = vmax, targ = t[best];
  return {best_v, targ == tlo ? lo : (targ == thi ? hi : std::exp(targ)), targ == tlo, targ == thi};
}

double search_lower(const DistributionModel& m) {
  const double lo = m.support_lower();
  return lo > 0.0 ? lo : std::pow(10.0, quantile_log10(m, kTailMass));
}

double search_upper(const DistributionModel& m) {
  const double hi = m.support_upper();
  if (std::isfinite(hi)) return hi;
  return std::pow(10.0, std::min(isf_log10(m, kTailMass), 300.0));
}

template <class H>
Supremum numeric_supremum(const DistributionModel& m, const H& h) {
  const double lo = search_lower(m);
  const double hi = search_upper(m);
  const NumericMax r = maximize_unimodal(h, lo, hi);
  // A maximum on an artificial cut-off means the supremum lives beyond it.
  if (r.left_edge && m.support_lower() == 0.0) {
    const double further = h(lo * 1e-8);
    if (further > r.m * (1.0 + 1e-6)) {
      throw Error(ErrorKind::HypothesisViolated, "supremum is infinite as x -> 0+ for " + m.name());
    }
  }
  if (r.right_edge && !std::isfinite(m.support_upper())) {
    const double further = h(std::min(hi * 1e8, 1e300));
    if (further > r.m * (1.0 + 1e-6)) {
      throw Error(ErrorKind::HypothesisViolated, "supremum is unbounded as x -> inf for " + m.name());
    }
  }
  Supremum s;
  s.m = r.m;
  s.argmax = r.left_edge && m.support_lower() == 0.0 ? 0.0 : r.argmax;
  return s;
}

// Closed form against the numeric search: the numeric value wins on disagreement.
Supremum reconcile(Supremum closed, const Supremum& numeric) {
  closed.analytic = true;
  if (std::fabs(closed.m - numeric.m) > 1e-6 * std::max(std::fabs(numeric.m), 1e-300)) {
    Supremum s = numeric;
    s.diagnostic = "closed form " + fmt(closed.m) + " disagrees with numeric search " + fmt(numeric.m) +
                   "; using numeric value";
    return s;
  }
  return closed;
}

}  // namespace

Supremum sup_id_f(const DistributionModel& m) {
  auto h = [&m](double x) { return x * pdf(m, x); };
  Supremum numeric = numeric_supremum(m, h);
  numeric.argmax_transformed = numeric.argmax;
  Supremum closed;
  if (const auto* p = std::get_if<ParetoI>(&m.family())) {
    closed.m = p->alpha;
    closed.argmax = p->x0;
  } else if (const auto* p2 = std::get_if<ParetoII>(&m.family())) {
    closed.m = std::pow(p2->b / (1.0 + p2->b), p2->b + 1.0);
    closed.argmax = 1.0 / p2->b;
  } else if (const auto* u = std::get_if<UniformOnZeroK>(&m.family())) {
    closed.m = 1.0;
    closed.argmax = u->k;
  } else {
    return numeric;
  }
  closed.argmax_transformed = closed.argmax;
  return reconcile(closed, numeric);
}

Supremum sup_f_over_uprime(const DistributionModel& m, const TransformSpec& u) {
  if (u.kind == TransformKind::LogLog && m.support_lower() < 1.0) {
    throw Error(ErrorKind::DomainError, "log(log(x)) is undefined on part of the support of " + m.name());
  }
  if (u.kind == TransformKind::Log) {
    // f / u' = ln(b) x f(x)
    Supremum s = sup_id_f(m);
    const double lnb = std::log(static_cast<double>(u.base));
    s.m *= lnb;
    s.argmax_transformed = apply(u, s.argmax);
    return s;
  }
  auto h = [&m, &u](double x) { return pdf(m, x) / derivative(u, x); };
  Supremum numeric = numeric_supremum(m, h);
  numeric.argmax_transformed = apply(u, numeric.argmax);
  if (const auto* uni = std::get_if<UniformOnZeroK>(&m.family()); uni && u.kind == TransformKind::Sqrt) {
    Supremum closed;
    closed.m = 2.0 / std::sqrt(uni->k);
    closed.argmax = uni->k;
    closed.argmax_transformed = std::sqrt(uni->k);
    return reconcile(closed, numeric);
  }
  return numeric;
}

SeededSampler::SeededSampler(DistributionModel model, std::uint64_t seed)
    : model_(std::move(model)), seed_(seed), engine_(seed) {}

double SeededSampler::uniform_open() {
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double SeededSampler::next() {
  ++counter_;
  const double u = uniform_open();
  return std::visit(overloaded{
                        [u](const HalfNormal& d) { return std::fabs(d.sigma * normal_quantile(u)); },
                        [u](const Lognormal& d) { return std::pow(10.0, d.mu + d.sigma * normal_quantile(u)); },
                        [this, u](const auto&) { return quantile(model_, u); },
                    },
                    model_.family());
}

std::vector<double> SeededSampler::sample(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidParameter, "sample size must be >= 1");
  std::vector<double> out(n);
  for (auto& v : out) v = next();
  return out;
}

}  // namespace ubenford
