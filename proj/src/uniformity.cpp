#include "ubenford/uniformity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ubenford/error.hpp"
#include "ubenford/transform.hpp"

namespace ubenford {

std::string to_string(KsReference r) { return r == KsReference::UnitInterval ? "unit" : "range"; }

KsReference parse_ks_reference(std::string_view name) {
  if (name == "unit") return KsReference::UnitInterval;
  if (name == "range") return KsReference::SampleRange;
  throw Error(ErrorKind::InvalidParameter, "unknown KS reference '" + std::string(name) + "' (unit|range)");
}

UniformityReport ks_uniform(std::span<const double> values, KsReference reference, double alpha) {
  if (values.empty()) throw Error(ErrorKind::EmptySample, "KS test on an empty sample");
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorKind::InvalidParameter, "significance level must lie in (0, 1)");
  std::vector<double> x(values.begin(), values.end());
  std::sort(x.begin(), x.end());
  const auto n = x.size();

  UniformityReport r;
  r.n = n;
  r.alpha = alpha;
  r.reference = reference;
  if (reference == KsReference::UnitInterval) {
    if (x.front() < 0.0 || x.back() >= 1.0) throw Error(ErrorKind::DomainError, "KS sample values must lie in [0, 1)");
  } else {
    const double lo = x.front();
    const double width = x.back() - lo;
    if (width > 0.0) {
      for (double& v : x) v = (v - lo) / width;
    } else {
      r.d = 1.0;
    }
  }
  if (r.d == 0.0) {
    const double dn = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double above = static_cast<double>(i + 1) / dn - x[i];
      const double below = x[i] - static_cast<double>(i) / dn;
      r.d = std::max({r.d, above, below});
    }
  }
  r.z = std::sqrt(static_cast<double>(n)) * r.d;
  r.p = kolmogorov_q(r.z);
  r.reject = r.p < alpha;
  return r;
}

UniformityReport ks_uniform(const FracSample& sample, KsReference reference, double alpha) {
  return ks_uniform(std::span<const double>(sample.values), reference, alpha);
}

double kolmogorov_q(double z) {
  if (std::isnan(z) || z < 0.0) throw Error(ErrorKind::DomainError, "Q(z) needs z >= 0");
  if (z == 0.0) return 1.0;
  double q;
  if (z < 1.0) {
    // 1 - Q(z) = sqrt(2 pi)/z sum_{k>=1} exp(-(2k-1)^2 pi^2 / (8 z^2))
    const double c = std::numbers::pi * std::numbers::pi / (8.0 * z * z);
    double s = 0.0;
    for (int k = 1; k < 100; ++k) {
      const double m = 2.0 * k - 1.0;
      const double t = std::exp(-m * m * c);
      s += t;
      if (t < 1e-17 * s) break;
    }
    q = 1.0 - std::sqrt(2.0 * std::numbers::pi) / z * s;
  } else {
    double s = 0.0;
    for (int k = 1; k < 100; ++k) {
      const double t = std::exp(-2.0 * k * k * z * z);
      s += (k % 2 == 1 ? t : -t);
      if (t < 1e-12) break;
    }
    q = 2.0 * s;
  }
  return std::clamp(q, 0.0, 1.0);
}

namespace {

void require_base(int base) {
  if (base < 2) throw Error(ErrorKind::InvalidParameter, "base must be >= 2");
}

}  // namespace

int leading_digit(const BigReal& x, int base) {
  require_base(base);
  if (x.sign() <= 0) throw Error(ErrorKind::DomainError, "leading digit needs x > 0");
  const BigReal y = eval_transform(TransformSpec::log(base), x);
  // floor(log_b x) and the mantissa x / b^k, the latter at the precision of x.
  const mpz_class k = y.to_integer_floor();
  const int work = std::max(x.digits(), kMinDigits) + 10;
  const BigReal b = BigReal::from_integer(base, work);
  const long kl = k.get_si();
  const BigReal bk = pow(b, static_cast<unsigned long>(kl < 0 ? -kl : kl));
  BigReal mantissa = kl < 0 ? x.with_digits(work) * bk : x.with_digits(work) / bk;
  // log_b x may have been snapped onto an integer from just below it.
  if (mantissa < BigReal::from_integer(1)) mantissa = mantissa * b;
  if (!(mantissa < b)) mantissa = mantissa / b;
  const auto d = static_cast<int>(mantissa.to_integer_floor().get_si());
  return std::clamp(d, 1, base - 1);
}

int leading_digit(double x, int base) {
  require_base(base);
  if (!(x > 0.0) || !std::isfinite(x)) throw Error(ErrorKind::DomainError, "leading digit needs finite x > 0");
  const double b = base;
  const double k = std::floor(std::log(x) / std::log(b));
  const double m = x / std::pow(b, k);
  const double nearest = std::round(m);
  // Within rounding noise of a digit boundary: decide exactly.
  if (std::fabs(m - nearest) < 1e-9 * std::max(1.0, m) || m < 1.0 || m >= b) {
    return leading_digit(BigReal::from_double(x), base);
  }
  return static_cast<int>(m);
}

std::vector<double> benford_frequencies(int base) {
  require_base(base);
  std::vector<double> f(static_cast<std::size_t>(base - 1));
  for (int d = 1; d < base; ++d) f[d - 1] = std::log1p(1.0 / d) / std::log(static_cast<double>(base));
  return f;
}

namespace {

DigitHistogram finish(std::vector<long> counts, int base) {
  DigitHistogram h;
  h.base = base;
  h.counts = std::move(counts);
  h.expected = benford_frequencies(base);
  for (long c : h.counts) h.n += static_cast<std::size_t>(c);
  h.degrees_of_freedom = base - 2;
  if (h.n >= static_cast<std::size_t>(5 * (base - 1))) {
    h.has_chi_square = true;
    const double n = static_cast<double>(h.n);
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
      const double e = n * h.expected[i];
      const double diff = static_cast<double>(h.counts[i]) - e;
      h.chi_square += diff * diff / e;
    }
  }
  return h;
}

}  // namespace

DigitHistogram digit_report(std::span<const double> values, int base) {
  require_base(base);
  std::vector<long> counts(static_cast<std::size_t>(base - 1), 0);
  for (double v : values) ++counts[leading_digit(v, base) - 1];
  return finish(std::move(counts), base);
}

DigitHistogram digit_report(const std::vector<BigReal>& values, int base) {
  require_base(base);
  std::vector<long> counts(static_cast<std::size_t>(base - 1), 0);
  for (const BigReal& v : values) ++counts[leading_digit(v, base) - 1];
  return finish(std::move(counts), base);
}

}  // namespace ubenford
