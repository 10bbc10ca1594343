#include "ubenford/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <future>
#include <thread>

#include "ubenford/error.hpp"
#include "ubenford/pi.hpp"

namespace ubenford {

namespace {

std::vector<long> selected_indices(const SequenceSpec& spec, long& filtered) {
  std::vector<long> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  filtered = 0;
  for (long n = spec.start; n < spec.start + spec.count; ++n) {
    if (spec.exclude && spec.exclude(n)) {
      ++filtered;
      continue;
    }
    out.push_back(n);
  }
  return out;
}

BigReal term_with_primes(const SequenceSpec& spec, long n, int digits,
                         const std::vector<std::uint64_t>& primes) {
  if (spec.kind == SequenceKind::Primes) {
    return BigReal::from_integer(mpz_class(static_cast<unsigned long>(primes.at(n - 1))));
  }
  return nth_term(spec, n, digits);
}

}  // namespace

std::string SequenceSpec::name() const {
  switch (kind) {
    case SequenceKind::SqrtN: return "sqrt(n)";
    case SequenceKind::PiN: return "pi*n";
    case SequenceKind::Primes: return "p_n";
    case SequenceKind::ExpN: return "e^n";
    case SequenceKind::Factorial: return "n!";
    case SequenceKind::NPowN: return "n^n";
    case SequenceKind::PowerLaw: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "n^%.6g", alpha);
      return buf;
    }
  }
  return "?";
}

bool even_or_perfect_square(long n) {
  if (n % 2 == 0) return true;
  const auto r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  for (long c = std::max(0L, r - 1); c <= r + 1; ++c) {
    if (c * c == n) return true;
  }
  return false;
}

std::vector<std::uint64_t> first_primes(long count) {
  if (count < 1) throw Error(ErrorKind::InvalidParameter, "prime count must be >= 1");
  const double n = static_cast<double>(count);
  auto limit = static_cast<std::size_t>(
      count < 6 ? 15.0 : n * (std::log(n) + std::log(std::log(n))) + 10.0);
  for (;;) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::size_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      if (static_cast<long>(primes.size()) == count) return primes;
      for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    limit *= 2;
  }
}

BigReal nth_term(const SequenceSpec& spec, long n, int digits) {
  if (n < 1) throw Error(ErrorKind::DomainError, "sequence index must be >= 1");
  const auto un = static_cast<unsigned long>(n);
  switch (spec.kind) {
    case SequenceKind::SqrtN: {
      BigReal r(digits);
      const int ternary = mpfr_sqrt_ui(r.raw(), un, MPFR_RNDN);
      r.set_exact(ternary == 0);
      return r;
    }
    case SequenceKind::PiN:
      return pi_digits(digits + 2, PrecisionPolicy{16, 15, 12, std::numeric_limits<int>::max()})
                 .with_digits(digits) *
             BigReal::from_integer(n);
    case SequenceKind::Primes:
      return BigReal::from_integer(mpz_class(static_cast<unsigned long>(first_primes(n).back())));
    case SequenceKind::ExpN: {
      // One e constant, raised to n; pow_ui multiplies the relative error of e
      // by about n, which the extra working digits cover.
      const int work = digits + static_cast<int>(std::ceil(std::log10(static_cast<double>(n)))) + 3;
      BigReal e = exp(BigReal::from_integer(1, work).with_digits(work));
      return pow(e, un).with_digits(digits);
    }
    case SequenceKind::Factorial: {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), un);
      return BigReal::from_integer(f);
    }
    case SequenceKind::NPowN: {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), un, un);
      return BigReal::from_integer(p);
    }
    case SequenceKind::PowerLaw: {
      if (!(spec.alpha > 0.0)) throw Error(ErrorKind::InvalidParameter, "power-law exponent must be > 0");
      const BigReal base = BigReal::from_integer(n, digits);
      const BigReal a = BigReal::from_double(spec.alpha, digits);
      return pow(base, a).with_digits(digits);
    }
  }
  return BigReal(digits);
}

std::vector<BigReal> nth_terms(const SequenceSpec& spec, int digits) {
  if (spec.count < 1) throw Error(ErrorKind::InvalidParameter, "N must be >= 1");
  long filtered = 0;
  const std::vector<long> idx = selected_indices(spec, filtered);
  std::vector<std::uint64_t> primes;
  if (spec.kind == SequenceKind::Primes) primes = first_primes(spec.start + spec.count - 1);
  std::vector<BigReal> out;
  out.reserve(idx.size());
  for (long n : idx) out.push_back(term_with_primes(spec, n, digits, primes));
  return out;
}

FracSample frac_sample(const SequenceSpec& spec, const TransformSpec& u,
                       const PrecisionPolicy& policy, unsigned threads) {
  if (spec.count < 1) throw Error(ErrorKind::InvalidParameter, "N must be >= 1");
  policy.validate();

  FracSample sample;
  sample.requested = spec.count;
  sample.sequence = spec.name();
  sample.transform = u.name();
  sample.exclusions = spec.exclusion_label;
  const std::vector<long> idx = selected_indices(spec, sample.filtered);

  std::vector<std::uint64_t> primes;
  if (spec.kind == SequenceKind::Primes) primes = first_primes(spec.start + spec.count - 1);
  if (spec.kind == SequenceKind::PiN) {
    // Warm the pi memo once at the largest precision a chunk will ask for.
    (void)pi_digits(std::min(policy.max_digits, 4 * policy.initial_digits), policy);
  }

  struct Chunk {
    std::vector<double> values;
    long out_of_domain = 0;
  };
  auto run = [&](std::size_t begin, std::size_t end) {
    Chunk c;
    c.values.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
      const long n = idx[i];
      auto gen = [&, n](int digits) { return term_with_primes(spec, n, digits, primes); };
      const BigReal probe = gen(kMinDigits + 4);
      const bool defined = u.kind == TransformKind::Identity ||
                           (u.kind == TransformKind::LogLog ? BigReal::from_integer(1) < probe
                                                             : probe.sign() > 0);
      if (!defined) {
        ++c.out_of_domain;
        continue;
      }
      c.values.push_back(frac(eval_transform(u, gen, policy)));
    }
    return c;
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(idx.size(), 1)));
  std::vector<Chunk> chunks;
  if (threads <= 1) {
    chunks.push_back(run(0, idx.size()));
  } else {
    std::vector<std::future<Chunk>> futures;
    const std::size_t per = (idx.size() + threads - 1) / threads;
    for (std::size_t b = 0; b < idx.size(); b += per) {
      futures.push_back(std::async(std::launch::async, run, b, std::min(idx.size(), b + per)));
    }
    for (auto& f : futures) chunks.push_back(f.get());
  }
  for (auto& c : chunks) {
    sample.values.insert(sample.values.end(), c.values.begin(), c.values.end());
    sample.out_of_domain += c.out_of_domain;
  }
  if (sample.values.empty()) {
    throw Error(ErrorKind::EmptySample, "no terms of " + sample.sequence + " left under " + sample.transform);
  }
  return sample;
}

GrowthDiagnostic growth_criterion(const std::function<double(double)>& log_derivative_of_inverse,
                                  const std::vector<double>& x_grid) {
  if (x_grid.size() < 2) throw Error(ErrorKind::InvalidParameter, "growth grid needs >= 2 points");
  if (!std::is_sorted(x_grid.begin(), x_grid.end()) ||
      std::adjacent_find(x_grid.begin(), x_grid.end()) != x_grid.end()) {
    throw Error(ErrorKind::InvalidParameter, "growth grid must be strictly increasing");
  }
  GrowthDiagnostic d;
  d.values.reserve(x_grid.size());
  for (double x : x_grid) {
    const double v = log_derivative_of_inverse(x);
    if (!std::isfinite(v)) throw Error(ErrorKind::DomainError, "[ln f^-1]' not finite on the grid");
    d.values.push_back(v);
  }
  d.limit_estimate = d.values.back();
  const double first = std::fabs(d.values.front());
  const double last = std::fabs(d.values.back());
  d.uniformity_expected = last < 1e-2 && last < 0.5 * first;
  return d;
}

std::function<double(double)> power_law_inverse_log_derivative(double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorKind::InvalidParameter, "alpha must be > 0");
  return [alpha](double x) {
    if (!(x > 0.0)) throw Error(ErrorKind::DomainError, "x^alpha inverse needs x > 0");
    return 1.0 / (alpha * x);
  };
}

std::function<double(double)> log_inverse_log_derivative(int base) {
  const double c = std::log(static_cast<double>(base));
  return [c](double) { return c; };
}

}  // namespace ubenford
