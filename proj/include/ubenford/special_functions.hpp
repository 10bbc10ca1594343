#pragma once

namespace ubenford {

// Error function family, evaluated internally: power series below |x| = 3,
// Lentz continued fraction for erfc above. Absolute error < 1e-14.
double erf(double x);
double erfc(double x);

/// Standard normal c.d.f. and upper tail, accurate in the far tails.
double normal_cdf(double z);
double normal_sf(double z);

/// Inverse of normal_cdf on (0, 1); Acklam's rational start refined by two
/// Halley steps against erfc.
double normal_quantile(double p);

/// Inverse error function on (-1, 1).
double erf_inv(double y);

}  // namespace ubenford
