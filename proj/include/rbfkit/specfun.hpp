#pragma once

namespace rbfkit {

/// Bessel function of the first kind, order zero.
///
/// Power series (evaluated in long double) for |x| <= 16, Hankel asymptotic
/// expansion truncated at its smallest term beyond. Absolute error is below
/// 1e-10 on |x| <= 50. Throws DomainError for non-finite x.
[[nodiscard]] double bessel_j0(double x);

/// Modified Bessel function of the first kind, order zero.
///
/// Positive-term power series for |x| <= 30, asymptotic expansion of
/// e^x / sqrt(2 pi x) beyond. Relative error is below 1e-10. Throws
/// DomainError for non-finite x and RangeError for |x| > 700.
[[nodiscard]] double bessel_i0(double x);

inline constexpr double kBesselI0MaxArgument = 700.0;

/// sin(r)/r with the removable singularity filled in (value 1 at r = 0).
[[nodiscard]] double sinc_radial(double r);

}  // namespace rbfkit
