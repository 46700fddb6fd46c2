#include "rbfkit/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rbfkit/error.hpp"

namespace rbfkit {
namespace {

using ld = long double;

constexpr double kJ0SeriesLimit = 16.0;
constexpr double kI0SeriesLimit = 30.0;

// sum_m s^m (x^2/4)^m / (m!)^2 with s = -1 (J0) or +1 (I0)
ld bessel_zero_series(ld x, ld sign) {
    const ld q = x * x / 4.0L;
    ld term = 1.0L;
    ld sum = 1.0L;
    for (int m = 1; m < 500; ++m) {
        term *= sign * q / (static_cast<ld>(m) * static_cast<ld>(m));
        sum += term;
        if (std::abs(term) <= 1e-22L * std::max(std::abs(sum), 1e-3L)) break;
    }
    return sum;
}

// Terms c_k = prod_{j<=k} (2j-1)^2 / (8 j x) of the order-zero Hankel
// expansion, truncated where they stop decreasing.
struct HankelSums {
    ld p = 0.0L;  // sum (-1)^k c_{2k}
    ld q = 0.0L;  // -sum (-1)^k c_{2k+1}
    ld all = 0.0L;  // sum c_k (modified Bessel expansion)
};

HankelSums hankel_sums(ld x) {
    HankelSums s;
    ld c = 1.0L;
    ld prev = INFINITY;
    for (int k = 0; k < 200; ++k) {
        if (k > 0) {
            const ld odd = 2.0L * k - 1.0L;
            c *= odd * odd / (8.0L * k * x);
        }
        if (c > prev) break;
        prev = c;
        s.all += c;
        const int half = k / 2;
        const ld alt = (half % 2 == 0) ? c : -c;
        if (k % 2 == 0) {
            s.p += alt;
        } else {
            s.q -= alt;
        }
        if (c < 1e-21L) break;
    }
    return s;
}

}  // namespace

double bessel_j0(double x) {
    if (!std::isfinite(x)) throw DomainError("bessel_j0: non-finite argument");
    const ld ax = std::abs(static_cast<ld>(x));
    if (ax <= kJ0SeriesLimit) return static_cast<double>(bessel_zero_series(ax, -1.0L));

    const HankelSums s = hankel_sums(ax);
    const ld chi = ax - std::numbers::pi_v<ld> / 4.0L;
    const ld amp = std::sqrt(2.0L / (std::numbers::pi_v<ld> * ax));
    return static_cast<double>(amp * (s.p * std::cos(chi) - s.q * std::sin(chi)));
}

double bessel_i0(double x) {
    if (!std::isfinite(x)) throw DomainError("bessel_i0: non-finite argument");
    const ld ax = std::abs(static_cast<ld>(x));
    if (ax > kBesselI0MaxArgument) throw RangeError("bessel_i0: |x| > 700 overflows");
    if (ax <= kI0SeriesLimit) return static_cast<double>(bessel_zero_series(ax, 1.0L));

    const HankelSums s = hankel_sums(ax);
    return static_cast<double>(std::exp(ax) / std::sqrt(2.0L * std::numbers::pi_v<ld> * ax) * s.all);
}

double sinc_radial(double r) {
    if (std::abs(r) < 1e-4) {
        const double r2 = r * r;
        return 1.0 - r2 / 6.0 * (1.0 - r2 / 20.0);
    }
    return std::sin(r) / r;
}

}  // namespace rbfkit
