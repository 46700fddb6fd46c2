#pragma once

#include <cmath>
#include <string>

#include "rbfkit/error.hpp"

namespace rbfkit {

struct BisectionResult {
    double root = 0.0;
    int iterations = 0;
};

/// Plain bisection on [lo, hi]. Stops when |f(mid)| <= tol or the bracket is
/// no wider than tol; iterations never exceed ceil(log2((hi - lo) / tol)).
/// Throws BracketError without a sign change and ConvergenceError when
/// max_iter is reached first.
template <class F>
BisectionResult bisect(F&& f, double lo, double hi, double tol, int max_iter) {
    if (!(lo < hi)) throw BracketError("bisect: need lo < hi");
    if (!(tol > 0.0)) throw BracketError("bisect: tolerance must be positive");
    double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo == 0.0) return {lo, 0};
    if (f_hi == 0.0) return {hi, 0};
    if (std::signbit(f_lo) == std::signbit(f_hi) || std::isnan(f_lo) || std::isnan(f_hi)) {
        throw BracketError("bisect: no sign change on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
    }
    for (int it = 0;; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= tol) return {mid, it};
        if (it >= max_iter) throw ConvergenceError("bisect: iteration limit reached");
        const double f_mid = f(mid);
        if (std::abs(f_mid) <= tol) return {mid, it + 1};
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
}

}  // namespace rbfkit
