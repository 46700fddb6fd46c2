#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rbfkit/geometry.hpp"
#include "rbfkit/kernels.hpp"
#include "rbfkit/linalg.hpp"

namespace rbfkit {

// Boundary knot method for the Burger-like problem
//
//     lap(u) - u u_x = 0   in the benchmark ellipse,   u = -2/x on the boundary,
//
// whose exact solution is u = -2/x. The kernel is made response-knot
// dependent: the convective velocity inside each kernel column is frozen at
// the (known) boundary value of the collocation row. The boundary system is
// therefore linear in the expansion coefficients, and an interior value is
// the root of one scalar equation.

struct BkmModel {
    KnotSet boundary_knots;
    DenseVector alpha;
    ConvDiffScaling kernel_mode = ConvDiffScaling::half;
};

struct BracketConfig {
    double lo = -2.2;
    double hi = -0.3;
    double tol = 1e-10;
    int max_iter = 200;
};

struct BurgerSystem {
    DenseMatrix matrix;
    DenseVector rhs;
};

/// -2 / x. Throws DomainError at x = 0.
[[nodiscard]] double exact_solution(Point2 p);

/// A_ik = convdiff_kernel(knot_i, knot_k, -2/x_i, mode), b_i = -2/x_i.
/// Throws DomainError unless every knot has x > 0.
[[nodiscard]] BurgerSystem assemble_burger_system(const KnotSet& knots, ConvDiffScaling mode);

[[nodiscard]] BkmModel solve_boundary(const KnotSet& knots, ConvDiffScaling mode);

/// sum_k alpha_k K(p, knot_k, u) for a trial response value u.
[[nodiscard]] double expansion_value(const BkmModel& model, Point2 p, double u);

/// Root of g(u) = u - expansion_value(model, p, u) by bisection on the
/// configured bracket. Throws BracketError if g does not change sign on it.
[[nodiscard]] double eval_interior(const BkmModel& model, Point2 p, const BracketConfig& cfg = {});

/// Like eval_interior, but first splits the bracket into `segments` pieces
/// and bisects every sign change. When g has several roots, the one closest
/// to the inverse-distance-weighted boundary data at p is returned.
[[nodiscard]] double eval_interior_scan(const BkmModel& model, Point2 p,
                                        const BracketConfig& cfg = {}, int segments = 64);

/// Inverse-squared-distance average of the boundary data -2/x_k.
[[nodiscard]] double boundary_data_estimate(const KnotSet& knots, Point2 p);

/// Helmholtz baseline: boundary-only collocation with J0 on the same data.
struct HelmholtzBkmModel {
    KnotSet boundary_knots;
    DenseVector alpha;
};

[[nodiscard]] HelmholtzBkmModel normal_bkm_helmholtz(const KnotSet& knots);
[[nodiscard]] double evaluate(const HelmholtzBkmModel& model, Point2 p);

// ---------------------------------------------------------------------------
// Error tables
// ---------------------------------------------------------------------------

struct BenchmarkRow {
    Point2 point;
    double numeric = 0.0;  // NaN when the point could not be evaluated
    double exact = 0.0;
    double rel_err = 0.0;  // NaN when the point could not be evaluated
    std::string failure;   // empty on success
};

struct BenchmarkTable {
    std::vector<BenchmarkRow> rows;
    double average = 0.0;  // mean rel_err over evaluated rows
    std::size_t failures = 0;

    [[nodiscard]] bool ok() const { return failures == 0; }
};

/// Relative errors |u_num - u_exact| / |u_exact| for an arbitrary evaluator.
/// Exceptions thrown by the evaluator at a point are recorded on that row.
[[nodiscard]] BenchmarkTable tabulate_errors(std::span<const Point2> points,
                                             const std::function<double(Point2)>& evaluator);

/// Uses eval_interior_scan with the given bracket.
[[nodiscard]] BenchmarkTable benchmark_table(const BkmModel& model, std::span<const Point2> points,
                                             const BracketConfig& cfg = {});
[[nodiscard]] BenchmarkTable benchmark_table(const HelmholtzBkmModel& model,
                                             std::span<const Point2> points);

/// The eleven interior points of the reference comparison.
[[nodiscard]] std::span<const Point2> reference_points();

/// Published per-point relative errors at reference_points(), in order.
struct ReferenceErrors {
    std::vector<double> drm_33;
    std::vector<double> bkm_9;
    std::vector<double> bkm_11;
};
[[nodiscard]] const ReferenceErrors& reference_errors();

/// Published average relative errors of the response-dependent scheme by N.
[[nodiscard]] const std::map<std::size_t, double>& reference_averages();

}  // namespace rbfkit
