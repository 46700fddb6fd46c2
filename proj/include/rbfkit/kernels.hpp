#pragma once

#include <functional>
#include <memory>
#include <variant>

#include "rbfkit/geometry.hpp"

namespace rbfkit {

// ---------------------------------------------------------------------------
// Kernel catalogue
// ---------------------------------------------------------------------------

/// Scaling of the response-dependent convection-diffusion kernel.
///
/// half:  exp(+v (x_i - x_k) / 2) I0(|v| r / 2). Exact general solution of
///        the frozen-coefficient operator lap(g) - v g_x = 0.
/// sqrt2: exp(-v (x_i - x_k) / 2) I0(|v| r / sqrt 2). The form as usually
///        printed for this benchmark; it is not an exact solution of either
///        convection sign, but it reproduces the reference error table.
enum class ConvDiffScaling { half, sqrt2 };

struct Helmholtz2D {};

struct ConvDiff {
    ConvDiffScaling scaling = ConvDiffScaling::half;
};

struct Multiquadric {
    double c = 1.0;
};

/// r^(2m) log r
struct ThinPlateSpline {
    int m = 1;
};

/// r^(2m) log sqrt(r^2 + c^2): TPS with the log singularity regularised.
struct PrewaveletTps {
    int m = 1;
    double c = 1.0;
};

struct Wavelet;

/// Time-space general solution of lap(u) = u_t / k, amplitude absorbed.
struct TimeSpaceDiffusion {
    double k = 1.0;
    int dim = 2;
};

/// Time-space general solution of lap(u) = u_tt / c^2.
struct TimeSpaceWave {
    double c = 1.0;
    double C = 1.0;
    double D = 0.0;
    int dim = 2;
};

/// Multiplier h(r_p, t, t_j) applied on top of a time-space kernel.
using TimeSpaceMultiplier = std::function<double(double r_p, double t, double t_j)>;

/// Transient heat-kernel fundamental solution, optionally weighted by h.
struct DiffusionFundamental {
    double k = 1.0;
    int d = 2;
    TimeSpaceMultiplier h;  // empty means h = 1
};

using KernelSpec = std::variant<Helmholtz2D, ConvDiff, Multiquadric, ThinPlateSpline,
                                PrewaveletTps, Wavelet, TimeSpaceDiffusion, TimeSpaceWave,
                                DiffusionFundamental>;

/// phi_parent(lambda * r + d).
struct Wavelet {
    std::shared_ptr<const KernelSpec> parent;
    double lambda = 1.0;
    double d = 0.0;
};

/// Builds a Wavelet after checking that the parent is radial and lambda > 0.
[[nodiscard]] Wavelet make_wavelet(KernelSpec parent, double lambda, double d);

/// Throws ShapeError on any parameter outside its documented range.
void validate(const KernelSpec& spec);

/// True for kernels that depend on the distance alone.
[[nodiscard]] bool is_radial(const KernelSpec& spec);

/// Evaluates a radial kernel at distance r. Throws StructureError for
/// response-dependent or time-space kernels.
[[nodiscard]] double radial_value(const KernelSpec& spec, double r);

// ---------------------------------------------------------------------------
// Individual kernels
// ---------------------------------------------------------------------------

/// J0(r): non-singular general solution of the 2D Helmholtz operator.
[[nodiscard]] double helmholtz_gs_2d(double r);

/// Response-knot-dependent kernel for lap(u) - u u_x = 0 with the
/// convective velocity frozen at the response value u_i.
/// Throws RangeError if the I0 argument passes its overflow guard or the
/// product overflows.
[[nodiscard]] double convdiff_kernel(Point2 xi, Point2 xk, double u_i,
                                     ConvDiffScaling scaling = ConvDiffScaling::half);

[[nodiscard]] double multiquadric(double r, double c);
[[nodiscard]] double thin_plate_spline(double r, int m);
[[nodiscard]] double prewavelet_tps(double r, int m, double c_j);

/// (t_j - t)^(-d/2) exp(-r_p^2 / (4 k (t_j - t))), zero for t >= t_j.
/// Response and source times must be staggered; nothing is returned for the
/// singular instant other than the causal zero.
[[nodiscard]] double diffusion_fundamental(double r_p, double t, double t_j, double k, int d);

/// exp(-k (t - t_j)) phi(r_p), phi = J0 (dim 2) or sin(r)/r (dim 3).
[[nodiscard]] double ts_diffusion_gs(double r_p, double t, double t_j, double k, int dim);

/// [C cos(c (t - t_j)) + D sin(c (t - t_j))] phi(r_p).
[[nodiscard]] double ts_wave_gs(double r_p, double t, double t_j, double c, double C, double D,
                                int dim);

/// h(r_p, t, t_j) * base.
[[nodiscard]] double ts_rbf(const TimeSpaceMultiplier& h, double r_p, double t, double t_j,
                            double base);

/// phi_parent(lambda_k r + d_k). A negative shifted argument is passed through
/// for parents that are even in their argument (MQ, J0, pre-wavelet TPS) and
/// clamped to 0 for the plain TPS.
[[nodiscard]] double wavelet_rbf(const KernelSpec& parent, double lambda_k, double d_k, double r);

/// Evaluates any of the time-space kernels (TimeSpaceDiffusion, TimeSpaceWave,
/// DiffusionFundamental). Throws StructureError for other kernels.
[[nodiscard]] double time_space_value(const KernelSpec& spec, double r_p, double t, double t_j);

}  // namespace rbfkit
