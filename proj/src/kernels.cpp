#include "rbfkit/kernels.hpp"

#include <cmath>
#include <numbers>

#include "rbfkit/distance.hpp"
#include "rbfkit/error.hpp"
#include "rbfkit/specfun.hpp"

namespace rbfkit {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double radial_shape(int dim, double r) {
    return dim == 3 ? sinc_radial(r) : bessel_j0(r);
}

void check_dim(int dim) {
    if (dim != 2 && dim != 3) throw ShapeError("time-space kernel: dim must be 2 or 3");
}

// Parents whose value at -s equals their value at s.
bool accepts_negative(const KernelSpec& spec) {
    return std::visit(overloaded{
                          [](const Helmholtz2D&) { return true; },
                          [](const Multiquadric&) { return true; },
                          [](const PrewaveletTps&) { return true; },
                          [](const Wavelet& w) { return accepts_negative(*w.parent); },
                          [](const auto&) { return false; },
                      },
                      spec);
}

}  // namespace

Wavelet make_wavelet(KernelSpec parent, double lambda, double d) {
    Wavelet w{std::make_shared<const KernelSpec>(std::move(parent)), lambda, d};
    validate(KernelSpec{w});
    return w;
}

void validate(const KernelSpec& spec) {
    std::visit(overloaded{
                   [](const Helmholtz2D&) {},
                   [](const ConvDiff&) {},
                   [](const Multiquadric& k) {
                       if (!(k.c > 0.0)) throw ShapeError("MQ: c must be positive");
                   },
                   [](const ThinPlateSpline& k) {
                       if (k.m < 1) throw ShapeError("TPS: m must be a positive integer");
                   },
                   [](const PrewaveletTps& k) {
                       if (k.m < 1) throw ShapeError("pre-wavelet TPS: m must be positive");
                       if (!(k.c > 0.0)) throw ShapeError("pre-wavelet TPS: c must be positive");
                   },
                   [](const Wavelet& k) {
                       if (!k.parent) throw ShapeError("wavelet: missing parent kernel");
                       if (!is_radial(*k.parent)) {
                           throw ShapeError("wavelet: parent kernel must be radial");
                       }
                       if (!(k.lambda > 0.0)) throw ShapeError("wavelet: lambda must be positive");
                       validate(*k.parent);
                   },
                   [](const TimeSpaceDiffusion& k) {
                       if (!(k.k > 0.0)) throw ShapeError("time-space diffusion: k must be positive");
                       check_dim(k.dim);
                   },
                   [](const TimeSpaceWave& k) {
                       if (!(k.c > 0.0)) throw ShapeError("time-space wave: c must be positive");
                       check_dim(k.dim);
                   },
                   [](const DiffusionFundamental& k) {
                       if (!(k.k > 0.0)) throw ShapeError("diffusion fundamental: k must be positive");
                       if (k.d < 1) throw ShapeError("diffusion fundamental: d must be positive");
                   },
               },
               spec);
}

bool is_radial(const KernelSpec& spec) {
    return std::visit(overloaded{
                          [](const Helmholtz2D&) { return true; },
                          [](const Multiquadric&) { return true; },
                          [](const ThinPlateSpline&) { return true; },
                          [](const PrewaveletTps&) { return true; },
                          [](const Wavelet&) { return true; },
                          [](const auto&) { return false; },
                      },
                      spec);
}

double radial_value(const KernelSpec& spec, double r) {
    return std::visit(overloaded{
                          [r](const Helmholtz2D&) { return helmholtz_gs_2d(r); },
                          [r](const Multiquadric& k) { return multiquadric(r, k.c); },
                          [r](const ThinPlateSpline& k) { return thin_plate_spline(r, k.m); },
                          [r](const PrewaveletTps& k) { return prewavelet_tps(r, k.m, k.c); },
                          [r](const Wavelet& k) { return wavelet_rbf(*k.parent, k.lambda, k.d, r); },
                          [](const auto&) -> double {
                              throw StructureError("radial_value: kernel is not radial");
                          },
                      },
                      spec);
}

double helmholtz_gs_2d(double r) { return bessel_j0(r); }

double convdiff_kernel(Point2 xi, Point2 xk, double u_i, ConvDiffScaling scaling) {
    if (!std::isfinite(u_i)) throw DomainError("convdiff_kernel: non-finite response value");
    const double r = euclidean(xi, xk);
    const double dx = xi.x - xk.x;
    double exponent = 0.0;
    double arg = 0.0;
    switch (scaling) {
        case ConvDiffScaling::half:
            exponent = 0.5 * u_i * dx;
            arg = 0.5 * std::abs(u_i) * r;
            break;
        case ConvDiffScaling::sqrt2:
            exponent = -0.5 * u_i * dx;
            arg = std::abs(u_i) * r / std::numbers::sqrt2;
            break;
    }
    const double value = std::exp(exponent) * bessel_i0(arg);
    if (!std::isfinite(value)) throw RangeError("convdiff_kernel: overflow");
    return value;
}

double multiquadric(double r, double c) { return std::sqrt(r * r + c * c); }

double thin_plate_spline(double r, int m) {
    if (r == 0.0) return 0.0;
    return std::pow(r, 2 * m) * std::log(r);
}

double prewavelet_tps(double r, int m, double c_j) {
    return std::pow(r, 2 * m) * 0.5 * std::log(r * r + c_j * c_j);
}

double diffusion_fundamental(double r_p, double t, double t_j, double k, int d) {
    const double tau = t_j - t;
    if (!(tau > 0.0)) return 0.0;
    return std::pow(tau, -0.5 * d) * std::exp(-r_p * r_p / (4.0 * k * tau));
}

double ts_diffusion_gs(double r_p, double t, double t_j, double k, int dim) {
    check_dim(dim);
    return std::exp(-k * (t - t_j)) * radial_shape(dim, r_p);
}

double ts_wave_gs(double r_p, double t, double t_j, double c, double C, double D, int dim) {
    check_dim(dim);
    const double phase = c * (t - t_j);
    return (C * std::cos(phase) + D * std::sin(phase)) * radial_shape(dim, r_p);
}

double ts_rbf(const TimeSpaceMultiplier& h, double r_p, double t, double t_j, double base) {
    return h ? h(r_p, t, t_j) * base : base;
}

double wavelet_rbf(const KernelSpec& parent, double lambda_k, double d_k, double r) {
    double s = lambda_k * r + d_k;
    if (s < 0.0 && !accepts_negative(parent)) s = 0.0;
    return radial_value(parent, s);
}

double time_space_value(const KernelSpec& spec, double r_p, double t, double t_j) {
    return std::visit(
        overloaded{
            [&](const TimeSpaceDiffusion& k) { return ts_diffusion_gs(r_p, t, t_j, k.k, k.dim); },
            [&](const TimeSpaceWave& k) { return ts_wave_gs(r_p, t, t_j, k.c, k.C, k.D, k.dim); },
            [&](const DiffusionFundamental& k) {
                return ts_rbf(k.h, r_p, t, t_j, diffusion_fundamental(r_p, t, t_j, k.k, k.d));
            },
            [](const auto&) -> double {
                throw StructureError("time_space_value: not a time-space kernel");
            },
        },
        spec);
}

}  // namespace rbfkit
