#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rbfkit/distance.hpp"
#include "rbfkit/error.hpp"
#include "rbfkit/kernels.hpp"
#include "rbfkit/specfun.hpp"

using namespace rbfkit;

TEST_CASE("Helmholtz general solution") {
    CHECK(helmholtz_gs_2d(0.0) == 1.0);
    CHECK(std::abs(helmholtz_gs_2d(2.4048255577)) <= 1e-9);
    CHECK(helmholtz_gs_2d(1.0) == doctest::Approx(0.7651976866).epsilon(1e-10));
}

TEST_CASE("convection-diffusion kernel values") {
    for (auto mode : {ConvDiffScaling::half, ConvDiffScaling::sqrt2}) {
        CHECK(convdiff_kernel({2.0, 0.3}, {2.0, 0.3}, -0.7, mode) == 1.0);
        CHECK(convdiff_kernel({4.0, 0.5}, {1.2, -0.3}, 0.0, mode) == 1.0);
    }
    // e^{+1} I0(1) and e^{-1} I0(sqrt 2), 30-digit references
    CHECK(convdiff_kernel({1, 0}, {0, 0}, 2.0, ConvDiffScaling::half) ==
          doctest::Approx(3.44152386912533526).epsilon(1e-12));
    CHECK(convdiff_kernel({1, 0}, {0, 0}, 2.0, ConvDiffScaling::sqrt2) ==
          doctest::Approx(0.576129713026901395).epsilon(1e-12));
    CHECK_THROWS_AS((void)convdiff_kernel({0, 0}, {2000, 0}, 1.0), RangeError);
    CHECK_THROWS_AS((void)convdiff_kernel({0, 0}, {1, 0}, std::nan("")), DomainError);
}

TEST_CASE("half scaling solves the frozen-coefficient operator; sqrt2 does not") {
    constexpr double h = 1e-4;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> radius(0.3, 3.0), angle(0.0, 2.0 * std::numbers::pi);
    const Point2 xk{0.4, -0.2};
    for (double v : {-2.0, -1.0, 0.5, 1.0, 2.0}) {
        double worst_sqrt2 = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const double r = radius(rng), th = angle(rng);
            const double x = xk.x + r * std::cos(th), y = xk.y + r * std::sin(th);
            for (auto mode : {ConvDiffScaling::half, ConvDiffScaling::sqrt2}) {
                auto g = [&](double px, double py) { return convdiff_kernel({px, py}, xk, v, mode); };
                const double res = oracle::laplacian(g, x, y, h) - v * oracle::dx(g, x, y, h);
                const double rel = std::abs(res) / std::max(1.0, std::abs(g(x, y)));
                if (mode == ConvDiffScaling::half) {
                    CHECK(rel <= 1e-4);
                } else {
                    worst_sqrt2 = std::max(worst_sqrt2, rel);
                }
            }
        }
        CHECK(worst_sqrt2 > 1e-2);
    }
}

TEST_CASE("radial kernels") {
    CHECK(multiquadric(0.0, 0.5) == 0.5);
    CHECK(thin_plate_spline(0.0, 1) == 0.0);
    CHECK(thin_plate_spline(std::exp(1.0), 1) == doctest::Approx(std::exp(2.0)));
    CHECK(prewavelet_tps(0.0, 3, 0.2) == 0.0);
    CHECK(prewavelet_tps(1.0, 1, 1.0) == doctest::Approx(0.346573590279972655));
    CHECK(prewavelet_tps(2.0, 2, 0.5) == doctest::Approx(11.5753518634906037));
}

TEST_CASE("kernel specs validate their parameters") {
    CHECK_THROWS_AS(validate(Multiquadric{0.0}), ShapeError);
    CHECK_THROWS_AS(validate(ThinPlateSpline{0}), ShapeError);
    CHECK_THROWS_AS(validate(PrewaveletTps{1, -1.0}), ShapeError);
    CHECK_THROWS_AS(validate(TimeSpaceDiffusion{1.0, 4}), ShapeError);
    CHECK_THROWS_AS(validate(TimeSpaceWave{0.0, 1.0, 0.0, 2}), ShapeError);
    CHECK_THROWS_AS(validate(DiffusionFundamental{-1.0, 2, {}}), ShapeError);
    CHECK_THROWS_AS((void)make_wavelet(ConvDiff{}, 1.0, 0.0), ShapeError);
    CHECK_THROWS_AS((void)make_wavelet(TimeSpaceDiffusion{}, 1.0, 0.0), ShapeError);
    CHECK_THROWS_AS((void)make_wavelet(Multiquadric{1.0}, 0.0, 0.0), ShapeError);
    CHECK_NOTHROW(validate(make_wavelet(make_wavelet(Helmholtz2D{}, 2.0, 0.1), 0.5, 0.0)));

    CHECK(is_radial(Multiquadric{}));
    CHECK(is_radial(make_wavelet(PrewaveletTps{}, 1.0, 0.0)));
    CHECK_FALSE(is_radial(ConvDiff{}));
    CHECK_FALSE(is_radial(TimeSpaceWave{}));
    CHECK_THROWS_AS((void)radial_value(ConvDiff{}, 1.0), StructureError);
    CHECK_THROWS_AS((void)time_space_value(Multiquadric{}, 1.0, 0.0, 0.0), StructureError);
}

TEST_CASE("wavelet-wrapped kernels") {
    const KernelSpec mq = Multiquadric{1.0};
    CHECK(wavelet_rbf(mq, 1.0, 0.0, 0.8) == radial_value(mq, 0.8));
    CHECK(wavelet_rbf(mq, 2.0, 0.0, 1.5) == doctest::Approx(std::sqrt(10.0)));
    CHECK(wavelet_rbf(Helmholtz2D{}, 0.5, 1.0, 2.0) == doctest::Approx(0.223890779141235668));
    // negative shifted arguments: even parents pass through, TPS clamps to 0
    CHECK(wavelet_rbf(mq, 1.0, -1.0, 0.25) == doctest::Approx(std::sqrt(0.5625 + 1.0)));
    CHECK(wavelet_rbf(ThinPlateSpline{1}, 1.0, -1.0, 0.25) == 0.0);
    const KernelSpec w = make_wavelet(Multiquadric{0.5}, 2.0, 0.1);
    CHECK(radial_value(w, 0.3) == doctest::Approx(std::sqrt(0.7 * 0.7 + 0.25)));
}

TEST_CASE("radial kernels depend on the distance only") {
    const KernelSpec kernels[] = {Helmholtz2D{}, Multiquadric{0.7}, ThinPlateSpline{2}, PrewaveletTps{1, 0.3},
                                  make_wavelet(Multiquadric{0.5}, 2.0, 0.1)};
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (const auto& k : kernels) {
        for (int trial = 0; trial < 50; ++trial) {
            const Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)};
            // reflected and swapped pairs are congruent with bit-identical distances
            const double d1 = euclidean(a, b);
            const double d2 = euclidean(Point2{-b.x, -b.y}, Point2{-a.x, -a.y});
            CHECK(radial_value(k, d1) == radial_value(k, d2));
        }
    }
}

TEST_CASE("diffusion fundamental solution") {
    CHECK(diffusion_fundamental(0.3, 1.0, 1.0, 1.0, 2) == 0.0);
    CHECK(diffusion_fundamental(0.3, 2.0, 1.0, 1.0, 2) == 0.0);
    CHECK(diffusion_fundamental(0.0, 0.0, 1.0, 1.0, 2) == 1.0);
    CHECK(diffusion_fundamental(2.0, 0.0, 1.0, 1.0, 2) == doctest::Approx(std::exp(-1.0)));

    // lap(u*) + u*_t / k = 0 for t < t_j
    constexpr double h = 1e-4;
    const double k = 0.8, tj = 1.0;
    const Point2 src{0.1, 0.2};
    for (double t : {-0.5, 0.0, 0.4}) {
        for (const Point2 p : {Point2{0.9, 0.1}, Point2{-0.4, 1.0}, Point2{0.5, -0.6}}) {
            auto field = [&](double x, double y) { return diffusion_fundamental(euclidean({x, y}, src), t, tj, k, 2); };
            auto in_time = [&](double s) { return diffusion_fundamental(euclidean(p, src), s, tj, k, 2); };
            const double res = oracle::laplacian(field, p.x, p.y, h) + oracle::d1(in_time, t, h) / k;
            CHECK(std::abs(res) <= 1e-4 * std::max(1.0, std::abs(field(p.x, p.y))));
        }
    }
}

TEST_CASE("time-space general solutions") {
    CHECK(ts_diffusion_gs(0.0, 0.3, 0.3, 2.0, 2) == 1.0);
    CHECK(ts_diffusion_gs(0.0, 1.0, 0.0, 1.0, 2) == doctest::Approx(std::exp(-1.0)));
    CHECK(ts_diffusion_gs(std::numbers::pi, 0.0, 0.0, 1.0, 3) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ts_wave_gs(0.0, 0.2, 0.2, 3.0, 1.0, 0.0, 2) == 1.0);
    CHECK(ts_wave_gs(1.3, 0.7, 0.1, 2.0, 0.0, 0.0, 3) == 0.0);
    CHECK_THROWS_AS((void)ts_wave_gs(0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 1), ShapeError);
}

namespace {

// u(x, y, t) with r_p measured from the origin.
template <class F>
double heat_residual(F&& u, double x, double y, double t, double k, double h) {
    auto space = [&](double px, double py) { return u(px, py, t); };
    auto time = [&](double s) { return u(x, y, s); };
    return oracle::laplacian(space, x, y, h) - oracle::d1(time, t, h) / k;
}

template <class F>
double wave_residual(F&& u, double x, double y, double t, double c, double h) {
    auto space = [&](double px, double py) { return u(px, py, t); };
    auto time = [&](double s) { return u(x, y, s); };
    return oracle::laplacian(space, x, y, h) - oracle::d2(time, t, h) / (c * c);
}

}  // namespace

TEST_CASE("time-space kernels annihilate their operators (2D)") {
    constexpr double h = 1e-4;
    const double k = 1.0;
    auto diff = [&](double x, double y, double t) { return ts_diffusion_gs(std::hypot(x, y), t, 0.0, k, 2); };
    // (r_p, t) = (1.3, 0.7)
    CHECK(std::abs(heat_residual(diff, 1.3, 0.0, 0.7, k, h)) <= 1e-5);
    CHECK(std::abs(heat_residual(diff, 0.6, -0.8, 0.2, k, h)) <= 1e-5);

    const double c = 2.0;
    auto wave = [&](double x, double y, double t) { return ts_wave_gs(std::hypot(x, y), t, 0.0, c, 1.0, 0.5, 2); };
    // (r_p, t) = (0.9, 0.4)
    CHECK(std::abs(wave_residual(wave, 0.9, 0.0, 0.4, c, h)) <= 1e-5);
    CHECK(std::abs(wave_residual(wave, 0.3, 0.5, 1.1, c, h)) <= 1e-5);
}

TEST_CASE("3D time-space kernels: radial Laplacian u'' + 2u'/r") {
    constexpr double h = 1e-4;
    const double k = 0.5, c = 1.5;
    for (double r : {0.7, 1.9, 3.4}) {
        for (double t : {0.1, 0.8}) {
            auto ur = [&](double s) { return ts_diffusion_gs(s, t, 0.0, k, 3); };
            auto ut = [&](double s) { return ts_diffusion_gs(r, s, 0.0, k, 3); };
            const double lap = oracle::d2(ur, r, h) + 2.0 * oracle::d1(ur, r, h) / r;
            CHECK(std::abs(lap - oracle::d1(ut, t, h) / k) <= 1e-5);

            auto wr = [&](double s) { return ts_wave_gs(s, t, 0.0, c, 0.3, -1.2, 3); };
            auto wt = [&](double s) { return ts_wave_gs(r, s, 0.0, c, 0.3, -1.2, 3); };
            const double wl = oracle::d2(wr, r, h) + 2.0 * oracle::d1(wr, r, h) / r;
            CHECK(std::abs(wl - oracle::d2(wt, t, h) / (c * c)) <= 1e-5);
        }
    }
}

TEST_CASE("time-space multiplier") {
    const double base = diffusion_fundamental(0.7, 0.0, 1.5, 1.0, 2);
    CHECK(ts_rbf([](double, double, double) { return 1.0; }, 0.7, 0.0, 1.5, base) == base);
    CHECK(ts_rbf({}, 0.7, 0.0, 1.5, base) == base);
    CHECK(ts_rbf([](double, double, double) { return 0.0; }, 0.7, 0.0, 1.5, base) == 0.0);
    // h = t_j - t cancels the (t_j - t)^{-1} power in 2D
    const TimeSpaceMultiplier lag = [](double, double t, double tj) { return tj - t; };
    CHECK(ts_rbf(lag, 0.7, 0.0, 1.5, base) == doctest::Approx(std::exp(-0.49 / 6.0)));

    const KernelSpec weighted = DiffusionFundamental{1.0, 2, lag};
    CHECK(time_space_value(weighted, 0.7, 0.0, 1.5) == doctest::Approx(std::exp(-0.49 / 6.0)));
    CHECK(time_space_value(TimeSpaceWave{2.0, 1.0, 0.0, 2}, 0.0, 0.5, 0.5) == 1.0);
    CHECK(time_space_value(TimeSpaceDiffusion{1.0, 2}, 0.0, 1.0, 0.0) == doctest::Approx(std::exp(-1.0)));
}
