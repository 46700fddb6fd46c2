#pragma once

#include <functional>
#include <span>

#include "rbfkit/geometry.hpp"

namespace rbfkit {

struct SpaceTimePoint {
    Point2 p;
    double t = 0.0;
};

/// Real-valued time-space distance variants. The pure Minkowski form
/// sqrt(r_p^2 - c^2 dt^2) can go complex and is not offered.
enum class TimeSpaceVariant {
    plus,         // sqrt(r_p^2 + c^2 dt^2)
    cone,         // sqrt(c^2 dt^2 - r_p^2) inside the light cone, 0 outside
    split_minus,  // r_p - c dt
    split_plus,   // r_p + c dt
};

struct TimeSpaceMetric {
    TimeSpaceVariant variant = TimeSpaceVariant::plus;
    double wave_speed = 1.0;

    TimeSpaceMetric() = default;
    /// Throws ShapeError unless wave_speed > 0.
    TimeSpaceMetric(TimeSpaceVariant v, double c);
};

/// Change of independent variables (x, y) -> (xi, eta).
struct PlaneTransform {
    std::function<double(double, double)> f1;
    std::function<double(double, double)> f2;
};

/// Throws ShapeError on dimension mismatch.
[[nodiscard]] double euclidean(std::span<const double> a, std::span<const double> b);
[[nodiscard]] double euclidean(Point2 a, Point2 b);

/// dt = t_a - t_b, r_p = euclidean(a.p, b.p).
[[nodiscard]] double time_space_distance(const SpaceTimePoint& a, const SpaceTimePoint& b,
                                         const TimeSpaceMetric& metric);

/// Euclidean distance between the images of a and b under tr. Throws
/// DomainError if either map yields a non-finite value.
[[nodiscard]] double transformed_distance(Point2 a, Point2 b, const PlaneTransform& tr);

/// xi = x, eta = 2/(m+2) * y^((m+2)/2): maps y^m u_xx + u_yy = 0 onto the
/// Laplacian on y >= 0. Throws ShapeError unless m > -2; the returned maps
/// throw DomainError for y < 0.
[[nodiscard]] PlaneTransform tricomi_transform(double m);

struct TricomiDistances {
    double r1 = 0.0;  // difference of the eta images
    double r2 = 0.0;  // sum of the eta images (reflection through y = 0)
    double r = 0.0;   // r1 / r2, in [0, 1]
};

/// Throws DomainError for y < 0 or m <= -2, SingularRatioError when r2 = 0.
[[nodiscard]] TricomiDistances tricomi_distances(Point2 a, Point2 b, double m);

}  // namespace rbfkit
