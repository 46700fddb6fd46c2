#include "rbfkit/distance.hpp"

#include <cmath>

#include "rbfkit/error.hpp"

namespace rbfkit {

TimeSpaceMetric::TimeSpaceMetric(TimeSpaceVariant v, double c) : variant(v), wave_speed(c) {
    if (!(c > 0.0)) throw ShapeError("time-space metric: wave speed must be positive");
}

double euclidean(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw ShapeError("euclidean: dimension mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return std::sqrt(s);
}

double euclidean(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

double time_space_distance(const SpaceTimePoint& a, const SpaceTimePoint& b,
                           const TimeSpaceMetric& metric) {
    const double rp = euclidean(a.p, b.p);
    const double cdt = metric.wave_speed * (a.t - b.t);
    switch (metric.variant) {
        case TimeSpaceVariant::plus:
            return std::hypot(rp, cdt);
        case TimeSpaceVariant::cone:
            return std::abs(cdt) > rp ? std::sqrt(cdt * cdt - rp * rp) : 0.0;
        case TimeSpaceVariant::split_minus:
            return rp - cdt;
        case TimeSpaceVariant::split_plus:
            return rp + cdt;
    }
    return rp;
}

double transformed_distance(Point2 a, Point2 b, const PlaneTransform& tr) {
    const double xa = tr.f1(a.x, a.y);
    const double ya = tr.f2(a.x, a.y);
    const double xb = tr.f1(b.x, b.y);
    const double yb = tr.f2(b.x, b.y);
    if (!std::isfinite(xa) || !std::isfinite(ya) || !std::isfinite(xb) || !std::isfinite(yb)) {
        throw DomainError("transformed_distance: transform is not finite at the given points");
    }
    return std::hypot(xa - xb, ya - yb);
}

namespace {

double tricomi_eta(double y, double m) {
    if (y < 0.0) throw DomainError("tricomi transform requires y >= 0");
    const double e = 0.5 * (m + 2.0);
    return std::pow(y, e) / e;
}

}  // namespace

PlaneTransform tricomi_transform(double m) {
    if (!(m > -2.0)) throw ShapeError("tricomi_transform: m must exceed -2");
    return PlaneTransform{
        [](double x, double) { return x; },
        [m](double, double y) { return tricomi_eta(y, m); },
    };
}

TricomiDistances tricomi_distances(Point2 a, Point2 b, double m) {
    if (!(m > -2.0)) throw DomainError("tricomi_distances: m must exceed -2");
    const double dx = a.x - b.x;
    const double ea = tricomi_eta(a.y, m);
    const double eb = tricomi_eta(b.y, m);
    TricomiDistances d;
    d.r1 = std::hypot(dx, ea - eb);
    d.r2 = std::hypot(dx, ea + eb);
    if (d.r2 == 0.0) throw SingularRatioError("tricomi_distances: r2 = 0");
    d.r = d.r1 / d.r2;
    return d;
}

}  // namespace rbfkit
