#include "rbfkit/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rbfkit/error.hpp"

namespace rbfkit {

Ellipse::Ellipse(Point2 c, double a, double b) : center(c), semi_major_a(a), semi_minor_b(b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw ShapeError("ellipse semi-axes must be positive");
    }
}

bool Ellipse::contains_strictly(Point2 p) const {
    const double u = (p.x - center.x) / semi_major_a;
    const double v = (p.y - center.y) / semi_minor_b;
    return u * u + v * v < 1.0;
}

Ellipse benchmark_ellipse() { return Ellipse({3.0, 0.0}, 2.0, 1.0); }

KnotSet::KnotSet(std::vector<Point2> points) : points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        for (std::size_t j = i + 1; j < points_.size(); ++j) {
            if (points_[i] == points_[j]) {
                throw ShapeError("knots " + std::to_string(i) + " and " + std::to_string(j) +
                                 " coincide");
            }
        }
    }
}

KnotSet1d::KnotSet1d(std::vector<double> xs) : xs_(std::move(xs)) {
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        for (std::size_t j = i + 1; j < xs_.size(); ++j) {
            if (xs_[i] == xs_[j]) {
                throw ShapeError("knots " + std::to_string(i) + " and " + std::to_string(j) +
                                 " coincide");
            }
        }
    }
}

KnotSet ellipse_boundary_knots(const Ellipse& e, std::size_t n) {
    if (n == 0) throw ShapeError("ellipse_boundary_knots: n must be at least 1");
    std::vector<Point2> pts;
    pts.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        pts.push_back({e.center.x + e.semi_major_a * std::cos(theta),
                       e.center.y + e.semi_minor_b * std::sin(theta)});
    }
    return KnotSet(std::move(pts));
}

KnotSet1d symmetric_grid_1d(std::size_t n, double x0, double x1) {
    if (n < 2) throw ShapeError("symmetric_grid_1d: need at least 2 knots");
    if (!(x0 < x1)) throw ShapeError("symmetric_grid_1d: need x0 < x1");
    const double h = (x1 - x0) / static_cast<double>(n - 1);
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        xs[i] = x0 + static_cast<double>(i) * h;
        xs[n - 1 - i] = x1 - static_cast<double>(i) * h;
    }
    if (n % 2 == 1) xs[n / 2] = 0.5 * (x0 + x1);
    return KnotSet1d(std::move(xs));
}

bool is_symmetric_spacing(std::span<const double> xs, double tol) {
    if (xs.empty()) return true;
    const std::size_t n = xs.size();
    const double c = xs[0] + xs[n - 1];
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(xs[i] + xs[n - 1 - i] - c) > tol) return false;
    }
    return true;
}

bool is_symmetric_spacing(const KnotSet1d& ks, double tol) {
    return is_symmetric_spacing(ks.values(), tol);
}

bool is_symmetric_spacing(const KnotSet& ks, double tol) {
    std::vector<double> xs, ys;
    xs.reserve(ks.size());
    ys.reserve(ks.size());
    for (const auto& p : ks) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    return is_symmetric_spacing(xs, tol) && is_symmetric_spacing(ys, tol);
}

}  // namespace rbfkit
