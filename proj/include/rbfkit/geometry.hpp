#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rbfkit {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Axis-aligned ellipse, semi-major axis along x.
struct Ellipse {
    Point2 center;
    double semi_major_a = 1.0;
    double semi_minor_b = 1.0;

    Ellipse() = default;
    /// Throws ShapeError unless both semi-axes are positive.
    Ellipse(Point2 c, double a, double b);

    [[nodiscard]] bool contains_strictly(Point2 p) const;
};

/// Benchmark domain for the Burger-like problem: a=2, b=1, shifted to (3, 0)
/// so that the whole closure stays in x >= 1.
[[nodiscard]] Ellipse benchmark_ellipse();

/// Ordered 2D knots, pairwise distinct.
class KnotSet {
public:
    KnotSet() = default;
    /// Throws ShapeError if two knots coincide.
    explicit KnotSet(std::vector<Point2> points);

    [[nodiscard]] std::size_t size() const { return points_.size(); }
    [[nodiscard]] bool empty() const { return points_.empty(); }
    [[nodiscard]] const Point2& operator[](std::size_t i) const { return points_[i]; }
    [[nodiscard]] std::span<const Point2> points() const { return points_; }
    [[nodiscard]] auto begin() const { return points_.begin(); }
    [[nodiscard]] auto end() const { return points_.end(); }

private:
    std::vector<Point2> points_;
};

/// Ordered 1D knots, pairwise distinct.
class KnotSet1d {
public:
    KnotSet1d() = default;
    explicit KnotSet1d(std::vector<double> xs);

    [[nodiscard]] std::size_t size() const { return xs_.size(); }
    [[nodiscard]] bool empty() const { return xs_.empty(); }
    [[nodiscard]] double operator[](std::size_t i) const { return xs_[i]; }
    [[nodiscard]] std::span<const double> values() const { return xs_; }

private:
    std::vector<double> xs_;
};

/// n knots at parameter angles 2*pi*j/n, j = 0..n-1, starting at (cx + a, cy).
[[nodiscard]] KnotSet ellipse_boundary_knots(const Ellipse& e, std::size_t n);

/// n uniformly spaced knots on [x0, x1]. The upper half is mirrored from the
/// lower half so that x_i + x_{n-1-i} = x0 + x1 up to one rounding.
[[nodiscard]] KnotSet1d symmetric_grid_1d(std::size_t n, double x0, double x1);

// Mirror-sum test x_i + x_{n-1-i} == x_0 + x_{n-1} (within tol), per coordinate.
[[nodiscard]] bool is_symmetric_spacing(std::span<const double> xs, double tol);
[[nodiscard]] bool is_symmetric_spacing(const KnotSet1d& ks, double tol);
[[nodiscard]] bool is_symmetric_spacing(const KnotSet& ks, double tol);

}  // namespace rbfkit
