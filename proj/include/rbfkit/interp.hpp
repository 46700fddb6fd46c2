#pragma once

#include <span>

#include "rbfkit/geometry.hpp"
#include "rbfkit/kernels.hpp"
#include "rbfkit/linalg.hpp"

namespace rbfkit {

/// Plain (no polynomial tail) 1D radial interpolant s(x) = sum_j w_j phi(|x - x_j|).
class RadialInterpolant {
public:
    /// Throws StructureError for non-radial kernels, ShapeError on size
    /// mismatch and SingularMatrixError if the collocation matrix is singular.
    RadialInterpolant(KernelSpec kernel, KnotSet1d nodes, std::span<const double> values);

    [[nodiscard]] double operator()(double x) const;
    [[nodiscard]] const DenseVector& weights() const { return weights_; }
    [[nodiscard]] double condition_number() const { return condition_; }

private:
    KernelSpec kernel_;
    KnotSet1d nodes_;
    DenseVector weights_;
    double condition_ = 0.0;
};

[[nodiscard]] DenseMatrix radial_collocation_matrix(const KernelSpec& kernel, const KnotSet1d& nodes);

}  // namespace rbfkit
