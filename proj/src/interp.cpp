#include "rbfkit/interp.hpp"

#include <cmath>

#include "rbfkit/error.hpp"

namespace rbfkit {

DenseMatrix radial_collocation_matrix(const KernelSpec& kernel, const KnotSet1d& nodes) {
    const std::size_t n = nodes.size();
    DenseMatrix a(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) a(i, j) = radial_value(kernel, std::abs(nodes[i] - nodes[j]));
    }
    return a;
}

RadialInterpolant::RadialInterpolant(KernelSpec kernel, KnotSet1d nodes, std::span<const double> values)
    : kernel_(std::move(kernel)), nodes_(std::move(nodes)) {
    validate(kernel_);
    if (!is_radial(kernel_)) throw StructureError("RadialInterpolant: kernel must be radial");
    if (values.size() != nodes_.size()) throw ShapeError("RadialInterpolant: one value per node required");
    const DenseMatrix a = radial_collocation_matrix(kernel_, nodes_);
    weights_ = lu_solve(a, DenseVector(std::vector<double>(values.begin(), values.end())));
    condition_ = rbfkit::condition_number(a);
}

double RadialInterpolant::operator()(double x) const {
    double s = 0.0;
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
        s += weights_[j] * radial_value(kernel_, std::abs(x - nodes_[j]));
    }
    return s;
}

}  // namespace rbfkit
