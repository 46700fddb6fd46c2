#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "rbfkit/geometry.hpp"
#include "rbfkit/kernels.hpp"

namespace rbfkit {

class DenseVector {
public:
    DenseVector() = default;
    explicit DenseVector(std::size_t n, double value = 0.0) : v_(n, value) {}
    explicit DenseVector(std::vector<double> v) : v_(std::move(v)) {}
    DenseVector(std::initializer_list<double> v) : v_(v) {}

    [[nodiscard]] std::size_t size() const { return v_.size(); }
    [[nodiscard]] double& operator[](std::size_t i) { return v_[i]; }
    [[nodiscard]] double operator[](std::size_t i) const { return v_[i]; }
    [[nodiscard]] std::span<double> data() { return v_; }
    [[nodiscard]] std::span<const double> data() const { return v_; }
    [[nodiscard]] const std::vector<double>& values() const { return v_; }
    [[nodiscard]] auto begin() const { return v_.begin(); }
    [[nodiscard]] auto end() const { return v_.end(); }

private:
    std::vector<double> v_;
};

/// Column-major dense matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double value = 0.0)
        : rows_(rows), cols_(cols), a_(rows * cols, value) {}

    [[nodiscard]] static DenseMatrix identity(std::size_t n);
    /// Row-major nested initializer, for readability at call sites.
    [[nodiscard]] static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool square() const { return rows_ == cols_; }

    [[nodiscard]] double& operator()(std::size_t i, std::size_t j) { return a_[j * rows_ + i]; }
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return a_[j * rows_ + i]; }

    [[nodiscard]] std::span<double> data() { return a_; }
    [[nodiscard]] std::span<const double> data() const { return a_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> a_;
};

[[nodiscard]] DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
[[nodiscard]] DenseVector operator*(const DenseMatrix& a, const DenseVector& x);

[[nodiscard]] double norm_inf(const DenseVector& v);
/// Maximum absolute column sum.
[[nodiscard]] double norm_1(const DenseMatrix& a);
[[nodiscard]] double max_abs(const DenseMatrix& a);

/// Solves A x = b by LU with partial pivoting. Throws ShapeError on size
/// mismatch and SingularMatrixError on an exactly zero pivot.
[[nodiscard]] DenseVector lu_solve(const DenseMatrix& a, const DenseVector& b);

/// Throws SingularMatrixError like lu_solve.
[[nodiscard]] DenseMatrix inverse(const DenseMatrix& a);

/// ||A||_1 ||A^-1||_1 via the explicit inverse; +inf when A is singular.
[[nodiscard]] double condition_number(const DenseMatrix& a);

/// Contra-identity (exchange) matrix of order n.
[[nodiscard]] DenseMatrix exchange_matrix(std::size_t n);

// a_ij = a_{n-1-i, n-1-j} within tol.
[[nodiscard]] bool is_centrosymmetric(const DenseMatrix& a, double tol);
// a_ij = -a_{n-1-i, n-1-j} within tol.
[[nodiscard]] bool is_skew_centrosymmetric(const DenseMatrix& a, double tol);

enum class CentroParity { even_order, odd_order };

/// Left and right transforms P, Q of the centrosymmetric preconditioner.
///
/// Even order n = 2m:  P = [[I, -J], [J, I]],  Q = [[I, I], [-J, J]].
/// Odd order n = 2m+1 borders both with the middle unit row/column:
///   P = [[I, 0, -J], [0, 1, 0], [J, 0, I]],  Q = [[I, 0, I], [0, 1, 0], [-J, 0, J]].
/// P Q = diag(2I, 2J) (even); P is invertible with P P^T = diag(2I, [1], 2I).
struct CentroTransforms {
    DenseMatrix left;
    DenseMatrix right;
};
[[nodiscard]] CentroTransforms centro_transforms(std::size_t n);

/// P A Q. For centrosymmetric A the result is block diagonal.
[[nodiscard]] DenseMatrix centro_precondition(const DenseMatrix& a);

/// The two diagonal blocks of P A Q for a centrosymmetric A:
///   block_minus = 2 (B - C J)                         (m x m)
///   block_plus  = 2 J (B + C J)                       (m x m, even order)
///              or [[s, 2 q^T], [2 J p, 2 J (B + C J)]] (m+1 x m+1, odd order)
/// where A = [[B, C], [J C J, J B J]] (even) or the bordered analogue with
/// middle row (q^T, s, q^T J) and middle column (p; s; J p).
struct CentroSplit {
    DenseMatrix block_minus;
    DenseMatrix block_plus;
    CentroParity parity = CentroParity::even_order;
};

/// Builds the split directly from the entries of A in O(n^2). Throws
/// StructureError when A is not centrosymmetric (relative tol 1e-10).
[[nodiscard]] CentroSplit centro_split(const DenseMatrix& a);

/// Solves a centrosymmetric system through its two half-size blocks.
/// Throws StructureError or SingularMatrixError.
[[nodiscard]] DenseVector centro_split_solve(const DenseMatrix& a, const DenseVector& b);

/// Entry (i, j) = d^order/dx^order sqrt((x - x_j)^2 + c^2) at x = x_i, order 0..2.
[[nodiscard]] DenseMatrix rbf_derivative_matrix(const Multiquadric& kernel, const KnotSet1d& knots,
                                                int order);

/// Weighting-coefficient matrix mapping nodal values to nodal derivatives of
/// the MQ interpolant: Phi_order * Phi_0^{-1}.
[[nodiscard]] DenseMatrix rbf_differentiation_matrix(const Multiquadric& kernel,
                                                     const KnotSet1d& knots, int order);

struct MatrixEntry {
    std::size_t row = 0;  // 0-based
    std::size_t col = 0;  // 0-based
    double value = 0.0;
};

/// The min(10, rows*cols) largest-magnitude entries, sorted by descending
/// magnitude; ties keep column-major order.
[[nodiscard]] std::vector<MatrixEntry> max_entry_report(const DenseMatrix& a);

}  // namespace rbfkit
