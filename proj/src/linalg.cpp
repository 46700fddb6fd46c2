#include "rbfkit/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rbfkit/error.hpp"

namespace rbfkit {
namespace {

using ConstMap = Eigen::Map<const Eigen::MatrixXd>;

ConstMap as_eigen(const DenseMatrix& a) {
    return ConstMap(a.data().data(), static_cast<Eigen::Index>(a.rows()),
                    static_cast<Eigen::Index>(a.cols()));
}

Eigen::PartialPivLU<Eigen::MatrixXd> factorize(const DenseMatrix& a) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(as_eigen(a));
    const auto& packed = lu.matrixLU();
    for (Eigen::Index i = 0; i < packed.rows(); ++i) {
        if (packed(i, i) == 0.0 || !std::isfinite(packed(i, i))) {
            throw SingularMatrixError("matrix is singular to working precision");
        }
    }
    return lu;
}

void require_square(const DenseMatrix& a, const char* what) {
    if (!a.square()) throw ShapeError(std::string(what) + ": matrix must be square");
}

}  // namespace

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
    DenseMatrix m(nr, nc);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != nc) throw ShapeError("from_rows: ragged rows");
        std::size_t j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimensions differ");
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double bkj = b(k, j);
            if (bkj == 0.0) continue;
            for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) += a(i, k) * bkj;
        }
    }
    return c;
}

DenseVector operator*(const DenseMatrix& a, const DenseVector& x) {
    if (a.cols() != x.size()) throw ShapeError("matrix-vector product: size mismatch");
    DenseVector y(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) y[i] += a(i, j) * x[j];
    }
    return y;
}

double norm_inf(const DenseVector& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double norm_1(const DenseMatrix& a) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
        m = std::max(m, s);
    }
    return m;
}

double max_abs(const DenseMatrix& a) {
    double m = 0.0;
    for (double x : a.data()) m = std::max(m, std::abs(x));
    return m;
}

DenseVector lu_solve(const DenseMatrix& a, const DenseVector& b) {
    require_square(a, "lu_solve");
    if (a.rows() != b.size()) throw ShapeError("lu_solve: right-hand side length mismatch");
    if (b.size() == 0) return {};
    const auto lu = factorize(a);
    const Eigen::VectorXd x =
        lu.solve(Eigen::Map<const Eigen::VectorXd>(b.data().data(), static_cast<Eigen::Index>(b.size())));
    if (!x.allFinite()) throw SingularMatrixError("lu_solve: non-finite solution");
    return DenseVector(std::vector<double>(x.data(), x.data() + x.size()));
}

DenseMatrix inverse(const DenseMatrix& a) {
    require_square(a, "inverse");
    DenseMatrix out(a.rows(), a.cols());
    if (a.rows() == 0) return out;
    const auto lu = factorize(a);
    const Eigen::MatrixXd inv = lu.inverse();
    if (!inv.allFinite()) throw SingularMatrixError("inverse: non-finite entries");
    std::copy(inv.data(), inv.data() + inv.size(), out.data().begin());
    return out;
}

double condition_number(const DenseMatrix& a) {
    try {
        return norm_1(a) * norm_1(inverse(a));
    } catch (const SingularMatrixError&) {
        return std::numeric_limits<double>::infinity();
    }
}

DenseMatrix exchange_matrix(std::size_t n) {
    DenseMatrix j(n, n);
    for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = 1.0;
    return j;
}

bool is_centrosymmetric(const DenseMatrix& a, double tol) {
    if (!a.square()) return false;
    const std::size_t n = a.rows();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(a(i, j) - a(n - 1 - i, n - 1 - j)) > tol) return false;
        }
    }
    return true;
}

bool is_skew_centrosymmetric(const DenseMatrix& a, double tol) {
    if (!a.square()) return false;
    const std::size_t n = a.rows();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(a(i, j) + a(n - 1 - i, n - 1 - j)) > tol) return false;
        }
    }
    return true;
}

CentroTransforms centro_transforms(std::size_t n) {
    const std::size_t m = n / 2;
    const std::size_t off = n - m;  // first row/col of the lower block
    DenseMatrix p(n, n), q(n, n);
    for (std::size_t i = 0; i < m; ++i) {
        // P = [[I, -J], [J, I]] (bordered for odd n)
        p(i, i) = 1.0;
        p(i, n - 1 - i) = -1.0;
        p(off + i, m - 1 - i) = 1.0;
        p(off + i, off + i) = 1.0;
        // Q = [[I, I], [-J, J]]
        q(i, i) = 1.0;
        q(i, off + i) = 1.0;
        q(off + i, m - 1 - i) = -1.0;
        q(off + i, n - 1 - i) = 1.0;
    }
    if (n % 2 == 1) {
        p(m, m) = 1.0;
        q(m, m) = 1.0;
    }
    return {std::move(p), std::move(q)};
}

DenseMatrix centro_precondition(const DenseMatrix& a) {
    require_square(a, "centro_precondition");
    const auto t = centro_transforms(a.rows());
    return t.left * a * t.right;
}

CentroSplit centro_split(const DenseMatrix& a) {
    require_square(a, "centro_split");
    const double tol = 1e-10 * std::max(1.0, max_abs(a));
    if (!is_centrosymmetric(a, tol)) throw StructureError("centro_split: matrix is not centrosymmetric");

    const std::size_t n = a.rows();
    const std::size_t m = n / 2;
    const bool odd = n % 2 == 1;
    CentroSplit s;
    s.parity = odd ? CentroParity::odd_order : CentroParity::even_order;
    s.block_minus = DenseMatrix(m, m);
    s.block_plus = DenseMatrix(m + (odd ? 1 : 0), m + (odd ? 1 : 0));
    const std::size_t shift = odd ? 1 : 0;

    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            s.block_minus(i, j) = 2.0 * (a(i, j) - a(i, n - 1 - j));
            s.block_plus(shift + i, shift + j) = 2.0 * (a(m - 1 - i, j) + a(m - 1 - i, n - 1 - j));
        }
    }
    if (odd) {
        s.block_plus(0, 0) = a(m, m);
        for (std::size_t i = 0; i < m; ++i) {
            s.block_plus(0, 1 + i) = 2.0 * a(m, i);
            s.block_plus(1 + i, 0) = 2.0 * a(m - 1 - i, m);
        }
    }
    return s;
}

DenseVector centro_split_solve(const DenseMatrix& a, const DenseVector& b) {
    require_square(a, "centro_split_solve");
    if (a.rows() != b.size()) throw ShapeError("centro_split_solve: right-hand side length mismatch");
    const CentroSplit s = centro_split(a);

    const std::size_t n = a.rows();
    const std::size_t m = n / 2;
    const std::size_t shift = n % 2;
    const std::size_t off = n - m;

    // P b
    DenseVector rhs_minus(m), rhs_plus(m + shift);
    for (std::size_t i = 0; i < m; ++i) {
        rhs_minus[i] = b[i] - b[n - 1 - i];
        rhs_plus[shift + i] = b[m - 1 - i] + b[off + i];
    }
    if (shift) rhs_plus[0] = b[m];

    const DenseVector y_minus = lu_solve(s.block_minus, rhs_minus);
    const DenseVector y_plus = lu_solve(s.block_plus, rhs_plus);

    // x = Q y
    DenseVector x(n);
    for (std::size_t i = 0; i < m; ++i) {
        x[i] = y_minus[i] + y_plus[shift + i];
        x[off + i] = -y_minus[m - 1 - i] + y_plus[shift + m - 1 - i];
    }
    if (shift) x[m] = y_plus[0];
    return x;
}

DenseMatrix rbf_derivative_matrix(const Multiquadric& kernel, const KnotSet1d& knots, int order) {
    if (order < 0 || order > 2) throw ShapeError("rbf_derivative_matrix: order must be 0, 1 or 2");
    validate(KernelSpec{kernel});
    const std::size_t n = knots.size();
    const double c2 = kernel.c * kernel.c;
    DenseMatrix a(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const double d = knots[i] - knots[j];
            const double phi = std::sqrt(d * d + c2);
            switch (order) {
                case 0: a(i, j) = phi; break;
                case 1: a(i, j) = d / phi; break;
                default: a(i, j) = c2 / (phi * phi * phi); break;
            }
        }
    }
    return a;
}

DenseMatrix rbf_differentiation_matrix(const Multiquadric& kernel, const KnotSet1d& knots, int order) {
    return rbf_derivative_matrix(kernel, knots, order) * inverse(rbf_derivative_matrix(kernel, knots, 0));
}

std::vector<MatrixEntry> max_entry_report(const DenseMatrix& a) {
    std::vector<MatrixEntry> entries;
    entries.reserve(a.rows() * a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) entries.push_back({i, j, a(i, j)});
    }
    const std::size_t k = std::min<std::size_t>(10, entries.size());
    std::stable_sort(entries.begin(), entries.end(), [](const MatrixEntry& l, const MatrixEntry& r) {
        return std::abs(l.value) > std::abs(r.value);
    });
    entries.resize(k);
    return entries;
}

}  // namespace rbfkit
