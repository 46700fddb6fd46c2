#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "rbfkit/error.hpp"
#include "rbfkit/geometry.hpp"
#include "rbfkit/linalg.hpp"

using namespace rbfkit;

namespace {

Eigen::MatrixXd to_eigen(const DenseMatrix& a) {
    return Eigen::Map<const Eigen::MatrixXd>(a.data().data(), static_cast<Eigen::Index>(a.rows()),
                                             static_cast<Eigen::Index>(a.cols()));
}

double cond2(const Eigen::MatrixXd& a) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto& s = svd.singularValues();
    return s(0) / s(s.size() - 1);
}

DenseVector random_vector(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    DenseVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = dist(rng);
    return v;
}

}  // namespace

TEST_CASE("dense LU solve") {
    const auto a = DenseMatrix::from_rows({{2, 1}, {1, 3}});
    const auto x = lu_solve(a, DenseVector{3, 5});
    CHECK(x[0] == doctest::Approx(0.8));
    CHECK(x[1] == doctest::Approx(1.4));

    const auto eye = lu_solve(DenseMatrix::identity(3), DenseVector{1, 2, 3});
    CHECK(eye.values() == std::vector<double>{1, 2, 3});

    CHECK_THROWS_AS((void)lu_solve(DenseMatrix::from_rows({{1, 2}, {2, 4}}), DenseVector{1, 1}),
                    SingularMatrixError);
    CHECK_THROWS_AS((void)lu_solve(DenseMatrix(2, 3), DenseVector{1, 1}), ShapeError);
    CHECK_THROWS_AS((void)lu_solve(DenseMatrix::identity(2), DenseVector{1, 1, 1}), ShapeError);
    CHECK(lu_solve(DenseMatrix(0, 0), DenseVector{}).size() == 0);
}

TEST_CASE("LU residual on random systems") {
    std::mt19937_64 rng(3);
    for (std::size_t n : {1u, 2u, 5u, 17u, 40u}) {
        DenseMatrix a(n, n);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (auto& v : a.data()) v = dist(rng);
        for (std::size_t i = 0; i < n; ++i) a(i, i) += 2.0;
        const auto b = random_vector(n, rng);
        const auto x = lu_solve(a, b);
        const auto r = a * x;
        for (std::size_t i = 0; i < n; ++i) CHECK(r[i] == doctest::Approx(b[i]).epsilon(1e-10));
    }
}

TEST_CASE("condition number") {
    CHECK(condition_number(DenseMatrix::identity(4)) == doctest::Approx(1.0));
    CHECK(condition_number(DenseMatrix::from_rows({{1, 0}, {0, 1000}})) == doctest::Approx(1000.0));
    CHECK(condition_number(DenseMatrix::from_rows({{1, 2}, {2, 4}})) ==
          std::numeric_limits<double>::infinity());
}

TEST_CASE("centrosymmetry detection") {
    const auto c = DenseMatrix::from_rows({{1, 2, 3}, {4, 5, 4}, {3, 2, 1}});
    CHECK(is_centrosymmetric(c, 0.0));
    CHECK_FALSE(is_skew_centrosymmetric(c, 0.0));
    const auto s = DenseMatrix::from_rows({{1, 2}, {-2, -1}});
    CHECK(is_skew_centrosymmetric(s, 0.0));
    CHECK_FALSE(is_centrosymmetric(s, 0.0));
    CHECK(is_centrosymmetric(exchange_matrix(5), 0.0));
    CHECK_FALSE(is_centrosymmetric(DenseMatrix::from_rows({{1, 2}, {3, 4}}), 1e-12));

    const auto j = exchange_matrix(4);
    CHECK(j(0, 3) == 1.0);
    CHECK(j(3, 0) == 1.0);
    CHECK(j(0, 0) == 0.0);
    // J A J = A characterises centrosymmetry
    std::mt19937_64 rng(8);
    const auto a = oracle::random_centrosymmetric(6, rng);
    const auto jaj = exchange_matrix(6) * a * exchange_matrix(6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t k = 0; k < 6; ++k) CHECK(jaj(i, k) == a(i, k));
}

TEST_CASE("centro preconditioner on small cases") {
    const auto two = centro_precondition(DenseMatrix::from_rows({{1, 2}, {2, 1}}));
    CHECK(two(0, 0) == doctest::Approx(-2.0));
    CHECK(two(0, 1) == doctest::Approx(0.0));
    CHECK(two(1, 0) == doctest::Approx(0.0));
    CHECK(two(1, 1) == doctest::Approx(6.0));

    const auto eye = centro_precondition(DenseMatrix::identity(2));
    CHECK(eye(0, 0) == 2.0);
    CHECK(eye(1, 1) == 2.0);
    CHECK(eye(0, 1) == 0.0);

    const auto t = centro_transforms(3);
    CHECK(t.left(1, 1) == 1.0);
    CHECK(t.right(1, 1) == 1.0);
    CHECK(t.left(0, 2) == -1.0);
    CHECK(t.right(2, 0) == -1.0);
}

TEST_CASE("P A Q is block diagonal and matches the split") {
    std::mt19937_64 rng(11);
    for (std::size_t n = 2; n <= 15; ++n) {
        const auto a = oracle::random_centrosymmetric(n, rng);
        const auto paq = centro_precondition(a);
        const std::size_t m = n / 2;
        const std::size_t off = n - m;  // size of the plus block
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const bool top_i = i < m, top_j = j < m;
                if (top_i != top_j) CHECK(std::abs(paq(i, j)) <= 1e-12 * max_abs(paq));
            }
        }
        const auto split = centro_split(a);
        CHECK(split.parity == (n % 2 ? CentroParity::odd_order : CentroParity::even_order));
        REQUIRE(split.block_minus.rows() == m);
        REQUIRE(split.block_plus.rows() == off);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                CHECK(split.block_minus(i, j) == doctest::Approx(paq(i, j)).epsilon(1e-12));
        for (std::size_t i = 0; i < off; ++i)
            for (std::size_t j = 0; j < off; ++j)
                CHECK(split.block_plus(i, j) == doctest::Approx(paq(m + i, m + j)).epsilon(1e-12));
    }
}

TEST_CASE("split solve agrees with plain LU") {
    std::mt19937_64 rng(23);
    for (std::size_t n = 2; n <= 16; ++n) {
        const auto a = oracle::random_centrosymmetric(n, rng);
        const auto b = random_vector(n, rng);
        const auto x_split = centro_split_solve(a, b);
        const auto x_lu = lu_solve(a, b);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(x_split[i] - x_lu[i]) <= 1e-9);
    }
    CHECK_THROWS_AS((void)centro_split(DenseMatrix::from_rows({{1, 2}, {3, 4}})), StructureError);
    CHECK_THROWS_AS((void)centro_split_solve(DenseMatrix::from_rows({{1, 2}, {3, 4}}), DenseVector{1, 1}),
                    StructureError);
    CHECK_THROWS_AS((void)centro_split(DenseMatrix(2, 3)), ShapeError);
}

TEST_CASE("split blocks are no worse conditioned than an SPD centrosymmetric matrix") {
    std::mt19937_64 rng(31);
    for (std::size_t n = 2; n <= 16; n += 2) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto a = oracle::random_spd_centrosymmetric(n, rng);
            const auto split = centro_split(a);
            const double ca = cond2(to_eigen(a));
            CHECK(cond2(to_eigen(split.block_minus)) <= ca * (1.0 + 1e-10));
            CHECK(cond2(to_eigen(split.block_plus)) <= ca * (1.0 + 1e-10));
        }
    }
}

TEST_CASE("MQ derivative matrices on a symmetric grid") {
    const auto knots = symmetric_grid_1d(12, 0.0, 1.0);
    const Multiquadric mq{0.5};
    const auto phi0 = rbf_derivative_matrix(mq, knots, 0);
    const auto phi1 = rbf_derivative_matrix(mq, knots, 1);
    const auto phi2 = rbf_derivative_matrix(mq, knots, 2);
    CHECK(is_centrosymmetric(phi0, 1e-14));
    CHECK(is_skew_centrosymmetric(phi1, 1e-14));
    CHECK(is_centrosymmetric(phi2, 1e-14));
    CHECK(phi0(3, 3) == doctest::Approx(0.5));
    CHECK(phi1(5, 5) == 0.0);
    CHECK(phi2(0, 0) == doctest::Approx(2.0));

    const auto d2 = rbf_differentiation_matrix(mq, knots, 2);
    CHECK(is_centrosymmetric(d2, 1e-6 * max_abs(d2)));
    const auto top = max_entry_report(d2);
    REQUIRE(top.size() == 10);
    for (const auto& e : top) {
        const bool edge_row = e.row <= 1 || e.row >= 10;
        CHECK(edge_row);
    }
    for (std::size_t k = 1; k < top.size(); ++k) CHECK(std::abs(top[k - 1].value) >= std::abs(top[k].value));

    // derivative matrices applied to samples of a smooth function
    DenseVector f(12);
    for (std::size_t i = 0; i < 12; ++i) f[i] = knots[i] * knots[i];
    const auto d1f = rbf_differentiation_matrix(mq, knots, 1) * f;
    for (std::size_t i = 2; i < 10; ++i) CHECK(d1f[i] == doctest::Approx(2.0 * knots[i]).epsilon(1e-3));

    CHECK_THROWS_AS((void)rbf_derivative_matrix(mq, knots, 3), ShapeError);
    CHECK_THROWS_AS((void)rbf_derivative_matrix(Multiquadric{0.0}, knots, 0), ShapeError);
}

TEST_CASE("largest-entry report") {
    const auto a = DenseMatrix::from_rows({{1, 0, 0}, {0, 5, 0}, {0, 0, 2}});
    const auto top = max_entry_report(a);
    REQUIRE(top.size() == 9);
    CHECK(top[0].row == 1);
    CHECK(top[0].col == 1);
    CHECK(top[0].value == 5.0);
    CHECK(top[1].row == 2);
    CHECK(top[2].row == 0);

    const auto ties = max_entry_report(DenseMatrix::from_rows({{-3, 3}, {1, 0}}));
    CHECK(ties[0].row == 0);
    CHECK(ties[0].col == 0);
    CHECK(ties[0].value == -3.0);
    CHECK(ties[1].col == 1);

    CHECK(max_entry_report(DenseMatrix(0, 0)).empty());
    CHECK(max_entry_report(DenseMatrix(5, 5, 1.0)).size() == 10);
}
