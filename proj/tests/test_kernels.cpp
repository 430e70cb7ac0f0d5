#include <doctest.h>

#include <random>
#include <string_view>
#include <vector>

#include "oracles.hpp"
#include "srlq/kernels.hpp"
#include "srlq/matrix.hpp"

using namespace srlq;

namespace {

Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

void check_close(const Matrix& a, const Matrix& b, double tol) {
    REQUIRE(a.rows() == b.rows());
    REQUIRE(a.cols() == b.cols());
    const double scale = 1.0 + std::max(max_abs(a), max_abs(b));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) CHECK(std::abs(a(i, j) - b(i, j)) <= tol * scale);
}

struct BackendGuard {
    ~BackendGuard() { kernels::select_backend("auto"); }
};

}  // namespace

TEST_CASE("scalar and avx2 backends agree on every kernel") {
    if (!kernels::avx2_available()) return;  // nothing to compare on this machine
    BackendGuard guard;
    std::mt19937_64 rng(42);

    // Sizes straddle the 4-lane width to exercise remainder paths.
    for (const auto [m, k, n] : {std::array{1, 1, 1}, std::array{2, 3, 5}, std::array{4, 4, 4},
                                 std::array{7, 5, 9}, std::array{12, 13, 11}, std::array{6, 1, 8}}) {
        const Matrix a = random_matrix(rng, m, k);
        const Matrix b = random_matrix(rng, k, n);
        const Matrix bt = random_matrix(rng, n, k);
        const Matrix at = random_matrix(rng, k, m);
        const Matrix s = random_matrix(rng, n, n);
        Vector x(static_cast<size_t>(n));
        for (auto& v : x) v = std::normal_distribution<double>()(rng);
        Vector y(static_cast<size_t>(n), 0.25);

        REQUIRE(kernels::select_backend("scalar"));
        const Matrix prod_s = a * b;
        const Matrix tn_s = mul_tn(at, b);
        const Matrix nt_s = mul_nt(a, bt);
        const Vector mv_s = matvec(s, x);
        const double dot_s = dot(x, mv_s);
        const double quad_s = quad_form(s, x);
        Vector axpy_s = y;
        kernels::active().axpy(0.37, x.data(), axpy_s.data(), n);

        REQUIRE(kernels::select_backend("avx2"));
        const Matrix prod_v = a * b;
        const Matrix tn_v = mul_tn(at, b);
        const Matrix nt_v = mul_nt(a, bt);
        const Vector mv_v = matvec(s, x);
        const double dot_v = dot(x, mv_v);
        const double quad_v = quad_form(s, x);
        Vector axpy_v = y;
        kernels::active().axpy(0.37, x.data(), axpy_v.data(), n);

        check_close(prod_s, prod_v, 1e-13);
        check_close(tn_s, tn_v, 1e-13);
        check_close(nt_s, nt_v, 1e-13);
        for (size_t i = 0; i < mv_s.size(); ++i)
            CHECK(mv_s[i] == doctest::Approx(mv_v[i]).epsilon(1e-12));
        for (size_t i = 0; i < axpy_s.size(); ++i)
            CHECK(axpy_s[i] == doctest::Approx(axpy_v[i]).epsilon(1e-12));
        CHECK(dot_s == doctest::Approx(dot_v).epsilon(1e-12));
        CHECK(quad_s == doctest::Approx(quad_v).epsilon(1e-12));
    }
}

TEST_CASE("active backend matches Eigen products") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 9);
        const int k = 1 + static_cast<int>(rng() % 9);
        const int n = 1 + static_cast<int>(rng() % 9);
        const Matrix a = random_matrix(rng, m, k);
        const Matrix b = random_matrix(rng, k, n);
        const Matrix c = random_matrix(rng, n, k);
        check_close(a * b, test::from_eigen(test::to_eigen(a) * test::to_eigen(b)), 1e-13);
        check_close(mul_tn(a, a),
                    test::from_eigen(test::to_eigen(a).transpose() * test::to_eigen(a)), 1e-13);
        check_close(mul_nt(a, c),
                    test::from_eigen(test::to_eigen(a) * test::to_eigen(c).transpose()), 1e-13);
    }
}

TEST_CASE("congruence and quad_form agree with explicit transposes") {
    std::mt19937_64 rng(11);
    const Matrix s = random_matrix(rng, 6, 6);
    const Matrix b = random_matrix(rng, 6, 3);
    check_close(congruence(s, b), transpose(b) * (s * b), 1e-13);
    Vector x(6);
    for (auto& v : x) v = std::normal_distribution<double>()(rng);
    const Vector sx = matvec(s, x);
    CHECK(quad_form(s, x) == doctest::Approx(dot(x, sx)).epsilon(1e-12));
}

TEST_CASE("axpy accumulates in place") {
    Vector y{1.0, 2.0, 3.0, 4.0, 5.0};
    const Vector x{1.0, 1.0, 1.0, 1.0, 1.0};
    kernels::active().axpy(0.5, x.data(), y.data(), 5);
    for (size_t i = 0; i < y.size(); ++i)
        CHECK(y[i] == doctest::Approx(1.5 + static_cast<double>(i)));
}

TEST_CASE("backend selection falls back gracefully") {
    BackendGuard guard;
    CHECK(kernels::select_backend("scalar"));
    CHECK(std::string_view(kernels::active().name) == "scalar");
    CHECK_FALSE(kernels::select_backend("sse9"));
    CHECK(std::string_view(kernels::active().name) == "scalar");
    CHECK(kernels::select_backend("auto"));
    const auto names = kernels::available_backends();
    REQUIRE(!names.empty());
    CHECK(names.front() == "scalar");
}
