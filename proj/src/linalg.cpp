#include "srlq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "srlq/kernels.hpp"

namespace srlq::linalg {

LuFactorization lu_factor(Matrix a) {
    if (!a.square()) throw std::invalid_argument("lu_factor: matrix must be square");
    const int n = a.rows();
    LuFactorization fac{std::move(a), std::vector<int>(n), false};
    Matrix& m = fac.lu;
    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(m(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(m(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        fac.pivots[k] = p;
        if (p != k)
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
        if (m(k, k) == 0.0) {
            fac.singular = true;
            return fac;
        }
        const double inv_pivot = 1.0 / m(k, k);
        for (int i = k + 1; i < n; ++i) {
            const double f = m(i, k) * inv_pivot;
            m(i, k) = f;
            if (f != 0.0) kernels::active().axpy(-f, m.row(k) + k + 1, m.row(i) + k + 1, n - k - 1);
        }
    }
    return fac;
}

Matrix lu_solve(const LuFactorization& fac, Matrix rhs) {
    if (fac.singular) throw std::invalid_argument("lu_solve: singular factorization");
    const Matrix& m = fac.lu;
    const int n = m.rows();
    if (rhs.rows() != n) throw std::invalid_argument("lu_solve: dimension mismatch");
    const int w = rhs.cols();
    for (int k = 0; k < n; ++k) {
        const int p = fac.pivots[k];
        if (p != k)
            for (int j = 0; j < w; ++j) std::swap(rhs(k, j), rhs(p, j));
    }
    for (int k = 0; k < n; ++k)
        for (int i = k + 1; i < n; ++i)
            if (m(i, k) != 0.0) kernels::active().axpy(-m(i, k), rhs.row(k), rhs.row(i), w);
    for (int k = n - 1; k >= 0; --k) {
        const double inv_pivot = 1.0 / m(k, k);
        for (int j = 0; j < w; ++j) rhs(k, j) *= inv_pivot;
        for (int i = 0; i < k; ++i)
            if (m(i, k) != 0.0) kernels::active().axpy(-m(i, k), rhs.row(k), rhs.row(i), w);
    }
    return rhs;
}

std::optional<Matrix> try_solve(const Matrix& a, const Matrix& rhs) {
    LuFactorization fac = lu_factor(a);
    if (fac.singular) return std::nullopt;
    return lu_solve(fac, rhs);
}

Matrix inverse(const LuFactorization& fac) {
    return lu_solve(fac, Matrix::identity(fac.lu.rows()));
}

double condition_inf(const Matrix& a, const LuFactorization& fac) {
    if (fac.singular) return std::numeric_limits<double>::infinity();
    return inf_norm(a) * inf_norm(inverse(fac));
}

std::vector<double> symmetric_eigenvalues(Matrix a) {
    if (!a.square()) throw std::invalid_argument("symmetric_eigenvalues: matrix must be square");
    const int n = a.rows();
    if (n == 0) return {};
    if (n == 1) return {a(0, 0)};

    const double scale = std::max(1.0, max_abs(a));
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= 1e-15 * scale) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-18 * scale) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double app = a(p, p);
                const double aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    a(r, p) = arp - s * (arq + tau * arp);
                    a(r, q) = arq + s * (arp - tau * arq);
                    a(p, r) = a(r, p);
                    a(q, r) = a(r, q);
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

double min_eigenvalue(const Matrix& symmetric) {
    return symmetric_eigenvalues(symmetric).front();
}

double max_eigenvalue(const Matrix& symmetric) {
    return symmetric_eigenvalues(symmetric).back();
}

double max_singular_value(const Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    Matrix gram = mul_tn(a, a);
    symmetrize(gram);
    return std::sqrt(std::max(0.0, max_eigenvalue(gram)));
}

}  // namespace srlq::linalg
