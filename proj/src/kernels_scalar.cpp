#include "srlq/kernels.hpp"

// Reference kernels. Plain loops, no explicit vectorization; these define
// the semantics the SIMD variants are tested against.

namespace srlq::kernels {
namespace {

void matmul(const double* a, const double* b, double* c, int m, int k, int n) {
    for (int i = 0; i < m; ++i) {
        double* ci = c + static_cast<long>(i) * n;
        for (int j = 0; j < n; ++j) ci[j] = 0.0;
        for (int l = 0; l < k; ++l) {
            const double ail = a[static_cast<long>(i) * k + l];
            const double* bl = b + static_cast<long>(l) * n;
            for (int j = 0; j < n; ++j) ci[j] += ail * bl[j];
        }
    }
}

void matmul_tn(const double* a, const double* b, double* c, int m, int k, int n) {
    for (int i = 0; i < m; ++i) {
        double* ci = c + static_cast<long>(i) * n;
        for (int j = 0; j < n; ++j) ci[j] = 0.0;
        for (int l = 0; l < k; ++l) {
            const double ali = a[static_cast<long>(l) * m + i];
            const double* bl = b + static_cast<long>(l) * n;
            for (int j = 0; j < n; ++j) ci[j] += ali * bl[j];
        }
    }
}

double dot(const double* x, const double* y, int n) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void matmul_nt(const double* a, const double* b, double* c, int m, int k, int n) {
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            c[static_cast<long>(i) * n + j] =
                dot(a + static_cast<long>(i) * k, b + static_cast<long>(j) * k, k);
}

void matvec(const double* a, const double* x, double* y, int m, int n) {
    for (int i = 0; i < m; ++i) y[i] = dot(a + static_cast<long>(i) * n, x, n);
}

void axpy(double alpha, const double* x, double* y, int n) {
    for (int i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double quad_form(const double* s, const double* x, int n) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += x[i] * dot(s + static_cast<long>(i) * n, x, n);
    return acc;
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend backend{"scalar", matmul, matmul_tn, matmul_nt,
                                 matvec,   dot,    axpy,      quad_form};
    return backend;
}

}  // namespace srlq::kernels
