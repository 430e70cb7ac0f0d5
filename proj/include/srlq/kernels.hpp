#pragma once

#include <string_view>
#include <vector>

namespace srlq::kernels {

// Dense double-precision kernels over row-major storage. Every entry point
// exists in a scalar reference form and, on x86-64 with AVX2, a vectorized
// form. The two are equivalence-tested against each other; callers go
// through active() and get whichever backend the running CPU supports.
//
// Pointer arguments never alias.
struct Backend {
    const char* name;

    // c[m x n] = a[m x k] * b[k x n]
    void (*matmul)(const double* a, const double* b, double* c, int m, int k, int n);
    // c[m x n] = a^T * b with a stored as [k x m]
    void (*matmul_tn)(const double* a, const double* b, double* c, int m, int k, int n);
    // c[m x n] = a * b^T with b stored as [n x k]
    void (*matmul_nt)(const double* a, const double* b, double* c, int m, int k, int n);
    // y[m] = a[m x n] * x[n]
    void (*matvec)(const double* a, const double* x, double* y, int m, int n);
    double (*dot)(const double* x, const double* y, int n);
    // y += alpha * x
    void (*axpy)(double alpha, const double* x, double* y, int n);
    // x^T * s * x, s[n x n]
    double (*quad_form)(const double* s, const double* x, int n);
};

const Backend& scalar_backend();

// Backend the process is currently dispatched to.
const Backend& active();

// True when AVX2 kernels are compiled in and the CPU supports them.
bool avx2_available();

// Names of all selectable backends ("scalar", possibly "avx2").
std::vector<std::string_view> available_backends();

// Select "auto", "scalar" or "avx2". Returns false (and leaves the dispatch
// unchanged) when the name is unknown or unsupported on this machine. Not
// intended to be raced against in-flight kernel calls.
bool select_backend(std::string_view name);

}  // namespace srlq::kernels
