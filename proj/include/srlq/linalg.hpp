#pragma once

#include <optional>
#include <vector>

#include "srlq/matrix.hpp"

namespace srlq::linalg {

// LU decomposition with partial pivoting, stored in place (unit lower /
// upper). singular is set on an exactly zero pivot; near-singular systems
// are caught by the condition estimate instead.
struct LuFactorization {
    Matrix lu;
    std::vector<int> pivots;
    bool singular = false;
};

LuFactorization lu_factor(Matrix a);

// Solves a * x = rhs for all columns of rhs. Requires !fac.singular.
Matrix lu_solve(const LuFactorization& fac, Matrix rhs);

// nullopt when a is exactly singular.
std::optional<Matrix> try_solve(const Matrix& a, const Matrix& rhs);

Matrix inverse(const LuFactorization& fac);

// Infinity-norm condition number ||a||_inf * ||a^-1||_inf computed from the
// explicit inverse (systems here are small). +inf when singular.
double condition_inf(const Matrix& a, const LuFactorization& fac);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> symmetric_eigenvalues(Matrix a);
double min_eigenvalue(const Matrix& symmetric);
double max_eigenvalue(const Matrix& symmetric);

// Largest singular value, via the spectrum of a^T a.
double max_singular_value(const Matrix& a);

}  // namespace srlq::linalg
