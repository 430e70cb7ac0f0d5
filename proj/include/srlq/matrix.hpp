#pragma once

#include <cassert>
#include <initializer_list>
#include <span>
#include <vector>

namespace srlq {

using Vector = std::vector<double>;

// Small dense row-major matrix. Arithmetic routes through the dispatched
// kernel backend (see kernels.hpp).
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0.0) {
        assert(rows >= 0 && cols >= 0);
    }
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    // n x n matrix with value on the diagonal.
    static Matrix diagonal(int n, double value);
    // Column vector view of a Vector.
    static Matrix column(const Vector& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return data_.empty(); }
    bool square() const { return rows_ == cols_; }

    double& operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[static_cast<size_t>(i) * cols_ + j];
    }
    double operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    const double* row(int i) const { return data_.data() + static_cast<size_t>(i) * cols_; }
    double* row(int i) { return data_.data() + static_cast<size_t>(i) * cols_; }

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(double scale);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(double scale, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);
// a^T * b
Matrix mul_tn(const Matrix& a, const Matrix& b);
// a * b^T
Matrix mul_nt(const Matrix& a, const Matrix& b);
// b^T * s * b
Matrix congruence(const Matrix& s, const Matrix& b);

Vector matvec(const Matrix& a, const Vector& x);
double dot(const Vector& x, const Vector& y);
// x^T * s * x
double quad_form(const Matrix& s, const Vector& x);

void symmetrize(Matrix& a);
double max_abs(const Matrix& a);
double max_asymmetry(const Matrix& a);
// Maximum absolute row sum.
double inf_norm(const Matrix& a);

Matrix hstack(std::span<const Matrix> blocks);
Matrix vstack(std::span<const Matrix> blocks);
// Rows [begin, begin+count) of a.
Matrix row_block(const Matrix& a, int begin, int count);
// Columns [begin, begin+count) of a.
Matrix col_block(const Matrix& a, int begin, int count);
// Writes block into a at (row, col).
void set_block(Matrix& a, int row, int col, const Matrix& block);

}  // namespace srlq
