#include "srlq/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "srlq/kernels.hpp"

namespace srlq {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("Matrix: ragged initializer list");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(int n, double value) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = value;
    return m;
}

Matrix Matrix::column(const Vector& v) {
    Matrix m(static_cast<int>(v.size()), 1);
    std::copy(v.begin(), v.end(), m.data());
    return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    kernels::active().axpy(1.0, other.data(), data(), static_cast<int>(data_.size()));
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    kernels::active().axpy(-1.0, other.data(), data(), static_cast<int>(data_.size()));
    return *this;
}

Matrix& Matrix::operator*=(double scale) {
    for (auto& v : data_) v *= scale;
    return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(double scale, Matrix a) { return a *= scale; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols() == b.rows());
    Matrix c(a.rows(), b.cols());
    kernels::active().matmul(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
    return c;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

Matrix mul_tn(const Matrix& a, const Matrix& b) {
    assert(a.rows() == b.rows());
    Matrix c(a.cols(), b.cols());
    kernels::active().matmul_tn(a.data(), b.data(), c.data(), a.cols(), a.rows(), b.cols());
    return c;
}

Matrix mul_nt(const Matrix& a, const Matrix& b) {
    assert(a.cols() == b.cols());
    Matrix c(a.rows(), b.rows());
    kernels::active().matmul_nt(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.rows());
    return c;
}

Matrix congruence(const Matrix& s, const Matrix& b) {
    assert(s.rows() == s.cols() && s.cols() == b.rows());
    return mul_tn(b, s * b);
}

Vector matvec(const Matrix& a, const Vector& x) {
    assert(a.cols() == static_cast<int>(x.size()));
    Vector y(a.rows());
    kernels::active().matvec(a.data(), x.data(), y.data(), a.rows(), a.cols());
    return y;
}

double dot(const Vector& x, const Vector& y) {
    assert(x.size() == y.size());
    return kernels::active().dot(x.data(), y.data(), static_cast<int>(x.size()));
}

double quad_form(const Matrix& s, const Vector& x) {
    assert(s.square() && s.rows() == static_cast<int>(x.size()));
    return kernels::active().quad_form(s.data(), x.data(), s.rows());
}

void symmetrize(Matrix& a) {
    assert(a.square());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) {
            const double v = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = v;
            a(j, i) = v;
        }
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

double max_asymmetry(const Matrix& a) {
    assert(a.square());
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - a(j, i)));
    return m;
}

double inf_norm(const Matrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i) {
        double row = 0.0;
        for (int j = 0; j < a.cols(); ++j) row += std::abs(a(i, j));
        m = std::max(m, row);
    }
    return m;
}

Matrix hstack(std::span<const Matrix> blocks) {
    if (blocks.empty()) return {};
    int cols = 0;
    for (const auto& b : blocks) {
        assert(b.rows() == blocks.front().rows());
        cols += b.cols();
    }
    Matrix out(blocks.front().rows(), cols);
    int at = 0;
    for (const auto& b : blocks) {
        set_block(out, 0, at, b);
        at += b.cols();
    }
    return out;
}

Matrix vstack(std::span<const Matrix> blocks) {
    if (blocks.empty()) return {};
    int rows = 0;
    for (const auto& b : blocks) {
        assert(b.cols() == blocks.front().cols());
        rows += b.rows();
    }
    Matrix out(rows, blocks.front().cols());
    int at = 0;
    for (const auto& b : blocks) {
        set_block(out, at, 0, b);
        at += b.rows();
    }
    return out;
}

Matrix row_block(const Matrix& a, int begin, int count) {
    assert(begin >= 0 && count >= 0 && begin + count <= a.rows());
    Matrix out(count, a.cols());
    std::copy(a.row(begin), a.row(begin) + static_cast<size_t>(count) * a.cols(), out.data());
    return out;
}

Matrix col_block(const Matrix& a, int begin, int count) {
    assert(begin >= 0 && count >= 0 && begin + count <= a.cols());
    Matrix out(a.rows(), count);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < count; ++j) out(i, j) = a(i, begin + j);
    return out;
}

void set_block(Matrix& a, int row, int col, const Matrix& block) {
    assert(row + block.rows() <= a.rows() && col + block.cols() <= a.cols());
    for (int i = 0; i < block.rows(); ++i)
        std::copy(block.row(i), block.row(i) + block.cols(), a.row(row + i) + col);
}

}  // namespace srlq
