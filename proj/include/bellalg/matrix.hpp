#pragma once

#include "bellalg/error.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace bellalg {

/// Small dense matrix over any ring element type T (T needs +, -, *, ==).
/// Everything in this artifact is at most 4x4, or a block matrix thereof.
template <typename T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw DomainError("ragged matrix initializer");
            for (const auto& v : r)
                data_.push_back(v);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
    const T& at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }
    T& operator()(std::size_t r, std::size_t c) { return at(r, c); }
    const T& operator()(std::size_t r, std::size_t c) const { return at(r, c); }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o, "matrix addition");
        Matrix r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k)
            r.data_[k] = r.data_[k] + o.data_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o, "matrix subtraction");
        Matrix r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k)
            r.data_[k] = r.data_[k] - o.data_[k];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_)
            throw DomainError("matrix product shape mismatch");
        if (cols_ == 0)
            throw DomainError("matrix product with empty inner dimension");
        Matrix r(rows_, o.cols_, data_.front()); // placeholder values, overwritten below
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < o.cols_; ++j) {
                T acc = at(i, 0) * o.at(0, j);
                for (std::size_t k = 1; k < cols_; ++k)
                    acc = acc + at(i, k) * o.at(k, j);
                r.at(i, j) = acc;
            }
        return r;
    }

    /// Elementwise scale by a ring element.
    template <typename S>
    Matrix scaled(const S& c) const {
        Matrix r = *this;
        for (auto& v : r.data_)
            v = v * c;
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_, data_.empty() ? T{} : data_.front());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r.at(j, i) = at(i, j);
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;

    void check_same_shape(const Matrix& o, const char* where) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DomainError(std::string(where) + ": shape mismatch");
    }
};

/// n x n matrix filled with `zero` except `one` on the diagonal.
template <typename T>
Matrix<T> identity_matrix(std::size_t n, const T& zero, const T& one) {
    Matrix<T> m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = one;
    return m;
}

/// Matrix unit with `one` in slot (r, c), zero-based indices.
template <typename T>
Matrix<T> matrix_unit(std::size_t n, std::size_t r, std::size_t c, const T& zero, const T& one) {
    Matrix<T> m(n, n, zero);
    m.at(r, c) = one;
    return m;
}

template <typename T>
bool is_zero_matrix(const Matrix<T>& m, const T& zero) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!(m.at(i, j) == zero))
                return false;
    return true;
}

} // namespace bellalg
