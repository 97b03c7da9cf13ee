#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

#include "algdef/errors.hpp"

namespace algdef {

/// Dense row-major matrix. Entries are always materialized (rows * cols).
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows_ * cols_)
            throw DimensionMismatch("matrix data length does not match rows*cols");
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& columns)
    {
        Matrix m(rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows)
                throw DimensionMismatch("column length mismatch");
            for (std::size_t r = 0; r < rows; ++r)
                m(r, c) = columns[c][r];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c)
    {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const T& operator()(std::size_t r, std::size_t c) const
    {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<T> column(std::size_t c) const
    {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            out[r] = (*this)(r, c);
        return out;
    }

    const std::vector<T>& data() const { return data_; }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix sum shape mismatch");
        Matrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i)
            out.data_[i] += b.data_[i];
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix difference shape mismatch");
        Matrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i)
            out.data_[i] -= b.data_[i];
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v)
    {
        if (a.cols_ != v.size())
            throw DimensionMismatch("matrix-vector shape mismatch");
        std::vector<T> out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (v[k] != 0)
                    out[i] += a(i, k) * v[k];
        return out;
    }

    friend Matrix operator*(const T& s, const Matrix& a)
    {
        Matrix out = a;
        for (auto& e : out.data_)
            e *= s;
        return out;
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const T& e) { return e == 0; });
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

}  // namespace algdef
