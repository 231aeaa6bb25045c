#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "dersyz/field.hpp"

namespace dersyz {

/// Dense row-major matrix over a prime field. Every stored entry is reduced.
class Matrix {
public:
    using value_type = PrimeField::value_type;

    Matrix() = default;
    Matrix(PrimeField field, std::size_t rows, std::size_t cols);

    static Matrix zero(PrimeField field, std::size_t rows, std::size_t cols)
    {
        return Matrix(field, rows, cols);
    }
    static Matrix identity(PrimeField field, std::size_t n);
    /// Integer entries, reduced into the field.
    static Matrix from_rows(PrimeField field,
                            std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows);
    static Matrix column_vector(PrimeField field, const std::vector<value_type>& entries);

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    value_type operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    value_type& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, long long v) { data_[r * cols_ + c] = field_.reduce(v); }
    const std::vector<value_type>& data() const { return data_; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix scaled(value_type k) const;
    Matrix& operator+=(const Matrix& rhs);

    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
    Matrix column(std::size_t c) const { return block(0, c, rows_, 1); }
    Matrix select_columns(const std::vector<std::size_t>& cols) const;
    Matrix select_rows(const std::vector<std::size_t>& rows) const;

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix block_diag(const Matrix& a, const Matrix& b);

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& o) const
    {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    /// Column-major flattening, the layout used for linear systems in
    /// matrix unknowns.
    std::vector<value_type> vec() const;

private:
    PrimeField field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace dersyz
