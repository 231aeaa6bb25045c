#include "dersyz/matrix.hpp"

#include <ostream>

namespace dersyz {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint64_t p)
{
    if (p < 2 || p > 2147483647ULL || !is_prime(p))
        throw ArgumentError("field modulus must be a prime in [2, 2^31-1], got " + std::to_string(p));
    p_ = static_cast<std::uint32_t>(p);
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const
{
    value_type result = 1 % p_;
    value_type base = a;
    while (e) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

PrimeField::value_type PrimeField::inv(value_type a) const
{
    if (a == 0)
        throw ArgumentError("inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

Matrix Matrix::identity(PrimeField field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(PrimeField field, std::initializer_list<std::initializer_list<long long>> rows)
{
    std::vector<std::vector<long long>> v;
    for (auto& r : rows)
        v.emplace_back(r);
    return from_rows(field, v);
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows)
{
    std::size_t nr = rows.size();
    std::size_t nc = nr ? rows.front().size() : 0;
    Matrix m(field, nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc)
            throw ArgumentError("ragged matrix rows");
        for (std::size_t j = 0; j < nc; ++j)
            m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::column_vector(PrimeField field, const std::vector<value_type>& entries)
{
    Matrix m(field, entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.set(i, 0, entries[i]);
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    if (cols_ != rhs.rows_ || field_ != rhs.field_)
        throw ArgumentError("matrix product dimension mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    const std::uint64_t p = field_.p();
    if (p < (1u << 16)) {
        std::vector<std::uint64_t> acc(rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t k = 0; k < cols_; ++k) {
                std::uint64_t a = data_[i * cols_ + k];
                if (!a)
                    continue;
                const value_type* row = &rhs.data_[k * rhs.cols_];
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    acc[j] += a * row[j];
            }
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.data_[i * rhs.cols_ + j] = static_cast<value_type>(acc[j] % p);
        }
    } else {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                value_type a = data_[i * cols_ + k];
                if (!a)
                    continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    out.data_[i * rhs.cols_ + j] =
                        field_.add(out.data_[i * rhs.cols_ + j], field_.mul(a, rhs.data_[k * rhs.cols_ + j]));
            }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const
{
    Matrix out = *this;
    out += rhs;
    return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_)
        throw ArgumentError("matrix sum dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] = field_.add(data_[i], rhs.data_[i]);
    return *this;
}

Matrix Matrix::operator-(const Matrix& rhs) const
{
    return *this + (-rhs);
}

Matrix Matrix::operator-() const
{
    Matrix out = *this;
    for (auto& x : out.data_)
        x = field_.neg(x);
    return out;
}

Matrix Matrix::scaled(value_type k) const
{
    Matrix out = *this;
    for (auto& x : out.data_)
        x = field_.mul(x, k);
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.data_[j * rows_ + i] = data_[i * cols_ + j];
    return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw ArgumentError("matrix block out of range");
    Matrix out(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            out.data_[i * nc + j] = data_[(r0 + i) * cols_ + c0 + j];
    return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m)
{
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
        throw ArgumentError("matrix set_block out of range");
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j)
            data_[(r0 + i) * cols_ + c0 + j] = m.data_[i * m.cols_ + j];
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const
{
    Matrix out(field_, rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.data_[i * cols.size() + j] = data_[i * cols_ + cols[j]];
    return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const
{
    Matrix out(field_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.data_[i * cols_ + j] = data_[rows[i] * cols_ + j];
    return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_)
        throw ArgumentError("hstack row mismatch");
    Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
    out.set_block(0, 0, a);
    out.set_block(0, a.cols_, b);
    return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.cols_)
        throw ArgumentError("vstack column mismatch");
    Matrix out(a.field_, a.rows_ + b.rows_, a.cols_);
    out.set_block(0, 0, a);
    out.set_block(a.rows_, 0, b);
    return out;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b)
{
    Matrix out(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    out.set_block(0, 0, a);
    out.set_block(a.rows_, a.cols_, b);
    return out;
}

bool Matrix::is_zero() const
{
    for (auto x : data_)
        if (x)
            return false;
    return true;
}

bool Matrix::is_identity() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (data_[i * cols_ + j] != (i == j ? 1u : 0u))
                return false;
    return true;
}

std::vector<Matrix::value_type> Matrix::vec() const
{
    std::vector<value_type> out;
    out.reserve(data_.size());
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i)
            out.push_back(data_[i * cols_ + j]);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m)
{
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? "," : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

}  // namespace dersyz
