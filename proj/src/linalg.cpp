#include "dersyz/linalg.hpp"

#include <algorithm>

namespace dersyz {

RrefResult rref(const Matrix& m)
{
    const PrimeField& F = m.field();
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t sel = row;
        while (sel < r.rows() && r(sel, col) == 0)
            ++sel;
        if (sel == r.rows())
            continue;
        if (sel != row)
            for (std::size_t j = 0; j < r.cols(); ++j)
                std::swap(r.at(sel, j), r.at(row, j));
        auto inv = F.inv(r(row, col));
        for (std::size_t j = col; j < r.cols(); ++j)
            r.at(row, j) = F.mul(r(row, j), inv);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r(i, col) == 0)
                continue;
            auto factor = r(i, col);
            for (std::size_t j = col; j < r.cols(); ++j)
                if (r(row, j))
                    r.at(i, j) = F.sub(r(i, j), F.mul(factor, r(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m)
{
    if (m.empty())
        return 0;
    return rref(m).rank();
}

Matrix kernel_basis(const Matrix& a)
{
    const PrimeField& F = a.field();
    auto rr = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : rr.pivots)
        is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    Matrix k(F, a.cols(), free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        k.at(free_cols[f], f) = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            k.at(rr.pivots[i], f) = F.neg(rr.reduced(i, free_cols[f]));
    }
    return k;
}

std::optional<Matrix> solve_particular(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw ArgumentError("solve: row count mismatch between A and B");
    const PrimeField& F = a.field();
    auto rr = rref(Matrix::hstack(a, b));
    Matrix x(F, a.cols(), b.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        std::size_t c = rr.pivots[i];
        if (c >= a.cols())
            return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(c, j) = rr.reduced(i, a.cols() + j);
    }
    return x;
}

SolveResult solve(const Matrix& a, const Matrix& b)
{
    return {solve_particular(a, b), kernel_basis(a)};
}

std::optional<Matrix> inverse(const Matrix& a)
{
    if (a.rows() != a.cols())
        throw ArgumentError("inverse of a non-square matrix");
    if (a.rows() == 0)
        return a;
    auto rr = rref(Matrix::hstack(a, Matrix::identity(a.field(), a.rows())));
    if (rr.rank() < a.rows() || rr.pivots[a.rows() - 1] >= a.cols())
        return std::nullopt;
    return rr.reduced.block(0, a.cols(), a.rows(), a.rows());
}

Matrix column_space(const Matrix& m)
{
    if (m.empty())
        return Matrix(m.field(), m.rows(), 0);
    return m.select_columns(rref(m).pivots);
}

std::vector<std::size_t> complement_indices(const Matrix& u)
{
    Matrix ext = Matrix::hstack(u, Matrix::identity(u.field(), u.rows()));
    std::vector<std::size_t> out;
    for (auto c : rref(ext).pivots)
        if (c >= u.cols())
            out.push_back(c - u.cols());
    return out;
}

Polynomial char_poly(const Matrix& a)
{
    if (a.rows() != a.cols())
        throw ArgumentError("characteristic polynomial of a non-square matrix");
    const PrimeField& F = a.field();
    const std::size_t n = a.rows();
    Matrix h = a;
    // Similarity reduction to upper Hessenberg form.
    for (std::size_t j = 0; j + 2 <= n; ++j) {
        std::size_t sel = j + 1;
        while (sel < n && h(sel, j) == 0)
            ++sel;
        if (sel == n)
            continue;
        if (sel != j + 1) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(h.at(sel, c), h.at(j + 1, c));
            for (std::size_t r = 0; r < n; ++r)
                std::swap(h.at(r, sel), h.at(r, j + 1));
        }
        auto inv = F.inv(h(j + 1, j));
        for (std::size_t k = j + 2; k < n; ++k) {
            auto u = F.mul(h(k, j), inv);
            if (!u)
                continue;
            for (std::size_t c = 0; c < n; ++c)
                h.at(k, c) = F.sub(h(k, c), F.mul(u, h(j + 1, c)));
            for (std::size_t r = 0; r < n; ++r)
                h.at(r, j + 1) = F.add(h(r, j + 1), F.mul(u, h(r, k)));
        }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
    std::vector<Polynomial> p;
    p.push_back(Polynomial::constant(F, 1));
    for (std::size_t m = 0; m < n; ++m) {
        Polynomial next = (Polynomial::x(F) - Polynomial::constant(F, h(m, m))) * p[m];
        PrimeField::value_type prod = 1;
        for (std::size_t i = m; i-- > 0;) {
            prod = F.mul(prod, h(i + 1, i));
            if (!prod)
                break;
            auto coef = F.mul(h(i, m), prod);
            if (coef)
                next = next - p[i].scaled(coef);
        }
        p.push_back(std::move(next));
    }
    return p[n];
}

Matrix evaluate(const Polynomial& f, const Matrix& a)
{
    Matrix result = Matrix::zero(a.field(), a.rows(), a.cols());
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        result = result * a;
        for (std::size_t d = 0; d < a.rows(); ++d)
            result.at(d, d) = a.field().add(result(d, d), f.coeffs()[i]);
    }
    return result;
}

std::vector<std::pair<Polynomial, int>> factor_char_poly(const Matrix& a, std::uint64_t seed)
{
    if (a.rows() != a.cols())
        throw ArgumentError("factor_char_poly requires a square matrix");
    if (a.rows() == 0)
        return {};
    std::mt19937_64 rng(seed);
    return factor(char_poly(a), rng);
}

}  // namespace dersyz
