#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dersyz/matrix.hpp"
#include "dersyz/polynomial.hpp"

namespace dersyz {

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form. Pivot = first nonzero entry in column order.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Columns span {v : A v = 0}; one column per free variable, ascending.
Matrix kernel_basis(const Matrix& a);

struct SolveResult {
    std::optional<Matrix> particular;  ///< A X = B, free variables set to zero
    Matrix kernel;                     ///< kernel_basis(A)
};

/// Solves A X = B. An unsolvable system is reported through an empty
/// `particular`, not an exception.
SolveResult solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> solve_particular(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& a);

/// Independent columns of `m` (the pivot columns), in order.
Matrix column_space(const Matrix& m);
/// Indices of standard basis vectors that extend the column span of `u`
/// (assumed independent) to the whole space, chosen greedily in order.
std::vector<std::size_t> complement_indices(const Matrix& u);

/// Characteristic polynomial det(xI - A) via Hessenberg reduction.
Polynomial char_poly(const Matrix& a);
/// Evaluates f(A) for square A.
Matrix evaluate(const Polynomial& f, const Matrix& a);

/// Irreducible factorization of the characteristic polynomial, sorted by
/// (degree, coefficients). `seed` drives equal-degree splitting.
std::vector<std::pair<Polynomial, int>> factor_char_poly(const Matrix& a, std::uint64_t seed = 0);

}  // namespace dersyz
