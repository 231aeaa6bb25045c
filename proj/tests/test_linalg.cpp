#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "dersyz/linalg.hpp"

using namespace dersyz;

namespace {

const PrimeField F2(2);

Matrix random_matrix(PrimeField f, std::size_t r, std::size_t c, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long long> d(0, f.p() - 1);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, d(rng));
    return m;
}

// det(xI - A) by Leibniz expansion over F_p[x]; independent of the
// Hessenberg route.
Polynomial leibniz_char_poly(const Matrix& a)
{
    const PrimeField& F = a.field();
    std::size_t n = a.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial total(F, {});
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        Polynomial term = Polynomial::constant(F, inversions % 2 ? F.p() - 1 : 1);
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial entry = Polynomial::constant(F, F.neg(a(i, perm[i])));
            if (perm[i] == i)
                entry = entry + Polynomial::x(F);
            term = term * entry;
        }
        total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

TEST_CASE("rref examples")
{
    auto empty = rref(Matrix(F2, 0, 0));
    CHECK(empty.rank() == 0);
    CHECK(empty.pivots.empty());

    auto id = rref(Matrix::identity(F2, 3));
    CHECK(id.reduced == Matrix::identity(F2, 3));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

    auto r = rref(Matrix::from_rows(F2, {{1, 1}, {1, 1}}));
    CHECK(r.reduced == Matrix::from_rows(F2, {{1, 1}, {0, 0}}));
    CHECK(r.rank() == 1);
}

TEST_CASE("solve examples")
{
    auto b = Matrix::from_rows(F2, {{1, 0}, {1, 1}});
    auto s = solve(Matrix::identity(F2, 2), b);
    REQUIRE(s.particular);
    CHECK(*s.particular == b);
    CHECK(s.kernel.cols() == 0);

    // Enumerating all four vectors of F_2^2: [0,0] and [1,1] solve x+y=0.
    auto a = Matrix::from_rows(F2, {{1, 1}});
    auto s2 = solve(a, Matrix::from_rows(F2, {{0}}));
    REQUIRE(s2.particular);
    CHECK(*s2.particular == Matrix::from_rows(F2, {{0}, {0}}));
    REQUIRE(s2.kernel.cols() == 1);
    CHECK(s2.kernel == Matrix::from_rows(F2, {{1}, {1}}));

    auto s3 = solve(Matrix::zero(F2, 2, 2), Matrix::from_rows(F2, {{1}, {0}}));
    CHECK_FALSE(s3.particular);

    CHECK_THROWS_AS(solve(Matrix::zero(F2, 2, 2), Matrix::zero(F2, 3, 1)), ArgumentError);
}

TEST_CASE("factor_char_poly examples")
{
    auto z = factor_char_poly(Matrix::zero(F2, 2, 2));
    REQUIRE(z.size() == 1);
    CHECK(z[0].first == Polynomial::x(F2));
    CHECK(z[0].second == 2);

    auto id = factor_char_poly(Matrix::identity(F2, 2));
    REQUIRE(id.size() == 1);
    CHECK(id[0].first == Polynomial(F2, {1, 1}));
    CHECK(id[0].second == 2);

    auto c = factor_char_poly(Matrix::from_rows(F2, {{0, 1}, {1, 1}}));
    REQUIRE(c.size() == 1);
    CHECK(c[0].first == Polynomial(F2, {1, 1, 1}));
    CHECK(c[0].second == 1);
    // no root in F_2
    CHECK(c[0].first.coeff(0) != 0);
    CHECK((1 + 1 + 1) % 2 != 0);

    CHECK_THROWS_AS(factor_char_poly(Matrix::zero(F2, 2, 3)), ArgumentError);
}

TEST_CASE("field construction rejects composites")
{
    CHECK_THROWS_AS(PrimeField(4), ArgumentError);
    CHECK_THROWS_AS(PrimeField(1), ArgumentError);
    CHECK(PrimeField(2147483647ULL).p() == 2147483647u);
}

TEST_CASE("properties over random matrices")
{
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = rng() % 6, c = rng() % 6;
            Matrix m = random_matrix(f, r, c, rng);
            CHECK(rank(m) == rank(m.transpose()));

            Matrix k = kernel_basis(m);
            CHECK(k.cols() == c - rank(m));
            CHECK(rank(k) == k.cols());
            if (r > 0 && k.cols() > 0)
                CHECK((m * k).is_zero());

            Matrix x = random_matrix(f, c, 2, rng);
            Matrix b = m * x;
            auto sol = solve_particular(m, b);
            REQUIRE(sol);
            CHECK(m * *sol == b);
        }
    }
}

TEST_CASE("char poly agrees with Leibniz expansion and factors multiply back")
{
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t n = 1 + rng() % 5;
            Matrix a = random_matrix(f, n, n, rng);
            Polynomial cp = char_poly(a);
            CHECK(cp == leibniz_char_poly(a));
            CHECK(evaluate(cp, a).is_zero());

            Polynomial prod = Polynomial::constant(f, 1);
            for (auto& [fac, m] : factor_char_poly(a, trial)) {
                CHECK(is_irreducible(fac));
                prod = prod * pow(fac, static_cast<std::size_t>(m));
            }
            CHECK(prod == cp);
        }
    }
}

TEST_CASE("factorization of inseparable and high-degree polynomials")
{
    std::mt19937_64 rng(3);
    // (x^2+x+1)^2 (x+1)^3 x^4 over F_2
    Polynomial g(F2, {1, 1, 1});
    Polynomial f = pow(g, 2) * pow(Polynomial(F2, {1, 1}), 3) * pow(Polynomial::x(F2), 4);
    auto fac = factor(f, rng);
    REQUIRE(fac.size() == 3);
    CHECK(fac[0] == std::make_pair(Polynomial::x(F2), 4));
    CHECK(fac[1] == std::make_pair(Polynomial(F2, {1, 1}), 3));
    CHECK(fac[2] == std::make_pair(g, 2));

    PrimeField f3(3);
    // x^9 - x splits into all linear factors over F_3
    Polynomial h = Polynomial::monomial(f3, 9) - Polynomial::x(f3);
    auto hf = factor(h, rng);
    CHECK(hf.size() == 3 + 3);  // 3 linear, 3 irreducible quadratics
    int deg = 0;
    for (auto& [q, m] : hf)
        deg += q.degree() * m;
    CHECK(deg == 9);
}
