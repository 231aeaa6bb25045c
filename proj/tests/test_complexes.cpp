#include <random>

#include "doctest.h"
#include "dersyz/complexes.hpp"
#include "dersyz/corpus.hpp"
#include "dersyz/decompose.hpp"
#include "dersyz/linalg.hpp"

using namespace dersyz;

namespace {

// Nonzero non-invertible endomorphism of P over the dual numbers (multiplication by a).
ModuleHom radical_endo(const Representation& p)
{
    for (const auto& f : hom_basis(p, p))
        if (!f.is_zero() && !f.is_iso())
            return f;
    FAIL("no radical endomorphism");
    return {};
}

// P --a--> P --a--> ... --a--> P in degrees top..0.
BoundedComplex dual_numbers_chain(int top, AlgebraPtr alg = corpus::dual_numbers())
{
    Representation p = projective(alg, 0);
    ModuleHom a = radical_endo(p);
    std::vector<Representation> terms(static_cast<std::size_t>(top + 1), p);
    std::vector<ModuleHom> diffs(static_cast<std::size_t>(top), a);
    return BoundedComplex(alg, 0, terms, diffs);
}

ChainMap random_chain_map(const BoundedComplex& x, const BoundedComplex& y, std::mt19937_64& rng)
{
    HomComplexBasis b = hom_complex_basis(x, y, 0);
    if (b.size() == 0)
        return ChainMap::zero(x, y);
    Matrix k = kernel_basis(hom_complex_differential(x, y, b));
    const PrimeField& F = x.algebra()->field();
    Matrix coeffs = Matrix::zero(F, b.size(), 1);
    for (std::size_t j = 0; j < k.cols(); ++j) {
        PrimeField::value_type c = rng() % F.p();
        for (std::size_t i = 0; i < b.size(); ++i)
            coeffs.at(i, 0) = F.add(coeffs.at(i, 0), F.mul(c, k.at(i, j)));
    }
    return ChainMap(x, y, b.combine(coeffs));
}

// Rank of H_i(f) from cycles and boundaries, using only total matrices.
std::size_t induced_rank(const ChainMap& f, int i)
{
    const BoundedComplex& x = f.source();
    const BoundedComplex& y = f.target();
    if (x.term(i).is_zero() || y.term(i).is_zero())
        return 0;
    Matrix z = kernel_basis(x.differential(i).total());
    Matrix bnd = column_space(y.differential(i + 1).total());
    Matrix fz = f.component(i).total() * z;
    Matrix both = bnd.cols() ? Matrix::hstack(fz, bnd) : fz;
    return rank(both) - rank(bnd);
}

bool differentials_square_to_zero(const BoundedComplex& x)
{
    for (int i = x.lo(); i <= x.hi() + 1; ++i)
        if (!(x.differential(i - 1) * x.differential(i)).is_zero())
            return false;
    return true;
}

}  // namespace

TEST_CASE("shift moves degrees and flips signs")
{
    auto alg = corpus::dual_numbers();
    Representation s = simple(alg, 0);
    BoundedComplex m = BoundedComplex::concentrated(s, 0);
    BoundedComplex m3 = shift(m, 3);
    CHECK(m3.lo() == 3);
    CHECK(m3.hi() == 3);
    CHECK(m3.term(3) == s);
    CHECK(m3.term(0).is_zero());

    BoundedComplex x = dual_numbers_chain(2);
    BoundedComplex x1 = shift(x, 1);
    CHECK(x1.lo() == 1);
    CHECK((x1.differential(2) + x.differential(1)).is_zero());
    BoundedComplex back = shift(shift(x, 2), -2);
    CHECK(back.lo() == x.lo());
    for (int i = x.lo(); i <= x.hi(); ++i)
        CHECK((back.differential(i) - x.differential(i)).is_zero());
    for (int m0 = -2; m0 <= 2; ++m0)
        for (int i = -3; i <= 5; ++i)
            CHECK(homology_dim(shift(x, m0), i) == homology_dim(x, i - m0));
}

TEST_CASE("truncations")
{
    BoundedComplex x = dual_numbers_chain(3);
    BoundedComplex mid = truncate(x, 1, 2);
    CHECK(mid.lo() == 1);
    CHECK(mid.hi() == 2);
    CHECK((mid.differential(2) - x.differential(2)).is_zero());
    CHECK(mid.term(0).is_zero());
    BoundedComplex low = truncate(x, kMinusInfinity, 1);
    CHECK(low.lo() == 0);
    CHECK(low.hi() == 1);
    BoundedComplex high = truncate(x, 2, kPlusInfinity);
    CHECK(high.lo() == 2);
    CHECK(high.hi() == 3);
    CHECK(truncate(x, 5, 7).is_zero());

    ChainMap proj = truncation_projection(x, 2);
    CHECK(proj.commutes());
    CHECK(proj.target().lo() == 2);
    CHECK(proj.component(3).is_iso());
    CHECK(proj.component(1).is_zero());
    ChainMap inc = truncation_inclusion(x, 1);
    CHECK(inc.commutes());
    CHECK(inc.component(0).is_iso());
    CHECK(inc.component(2).is_zero());
}

TEST_CASE("homology of P --a--> P")
{
    auto alg = corpus::dual_numbers();
    Representation s = simple(alg, 0);
    BoundedComplex x = dual_numbers_chain(1);
    CHECK(is_isomorphic(homology(x, 0), s).isomorphic);
    CHECK(is_isomorphic(homology(x, 1), s).isomorphic);
    CHECK(homology_dim(x, 2) == 0);
    auto w = homology_window(x);
    REQUIRE(w);
    CHECK(w->first == 0);
    CHECK(w->second == 1);

    // Longer chain: only the ends carry homology.
    BoundedComplex y = dual_numbers_chain(4);
    CHECK(homology_dim(y, 0) == 1);
    CHECK(homology_dim(y, 2) == 0);
    CHECK(homology_dim(y, 4) == 1);
}

TEST_CASE("cone examples")
{
    auto alg = corpus::dual_numbers();
    Representation s = simple(alg, 0);
    BoundedComplex m = BoundedComplex::concentrated(projective(alg, 0), 0);
    ConeResult c = cone(ChainMap::identity(m));
    CHECK(is_acyclic(c.cone));
    CHECK(c.cone.term(0).total_dim() == 2);
    CHECK(c.cone.term(1).total_dim() == 2);

    BoundedComplex sc = BoundedComplex::concentrated(s, 0);
    ConeResult z = cone(ChainMap::zero(sc, sc));
    CHECK(homology_dim(z.cone, 0) == 1);
    CHECK(homology_dim(z.cone, 1) == 1);
    CHECK(z.from_target.commutes());
    CHECK(z.to_shift.commutes());

    // P2 ↪ P1 over A2: the cone resolves S1.
    auto a2 = corpus::a2();
    Representation p1 = projective(a2, 0), p2 = projective(a2, 1);
    auto hs = hom_basis(p2, p1);
    REQUIRE(hs.size() == 1);
    ConeResult ci = cone(ChainMap(BoundedComplex::concentrated(p2), BoundedComplex::concentrated(p1), {{0, hs[0]}}));
    CHECK(ci.cone.term(1) == p2);
    CHECK(homology_dim(ci.cone, 1) == 0);
    CHECK(is_isomorphic(homology(ci.cone, 0), simple(a2, 0)).isomorphic);
    Representation s1 = simple(a2, 0);
    ModuleHom eps = hom_basis(p1, s1).at(0);
    ChainMap aug(ci.cone, BoundedComplex::concentrated(s1), {{0, eps}});
    CHECK(is_quasi_iso(aug));
}

TEST_CASE("null homotopies")
{
    auto alg = corpus::dual_numbers();
    Representation p = projective(alg, 0);
    Representation s = simple(alg, 0);

    BoundedComplex x = dual_numbers_chain(2);
    auto h0 = null_homotopy(ChainMap::zero(x, x));
    REQUIRE(h0);
    CHECK(homotopy_boundary(x, x, *h0).is_zero());

    BoundedComplex contractible(alg, 0, {p, p}, {ModuleHom::identity(p)});
    ChainMap id = ChainMap::identity(contractible);
    auto h = null_homotopy(id);
    REQUIRE(h);
    CHECK((homotopy_boundary(contractible, contractible, *h) - id).is_zero());

    BoundedComplex sc = BoundedComplex::concentrated(s);
    CHECK_FALSE(null_homotopy(ChainMap::identity(sc)));
    CHECK_FALSE(is_quasi_iso(ChainMap::zero(sc, sc)));
    CHECK(is_quasi_iso(ChainMap::identity(sc)));

    // a : P → P in degree 0 is not null-homotopic; as a map of P --a--> P
    // to itself it is (h = id in degree 0 → 1).
    BoundedComplex pc = BoundedComplex::concentrated(p);
    CHECK_FALSE(null_homotopy(ChainMap(pc, pc, {{0, radical_endo(p)}})));
    BoundedComplex x1 = dual_numbers_chain(1);
    ChainMap a1(x1, x1, {{0, x1.differential(1)}, {1, x1.differential(1)}});
    auto ha = null_homotopy(a1);
    REQUIRE(ha);
    CHECK((homotopy_boundary(x1, x1, *ha) - a1).is_zero());
}

TEST_CASE("Hom complex homology counts maps up to homotopy")
{
    auto alg = corpus::dual_numbers();
    Representation s = simple(alg, 0);
    BoundedComplex sc = BoundedComplex::concentrated(s);
    BoundedComplex x = dual_numbers_chain(3);
    // X resolves S (with a tail in degree 3); Hom_K(X, S[n]) = Hom(P, S) = k in each degree 0..3.
    for (int n = 0; n <= 3; ++n) {
        CHECK(hom_complex_homology_dim(x, shift(sc, n), 0) == 1);
        CHECK(hom_complex_homology_dim(x, sc, -n) == 1);
    }
    CHECK(hom_complex_homology_dim(x, shift(sc, 4), 0) == 0);
    CHECK(hom_complex_homology_dim(x, sc, 1) == 0);
    CHECK(hom_complex_homology_dim(sc, sc, 0) == 1);
    CHECK(hom_complex_homology_dim(sc, sc, 1) == 0);
}

TEST_CASE("long exact sequence of a cone")
{
    std::mt19937_64 rng(7);
    auto alg = corpus::dual_numbers();
    Representation s = simple(alg, 0);
    Representation p = projective(alg, 0);
    std::vector<BoundedComplex> pool = {
        dual_numbers_chain(1), dual_numbers_chain(2), dual_numbers_chain(3),
        BoundedComplex::concentrated(s, 1), BoundedComplex::concentrated(p, 0),
        direct_sum(dual_numbers_chain(2), BoundedComplex::concentrated(s, 0)),
        shift(dual_numbers_chain(2), 1),
    };
    for (const auto& x : pool) {
        for (const auto& y : pool) {
            for (int trial = 0; trial < 3; ++trial) {
                ChainMap f = random_chain_map(x, y, rng);
                ConeResult c = cone(f);
                CHECK(differentials_square_to_zero(c.cone));
                int a = std::min(x.lo(), y.lo()) - 1, b = std::max(x.hi(), y.hi()) + 2;
                for (int i = a; i <= b; ++i) {
                    std::size_t coker = homology_dim(y, i) - induced_rank(f, i);
                    std::size_t ker = homology_dim(x, i - 1) - induced_rank(f, i - 1);
                    CHECK(homology_dim(c.cone, i) == coker + ker);
                }
            }
        }
    }
}

TEST_CASE("brutal truncation triangles")
{
    for (int top = 2; top <= 4; ++top) {
        BoundedComplex x = dual_numbers_chain(top);
        for (int m = 0; m <= top; ++m) {
            for (int n = m; n <= top; ++n) {
                // (σ_{≥n+1} X)[-1] → σ_{[m,n]} X → σ_{≥m} X
                BoundedComplex a = shift(truncate(x, n + 1, kPlusInfinity), -1);
                BoundedComplex b = truncate(x, m, n);
                std::map<int, ModuleHom> u1;
                if (n + 1 <= top)
                    u1.emplace(n, x.differential(n + 1));
                ChainMap u(a, b, u1);
                ConeResult c = cone(u);
                ChainMap phi = cone_identification(c, u, truncate(x, m, kPlusInfinity));
                CHECK(phi.is_iso());
                CHECK(is_quasi_iso(phi));

                // (σ_{[m,n]} X)[-1] → σ_{≤m-1} X → σ_{≤n} X
                BoundedComplex a2 = shift(truncate(x, m, n), -1);
                BoundedComplex b2 = truncate(x, kMinusInfinity, m - 1);
                std::map<int, ModuleHom> w;
                if (m >= 1)
                    w.emplace(m - 1, x.differential(m));
                ChainMap u2(a2, b2, w);
                ChainMap phi2 = cone_identification(cone(u2), u2, truncate(x, kMinusInfinity, n));
                CHECK(is_quasi_iso(phi2));
            }
            // (σ_{≥m} X)[-1] → σ_{≤m-1} X → X
            BoundedComplex a3 = shift(truncate(x, m, kPlusInfinity), -1);
            BoundedComplex b3 = truncate(x, kMinusInfinity, m - 1);
            std::map<int, ModuleHom> w3;
            if (m >= 1)
                w3.emplace(m - 1, x.differential(m));
            ChainMap u3(a3, b3, w3);
            CHECK(is_quasi_iso(cone_identification(cone(u3), u3, x)));
        }
    }
}

TEST_CASE("cone identification rejects a wrong sign")
{
    QuiverSpec spec = corpus::dual_numbers_spec();
    spec.field = PrimeField(3);
    BoundedComplex x = dual_numbers_chain(2, build_algebra(spec));
    BoundedComplex a = shift(truncate(x, 1, kPlusInfinity), -1);
    BoundedComplex b = truncate(x, 0, 0);
    ChainMap good(a, b, {{0, x.differential(1)}});
    CHECK(cone_identification(cone(good), good, x).is_iso());
    ChainMap bad(a, b, {{0, -x.differential(1)}});
    CHECK_THROWS_AS(cone_identification(cone(bad), bad, x), ArgumentError);
}

TEST_CASE("duality of complexes")
{
    auto alg = corpus::a3_rad2();
    Representation p1 = projective(alg, 0), p2 = projective(alg, 1), p3 = projective(alg, 2);
    ModuleHom f = hom_basis(p2, p1).at(0);
    ModuleHom g = hom_basis(p3, p2).at(0);
    BoundedComplex x(alg, 0, {p1, p2, p3}, {f, g});
    BoundedComplex dx = dualize(x);
    CHECK(same_algebra(dx.algebra(), alg->opposite()));
    CHECK(dx.lo() == -2);
    CHECK(dx.hi() == 0);
    CHECK(differentials_square_to_zero(dx));
    for (int j = -3; j <= 3; ++j) {
        CHECK(dx.term(j).dim_vector() == dualize(x.term(-j)).dim_vector());
        CHECK(homology_dims(dx, j) == homology_dims(x, -j));
    }
    BoundedComplex ddx = dualize(dx);
    CHECK(same_algebra(ddx.algebra(), alg));
    for (int i = x.lo(); i <= x.hi(); ++i)
        CHECK((ddx.differential(i) - x.differential(i)).is_zero());

    std::mt19937_64 rng(3);
    BoundedComplex y = truncate(x, 0, 1);
    ChainMap h = random_chain_map(y, x, rng);
    ChainMap dh = dualize(h);
    CHECK(dh.commutes());
    CHECK(same_algebra(dh.source().algebra(), alg->opposite()));
}
