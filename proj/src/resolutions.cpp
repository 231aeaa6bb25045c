#include "dersyz/resolutions.hpp"

#include <random>
#include <stdexcept>

#include "dersyz/linalg.hpp"

namespace dersyz {

namespace {

// Cycles of cone(f) in degree i, where cone_i = X_i ⊕ P_{i-1}.
struct ConeCycles {
    DirectSum cone;
    Subobject cycles;
};

ConeCycles cone_cycles(const BoundedComplex& x, const Representation& p1, const Representation& p2,
                       const ModuleHom& f1, const ModuleHom& d1, int i)
{
    DirectSum here = direct_sum(std::vector<Representation>{x.term(i), p1});
    DirectSum below = direct_sum(std::vector<Representation>{x.term(i - 1), p2});
    ModuleHom D = below.inclusions[0] * (x.differential(i) * here.projections[0] + f1 * here.projections[1]) -
                  below.inclusions[1] * (d1 * here.projections[1]);
    return {here, kernel(D)};
}

// Per-vertex coordinates of the columns of g (landing in the subobject) in
// the subobject's basis.
std::vector<Matrix> coordinates_in(const Subobject& s, const ModuleHom& g)
{
    std::vector<Matrix> out;
    for (std::size_t v = 0; v < g.maps().size(); ++v) {
        auto y = solve_particular(s.inclusion.at(v), g.at(v));
        if (!y)
            throw std::logic_error("resolution: boundary not inside the cycles");
        out.push_back(std::move(*y));
    }
    return out;
}

ModuleHom rebase(const ModuleHom& f, const Representation& s, const Representation& t)
{
    return make_hom_unchecked(s, t, f.maps());
}

}  // namespace

bool CappedResolution::closes() const
{
    return complex.hi() <= window_top || (cap().is_zero() && complex.hi() == window_top + 1);
}

bool CappedCoresolution::closes() const
{
    return complex.lo() >= window_bottom || (cap().is_zero() && complex.lo() == window_bottom - 1);
}

CappedResolution min_proj_resolution(const Representation& m, int n)
{
    return proj_resolution_complex(BoundedComplex::concentrated(m, 0), n);
}

CappedResolution proj_resolution_complex(const BoundedComplex& x, int n, ResolutionMode mode, std::uint64_t seed)
{
    const AlgebraPtr& alg = x.algebra();
    const PrimeField& F = alg->field();
    const std::size_t nv = alg->num_vertices();
    CappedResolution out;
    out.target = x;
    out.window_top = n;
    out.mode = mode;
    BoundedComplex xt = x.trimmed();
    if (xt.is_zero()) {
        out.complex = BoundedComplex::zero(alg);
        out.augmentation = ChainMap::zero(out.complex, x);
        return out;
    }
    const int lo = xt.lo();
    if (n < lo - 1)
        throw ArgumentError("resolution window " + std::to_string(n) + " lies below the support start " +
                            std::to_string(lo) + "; need window ≥ " + std::to_string(lo - 1));

    std::mt19937_64 rng(seed);
    Representation zero = Representation::zero(alg);
    std::vector<Representation> P;    // P[k] in degree lo + k
    std::vector<ModuleHom> f, d;      // f[k] : P_k → X_k ; d[k] : P_k → P_{k-1}
    auto prev = [&](std::size_t back) -> const Representation& {
        return P.size() >= back ? P[P.size() - back] : zero;
    };

    for (int i = lo; i <= n; ++i) {
        const Representation& p1 = prev(1);
        const Representation& p2 = prev(2);
        ModuleHom f1 = P.empty() ? ModuleHom::zero(zero, x.term(i - 1)) : f.back();
        ModuleHom d1 = P.empty() ? ModuleHom::zero(zero, p2) : d.back();
        ConeCycles cc = cone_cycles(x, p1, p2, f1, d1, i);

        // cycles modulo the boundaries coming from X_{i+1}
        ModuleHom bnd = cc.cone.inclusions[0] * x.differential(i + 1);
        std::vector<Matrix> bbases;
        for (const auto& c : coordinates_in(cc.cycles, bnd))
            bbases.push_back(column_space(c));
        Quotient q = quotient(cc.cycles.object, bbases);
        auto rad = radical_subspaces(q.object);

        std::vector<std::size_t> gens;
        std::vector<Matrix> images;
        for (std::size_t v = 0; v < nv; ++v)
            for (auto c : complement_indices(rad[v])) {
                gens.push_back(v);
                images.push_back(cc.cycles.inclusion.at(v) * q.section[v].block(0, c, q.section[v].rows(), 1));
            }
        if (mode == ResolutionMode::Padded) {
            std::size_t v = static_cast<std::size_t>(i - lo) % nv;
            const Matrix& Z = cc.cycles.inclusion.at(v);
            Matrix coeff(F, Z.cols(), 1);
            for (std::size_t r = 0; r < Z.cols(); ++r)
                coeff.at(r, 0) = rng() % F.p();
            gens.push_back(v);
            images.push_back(Z * coeff);
        }
        Representation Pi = free_module(alg, gens);
        ModuleHom g = hom_from_free(Pi, cc.cone.sum, images);
        f.push_back(cc.cone.projections[0] * g);
        d.push_back(-(cc.cone.projections[1] * g));
        P.push_back(Pi);
    }

    // cap: the remaining cycles in degree n+1
    const Representation& pn = prev(1);
    ModuleHom fn = P.empty() ? ModuleHom::zero(zero, x.term(n)) : f.back();
    ModuleHom dn = P.empty() ? ModuleHom::zero(zero, prev(2)) : d.back();
    ConeCycles cap = cone_cycles(x, pn, prev(2), fn, dn, n + 1);
    const Representation& C = cap.cycles.object;

    std::vector<Representation> terms = P;
    std::vector<ModuleHom> diffs(d.begin() + (d.empty() ? 0 : 1), d.end());
    std::map<int, ModuleHom> aug;
    for (std::size_t k = 0; k < P.size(); ++k)
        aug.emplace(lo + static_cast<int>(k), f[k]);
    terms.push_back(C);
    if (!P.empty())
        diffs.push_back(-(cap.cone.projections[1] * cap.cycles.inclusion));
    aug.emplace(n + 1, cap.cone.projections[0] * cap.cycles.inclusion);
    int top = xt.hi();
    if (top >= n + 2) {
        ModuleHom into = cap.cone.inclusions[0] * x.differential(n + 2);
        terms.push_back(x.term(n + 2));
        diffs.push_back(make_hom_unchecked(x.term(n + 2), C, coordinates_in(cap.cycles, into)));
        aug.emplace(n + 2, ModuleHom::identity(x.term(n + 2)));
        for (int j = n + 3; j <= top; ++j) {
            terms.push_back(x.term(j));
            diffs.push_back(x.differential(j));
            aug.emplace(j, ModuleHom::identity(x.term(j)));
        }
    }
    int start = P.empty() ? n + 1 : lo;
    out.complex = BoundedComplex(alg, start, std::move(terms), std::move(diffs));
    out.augmentation = ChainMap(out.complex, x, std::move(aug));
    if (!is_quasi_iso(out.augmentation))
        throw std::logic_error("resolution augmentation is not a quasi-isomorphism");
    if (mode == ResolutionMode::Minimal && !is_minimal(out))
        throw std::logic_error("resolution is not minimal");
    return out;
}

bool is_minimal(const CappedResolution& p)
{
    for (int i = p.lo() + 1; i <= p.window_top; ++i) {
        const ModuleHom di = p.complex.differential(i);
        auto rad = radical_subspaces(di.target());
        for (std::size_t v = 0; v < rad.size(); ++v) {
            const Matrix& im = di.at(v);
            if (im.cols() == 0 || im.rows() == 0)
                continue;
            Matrix both = rad[v].cols() ? Matrix::hstack(rad[v], im) : im;
            if (rank(both) != rad[v].cols())
                return false;
        }
    }
    return true;
}

BoundedComplex capped_model(const CappedResolution& p, int m)
{
    if (p.complex.is_zero())
        return BoundedComplex::zero(p.target.algebra());
    if (m < p.lo() || m > p.window_top)
        throw ArgumentError("capped model level " + std::to_string(m) + " outside the window [" +
                            std::to_string(p.lo()) + ", " + std::to_string(p.window_top) + "]");
    BoundedComplex model = shift(truncate(p.complex, m, kPlusInfinity), -m);
    if (m == p.window_top && model.hi() <= 1) {
        ModuleHom d1 = model.differential(1);
        if (d1.is_injective()) {
            Quotient q = cokernel(d1);
            return BoundedComplex::concentrated(q.object, 0);
        }
    }
    return model;
}

CappedCoresolution inj_resolution(const BoundedComplex& x, int n, ResolutionMode mode, std::uint64_t seed)
{
    CappedResolution dual = proj_resolution_complex(dualize(x), -n, mode, seed);
    CappedCoresolution out;
    out.target = x;
    out.window_bottom = n;
    out.complex = dualize(dual.complex);
    ChainMap co = dualize(dual.augmentation);
    std::map<int, ModuleHom> comps;
    for (const auto& [i, g] : co.components())
        comps.emplace(i, rebase(g, x.term(i), out.complex.term(i)));
    out.coaugmentation = make_chain_map_unchecked(x, out.complex, std::move(comps));
    if (!out.coaugmentation.commutes() || !is_quasi_iso(out.coaugmentation))
        throw std::logic_error("coresolution is not a quasi-isomorphism");
    return out;
}

CappedCoresolution min_inj_resolution(const Representation& m, int n)
{
    return inj_resolution(BoundedComplex::concentrated(m, 0), n);
}

BoundedComplex capped_comodel(const CappedCoresolution& c, int m)
{
    if (c.complex.is_zero())
        return BoundedComplex::zero(c.target.algebra());
    if (m > c.hi() || m < c.window_bottom)
        throw ArgumentError("capped comodel level " + std::to_string(m) + " outside the window [" +
                            std::to_string(c.window_bottom) + ", " + std::to_string(c.hi()) + "]");
    BoundedComplex model = shift(truncate(c.complex, kMinusInfinity, m), -m);
    if (m == c.window_bottom && model.lo() >= -1) {
        ModuleHom d0 = model.differential(0);
        if (d0.is_surjective()) {
            Subobject k = kernel(d0);
            return BoundedComplex::concentrated(k.object, 0);
        }
    }
    return model;
}

}  // namespace dersyz
