#include "dersyz/decompose.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "dersyz/linalg.hpp"

namespace dersyz {

namespace {

constexpr int kRetryBudget = 32;

using u64 = std::uint64_t;

// Trace of a^e over Z/mZ for a lifted to [0, p).
u64 trace_power_mod(const Matrix& a, u64 e, u64 m)
{
    const std::size_t n = a.rows();
    std::vector<u64> base(n * n), result(n * n, 0), tmp(n * n);
    for (std::size_t i = 0; i < n * n; ++i)
        base[i] = a.data()[i] % m;
    for (std::size_t i = 0; i < n; ++i)
        result[i * n + i] = 1 % m;
    auto mul = [&](const std::vector<u64>& x, const std::vector<u64>& y, std::vector<u64>& out) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                unsigned __int128 s = 0;
                for (std::size_t k = 0; k < n; ++k)
                    s += static_cast<unsigned __int128>(x[i * n + k]) * y[k * n + j];
                out[i * n + j] = static_cast<u64>(s % m);
            }
    };
    while (e) {
        if (e & 1) {
            mul(result, base, tmp);
            result.swap(tmp);
        }
        e >>= 1;
        if (e) {
            mul(base, base, tmp);
            base.swap(tmp);
        }
    }
    u64 tr = 0;
    for (std::size_t i = 0; i < n; ++i)
        tr = (tr + result[i * n + i]) % m;
    return tr;
}

Matrix combine(const PrimeField& F, const std::vector<Matrix>& basis, const std::vector<PrimeField::value_type>& c)
{
    Matrix out = Matrix::zero(F, basis.front().rows(), basis.front().cols());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (c[i])
            out += basis[i].scaled(c[i]);
    return out;
}

Matrix vec_columns(const PrimeField& F, std::size_t len, const std::vector<Matrix>& mats)
{
    Matrix out(F, len, mats.size());
    for (std::size_t j = 0; j < mats.size(); ++j) {
        auto v = mats[j].vec();
        for (std::size_t i = 0; i < len; ++i)
            out.at(i, j) = v[i];
    }
    return out;
}

bool in_span(const Matrix& span_rank_base, std::size_t base_rank, const Matrix& candidates)
{
    return rank(Matrix::hstack(span_rank_base, candidates)) == base_rank;
}

struct EndData {
    std::vector<ModuleHom> homs;
    std::vector<Matrix> totals;
    std::vector<Matrix> radical;  // radical basis as total matrices
};

// Radical of End(M) with a self-check: the result must be a nilpotent
// two-sided ideal. CIW gives the radical exactly; the check guards the
// soundness of every certificate built on it.
std::vector<Matrix> checked_radical(const PrimeField& F, const std::vector<Matrix>& totals)
{
    const std::size_t n = totals.front().rows();
    auto coeffs = matrix_algebra_radical(totals);
    std::vector<Matrix> J;
    for (const auto& c : coeffs)
        J.push_back(combine(F, totals, c));
    if (J.empty())
        return J;
    Matrix W = Matrix::identity(F, n);
    for (std::size_t step = 0; step <= n && W.cols() > 0; ++step) {
        Matrix next(F, n, 0);
        for (const auto& j : J)
            next = Matrix::hstack(next, j * W);
        W = column_space(next);
    }
    if (W.cols() != 0)
        throw InconclusiveError("computed endomorphism radical is not nilpotent");
    if (J.size() * totals.size() <= 4096) {
        Matrix base = vec_columns(F, n * n, J);
        std::vector<Matrix> prods;
        for (const auto& j : J)
            for (const auto& b : totals) {
                prods.push_back(j * b);
                prods.push_back(b * j);
            }
        if (!in_span(base, J.size(), vec_columns(F, n * n, prods)))
            throw InconclusiveError("computed endomorphism radical is not an ideal");
    }
    return J;
}

ModuleHom random_combination(const std::vector<ModuleHom>& basis, std::mt19937_64& rng)
{
    const PrimeField& F = basis.front().source().field();
    std::uniform_int_distribution<u64> dist(0, F.p() - 1);
    ModuleHom acc = ModuleHom::zero(basis.front().source(), basis.front().target());
    for (const auto& b : basis) {
        auto c = static_cast<PrimeField::value_type>(dist(rng));
        if (c)
            acc = acc + b.scaled(c);
    }
    return acc;
}

void split_rec(const Representation& m, std::mt19937_64& rng, std::vector<Summand>& out)
{
    if (m.is_zero())
        return;
    const PrimeField& F = m.field();
    auto homs = hom_basis(m, m);
    if (homs.size() == 1) {
        out.push_back({m, ModuleHom::identity(m), ModuleHom::identity(m)});
        return;
    }
    std::vector<Matrix> totals;
    for (const auto& h : homs)
        totals.push_back(h.total());
    auto J = checked_radical(F, totals);
    const std::size_t n = m.total_dim();
    Matrix jbase = vec_columns(F, n * n, J);
    const std::size_t top_dim = homs.size() - J.size();
    const std::size_t nv = m.dim_vector().size();

    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        ModuleHom phi = random_combination(homs, rng);
        auto factors = factor_char_poly(phi.total(), rng());
        if (factors.size() == 1) {
            const auto& f = factors.front().first;
            if (static_cast<std::size_t>(f.degree()) != top_dim)
                continue;
            Matrix fphi = evaluate(f, phi.total());
            if (J.empty() ? fphi.is_zero() : in_span(jbase, J.size(), vec_columns(F, n * n, {fphi}))) {
                out.push_back({m, ModuleHom::identity(m), ModuleHom::identity(m)});
                return;
            }
            continue;
        }
        // Fitting decomposition along the primary components of phi.
        std::vector<Subobject> parts;
        for (const auto& [f, mult] : factors) {
            Polynomial g = pow(f, static_cast<std::size_t>(mult));
            std::vector<Matrix> bases;
            for (std::size_t v = 0; v < nv; ++v)
                bases.push_back(kernel_basis(evaluate(g, phi.at(v))));
            parts.push_back(submodule(m, bases));
        }
        std::vector<Matrix> proj_total;
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix T(F, m.dim(v), 0);
            for (const auto& p : parts)
                T = Matrix::hstack(T, p.inclusion.at(v));
            auto inv = inverse(T);
            if (!inv)
                throw std::logic_error("Fitting components do not span the module");
            proj_total.push_back(std::move(*inv));
        }
        std::vector<std::size_t> row(nv, 0);
        for (const auto& p : parts) {
            std::vector<Matrix> pm;
            for (std::size_t v = 0; v < nv; ++v) {
                pm.push_back(proj_total[v].block(row[v], 0, p.object.dim(v), m.dim(v)));
                row[v] += p.object.dim(v);
            }
            ModuleHom proj = make_hom_unchecked(m, p.object, std::move(pm));
            std::vector<Summand> sub;
            split_rec(p.object, rng, sub);
            for (auto& s : sub)
                out.push_back({s.module, p.inclusion * s.inclusion, s.projection * proj});
        }
        return;
    }
    throw InconclusiveError("decomposition inconclusive: no certificate within the retry budget of " +
                            std::to_string(kRetryBudget) + " for a module of dimension " + std::to_string(n));
}

}  // namespace

std::vector<std::vector<PrimeField::value_type>> matrix_algebra_radical(const std::vector<Matrix>& basis)
{
    if (basis.empty())
        return {};
    const PrimeField& F = basis.front().field();
    const u64 p = F.p();
    const std::size_t n = basis.front().rows();
    const std::size_t r = basis.size();
    // current ideal as coefficient vectors over `basis`
    std::vector<std::vector<PrimeField::value_type>> ideal;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<PrimeField::value_type> e(r, 0);
        e[i] = 1;
        ideal.push_back(std::move(e));
    }
    u64 pi = 1;  // p^i
    for (std::size_t i = 0; pi <= n; ++i) {
        const u64 mod = pi * p;
        std::vector<Matrix> elems;
        for (const auto& c : ideal)
            elems.push_back(combine(F, basis, c));
        Matrix G(F, r, ideal.size());
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t j = 0; j < elems.size(); ++j) {
                u64 tr = trace_power_mod(elems[j] * basis[b], pi, mod);
                if (tr % pi != 0)
                    throw InconclusiveError("trace form is not divisible as expected");
                G.at(b, j) = static_cast<PrimeField::value_type>((tr / pi) % p);
            }
        Matrix K = kernel_basis(G);
        std::vector<std::vector<PrimeField::value_type>> next;
        for (std::size_t c = 0; c < K.cols(); ++c) {
            std::vector<PrimeField::value_type> v(r, 0);
            for (std::size_t j = 0; j < ideal.size(); ++j)
                if (K(j, c))
                    for (std::size_t k = 0; k < r; ++k)
                        v[k] = F.add(v[k], F.mul(K(j, c), ideal[j][k]));
            next.push_back(std::move(v));
        }
        ideal = std::move(next);
        if (ideal.empty() || pi > n / p)
            break;
        pi *= p;
    }
    return ideal;
}

std::vector<Summand> split_indecomposables(const Representation& m, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Summand> out;
    split_rec(m, rng, out);
    return out;
}

std::optional<ModuleHom> indecomposable_isomorphism(const Representation& x, const Representation& y)
{
    require_same_algebra(x, y, "isomorphism test");
    if (x.dim_vector() != y.dim_vector())
        return std::nullopt;
    if (x.is_zero())
        return ModuleHom::zero(x, y);
    auto fs = hom_basis(x, y);
    auto gs = hom_basis(y, x);
    for (const auto& f : fs)
        for (const auto& g : gs)
            if ((g * f).is_iso())
                return f;
    return std::nullopt;
}

bool is_indecomposable(const Representation& m, std::uint64_t seed)
{
    return !m.is_zero() && split_indecomposables(m, seed).size() == 1;
}

Decomposition decompose(const Representation& m, bool strip, std::uint64_t seed)
{
    Decomposition d;
    d.summands = split_indecomposables(m, seed);
    std::vector<std::size_t> order(d.summands.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return d.summands[a].module.total_dim() > d.summands[b].module.total_dim();
    });
    std::vector<Summand> sorted;
    for (auto i : order)
        sorted.push_back(d.summands[i]);
    d.summands = std::move(sorted);
    for (const auto& s : d.summands) {
        bool proj = strip && is_projective(s.module);
        auto& bucket = proj ? d.stripped : d.pieces;
        std::size_t cls = bucket.size();
        for (std::size_t k = 0; k < bucket.size(); ++k)
            if (indecomposable_isomorphism(bucket[k].first, s.module)) {
                cls = k;
                break;
            }
        if (cls == bucket.size())
            bucket.emplace_back(s.module, 0);
        ++bucket[cls].second;
        d.class_of.push_back(cls);
        d.is_stripped.push_back(proj);
    }
    return d;
}

IsoResult is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed)
{
    require_same_algebra(m, n, "is_isomorphic");
    if (m.dim_vector() != n.dim_vector())
        return {false, std::nullopt};
    if (m.is_zero())
        return {true, ModuleHom::zero(m, n)};
    try {
        auto sm = split_indecomposables(m, seed);
        auto sn = split_indecomposables(n, seed);
        if (sm.size() != sn.size())
            return {false, std::nullopt};
        std::vector<bool> used(sn.size(), false);
        ModuleHom witness = ModuleHom::zero(m, n);
        for (const auto& a : sm) {
            bool matched = false;
            for (std::size_t k = 0; k < sn.size() && !matched; ++k) {
                if (used[k])
                    continue;
                if (auto phi = indecomposable_isomorphism(a.module, sn[k].module)) {
                    used[k] = true;
                    matched = true;
                    witness = witness + sn[k].inclusion * *phi * a.projection;
                }
            }
            if (!matched)
                return {false, std::nullopt};
        }
        if (!witness.is_iso())
            throw std::logic_error("assembled isomorphism is not invertible");
        return {true, witness};
    } catch (const InconclusiveError&) {
        auto basis = hom_basis(m, n);
        if (basis.empty())
            return {false, std::nullopt};
        std::mt19937_64 rng(seed ^ 0x5bd1e995u);
        for (int t = 0; t < kRetryBudget; ++t) {
            ModuleHom f = random_combination(basis, rng);
            if (f.is_iso())
                return {true, f};
        }
        throw;
    }
}

Representation strip_projectives(const Representation& m, std::uint64_t seed)
{
    if (m.is_zero())
        return m;
    auto d = decompose(m, true, seed);
    std::vector<Representation> keep;
    for (std::size_t i = 0; i < d.summands.size(); ++i)
        if (!d.is_stripped[i])
            keep.push_back(d.summands[i].module);
    if (keep.empty())
        return Representation::zero(m.algebra());
    if (keep.size() == d.summands.size())
        return m;
    return direct_sum(keep).sum;
}

Representation strip_injectives(const Representation& m, std::uint64_t seed)
{
    return dualize(strip_projectives(dualize(m), seed));
}

}  // namespace dersyz
