#pragma once

// Brute-force oracles shared by the unit tests and the acceptance run. They
// use only module-level kernels, covers and decompositions.

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dersyz/decompose.hpp"
#include "dersyz/linalg.hpp"

namespace dersyz::oracle {

inline Representation omega_by_kernel(const Representation& m)
{
    return kernel(projective_cover(m).epi).object;
}

// Brute-force K-group bookkeeping: syzygies by kernel iteration, classes by
// pairwise isomorphism, ranks mod a large prime over a long horizon.
struct KGroup {
    std::vector<Representation> classes;

    std::size_t id(const Representation& x)
    {
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i].dim_vector() == x.dim_vector() && is_isomorphic(classes[i], x).isomorphic)
                return i;
        classes.push_back(x);
        return classes.size() - 1;
    }

    std::map<std::size_t, long long> vector_of(const Representation& x)
    {
        std::map<std::size_t, long long> v;
        if (x.is_zero())
            return v;
        for (const auto& s : split_indecomposables(x))
            if (!is_projective(s.module))
                ++v[id(s.module)];
        return v;
    }
};

inline std::size_t rank_mod_prime(const std::vector<std::map<std::size_t, long long>>& rows, std::size_t width)
{
    PrimeField big(1000003);
    Matrix a(big, rows.size(), std::max<std::size_t>(width, 1));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, k] : rows[r])
            a.set(r, c, k);
    return rank(a);
}

inline std::optional<int> pd_by_kernel(Representation x, int horizon)
{
    for (int i = 0; i <= horizon; ++i) {
        if (is_projective(x))
            return i;
        x = omega_by_kernel(x);
    }
    return std::nullopt;
}

inline std::pair<int, int> phi_psi_oracle(const Representation& m, int horizon = 8)
{
    KGroup k;
    std::vector<Representation> summands;
    {
        std::vector<Representation> seen;
        for (const auto& s : m.is_zero() ? std::vector<Summand>{} : split_indecomposables(m)) {
            if (is_projective(s.module))
                continue;
            bool dup = false;
            for (const auto& t : seen)
                dup = dup || (t.dim_vector() == s.module.dim_vector() && is_isomorphic(t, s.module).isomorphic);
            if (!dup)
                seen.push_back(s.module);
        }
        summands = seen;
    }
    std::vector<std::size_t> ranks;
    std::vector<Representation> cur = summands;
    std::vector<std::vector<Representation>> levels;
    for (int n = 0; n <= horizon; ++n) {
        levels.push_back(cur);
        std::vector<std::map<std::size_t, long long>> rows;
        for (const auto& x : cur)
            rows.push_back(k.vector_of(x));
        ranks.push_back(rank_mod_prime(rows, k.classes.size()));
        for (auto& x : cur)
            x = omega_by_kernel(x);
    }
    int phi = horizon;
    while (phi > 0 && ranks[phi - 1] == ranks[horizon])
        --phi;
    int extra = 0;
    for (const auto& x : levels[phi]) {
        if (x.is_zero())
            continue;
        for (const auto& s : split_indecomposables(x))
            if (auto pd = pd_by_kernel(s.module, horizon))
                extra = std::max(extra, *pd);
    }
    return {phi, phi + extra};
}

inline Representation kernel_syzygy(Representation m, int n)
{
    for (int i = 0; i < n && !m.is_zero(); ++i)
        m = omega_by_kernel(m);
    return m;
}

}  // namespace dersyz::oracle
