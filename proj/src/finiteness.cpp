#include "dersyz/finiteness.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "dersyz/decompose.hpp"
#include "dersyz/linalg.hpp"

namespace dersyz {

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::HoldsUpToBound:
        return "holds-up-to-bound";
    case Verdict::FailsWithCounterexample:
        return "fails-with-counterexample";
    case Verdict::Inconclusive:
        break;
    }
    return "inconclusive";
}

namespace {

std::string dims_string(const std::vector<std::size_t>& d)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < d.size(); ++i)
        os << (i ? "," : "") << d[i];
    os << ']';
    return os.str();
}

std::string vertex_suffix(const AlgebraPtr& alg, std::size_t v)
{
    return alg->num_vertices() == 1 ? std::string() : alg->spec().vertices[v];
}

struct CapExceeded {
    std::string module;
};

// Rank over Q by fraction-free elimination.
std::size_t rational_rank(std::vector<std::vector<long long>> rows)
{
    std::vector<std::vector<__int128>> a;
    for (const auto& r : rows)
        a.emplace_back(r.begin(), r.end());
    if (a.empty())
        return 0;
    std::size_t n = a.size(), m = a[0].size(), rank = 0;
    __int128 prev = 1;
    for (std::size_t c = 0; c < m && rank < n; ++c) {
        std::size_t piv = rank;
        while (piv < n && a[piv][c] == 0)
            ++piv;
        if (piv == n)
            continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = rank + 1; r < n; ++r) {
            for (std::size_t k = c + 1; k < m; ++k) {
                a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
                if (a[r][k] > (__int128(1) << 100) || a[r][k] < -(__int128(1) << 100))
                    throw InconclusiveError("rank computation overflow");
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

std::set<std::size_t> support(const ClassMultiset& m)
{
    std::set<std::size_t> s;
    for (const auto& [c, k] : m)
        if (k)
            s.insert(c);
    return s;
}

ClassMultiset& add_scaled(ClassMultiset& into, const ClassMultiset& add, std::size_t times)
{
    for (const auto& [c, k] : add)
        into[c] += k * times;
    return into;
}

// Class-level Ω with a cache; new classes are syzygized in parallel and
// registered in ascending class order.
class OrbitEngine {
public:
    OrbitEngine(IsoClassRegistry& reg, std::size_t dim_cap, std::uint64_t seed)
        : reg_(reg), cap_(dim_cap), seed_(seed)
    {
    }

    ClassMultiset classes_of(const Representation& x)
    {
        check_cap(x);
        return register_pieces(decompose(x, true, seed_));
    }

    const ClassMultiset& omega(std::size_t c)
    {
        prepare({c});
        return omega_.at(c);
    }

    void prepare(const std::set<std::size_t>& classes)
    {
        std::vector<std::size_t> todo;
        for (std::size_t c : classes)
            if (!omega_.count(c))
                todo.push_back(c);
        if (todo.empty())
            return;
        std::vector<std::future<Decomposition>> jobs;
        for (std::size_t c : todo) {
            Representation rep = reg_.representative(c);
            std::size_t cap = cap_;
            std::uint64_t seed = seed_;
            std::string name = reg_.name(c);
            jobs.push_back(std::async(std::launch::async, [rep, cap, seed, name]() {
                SyzygyResult s = syzygy(DerivedObject::module(rep), 1);
                if (!s.module)
                    throw ArgumentError("syzygy of a module is not a module");
                if (s.module->total_dim() > cap)
                    throw CapExceeded{"Omega(" + name + ") dims " + dims_string(s.module->dim_vector())};
                return decompose(*s.module, true, seed);
            }));
        }
        std::vector<Decomposition> done;
        std::exception_ptr first;
        for (auto& j : jobs) {
            try {
                done.push_back(j.get());
            } catch (...) {
                if (!first)
                    first = std::current_exception();
                done.emplace_back();
            }
        }
        if (first)
            std::rethrow_exception(first);
        for (std::size_t i = 0; i < todo.size(); ++i)
            omega_[todo[i]] = register_pieces(done[i]);
    }

    ClassMultiset step(const ClassMultiset& level)
    {
        prepare(support(level));
        ClassMultiset next;
        for (const auto& [c, k] : level)
            add_scaled(next, omega_.at(c), k);
        return next;
    }

    /// pd of the module whose nonprojective part is `start`: first level that
    /// is empty, -1 when the class sets cycle, nullopt past n_cap.
    std::optional<int> pd(const std::set<std::size_t>& start, int n_cap)
    {
        std::vector<std::set<std::size_t>> seen{start};
        for (int i = 0;; ++i) {
            const auto& cur = seen.back();
            if (cur.empty())
                return i;
            for (std::size_t j = 0; j + 1 < seen.size(); ++j)
                if (seen[j] == cur)
                    return -1;
            if (i >= n_cap)
                return std::nullopt;
            prepare(cur);
            std::set<std::size_t> next;
            for (std::size_t c : cur)
                for (std::size_t d : support(omega_.at(c)))
                    next.insert(d);
            seen.push_back(std::move(next));
        }
    }

    IsoClassRegistry& registry() { return reg_; }

private:
    void check_cap(const Representation& x) const
    {
        if (x.total_dim() > cap_)
            throw CapExceeded{"module dims " + dims_string(x.dim_vector())};
    }

    ClassMultiset register_pieces(const Decomposition& d)
    {
        ClassMultiset out;
        for (const auto& [piece, mult] : d.pieces)
            out[reg_.classify(piece)] += mult;
        return out;
    }

    IsoClassRegistry& reg_;
    std::size_t cap_;
    std::uint64_t seed_;
    std::map<std::size_t, ClassMultiset> omega_;
};

}  // namespace

IsoClassRegistry::IsoClassRegistry(AlgebraPtr algebra) : alg_(std::move(algebra)) {}

std::size_t IsoClassRegistry::classify(const Representation& x)
{
    if (!same_algebra(x.algebra(), alg_))
        throw ArgumentError("classify: module over a different algebra");
    const auto& dims = x.dim_vector();
    auto& bucket = by_dims_[dims];
    for (std::size_t id : bucket)
        if (indecomposable_isomorphism(x, reps_[id]))
            return id;

    std::string name;
    std::size_t nv = alg_->num_vertices();
    for (std::size_t v = 0; v < nv && name.empty(); ++v) {
        std::vector<std::size_t> unit(nv, 0);
        unit[v] = 1;
        if (dims == unit)
            name = "S" + vertex_suffix(alg_, v);
    }
    for (std::size_t v = 0; v < nv && name.empty(); ++v) {
        Representation p = projective(alg_, v);
        if (p.dim_vector() == dims && indecomposable_isomorphism(x, p))
            name = "P" + vertex_suffix(alg_, v);
    }
    for (std::size_t v = 0; v < nv && name.empty(); ++v) {
        Representation i = injective(alg_, v);
        if (i.dim_vector() == dims && indecomposable_isomorphism(x, i))
            name = "I" + vertex_suffix(alg_, v);
    }
    if (name.empty()) {
        std::size_t k = 1;
        for (std::size_t id : bucket)
            if (names_[id][0] == 'M')
                ++k;
        name = "M" + dims_string(dims) + "#" + std::to_string(k);
    }
    bucket.push_back(reps_.size());
    reps_.push_back(x);
    names_.push_back(std::move(name));
    return reps_.size() - 1;
}

std::vector<std::string> OrbitReport::level_names(int n) const
{
    std::vector<std::string> out;
    for (const auto& [c, k] : levels.at(n))
        for (std::size_t i = 0; i < k; ++i)
            out.push_back(class_names.at(c));
    std::sort(out.begin(), out.end());
    return out;
}

OrbitReport syzygy_orbit(const std::vector<Representation>& seeds, int n_max, std::size_t dim_cap,
                         IsoClassRegistry& registry, std::uint64_t seed)
{
    if (n_max < 1)
        throw ArgumentError("syzygy_orbit: n_max must be at least 1");
    OrbitReport r;
    r.seeds = seeds;
    r.n_max = n_max;
    OrbitEngine eng(registry, dim_cap, seed);
    std::set<std::size_t> seen;
    std::vector<std::set<std::size_t>> supports;
    try {
        ClassMultiset level;
        for (const auto& s : seeds)
            add_scaled(level, eng.classes_of(s), 1);
        for (int n = 0; n <= n_max; ++n) {
            if (n > 0)
                level = eng.step(level);
            r.levels.push_back(level);
            std::set<std::size_t> sup = support(level);
            for (int j = 0; j < n; ++j) {
                if (!r.stabilized && r.levels[j] == level)
                    r.stabilized = true;
                if (!r.support_stabilized && supports[j] == sup) {
                    r.support_stabilized = true;
                    r.repeat_from = j;
                    r.repeat_at = n;
                }
            }
            supports.push_back(sup);
            seen.insert(sup.begin(), sup.end());
            r.union_sizes.push_back(seen.size());
        }
    } catch (const CapExceeded& e) {
        r.inconclusive = "dim_cap " + std::to_string(dim_cap) + " exceeded: " + e.module;
    } catch (const InconclusiveError& e) {
        r.inconclusive = std::string("decomposition inconclusive: ") + e.what();
    }
    for (std::size_t i = 0; i < registry.size(); ++i)
        r.class_names.push_back(registry.name(i));
    return r;
}

OrbitReport syzygy_orbit(const std::vector<Representation>& seeds, int n_max, std::size_t dim_cap,
                         std::uint64_t seed)
{
    if (seeds.empty()) {
        OrbitReport r;
        r.n_max = n_max;
        r.levels.assign(n_max + 1, {});
        r.union_sizes.assign(n_max + 1, 0);
        r.stabilized = r.support_stabilized = n_max >= 1;
        r.repeat_from = 0;
        r.repeat_at = 1;
        return r;
    }
    IsoClassRegistry reg(seeds.front().algebra());
    return syzygy_orbit(seeds, n_max, dim_cap, reg, seed);
}

namespace {

// Canonical key for a submodule: RREF of each vertex basis.
std::vector<Matrix> canonical(const std::vector<Matrix>& bases)
{
    std::vector<Matrix> out;
    for (const auto& b : bases)
        out.push_back(rref(b.transpose()).reduced);
    return out;
}

bool less_bases(const std::vector<Matrix>& a, const std::vector<Matrix>& b)
{
    for (std::size_t v = 0; v < a.size(); ++v) {
        if (a[v].rows() != b[v].rows())
            return a[v].rows() < b[v].rows();
        if (a[v].data() != b[v].data())
            return a[v].data() < b[v].data();
    }
    return false;
}

std::vector<std::vector<Matrix>> all_submodules(const Representation& p, std::size_t limit)
{
    const auto& F = p.field();
    std::size_t nv = p.dim_vector().size();
    std::vector<Matrix> zero;
    for (std::size_t v = 0; v < nv; ++v)
        zero.push_back(Matrix(F, p.dim(v), 0));
    auto cmp = [](const std::vector<Matrix>& a, const std::vector<Matrix>& b) { return less_bases(a, b); };
    std::set<std::vector<Matrix>, decltype(cmp)> seen(cmp);
    std::vector<std::vector<Matrix>> order{zero};
    seen.insert(canonical(zero));
    for (std::size_t head = 0; head < order.size(); ++head) {
        auto cur = order[head];
        for (std::size_t v = 0; v < nv; ++v) {
            std::size_t d = p.dim(v);
            std::size_t count = 1;
            for (std::size_t i = 0; i < d; ++i)
                count *= F.p();
            for (std::size_t code = 1; code < count; ++code) {
                Matrix x(F, d, 1);
                std::size_t c = code;
                for (std::size_t i = 0; i < d; ++i, c /= F.p())
                    x.at(i, 0) = static_cast<Matrix::value_type>(c % F.p());
                std::vector<Matrix> gens = cur;
                gens[v] = Matrix::hstack(gens[v], x);
                auto sub = generated_subspaces(p, gens);
                if (seen.insert(canonical(sub)).second) {
                    order.push_back(sub);
                    if (order.size() > limit)
                        return {};
                }
            }
        }
    }
    return order;
}

}  // namespace

std::vector<Representation> quotient_seeds(const AlgebraPtr& alg, std::size_t dim_cap, std::uint64_t seed)
{
    IsoClassRegistry reg(alg);
    std::vector<Representation> out;
    auto consider = [&](const Representation& q) {
        if (q.is_zero())
            return;
        for (const auto& [piece, mult] : decompose(q, true, seed).pieces) {
            std::size_t before = reg.size();
            if (reg.classify(piece) == before)
                out.push_back(piece);
        }
    };
    for (std::size_t v = 0; v < alg->num_vertices(); ++v) {
        Representation p = projective(alg, v);
        std::vector<std::vector<Matrix>> subs;
        double count = 1;
        for (std::size_t i = 0; i < p.total_dim(); ++i)
            count *= p.field().p();
        if (p.total_dim() <= dim_cap && count <= 4096)
            subs = all_submodules(p, 4096);
        if (!subs.empty()) {
            for (const auto& u : subs)
                consider(quotient(p, u).object);
            continue;
        }
        // Too many submodules: P / rad^t P only.
        std::vector<Matrix> layer;
        for (std::size_t w = 0; w < alg->num_vertices(); ++w)
            layer.push_back(Matrix::identity(p.field(), p.dim(w)));
        while (true) {
            Subobject s = submodule(p, layer);
            std::vector<Matrix> rad = radical_subspaces(s.object);
            std::size_t total = 0;
            for (std::size_t w = 0; w < rad.size(); ++w) {
                layer[w] = s.inclusion.at(w) * rad[w];
                total += layer[w].cols();
            }
            consider(quotient(p, layer).object);
            if (total == 0)
                break;
        }
    }
    return out;
}

SyzygyFiniteResult detect_syzygy_finite(const AlgebraPtr& alg, int n_start, int n_max, std::size_t dim_cap,
                                        std::optional<std::vector<Representation>> seeds, std::uint64_t seed)
{
    if (n_start < 0 || n_start > n_max)
        throw ArgumentError("detect_syzygy_finite: need 0 <= n_start <= n_max");
    std::vector<Representation> s = seeds ? *seeds : quotient_seeds(alg, dim_cap, seed);
    IsoClassRegistry reg(alg);
    SyzygyFiniteResult out;
    out.orbit = syzygy_orbit(s, std::max(n_max, 1), dim_cap, reg, seed);
    auto& v = out.verdict;
    v.bounds = {{"n_start", n_start}, {"n_max", n_max}, {"dim_cap", static_cast<long long>(dim_cap)},
                {"seeds", static_cast<long long>(s.size())}};
    if (out.orbit.inconclusive) {
        v.verdict = Verdict::Inconclusive;
        v.reason = *out.orbit.inconclusive;
        return out;
    }
    if (!out.orbit.support_stabilized) {
        v.verdict = Verdict::Inconclusive;
        v.reason = "class sets do not repeat by level " + std::to_string(n_max);
        return out;
    }
    std::set<std::size_t> tail;
    for (int n = n_start; n <= out.orbit.repeat_at; ++n)
        for (std::size_t c : support(out.orbit.levels[n]))
            tail.insert(c);
    v.verdict = Verdict::HoldsUpToBound;
    v.bounds.push_back({"repeat_at", out.orbit.repeat_at});
    v.bounds.push_back({"tail_classes", static_cast<long long>(tail.size())});
    std::string names;
    for (std::size_t c : tail)
        names += (names.empty() ? "" : ",") + reg.name(c);
    v.witness.push_back({"tail", "{" + names + "}"});
    v.reason = "class sets repeat between levels " + std::to_string(out.orbit.repeat_from) + " and " +
               std::to_string(out.orbit.repeat_at);
    return out;
}

PhiPsi phi_psi(const Representation& m, int n_cap, std::uint64_t seed)
{
    PhiPsi out;
    IsoClassRegistry reg(m.algebra());
    OrbitEngine eng(reg, static_cast<std::size_t>(-1), seed);
    try {
        ClassMultiset top = eng.classes_of(m);
        // One vector per distinct summand class of M: add M is generated by them.
        std::vector<ClassMultiset> vecs;
        for (const auto& [c, k] : top)
            vecs.push_back({{c, 1}});
        std::vector<std::vector<ClassMultiset>> history{vecs};
        std::vector<std::set<std::size_t>> sets;
        auto level_set = [](const std::vector<ClassMultiset>& vs) {
            std::set<std::size_t> s;
            for (const auto& v : vs)
                for (std::size_t c : support(v))
                    s.insert(c);
            return s;
        };
        sets.push_back(level_set(vecs));
        int n_rep = -1, n_again = -1;
        for (int n = 1; n <= n_cap && n_rep < 0; ++n) {
            std::vector<ClassMultiset> next;
            for (const auto& v : history.back())
                next.push_back(eng.step(v));
            history.push_back(next);
            sets.push_back(level_set(next));
            for (int j = 0; j < n; ++j)
                if (sets[j] == sets[n]) {
                    n_rep = j;
                    n_again = n;
                    break;
                }
        }
        if (n_rep < 0) {
            out.reason = "class sets do not repeat by level " + std::to_string(n_cap);
            return out;
        }
        std::set<std::size_t> u;
        for (int n = n_rep; n < n_again; ++n)
            u.insert(sets[n].begin(), sets[n].end());
        // On span(U) the images L^k stabilize after |U| steps.
        int certified = n_rep + static_cast<int>(u.size());
        if (certified > n_cap) {
            out.reason = "rank stabilization certified only at level " + std::to_string(certified);
            return out;
        }
        while (static_cast<int>(history.size()) <= certified) {
            std::vector<ClassMultiset> next;
            for (const auto& v : history.back())
                next.push_back(eng.step(v));
            history.push_back(next);
        }
        for (int n = 0; n <= certified; ++n) {
            std::vector<std::vector<long long>> rows;
            for (const auto& v : history[n]) {
                std::vector<long long> row(reg.size(), 0);
                for (const auto& [c, k] : v)
                    row[c] = static_cast<long long>(k);
                rows.push_back(row);
            }
            out.ranks.push_back(rational_rank(rows));
        }
        out.certified_level = certified;
        int phi = certified;
        while (phi > 0 && out.ranks[phi - 1] == out.ranks[certified])
            --phi;
        int extra = 0;
        for (std::size_t c : level_set(history[phi])) {
            std::optional<int> pd = eng.pd({c}, n_cap);
            if (!pd) {
                out.reason = "projective dimension of " + reg.name(c) + " undetermined by level " +
                             std::to_string(n_cap);
                return out;
            }
            if (*pd >= 0)
                extra = std::max(extra, *pd);
        }
        out.phi = phi;
        out.psi = phi + extra;
        out.conclusive = true;
    } catch (const InconclusiveError& e) {
        out.reason = std::string("decomposition inconclusive: ") + e.what();
    }
    return out;
}

std::optional<int> projective_dimension(const Representation& m, int n_cap, std::uint64_t seed)
{
    IsoClassRegistry reg(m.algebra());
    OrbitEngine eng(reg, static_cast<std::size_t>(-1), seed);
    return eng.pd(support(eng.classes_of(m)), n_cap);
}

bool in_add(const Representation& x, const Representation& v, std::uint64_t seed)
{
    if (x.is_zero())
        return true;
    if (v.is_zero())
        return false;
    std::vector<Representation> parts;
    for (const auto& [p, k] : decompose(v, false, seed).pieces)
        parts.push_back(p);
    for (const auto& [p, k] : decompose(x, false, seed).pieces) {
        bool found = false;
        for (const auto& q : parts)
            if (q.dim_vector() == p.dim_vector() && indecomposable_isomorphism(p, q)) {
                found = true;
                break;
            }
        if (!found)
            return false;
    }
    return true;
}

namespace {

// Σ maps[k] ∘ π_k : ⊕ parts → target.
ModuleHom from_sum(const DirectSum& ds, const Representation& target, const std::vector<ModuleHom>& maps)
{
    ModuleHom f = ModuleHom::zero(ds.sum, target);
    for (std::size_t k = 0; k < maps.size(); ++k)
        f = f + maps[k] * ds.projections[k];
    return f;
}

std::optional<ITSequence> sequence_from(const Representation& test, const Representation& x, const DirectSum& ds,
                                        const ModuleHom& f, const Representation& v, std::uint64_t seed)
{
    if (!f.is_surjective())
        return std::nullopt;
    Subobject k = kernel(f);
    if (!in_add(k.object, v, seed))
        return std::nullopt;
    return ITSequence{test, x, ds.sum, k.object, f, k.inclusion};
}

}  // namespace

ITResult check_it_witness(const Representation& v, int n, const std::vector<Representation>& tests,
                          std::uint64_t seed)
{
    if (n < 0)
        throw ArgumentError("check_it_witness: n must be nonnegative");
    ITResult out;
    out.v = v;
    out.n = n;
    out.verdict.bounds = {{"n", n}, {"tests", static_cast<long long>(tests.size())}};
    std::vector<Representation> parts;
    for (const auto& [p, k] : decompose(v, false, seed).pieces)
        parts.push_back(p);
    std::mt19937_64 rng(seed);
    std::optional<std::size_t> undecided;
    long long attempts_used = 0;

    for (std::size_t t = 0; t < tests.size(); ++t) {
        require_same_algebra(v, tests[t], "check_it_witness");
        SyzygyResult s = syzygy(DerivedObject::module(tests[t]), n);
        Representation x = *s.module;

        // Right add V-approximation: every basis hom from every summand.
        std::vector<Representation> copies;
        std::vector<ModuleHom> maps;
        for (const auto& p : parts)
            for (const auto& h : hom_basis(p, x)) {
                copies.push_back(p);
                maps.push_back(h);
            }
        if (x.is_zero()) {
            Representation z = Representation::zero(v.algebra());
            out.sequences.push_back({tests[t], x, z, z, ModuleHom::zero(z, x), ModuleHom::zero(z, z)});
            continue;
        }
        DirectSum ds = copies.empty() ? DirectSum{Representation::zero(v.algebra()), {}, {}} : direct_sum(copies);
        ModuleHom f = from_sum(ds, x, maps);
        if (!f.is_surjective()) {
            Subobject im = image(f);
            out.verdict.verdict = Verdict::FailsWithCounterexample;
            out.counterexample = t;
            out.verdict.witness = {{"test_index", std::to_string(t)},
                                   {"test_dims", dims_string(tests[t].dim_vector())},
                                   {"syzygy_dims", dims_string(x.dim_vector())},
                                   {"approximation_image_dims", dims_string(im.object.dim_vector())}};
            out.verdict.reason = "no epimorphism from add V onto the syzygy";
            out.sequences.clear();
            return out;
        }
        if (auto seq = sequence_from(tests[t], x, ds, f, v, seed)) {
            out.sequences.push_back(*seq);
            continue;
        }
        // Seeded search over multiplicity vectors with random maps.
        std::optional<ITSequence> found;
        const std::size_t budget = 256;
        std::size_t tries = 0;
        std::size_t cap = x.total_dim();
        std::vector<std::size_t> mult(parts.size(), 0);
        std::vector<std::vector<ModuleHom>> bases;
        for (const auto& p : parts)
            bases.push_back(hom_basis(p, x));
        while (!found && tries < budget) {
            std::size_t i = 0;
            while (i < mult.size() && mult[i] == cap)
                mult[i++] = 0;
            if (i == mult.size())
                break;
            ++mult[i];
            std::vector<Representation> w;
            std::vector<ModuleHom> ws;
            for (std::size_t j = 0; j < parts.size(); ++j)
                for (std::size_t c = 0; c < mult[j]; ++c) {
                    ModuleHom g = ModuleHom::zero(parts[j], x);
                    for (const auto& b : bases[j])
                        g = g + b.scaled(static_cast<Matrix::value_type>(rng() % x.field().p()));
                    w.push_back(parts[j]);
                    ws.push_back(g);
                }
            ++tries;
            DirectSum dw = direct_sum(w);
            found = sequence_from(tests[t], x, dw, from_sum(dw, x, ws), v, seed);
        }
        attempts_used += static_cast<long long>(tries);
        if (found) {
            out.sequences.push_back(*found);
            continue;
        }
        if (!undecided)
            undecided = t;
    }
    out.verdict.bounds.push_back({"search_attempts", attempts_used});
    if (undecided) {
        out.verdict.verdict = Verdict::Inconclusive;
        out.verdict.reason = "search budget exhausted";
        out.verdict.witness = {{"test_index", std::to_string(*undecided)}};
        out.sequences.clear();
        return out;
    }
    out.verdict.verdict = Verdict::HoldsUpToBound;
    return out;
}

AuslanderEstimate auslander_bound_estimate(const Representation& m, const std::vector<Representation>& testset,
                                           int i_max, const std::vector<std::string>& names)
{
    if (i_max < 1)
        throw ArgumentError("auslander_bound_estimate: i_max must be at least 1");
    AuslanderEstimate out;
    BoundedComplex x = BoundedComplex::concentrated(m);
    int tail = i_max / 2;
    int bound = 0;
    std::optional<std::string> unstable;
    for (std::size_t t = 0; t < testset.size(); ++t) {
        HomRow row;
        row.target = t < names.size() ? names[t] : "N" + std::to_string(t);
        BoundedComplex y = BoundedComplex::concentrated(testset[t]);
        bool zero_in_tail = false, nonzero_in_tail = false;
        for (int i = 0; i <= i_max; ++i) {
            std::size_t d = derived_hom_dim(x, y, i);
            row.dims.push_back(d);
            if (d)
                row.last_nonzero = i;
            if (i > tail)
                (d ? nonzero_in_tail : zero_in_tail) = true;
        }
        row.qualifies = !nonzero_in_tail;
        row.unstable = nonzero_in_tail && zero_in_tail;
        if (row.qualifies)
            bound = std::max(bound, row.last_nonzero);
        if (row.unstable && !unstable)
            unstable = row.target;
        out.rows.push_back(row);
    }
    out.verdict.bounds = {{"i_max", i_max}, {"tail_from", tail + 1}};
    if (unstable) {
        out.verdict.verdict = Verdict::Inconclusive;
        out.verdict.reason = "dimensions change inside the tail window";
        out.verdict.witness = {{"target", *unstable}};
        return out;
    }
    out.bound = bound;
    out.verdict.verdict = Verdict::HoldsUpToBound;
    out.verdict.bounds.push_back({"bound", bound});
    return out;
}

GarcResult garc_check(const Representation& m, int n, int i_max)
{
    if (n < 0 || i_max < n + 2)
        throw ArgumentError("garc_check: need n >= 0 and i_max >= n + 2");
    GarcResult out;
    Representation r = regular(m.algebra());
    auto dims_for = [&](const Representation& x) {
        BoundedComplex a = BoundedComplex::concentrated(x);
        BoundedComplex b = BoundedComplex::concentrated(direct_sum(x, r));
        std::vector<std::size_t> d;
        for (int i = 0; i <= i_max; ++i)
            d.push_back(derived_hom_dim(a, b, i));
        return d;
    };
    auto vanishes = [&](const std::vector<std::size_t>& d, int from) {
        for (int i = from; i <= i_max; ++i)
            if (d[i])
                return false;
        return true;
    };
    std::vector<std::size_t> dm = dims_for(m);
    int tail = i_max / 2 + 1;
    out.verdict.bounds = {{"n", n}, {"i_max", i_max}, {"tail_from", tail}};
    out.hypothesis = vanishes(dm, n + 1);

    Representation syz = *syzygy(DerivedObject::module(m), n).reduced_module;
    out.condition_module = vanishes(dm, tail);
    out.condition_syzygy = syz.is_zero() || vanishes(dims_for(syz), tail);
    out.conditions_agree = out.condition_module == out.condition_syzygy;
    out.verdict.witness.push_back({"condition_1", out.condition_module ? "true" : "false"});
    out.verdict.witness.push_back({"condition_2", out.condition_syzygy ? "true" : "false"});

    CappedResolution p = min_proj_resolution(m, i_max);
    if (p.closes()) {
        int pd = 0;
        for (int i = 0; i <= i_max; ++i)
            if (!p.complex.term(i).is_zero())
                pd = i;
        out.pd = pd;
    }
    if (!out.hypothesis) {
        int i = n + 1;
        while (!dm[i])
            ++i;
        out.vacuous = true;
        out.verdict.verdict = Verdict::HoldsUpToBound;
        out.verdict.witness.push_back({"nonvanishing_degree", std::to_string(i)});
        out.verdict.reason = "hypothesis fails on the window";
        return out;
    }
    if (out.pd && *out.pd <= n) {
        out.verdict.verdict = Verdict::HoldsUpToBound;
        out.verdict.reason = "pd " + std::to_string(*out.pd) + " <= " + std::to_string(n);
        return out;
    }
    if (out.pd) {
        out.verdict.verdict = Verdict::FailsWithCounterexample;
        out.verdict.witness.push_back({"pd", std::to_string(*out.pd)});
        out.verdict.reason = "Ext vanishes above n on the window but pd exceeds n";
        return out;
    }
    out.verdict.verdict = Verdict::Inconclusive;
    out.verdict.reason = "pd exceeds the window";
    return out;
}

TiltingResult tilting_hom_check(const std::vector<BoundedComplex>& summands, int i_lo, int i_hi)
{
    if (summands.empty())
        throw ArgumentError("tilting_hom_check: no summands");
    if (i_lo > i_hi)
        throw ArgumentError("tilting_hom_check: empty degree range");
    BoundedComplex t = direct_sum(summands).sum;
    TiltingResult out;
    out.verdict.bounds = {{"i_lo", i_lo}, {"i_hi", i_hi}};
    out.end_dim = derived_hom_dim(t, t, 0);
    std::optional<int> bad;
    for (int i = i_lo; i <= i_hi; ++i) {
        std::size_t d = i == 0 ? out.end_dim : derived_hom_dim(t, t, i);
        out.dims.push_back({i, d});
        if (i != 0 && d && !bad)
            bad = i;
    }
    if (bad) {
        out.verdict.verdict = Verdict::FailsWithCounterexample;
        out.verdict.witness = {{"degree", std::to_string(*bad)}};
        for (const auto& [i, d] : out.dims)
            if (i == *bad)
                out.verdict.witness.push_back({"dim", std::to_string(d)});
        out.verdict.reason = "Hom(T, T[i]) nonzero off degree 0";
    } else {
        out.verdict.verdict = Verdict::HoldsUpToBound;
    }
    return out;
}

}  // namespace dersyz
