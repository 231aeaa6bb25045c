#include "dersyz/derived.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "dersyz/decompose.hpp"
#include "dersyz/linalg.hpp"

namespace dersyz {

namespace {

bool window_within(const BoundedComplex& x, int lo, int hi)
{
    auto w = homology_window(x);
    return !w || (w->first >= lo && w->second <= hi);
}

void postcondition(bool ok, const std::string& what)
{
    if (!ok)
        throw std::logic_error("postcondition failed: " + what);
}

// Module at degree 0 quasi-isomorphic to x, when x has homology in degree 0 only.
std::optional<Representation> module_of(const BoundedComplex& x)
{
    if (!window_within(x, 0, 0))
        return std::nullopt;
    if (x.lo() == 0 && x.hi() == 0)
        return x.term(0);
    return homology(x, 0);
}

std::map<int, ModuleHom> restrict_components(const ChainMap& f, int from)
{
    std::map<int, ModuleHom> c;
    for (const auto& [i, g] : f.components())
        if (i >= from)
            c.emplace(i, g);
    return c;
}

// σ_{[n,∞)} of a chain map, then shifted by -n.
ChainMap truncate_shift(const ChainMap& f, const BoundedComplex& src, const BoundedComplex& tgt, int n)
{
    std::map<int, ModuleHom> c;
    for (const auto& [i, g] : restrict_components(f, n))
        c.emplace(i - n, g);
    return ChainMap(src, tgt, std::move(c));
}

Matrix unit_column(const PrimeField& F, std::size_t n, std::size_t k)
{
    Matrix e(F, n, 1);
    e.at(k, 0) = 1;
    return e;
}

Matrix entries_column(const PrimeField& F, const std::vector<PrimeField::value_type>& v)
{
    return Matrix::column_vector(F, v);
}

// Strict lift ũ : P_L → P_M of u : L → M with aug_M ũ - u aug_L = d h + h d.
ChainMap lift_to_resolutions(const CappedResolution& rl, const CappedResolution& rm, const ChainMap& u)
{
    const BoundedComplex& PL = rl.complex;
    const BoundedComplex& PM = rm.complex;
    const BoundedComplex& M = rm.target;
    const PrimeField& F = PL.algebra()->field();
    HomComplexBasis b0 = hom_complex_basis(PL, PM, 0);
    HomComplexBasis b1 = hom_complex_basis(PL, M, 1);
    EntryLayout lay0 = entry_layout(PL, PM, -1);
    EntryLayout layM = entry_layout(PL, M, 0);
    const std::size_t n0 = b0.size(), n1 = b1.size();

    Matrix dU = hom_complex_differential(PL, PM, b0);  // rows: lay0
    Matrix dH = hom_complex_differential(PL, M, b1);   // rows: layM
    Matrix A(F, layM.size, n0);
    for (std::size_t j = 0; j < n0; ++j) {
        auto fam = b0.combine(unit_column(F, n0, j));
        std::map<int, ModuleHom> comp;
        for (const auto& [i, g] : fam)
            comp.emplace(i, rm.augmentation.component(i) * g);
        A.set_block(0, j, entries_column(F, entry_coordinates(layM, comp)));
    }
    std::map<int, ModuleHom> target;
    for (const auto& [i, g] : rl.augmentation.components())
        target.emplace(i, u.component(i) * g);

    Matrix sys(F, lay0.size + layM.size, n0 + n1);
    if (lay0.size && n0)
        sys.set_block(0, 0, dU);
    if (layM.size && n0)
        sys.set_block(lay0.size, 0, A);
    if (layM.size && n1)
        sys.set_block(lay0.size, n0, dH.scaled(F.neg(1)));
    Matrix rhs(F, lay0.size + layM.size, 1);
    if (layM.size)
        rhs.set_block(lay0.size, 0, entries_column(F, entry_coordinates(layM, target)));
    auto sol = solve_particular(sys, rhs);
    if (!sol)
        throw std::logic_error("no lift of the triangle map to resolutions");
    Matrix coeffs = n0 ? sol->block(0, 0, n0, 1) : Matrix(F, 0, 1);
    return ChainMap(PL, PM, n0 ? b0.combine(coeffs) : std::map<int, ModuleHom>{});
}

// Per-vertex selection of coordinate blocks: blocks[b][v] is the size of block b
// at vertex v in the source; the target concatenates the kept blocks.
ModuleHom block_selection(const Representation& src, const Representation& tgt,
                          const std::vector<std::vector<std::size_t>>& blocks, const std::vector<std::size_t>& keep)
{
    const PrimeField& F = src.field();
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < src.dim_vector().size(); ++v) {
        Matrix m(F, tgt.dim(v), src.dim(v));
        std::size_t row = 0;
        for (auto b : keep) {
            std::size_t col = 0;
            for (std::size_t c = 0; c < b; ++c)
                col += blocks[c][v];
            for (std::size_t k = 0; k < blocks[b][v]; ++k)
                m.at(row + k, col + k) = 1;
            row += blocks[b][v];
        }
        maps.push_back(std::move(m));
    }
    return make_hom_unchecked(src, tgt, std::move(maps));
}

std::vector<std::size_t> generator_counts(const Representation& p, std::size_t nv)
{
    std::vector<std::size_t> c(nv, 0);
    if (p.free_generators())
        for (auto g : *p.free_generators())
            ++c[g];
    else {
        auto rad = radical_subspaces(p);
        for (std::size_t v = 0; v < nv; ++v)
            c[v] = p.dim(v) - rad[v].cols();
    }
    return c;
}

Equivalence module_equivalence(const Representation& a, const Representation& b, std::uint64_t seed)
{
    try {
        return is_isomorphic(a, b, seed).isomorphic ? Equivalence::Yes : Equivalence::No;
    } catch (const InconclusiveError&) {
        return Equivalence::Inconclusive;
    }
}

AlgebraPtr level_algebra(const AlgebraPtr& base, int lo, int hi)
{
    const QuiverSpec& b = base->spec();
    const std::size_t nv = b.vertices.size(), na = b.arrows.size();
    const std::size_t levels = static_cast<std::size_t>(hi - lo + 1);
    QuiverSpec s;
    s.field = b.field;
    s.nilpotency_bound = b.nilpotency_bound + 1;
    auto vid = [&](std::size_t v, std::size_t l) { return l * nv + v; };
    for (std::size_t l = 0; l < levels; ++l)
        for (std::size_t v = 0; v < nv; ++v)
            s.vertices.push_back(b.vertices[v] + "@" + std::to_string(lo + static_cast<int>(l)));
    // base arrows per level, then d arrows from level l to l-1
    for (std::size_t l = 0; l < levels; ++l)
        for (std::size_t a = 0; a < na; ++a)
            s.arrows.push_back({b.arrows[a].name + "@" + std::to_string(l), vid(b.arrows[a].source, l),
                                vid(b.arrows[a].target, l)});
    auto aid = [&](std::size_t a, std::size_t l) { return l * na + a; };
    auto did = [&](std::size_t v, std::size_t l) { return levels * na + (l - 1) * nv + v; };
    for (std::size_t l = 1; l < levels; ++l)
        for (std::size_t v = 0; v < nv; ++v)
            s.arrows.push_back({"d@" + std::to_string(l) + "." + std::to_string(v), vid(v, l), vid(v, l - 1)});
    for (std::size_t l = 0; l < levels; ++l)
        for (const Relation& r : b.relations) {
            Relation lr;
            for (const PathTerm& t : r) {
                PathTerm lt{t.coeff, {}};
                for (auto a : t.arrows)
                    lt.arrows.push_back(aid(a, l));
                lr.push_back(std::move(lt));
            }
            s.relations.push_back(std::move(lr));
        }
    for (std::size_t l = 2; l < levels; ++l)
        for (std::size_t v = 0; v < nv; ++v)
            s.relations.push_back({{1, {did(v, l), did(v, l - 1)}}});
    for (std::size_t l = 1; l < levels; ++l)
        for (std::size_t a = 0; a < na; ++a) {
            std::size_t src = b.arrows[a].source, tgt = b.arrows[a].target;
            s.relations.push_back({{1, {aid(a, l), did(tgt, l)}}, {-1, {did(src, l), aid(a, l - 1)}}});
        }
    return build_algebra(s);
}

}  // namespace

Representation complex_module(const BoundedComplex& x, int lo, int hi)
{
    const AlgebraPtr& base = x.algebra();
    AlgebraPtr alg = level_algebra(base, lo, hi);
    const std::size_t nv = base->num_vertices(), na = base->num_arrows();
    std::vector<std::size_t> dims;
    for (int i = lo; i <= hi; ++i)
        for (std::size_t v = 0; v < nv; ++v)
            dims.push_back(x.term(i).dim(v));
    std::vector<Matrix> maps;
    for (int i = lo; i <= hi; ++i)
        for (std::size_t a = 0; a < na; ++a)
            maps.push_back(x.term(i).arrow_map(a));
    for (int i = lo + 1; i <= hi; ++i)
        for (std::size_t v = 0; v < nv; ++v)
            maps.push_back(x.differential(i).at(v));
    return Representation(alg, std::move(dims), std::move(maps));
}

Equivalence chain_isomorphic(const BoundedComplex& x, const BoundedComplex& y, std::uint64_t seed)
{
    BoundedComplex xt = x.trimmed(), yt = y.trimmed();
    if (xt.is_zero() || yt.is_zero())
        return xt.is_zero() && yt.is_zero() ? Equivalence::Yes : Equivalence::No;
    int lo = std::min(xt.lo(), yt.lo()), hi = std::max(xt.hi(), yt.hi());
    for (int i = lo; i <= hi; ++i)
        if (xt.term(i).dim_vector() != yt.term(i).dim_vector())
            return Equivalence::No;
    return module_equivalence(complex_module(xt, lo, hi), complex_module(yt, lo, hi), seed);
}

DerivedObject::DerivedObject(BoundedComplex representative)
    : rep_(std::move(representative)), window_(homology_window(rep_))
{
}

DerivedObject DerivedObject::module(const Representation& m, int degree)
{
    return DerivedObject(BoundedComplex::concentrated(m, degree));
}

int DerivedObject::a() const
{
    if (!window_)
        throw ArgumentError("the zero object has no homological window");
    return window_->first;
}

int DerivedObject::k() const
{
    if (!window_)
        throw ArgumentError("the zero object has no homological window");
    return window_->second;
}

int required_window_top(const DerivedObject& m, int n)
{
    return m.is_zero() ? n + 1 : std::max(n, m.k()) + 1;
}

int required_window_bottom(const DerivedObject& m, int n)
{
    return m.is_zero() ? n - 1 : std::min(n, m.a()) - 1;
}

SyzygyResult syzygy(const DerivedObject& m, int n, int window_top, ResolutionChoice choice)
{
    SyzygyResult out;
    out.level = n;
    const AlgebraPtr& alg = m.algebra();
    if (m.is_zero()) {
        out.representative = BoundedComplex::zero(alg);
        out.module = out.reduced_module = Representation::zero(alg);
        return out;
    }
    int need = required_window_top(m, n);
    if (window_top < need)
        throw ArgumentError("syzygy window_top " + std::to_string(window_top) +
                            " is below the required bound max(n, k) + 1 = " + std::to_string(need));
    const int a = m.a(), k = m.k();
    if (n <= a) {
        out.representative = shift(m.representative(), -n);
        postcondition(window_within(out.representative, a - n, k - n), "Ω^n(M) ∈ D^[a-n, k-n] for n ≤ a");
    } else {
        CappedResolution p = proj_resolution_complex(m.representative(), window_top, choice.mode, choice.seed);
        out.representative = capped_model(p, n);
        if (n >= k)
            postcondition(window_within(out.representative, 0, 0), "Ω^n(M) ∈ D^[0,0] for n ≥ k");
        else
            postcondition(window_within(out.representative, 0, k - n), "Ω^n(M) ∈ D^[0, k-n] for a ≤ n ≤ k");
    }
    out.module = module_of(out.representative);
    if (out.module)
        out.reduced_module = strip_projectives(*out.module, choice.seed);
    return out;
}

SyzygyResult syzygy(const DerivedObject& m, int n)
{
    return syzygy(m, n, required_window_top(m, n));
}

SyzygyResult cosyzygy(const DerivedObject& m, int n, int window_bottom, ResolutionChoice choice)
{
    SyzygyResult out;
    out.level = n;
    out.cosyzygy = true;
    const AlgebraPtr& alg = m.algebra();
    if (m.is_zero()) {
        out.representative = BoundedComplex::zero(alg);
        out.module = out.reduced_module = Representation::zero(alg);
        return out;
    }
    int need = required_window_bottom(m, n);
    if (window_bottom > need)
        throw ArgumentError("cosyzygy window_bottom " + std::to_string(window_bottom) +
                            " is above the required bound min(n, a) - 1 = " + std::to_string(need));
    const int a = m.a(), k = m.k();
    if (n >= k) {
        out.representative = shift(m.representative(), -n);
        postcondition(window_within(out.representative, a - n, k - n), "Ω_n(M) ∈ D^[a-n, k-n] for n ≥ k");
    } else {
        CappedCoresolution c = inj_resolution(m.representative(), window_bottom, choice.mode, choice.seed);
        out.representative = capped_comodel(c, n);
        if (n <= a)
            postcondition(window_within(out.representative, 0, 0), "Ω_n(M) ∈ D^[0,0] for n ≤ a");
        else
            postcondition(window_within(out.representative, a - n, 0), "Ω_n(M) ∈ D^[a-n, 0] for a ≤ n ≤ k");
    }
    out.module = module_of(out.representative);
    if (out.module)
        out.reduced_module = strip_injectives(*out.module, choice.seed);
    return out;
}

SyzygyResult cosyzygy(const DerivedObject& m, int n)
{
    return cosyzygy(m, n, required_window_bottom(m, n));
}

int required_hom_window(const BoundedComplex& x, const BoundedComplex& y, int i)
{
    BoundedComplex xt = x.trimmed();
    BoundedComplex yt = y.trimmed();
    if (xt.is_zero() || yt.is_zero())
        return xt.lo() - 1;
    return std::max(yt.hi() + i + 1, xt.lo());
}

std::size_t derived_hom_dim(const BoundedComplex& x, const BoundedComplex& y, int i, ResolutionChoice choice)
{
    BoundedComplex xt = x.trimmed();
    BoundedComplex yt = y.trimmed();
    if (xt.is_zero() || yt.is_zero())
        return 0;
    if (yt.hi() + i + 1 < xt.lo())
        return 0;
    int w = required_hom_window(xt, yt, i);
    CappedResolution p = proj_resolution_complex(xt, w, choice.mode, choice.seed);
    return hom_complex_homology_dim(truncate(p.complex, kMinusInfinity, w), yt, -i);
}

std::size_t derived_hom_dim(const DerivedObject& x, const DerivedObject& y, int i, ResolutionChoice choice)
{
    return derived_hom_dim(x.representative(), y.representative(), i, choice);
}

bool TriangleWitness::verify() const
{
    if (!u.commutes())
        return false;
    if (u.source().lo() != first.lo() || u.target().lo() != second.lo())
        return false;
    ConeResult c = cone(u);
    if (!phi.commutes())
        return false;
    const BoundedComplex& from = phi_into_cone ? phi.source() : phi.target();
    const BoundedComplex& to_cone = phi_into_cone ? phi.target() : phi.source();
    for (int i = std::min(c.cone.lo(), third.lo()) - 1; i <= std::max(c.cone.hi(), third.hi()) + 1; ++i) {
        if (from.term(i).dim_vector() != third.term(i).dim_vector())
            return false;
        if (to_cone.term(i).dim_vector() != c.cone.term(i).dim_vector())
            return false;
    }
    if (!is_quasi_iso(phi))
        return false;
    if (v) {
        if (!v->commutes())
            return false;
        if (!phi_into_cone && !(*v - phi * c.from_target).is_zero())
            return false;
    }
    return true;
}

TriangleWitness syzygy_triangle(const DerivedObject& m, int n, int mm, ResolutionChoice choice)
{
    if (n < mm)
        throw ArgumentError("syzygy triangle needs n ≥ m");
    const AlgebraPtr& alg = m.algebra();
    TriangleWitness t;
    if (m.is_zero()) {
        BoundedComplex z = BoundedComplex::zero(alg);
        t.first = t.second = t.third = z;
        t.u = t.phi = ChainMap::zero(z, z);
        t.v = ChainMap::zero(z, z);
        return t;
    }
    int w = required_window_top(m, n + 1);
    CappedResolution p = proj_resolution_complex(m.representative(), w, choice.mode, choice.seed);
    const BoundedComplex& P = p.complex;
    t.first = shift(truncate(P, n + 1, kPlusInfinity), -1 - mm);
    t.second = shift(truncate(P, mm, n), -mm);
    t.third = shift(truncate(P, mm, kPlusInfinity), -mm);
    std::map<int, ModuleHom> comps;
    ModuleHom d = P.differential(n + 1);
    if (!t.first.term(n - mm).is_zero() && !t.second.term(n - mm).is_zero())
        comps.emplace(n - mm, mm % 2 == 0 ? d : -d);
    t.u = ChainMap(t.first, t.second, std::move(comps));
    ConeResult c = cone(t.u);
    t.phi = cone_identification(c, t.u, t.third);
    t.v = t.phi * c.from_target;
    if (!t.verify())
        throw std::logic_error("syzygy triangle failed verification");
    return t;
}

TriangleWitness cosyzygy_triangle(const DerivedObject& m, int n, int mm, ResolutionChoice choice)
{
    if (n < mm)
        throw ArgumentError("cosyzygy triangle needs n ≥ m");
    const AlgebraPtr& alg = m.algebra();
    TriangleWitness t;
    t.phi_into_cone = true;
    if (m.is_zero()) {
        BoundedComplex z = BoundedComplex::zero(alg);
        t.first = t.second = t.third = z;
        t.u = t.phi = ChainMap::zero(z, z);
        return t;
    }
    int wb = required_window_bottom(m, mm - 1);
    CappedCoresolution c = inj_resolution(m.representative(), wb, choice.mode, choice.seed);
    const BoundedComplex& I = c.complex;
    t.first = shift(truncate(I, kMinusInfinity, n), -n);
    t.second = shift(truncate(I, mm, n), -n);
    t.third = shift(truncate(I, kMinusInfinity, mm - 1), 1 - n);
    std::map<int, ModuleHom> comps;
    for (int i = t.second.lo(); i <= t.second.hi(); ++i)
        if (!t.second.term(i).is_zero())
            comps.emplace(i, ModuleHom::identity(t.second.term(i)));
    t.u = ChainMap(t.first, t.second, std::move(comps));
    ConeResult cn = cone(t.u);
    t.phi = cone_shift_inclusion(cn, t.u, t.third);
    if (!t.verify())
        throw std::logic_error("cosyzygy triangle failed verification");
    return t;
}

TriangleWitness triangle_of_syzygies(const TriangleWitness& t, int n)
{
    if (!t.verify())
        throw ArgumentError("triangle_of_syzygies needs a verified triangle");
    const BoundedComplex& L = t.first;
    const BoundedComplex& M = t.second;
    const AlgebraPtr& alg = L.algebra();
    int w = n + 1;
    for (const BoundedComplex* x : {&L, &M, &t.third}) {
        BoundedComplex xt = x->trimmed();
        if (!xt.is_zero())
            w = std::max(w, xt.hi() + 1);
    }
    CappedResolution rl = proj_resolution_complex(L, w);
    CappedResolution rm = proj_resolution_complex(M, w);
    ChainMap lift = lift_to_resolutions(rl, rm, t.u);
    const BoundedComplex& PL = rl.complex;
    const BoundedComplex& PM = rm.complex;

    // Cyl = cone(P_L → P_L ⊕ P_M, x ↦ (x, ũx)); P_L ↪ Cyl has cokernel cone(ũ).
    ComplexSum lm = direct_sum(std::vector<BoundedComplex>{PL, PM});
    ChainMap g = lm.inclusions[0] + lm.inclusions[1] * lift;
    ConeResult cyl = cone(g);
    ConeResult cu = cone(lift);
    ChainMap iota = cyl.from_target * lm.inclusions[0];
    std::map<int, ModuleHom> pic;
    for (int i = cyl.cone.lo(); i <= cyl.cone.hi(); ++i) {
        if (cyl.cone.term(i).is_zero() || cu.cone.term(i).is_zero())
            continue;
        std::vector<std::vector<std::size_t>> blocks = {PL.term(i).dim_vector(), PM.term(i).dim_vector(),
                                                        PL.term(i - 1).dim_vector()};
        pic.emplace(i, block_selection(cyl.cone.term(i), cu.cone.term(i), blocks, {1, 2}));
    }
    ChainMap pi(cyl.cone, cu.cone, std::move(pic));

    TriangleWitness out;
    out.first = shift(truncate(PL, n, kPlusInfinity), -n);
    out.second = shift(truncate(cyl.cone, n, kPlusInfinity), -n);
    out.third = shift(truncate(cu.cone, n, kPlusInfinity), -n);
    out.u = truncate_shift(iota, out.first, out.second, n);
    out.v = truncate_shift(pi, out.second, out.third, n);
    ConeResult c = cone(out.u);
    std::map<int, ModuleHom> phic;
    for (int i = c.cone.lo(); i <= c.cone.hi(); ++i) {
        if (c.cone.term(i).is_zero() || out.third.term(i).is_zero())
            continue;
        DirectSum ds = direct_sum(std::vector<Representation>{out.second.term(i), out.first.term(i - 1)});
        ModuleHom sel = make_hom_unchecked(c.cone.term(i), ds.sum, ModuleHom::identity(ds.sum).maps());
        phic.emplace(i, out.v->component(i) * ds.projections[0] * sel);
    }
    out.phi = ChainMap(c.cone, out.third, std::move(phic));
    (void)alg;
    if (!out.verify())
        throw std::logic_error("triangle of syzygies failed verification");
    return out;
}

const char* to_string(Equivalence e)
{
    switch (e) {
    case Equivalence::Yes:
        return "yes";
    case Equivalence::No:
        return "no";
    default:
        return "inconclusive";
    }
}

Equivalence projectively_equivalent(const BoundedComplex& x, const BoundedComplex& y, std::uint64_t seed)
{
    const AlgebraPtr& alg = x.algebra();
    const std::size_t nv = alg->num_vertices();
    auto wx = homology_window(x), wy = homology_window(y);
    int lo = std::min(wx ? wx->first : 0, wy ? wy->first : 0);
    int hi = std::max(wx ? wx->second : 0, wy ? wy->second : 0);
    for (int i = lo; i <= hi; ++i)
        if (i != 0 && homology_dims(x, i) != homology_dims(y, i))
            return Equivalence::No;
    Equivalence top = Equivalence::Yes;
    try {
        top = module_equivalence(strip_projectives(homology(x, 0), seed), strip_projectives(homology(y, 0), seed), seed);
    } catch (const InconclusiveError&) {
        top = Equivalence::Inconclusive;
    }
    if (top == Equivalence::No)
        return top;
    if (window_within(x, 0, 0) && window_within(y, 0, 0))
        return top;

    BoundedComplex xt = x.trimmed(), yt = y.trimmed();
    int w = std::max({hi + 1, xt.is_zero() ? 0 : xt.hi(), yt.is_zero() ? 0 : yt.hi()});
    BoundedComplex rx = proj_resolution_complex(x, w).complex;
    BoundedComplex ry = proj_resolution_complex(y, w).complex;
    for (int i = std::min(rx.lo(), ry.lo()); i <= w; ++i)
        if (i != 0 && generator_counts(rx.term(i), nv) != generator_counts(ry.term(i), nv))
            return Equivalence::No;
    if (rx.term(w + 1).dim_vector() != ry.term(w + 1).dim_vector())
        return Equivalence::No;
    // balance degree 0 with stalk projectives
    auto cx = generator_counts(rx.term(0), nv), cy = generator_counts(ry.term(0), nv);
    std::vector<std::size_t> qx, qy;
    for (std::size_t v = 0; v < nv; ++v) {
        for (std::size_t k = cx[v]; k < cy[v]; ++k)
            qx.push_back(v);
        for (std::size_t k = cy[v]; k < cx[v]; ++k)
            qy.push_back(v);
    }
    if (!qx.empty())
        rx = direct_sum(rx, BoundedComplex::concentrated(free_module(alg, qx), 0));
    if (!qy.empty())
        ry = direct_sum(ry, BoundedComplex::concentrated(free_module(alg, qy), 0));

    HomComplexBasis b = hom_complex_basis(rx, ry, 0);
    if (b.size() == 0)
        return rx.is_zero() && ry.is_zero() ? Equivalence::Yes : Equivalence::No;
    Matrix k = kernel_basis(hom_complex_differential(rx, ry, b));
    const PrimeField& F = alg->field();
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix coeffs(F, b.size(), 1);
        for (std::size_t j = 0; j < k.cols(); ++j) {
            PrimeField::value_type c = rng() % F.p();
            for (std::size_t r = 0; r < b.size(); ++r)
                coeffs.at(r, 0) = F.add(coeffs.at(r, 0), F.mul(c, k.at(r, j)));
        }
        ChainMap f = make_chain_map_unchecked(rx, ry, b.combine(coeffs));
        if (f.is_iso())
            return top;
    }
    Equivalence exact = chain_isomorphic(rx, ry, seed);
    return exact == Equivalence::Yes ? top : exact;
}

Equivalence projectively_equivalent(const SyzygyResult& x, const SyzygyResult& y, std::uint64_t seed)
{
    if (x.reduced_module && y.reduced_module)
        return module_equivalence(*x.reduced_module, *y.reduced_module, seed);
    return projectively_equivalent(x.representative, y.representative, seed);
}

Equivalence injectively_equivalent(const SyzygyResult& x, const SyzygyResult& y, std::uint64_t seed)
{
    if (x.reduced_module && y.reduced_module)
        return module_equivalence(*x.reduced_module, *y.reduced_module, seed);
    return projectively_equivalent(dualize(x.representative), dualize(y.representative), seed);
}

Equivalence injectively_equivalent(const BoundedComplex& x, const BoundedComplex& y, std::uint64_t seed)
{
    return projectively_equivalent(dualize(x), dualize(y), seed);
}

ShiftCheck dimension_shift(const DerivedObject& m, const DerivedObject& nn, int n, int mm, int j)
{
    ShiftCheck s;
    s.identity = "dimension shift";
    if (mm < 1)
        throw ArgumentError("dimension shifting requires m ≥ 1");
    if (nn.is_zero() || m.is_zero())
        return s;
    if (j <= -nn.a())
        throw ArgumentError("dimension shifting requires j > -c (c = " + std::to_string(nn.a()) + ")");
    s.lhs = derived_hom_dim(syzygy(m, n + mm).representative, nn.representative(), j);
    s.rhs = derived_hom_dim(syzygy(m, n).representative, nn.representative(), j + mm);
    return s;
}

ShiftCheck dimension_shift_dual(const DerivedObject& m, const DerivedObject& nn, int n, int mm, int j)
{
    ShiftCheck s;
    s.identity = "dual dimension shift";
    if (mm < 1)
        throw ArgumentError("dual dimension shifting requires m ≥ 1");
    if (nn.is_zero() || m.is_zero())
        return s;
    if (j <= nn.k())
        throw ArgumentError("dual dimension shifting requires j > d (d = " + std::to_string(nn.k()) + ")");
    s.lhs = derived_hom_dim(nn.representative(), cosyzygy(m, n).representative, j);
    s.rhs = derived_hom_dim(nn.representative(), cosyzygy(m, n + mm).representative, j + mm);
    return s;
}

ShiftCheck auslander_shift(const DerivedObject& m, const DerivedObject& nn, int j)
{
    ShiftCheck s;
    s.identity = "syzygy-cosyzygy shift";
    if (nn.is_zero() || m.is_zero())
        return s;
    const int k = m.k(), c = nn.a();
    if (j <= k - c)
        throw ArgumentError("the syzygy-cosyzygy shift requires j > k - c (k = " + std::to_string(k) +
                            ", c = " + std::to_string(c) + ")");
    s.lhs = derived_hom_dim(m, nn, j);
    s.rhs = derived_hom_dim(syzygy(m, k).representative, cosyzygy(nn, c).representative, j - k + c);
    return s;
}

std::vector<ShiftCheck> verify_shift_identities(const DerivedObject& m, const DerivedObject& nn, int n, int mm, int j)
{
    std::vector<ShiftCheck> out;
    if (m.is_zero() || nn.is_zero())
        return out;
    if (mm >= 1 && j > -nn.a())
        out.push_back(dimension_shift(m, nn, n, mm, j));
    if (mm >= 1 && j > nn.k())
        out.push_back(dimension_shift_dual(m, nn, n, mm, j));
    if (j > m.k() - nn.a())
        out.push_back(auslander_shift(m, nn, j));
    return out;
}

}  // namespace dersyz
