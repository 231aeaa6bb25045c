#include "dersyz/complexes.hpp"

#include <algorithm>
#include <stdexcept>

#include "dersyz/linalg.hpp"

namespace dersyz {

namespace {

ModuleHom sign(const ModuleHom& f, int m)
{
    return (m % 2 == 0) ? f : -f;
}

}  // namespace

BoundedComplex::BoundedComplex(AlgebraPtr algebra, int lo, std::vector<Representation> terms,
                               std::vector<ModuleHom> diffs)
    : alg_(std::move(algebra)), lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs))
{
    if (!alg_)
        throw ArgumentError("complex without an algebra");
    zero_ = Representation::zero(alg_);
    if (terms_.empty()) {
        diffs_.clear();
        return;
    }
    if (diffs_.size() + 1 != terms_.size())
        throw ArgumentError("complex needs one differential between consecutive terms");
    for (const auto& t : terms_)
        if (!same_algebra(t.algebra(), alg_))
            throw ArgumentError("complex term over a different algebra");
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        if (diffs_[k].source().dim_vector() != terms_[k + 1].dim_vector() ||
            diffs_[k].target().dim_vector() != terms_[k].dim_vector())
            throw ArgumentError("differential d_" + std::to_string(lo_ + static_cast<int>(k) + 1) +
                                " has the wrong shape");
    }
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
        if (!(diffs_[k] * diffs_[k + 1]).is_zero())
            throw ArgumentError("d∘d ≠ 0 at degree " + std::to_string(lo_ + static_cast<int>(k) + 2));
}

BoundedComplex BoundedComplex::zero(AlgebraPtr algebra)
{
    return BoundedComplex(std::move(algebra), 0, {}, {});
}

BoundedComplex BoundedComplex::concentrated(const Representation& m, int degree)
{
    return BoundedComplex(m.algebra(), degree, {m}, {});
}

const Representation& BoundedComplex::term(int i) const
{
    return in_support(i) ? terms_[static_cast<std::size_t>(i - lo_)] : zero_;
}

ModuleHom BoundedComplex::differential(int i) const
{
    if (in_support(i) && in_support(i - 1))
        return diffs_[static_cast<std::size_t>(i - 1 - lo_)];
    return ModuleHom::zero(term(i), term(i - 1));
}

bool BoundedComplex::is_zero() const
{
    return total_dim() == 0;
}

std::size_t BoundedComplex::total_dim() const
{
    std::size_t d = 0;
    for (const auto& t : terms_)
        d += t.total_dim();
    return d;
}

BoundedComplex BoundedComplex::trimmed() const
{
    int a = lo(), b = hi();
    while (a <= b && term(a).is_zero())
        ++a;
    while (b >= a && term(b).is_zero())
        --b;
    if (a > b)
        return zero(alg_);
    return truncate(*this, a, b);
}

ChainMap::ChainMap(BoundedComplex s, BoundedComplex t, std::map<int, ModuleHom> c)
    : src_(std::move(s)), tgt_(std::move(t)), comps_(std::move(c))
{
    if (!same_algebra(src_.algebra(), tgt_.algebra()))
        throw ArgumentError("chain map between complexes over different algebras");
    for (auto it = comps_.begin(); it != comps_.end();) {
        int i = it->first;
        if (it->second.source().dim_vector() != src_.term(i).dim_vector() ||
            it->second.target().dim_vector() != tgt_.term(i).dim_vector())
            throw ArgumentError("chain map component in degree " + std::to_string(i) + " has the wrong shape");
        if (!it->second.commutes())
            throw ArgumentError("chain map component in degree " + std::to_string(i) + " is not a module map");
        if (src_.term(i).is_zero() || tgt_.term(i).is_zero())
            it = comps_.erase(it);
        else
            ++it;
    }
    if (!commutes())
        throw ArgumentError("chain map does not commute with the differentials");
}

ChainMap::ChainMap(BoundedComplex s, BoundedComplex t, std::map<int, ModuleHom> c, Unchecked)
    : src_(std::move(s)), tgt_(std::move(t)), comps_(std::move(c))
{
}

ChainMap make_chain_map_unchecked(BoundedComplex source, BoundedComplex target, std::map<int, ModuleHom> components)
{
    return ChainMap(std::move(source), std::move(target), std::move(components), ChainMap::Unchecked{});
}

ModuleHom ChainMap::component(int i) const
{
    auto it = comps_.find(i);
    if (it != comps_.end())
        return it->second;
    return ModuleHom::zero(src_.term(i), tgt_.term(i));
}

bool ChainMap::commutes() const
{
    int a = std::min(src_.lo(), tgt_.lo());
    int b = std::max(src_.hi(), tgt_.hi()) + 1;
    for (int i = a; i <= b; ++i) {
        if (src_.term(i).is_zero() && src_.term(i - 1).is_zero())
            continue;
        if ((tgt_.differential(i) * component(i) - component(i - 1) * src_.differential(i)).is_zero())
            continue;
        return false;
    }
    return true;
}

ChainMap ChainMap::identity(const BoundedComplex& x)
{
    std::map<int, ModuleHom> c;
    for (int i = x.lo(); i <= x.hi(); ++i)
        if (!x.term(i).is_zero())
            c.emplace(i, ModuleHom::identity(x.term(i)));
    return make_chain_map_unchecked(x, x, std::move(c));
}

ChainMap ChainMap::zero(const BoundedComplex& x, const BoundedComplex& y)
{
    return make_chain_map_unchecked(x, y, {});
}

ChainMap ChainMap::operator*(const ChainMap& f) const
{
    std::map<int, ModuleHom> c;
    for (const auto& [i, fi] : f.comps_) {
        auto it = comps_.find(i);
        if (it != comps_.end())
            c.emplace(i, it->second * fi);
    }
    return make_chain_map_unchecked(f.src_, tgt_, std::move(c));
}

ChainMap ChainMap::operator+(const ChainMap& o) const
{
    std::map<int, ModuleHom> c = comps_;
    for (const auto& [i, g] : o.comps_) {
        auto it = c.find(i);
        if (it == c.end())
            c.emplace(i, g);
        else
            it->second = it->second + g;
    }
    return make_chain_map_unchecked(src_, tgt_, std::move(c));
}

ChainMap ChainMap::operator-() const
{
    std::map<int, ModuleHom> c;
    for (const auto& [i, g] : comps_)
        c.emplace(i, -g);
    return make_chain_map_unchecked(src_, tgt_, std::move(c));
}

ChainMap ChainMap::operator-(const ChainMap& o) const
{
    return *this + (-o);
}

bool ChainMap::is_zero() const
{
    for (const auto& [i, g] : comps_)
        if (!g.is_zero())
            return false;
    return true;
}

bool ChainMap::is_iso() const
{
    int a = std::min(src_.lo(), tgt_.lo());
    int b = std::max(src_.hi(), tgt_.hi());
    for (int i = a; i <= b; ++i) {
        if (src_.term(i).is_zero() && tgt_.term(i).is_zero())
            continue;
        if (!component(i).is_iso())
            return false;
    }
    return true;
}

std::optional<ChainMap> ChainMap::inverse() const
{
    if (!is_iso())
        return std::nullopt;
    std::map<int, ModuleHom> c;
    for (const auto& [i, g] : comps_)
        c.emplace(i, *g.inverse());
    return make_chain_map_unchecked(tgt_, src_, std::move(c));
}

BoundedComplex shift(const BoundedComplex& x, int m)
{
    if (x.hi() < x.lo())
        return x;
    std::vector<Representation> terms;
    std::vector<ModuleHom> diffs;
    for (int i = x.lo(); i <= x.hi(); ++i) {
        terms.push_back(x.term(i));
        if (i > x.lo())
            diffs.push_back(sign(x.differential(i), m));
    }
    return BoundedComplex(x.algebra(), x.lo() + m, std::move(terms), std::move(diffs));
}

ChainMap shift(const ChainMap& f, int m)
{
    std::map<int, ModuleHom> c;
    for (const auto& [i, g] : f.components())
        c.emplace(i + m, g);
    return make_chain_map_unchecked(shift(f.source(), m), shift(f.target(), m), std::move(c));
}

BoundedComplex truncate(const BoundedComplex& x, int a, int b)
{
    int lo = std::max(a, x.lo());
    int hi = std::min(b, x.hi());
    if (lo > hi)
        return BoundedComplex::zero(x.algebra());
    std::vector<Representation> terms;
    std::vector<ModuleHom> diffs;
    for (int i = lo; i <= hi; ++i) {
        terms.push_back(x.term(i));
        if (i > lo)
            diffs.push_back(x.differential(i));
    }
    return BoundedComplex(x.algebra(), lo, std::move(terms), std::move(diffs));
}

ChainMap truncation_projection(const BoundedComplex& x, int n)
{
    BoundedComplex t = truncate(x, n, kPlusInfinity);
    std::map<int, ModuleHom> c;
    for (int i = t.lo(); i <= t.hi(); ++i)
        if (!t.term(i).is_zero())
            c.emplace(i, ModuleHom::identity(x.term(i)));
    return make_chain_map_unchecked(x, t, std::move(c));
}

ChainMap truncation_inclusion(const BoundedComplex& x, int n)
{
    BoundedComplex t = truncate(x, kMinusInfinity, n);
    std::map<int, ModuleHom> c;
    for (int i = t.lo(); i <= t.hi(); ++i)
        if (!t.term(i).is_zero())
            c.emplace(i, ModuleHom::identity(x.term(i)));
    return make_chain_map_unchecked(t, x, std::move(c));
}

ConeResult cone(const ChainMap& f)
{
    const BoundedComplex& X = f.source();
    const BoundedComplex& Y = f.target();
    const AlgebraPtr& alg = X.algebra();
    const bool x_empty = X.hi() < X.lo();
    const bool y_empty = Y.hi() < Y.lo();
    if (x_empty && y_empty)
        return {BoundedComplex::zero(alg), ChainMap::zero(Y, BoundedComplex::zero(alg)),
                ChainMap::zero(BoundedComplex::zero(alg), shift(X, 1))};
    int lo = x_empty ? Y.lo() : y_empty ? X.lo() + 1 : std::min(Y.lo(), X.lo() + 1);
    int hi = x_empty ? Y.hi() : y_empty ? X.hi() + 1 : std::max(Y.hi(), X.hi() + 1);
    std::vector<DirectSum> sums;
    std::vector<Representation> terms;
    for (int i = lo; i <= hi; ++i) {
        sums.push_back(direct_sum(std::vector<Representation>{Y.term(i), X.term(i - 1)}));
        terms.push_back(sums.back().sum);
    }
    std::vector<ModuleHom> diffs;
    for (int i = lo + 1; i <= hi; ++i) {
        const DirectSum& src = sums[static_cast<std::size_t>(i - lo)];
        const DirectSum& tgt = sums[static_cast<std::size_t>(i - 1 - lo)];
        // [[d_Y, f], [0, -d_X]]
        ModuleHom d = tgt.inclusions[0] * Y.differential(i) * src.projections[0] +
                      tgt.inclusions[0] * f.component(i - 1) * src.projections[1] -
                      tgt.inclusions[1] * X.differential(i - 1) * src.projections[1];
        diffs.push_back(d);
    }
    BoundedComplex C(alg, lo, terms, diffs);
    BoundedComplex X1 = shift(X, 1);
    std::map<int, ModuleHom> into, out;
    for (int i = lo; i <= hi; ++i) {
        const DirectSum& s = sums[static_cast<std::size_t>(i - lo)];
        if (!Y.term(i).is_zero())
            into.emplace(i, s.inclusions[0]);
        if (!X.term(i - 1).is_zero())
            out.emplace(i, s.projections[1]);
    }
    return {C, make_chain_map_unchecked(Y, C, std::move(into)), make_chain_map_unchecked(C, X1, std::move(out))};
}

ChainMap cone_identification(const ConeResult& c, const ChainMap& u, const BoundedComplex& t)
{
    const BoundedComplex& A = u.source();
    const BoundedComplex& B = u.target();
    const PrimeField& F = A.algebra()->field();
    std::map<int, ModuleHom> comps;
    for (int i = c.cone.lo(); i <= c.cone.hi(); ++i) {
        const Representation& b = B.term(i);
        const Representation& a = A.term(i - 1);
        if (b.is_zero() && a.is_zero())
            continue;
        if (!b.is_zero() && !a.is_zero())
            throw ArgumentError("cone identification: both summands nonzero in degree " + std::to_string(i));
        const Representation& piece = b.is_zero() ? a : b;
        if (piece.dim_vector() != t.term(i).dim_vector())
            throw ArgumentError("cone identification: term mismatch in degree " + std::to_string(i));
        std::vector<Matrix> maps;
        for (std::size_t v = 0; v < piece.dim_vector().size(); ++v)
            maps.push_back(Matrix::identity(F, piece.dim(v)));
        comps.emplace(i, ModuleHom(c.cone.term(i), t.term(i), std::move(maps)));
    }
    return ChainMap(c.cone, t, std::move(comps));
}

ChainMap cone_shift_inclusion(const ConeResult& c, const ChainMap& u, const BoundedComplex& t)
{
    const BoundedComplex& A = u.source();
    const BoundedComplex& B = u.target();
    std::map<int, ModuleHom> comps;
    for (int i = t.lo(); i <= t.hi(); ++i) {
        if (t.term(i).is_zero())
            continue;
        if (t.term(i).dim_vector() != A.term(i - 1).dim_vector())
            throw ArgumentError("cone shift inclusion: term mismatch in degree " + std::to_string(i));
        DirectSum ds = direct_sum(std::vector<Representation>{B.term(i), A.term(i - 1)});
        comps.emplace(i, make_hom_unchecked(t.term(i), c.cone.term(i), ds.inclusions[1].maps()));
    }
    return ChainMap(t, c.cone, std::move(comps));
}

Representation homology(const BoundedComplex& x, int i)
{
    if (x.term(i).is_zero())
        return Representation::zero(x.algebra());
    Subobject Z = kernel(x.differential(i));
    ModuleHom d = x.differential(i + 1);
    std::vector<Matrix> bases;
    for (std::size_t v = 0; v < x.algebra()->num_vertices(); ++v) {
        Matrix im = column_space(d.at(v));
        auto coords = solve_particular(Z.inclusion.at(v), im);
        if (!coords)
            throw std::logic_error("boundaries are not cycles");
        bases.push_back(*coords);
    }
    return quotient(Z.object, bases).object;
}

std::vector<std::size_t> homology_dims(const BoundedComplex& x, int i)
{
    const std::size_t nv = x.algebra()->num_vertices();
    std::vector<std::size_t> out(nv, 0);
    if (x.term(i).is_zero())
        return out;
    ModuleHom din = x.differential(i);
    ModuleHom dout = x.differential(i + 1);
    for (std::size_t v = 0; v < nv; ++v)
        out[v] = x.term(i).dim(v) - rank(din.at(v)) - rank(dout.at(v));
    return out;
}

std::size_t homology_dim(const BoundedComplex& x, int i)
{
    std::size_t s = 0;
    for (auto d : homology_dims(x, i))
        s += d;
    return s;
}

bool is_acyclic(const BoundedComplex& x)
{
    return !homology_window(x).has_value();
}

std::optional<std::pair<int, int>> homology_window(const BoundedComplex& x)
{
    std::optional<int> a, k;
    for (int i = x.lo(); i <= x.hi(); ++i)
        if (homology_dim(x, i) != 0) {
            if (!a)
                a = i;
            k = i;
        }
    if (!a)
        return std::nullopt;
    return std::make_pair(*a, *k);
}

bool is_quasi_iso(const ChainMap& f)
{
    return is_acyclic(cone(f).cone);
}

std::size_t HomComplexBasis::size() const
{
    std::size_t s = 0;
    for (const auto& b : basis)
        s += b.size();
    return s;
}

std::map<int, ModuleHom> HomComplexBasis::combine(const Matrix& coeffs, std::size_t column) const
{
    std::map<int, ModuleHom> out;
    std::size_t k = 0;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        std::optional<ModuleHom> acc;
        for (const auto& b : basis[s]) {
            auto c = coeffs(k++, column);
            if (!c)
                continue;
            ModuleHom term = b.scaled(c);
            acc = acc ? *acc + term : term;
        }
        out.emplace(slots[s], acc ? *acc : ModuleHom::zero(basis[s].front().source(), basis[s].front().target()));
    }
    return out;
}

HomComplexBasis hom_complex_basis(const BoundedComplex& x, const BoundedComplex& y, int d)
{
    HomComplexBasis out;
    out.degree = d;
    for (int i = x.lo(); i <= x.hi(); ++i) {
        if (x.term(i).is_zero() || y.term(i + d).is_zero())
            continue;
        auto b = hom_basis(x.term(i), y.term(i + d));
        if (b.empty())
            continue;
        out.slots.push_back(i);
        out.basis.push_back(std::move(b));
    }
    return out;
}

EntryLayout entry_layout(const BoundedComplex& x, const BoundedComplex& y, int d)
{
    EntryLayout L;
    L.degree = d;
    for (int i = x.lo(); i <= x.hi(); ++i) {
        const Representation& s = x.term(i);
        const Representation& t = y.term(i + d);
        std::size_t n = 0;
        for (std::size_t v = 0; v < s.dim_vector().size(); ++v)
            n += s.dim(v) * t.dim(v);
        if (n == 0)
            continue;
        L.offset[i] = L.size;
        L.size += n;
    }
    return L;
}

std::vector<PrimeField::value_type> entry_coordinates(const EntryLayout& layout, const std::map<int, ModuleHom>& maps)
{
    std::vector<PrimeField::value_type> out(layout.size, 0);
    for (const auto& [i, g] : maps) {
        auto it = layout.offset.find(i);
        if (it == layout.offset.end())
            continue;
        auto c = hom_coordinates(g);
        std::copy(c.begin(), c.end(), out.begin() + static_cast<std::ptrdiff_t>(it->second));
    }
    return out;
}

namespace {

void put_column(Matrix& m, std::size_t col, const std::vector<PrimeField::value_type>& v)
{
    for (std::size_t r = 0; r < v.size(); ++r)
        if (v[r])
            m.at(r, col) = m.field().add(m(r, col), v[r]);
}

}  // namespace

Matrix hom_complex_differential(const BoundedComplex& x, const BoundedComplex& y, const HomComplexBasis& basis)
{
    const int d = basis.degree;
    EntryLayout target = entry_layout(x, y, d - 1);
    Matrix out(x.algebra()->field(), target.size, basis.size());
    std::size_t col = 0;
    for (std::size_t s = 0; s < basis.slots.size(); ++s) {
        const int i = basis.slots[s];
        for (const auto& g : basis.basis[s]) {
            std::map<int, ModuleHom> delta;
            ModuleHom left = y.differential(i + d) * g;                // X_i → Y_{i+d-1}
            ModuleHom right = sign(g * x.differential(i + 1), d + 1);  // X_{i+1} → Y_{i+d}
            delta.emplace(i, left);
            delta.emplace(i + 1, right);
            put_column(out, col++, entry_coordinates(target, delta));
        }
    }
    return out;
}

Matrix hom_complex_embedding(const BoundedComplex& x, const BoundedComplex& y, const HomComplexBasis& basis)
{
    EntryLayout L = entry_layout(x, y, basis.degree);
    Matrix out(x.algebra()->field(), L.size, basis.size());
    std::size_t col = 0;
    for (std::size_t s = 0; s < basis.slots.size(); ++s)
        for (const auto& g : basis.basis[s])
            put_column(out, col++, entry_coordinates(L, {{basis.slots[s], g}}));
    return out;
}

std::size_t hom_complex_homology_dim(const BoundedComplex& x, const BoundedComplex& y, int d)
{
    HomComplexBasis here = hom_complex_basis(x, y, d);
    if (here.size() == 0)
        return 0;
    HomComplexBasis up = hom_complex_basis(x, y, d + 1);
    std::size_t cycles = here.size() - rank(hom_complex_differential(x, y, here));
    std::size_t boundaries = up.size() == 0 ? 0 : rank(hom_complex_differential(x, y, up));
    return cycles - boundaries;
}

std::optional<Homotopy> null_homotopy(const ChainMap& f)
{
    const BoundedComplex& X = f.source();
    const BoundedComplex& Y = f.target();
    EntryLayout L = entry_layout(X, Y, 0);
    auto rhs = entry_coordinates(L, f.components());
    if (std::all_of(rhs.begin(), rhs.end(), [](auto v) { return v == 0; }))
        return Homotopy{};
    HomComplexBasis H = hom_complex_basis(X, Y, 1);
    if (H.size() == 0)
        return std::nullopt;
    Matrix A = hom_complex_differential(X, Y, H);
    auto sol = solve_particular(A, Matrix::column_vector(X.algebra()->field(), rhs));
    if (!sol)
        return std::nullopt;
    return H.combine(*sol);
}

ChainMap homotopy_boundary(const BoundedComplex& x, const BoundedComplex& y, const Homotopy& h)
{
    std::map<int, ModuleHom> c;
    auto get = [&](int i) {
        auto it = h.find(i);
        return it != h.end() ? it->second : ModuleHom::zero(x.term(i), y.term(i + 1));
    };
    int a = std::min(x.lo(), y.lo());
    int b = std::max(x.hi(), y.hi());
    for (int i = a; i <= b; ++i) {
        if (x.term(i).is_zero() || y.term(i).is_zero())
            continue;
        c.emplace(i, y.differential(i + 1) * get(i) + get(i - 1) * x.differential(i));
    }
    return make_chain_map_unchecked(x, y, std::move(c));
}

ComplexSum direct_sum(const std::vector<BoundedComplex>& parts)
{
    if (parts.empty())
        throw ArgumentError("direct sum of an empty family of complexes");
    const AlgebraPtr& alg = parts.front().algebra();
    int lo = kPlusInfinity, hi = kMinusInfinity;
    for (const auto& p : parts)
        if (p.hi() >= p.lo()) {
            lo = std::min(lo, p.lo());
            hi = std::max(hi, p.hi());
        }
    ComplexSum out;
    if (lo > hi) {
        out.sum = BoundedComplex::zero(alg);
        for (const auto& p : parts) {
            out.inclusions.push_back(ChainMap::zero(p, out.sum));
            out.projections.push_back(ChainMap::zero(out.sum, p));
        }
        return out;
    }
    std::vector<DirectSum> sums;
    std::vector<Representation> terms;
    for (int i = lo; i <= hi; ++i) {
        std::vector<Representation> ts;
        for (const auto& p : parts)
            ts.push_back(p.term(i));
        sums.push_back(direct_sum(ts));
        terms.push_back(sums.back().sum);
    }
    std::vector<ModuleHom> diffs;
    for (int i = lo + 1; i <= hi; ++i) {
        const DirectSum& s = sums[static_cast<std::size_t>(i - lo)];
        const DirectSum& t = sums[static_cast<std::size_t>(i - 1 - lo)];
        ModuleHom d = ModuleHom::zero(s.sum, t.sum);
        for (std::size_t k = 0; k < parts.size(); ++k)
            d = d + t.inclusions[k] * parts[k].differential(i) * s.projections[k];
        diffs.push_back(d);
    }
    out.sum = BoundedComplex(alg, lo, terms, diffs);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        std::map<int, ModuleHom> inc, proj;
        for (int i = lo; i <= hi; ++i) {
            if (parts[k].term(i).is_zero())
                continue;
            const DirectSum& s = sums[static_cast<std::size_t>(i - lo)];
            inc.emplace(i, s.inclusions[k]);
            proj.emplace(i, s.projections[k]);
        }
        out.inclusions.push_back(make_chain_map_unchecked(parts[k], out.sum, std::move(inc)));
        out.projections.push_back(make_chain_map_unchecked(out.sum, parts[k], std::move(proj)));
    }
    return out;
}

BoundedComplex direct_sum(const BoundedComplex& a, const BoundedComplex& b)
{
    return direct_sum(std::vector<BoundedComplex>{a, b}).sum;
}

ChainMap direct_sum(const ChainMap& f, const ChainMap& g)
{
    ComplexSum s = direct_sum(std::vector<BoundedComplex>{f.source(), g.source()});
    ComplexSum t = direct_sum(std::vector<BoundedComplex>{f.target(), g.target()});
    ChainMap out = t.inclusions[0] * f * s.projections[0] + t.inclusions[1] * g * s.projections[1];
    return out;
}

BoundedComplex dualize(const BoundedComplex& x)
{
    AlgebraPtr op = x.algebra()->opposite();
    if (x.hi() < x.lo())
        return BoundedComplex::zero(op);
    std::vector<Representation> terms;
    std::vector<ModuleHom> diffs;
    for (int j = -x.hi(); j <= -x.lo(); ++j) {
        terms.push_back(dualize(x.term(-j)));
        if (j > -x.hi()) {
            // D(X)_j → D(X)_{j-1} is D(d_{-j+1})
            ModuleHom d = dualize(x.differential(-j + 1));
            diffs.push_back(make_hom_unchecked(terms[terms.size() - 1], terms[terms.size() - 2], d.maps()));
        }
    }
    return BoundedComplex(op, -x.hi(), std::move(terms), std::move(diffs));
}

ChainMap dualize(const ChainMap& f)
{
    BoundedComplex DX = dualize(f.source());
    BoundedComplex DY = dualize(f.target());
    std::map<int, ModuleHom> c;
    for (const auto& [i, g] : f.components())
        c.emplace(-i, make_hom_unchecked(DY.term(-i), DX.term(-i), dualize(g).maps()));
    return make_chain_map_unchecked(DY, DX, std::move(c));
}

bool all_terms_projective(const BoundedComplex& x, int from, int to)
{
    for (int i = std::max(from, x.lo()); i <= std::min(to, x.hi()); ++i)
        if (!is_projective(x.term(i)))
            return false;
    return true;
}

}  // namespace dersyz
