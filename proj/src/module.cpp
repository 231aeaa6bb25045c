#include "dersyz/module.hpp"

#include <numeric>
#include <stdexcept>

#include "dersyz/linalg.hpp"

namespace dersyz {

namespace {

std::vector<std::size_t> prefix_offsets(const std::vector<std::size_t>& dims)
{
    std::vector<std::size_t> off(dims.size() + 1, 0);
    for (std::size_t v = 0; v < dims.size(); ++v)
        off[v + 1] = off[v] + dims[v];
    return off;
}

Matrix hstack_all(const PrimeField& F, std::size_t rows, const std::vector<Matrix>& parts)
{
    Matrix out(F, rows, 0);
    for (const auto& p : parts)
        out = Matrix::hstack(out, p);
    return out;
}

}  // namespace

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps)
{
    if (!algebra)
        throw ArgumentError("representation without an algebra");
    const Algebra& A = *algebra;
    if (dims.size() != A.num_vertices())
        throw ArgumentError("dimension vector length does not match the vertex count");
    if (arrow_maps.size() != A.num_arrows())
        throw ArgumentError("arrow map count does not match the arrow count");
    for (std::size_t a = 0; a < A.num_arrows(); ++a) {
        const Arrow& ar = A.arrow(a);
        if (arrow_maps[a].rows() != dims[ar.target] || arrow_maps[a].cols() != dims[ar.source])
            throw ArgumentError("arrow map '" + ar.name + "' has the wrong shape");
        if (arrow_maps[a].field() != A.field())
            throw ArgumentError("arrow map '" + ar.name + "' is over the wrong field");
    }
    auto d = std::make_shared<Data>();
    d->algebra = std::move(algebra);
    d->offsets = prefix_offsets(dims);
    d->dims = std::move(dims);
    d->maps = std::move(arrow_maps);
    d_ = d;

    for (std::size_t r = 0; r < A.spec().relations.size(); ++r) {
        const auto& rel = A.spec().relations[r];
        const Arrow& first = A.arrow(rel.front().arrows.front());
        const Arrow& last = A.arrow(rel.front().arrows.back());
        Matrix sum(A.field(), d_->dims[last.target], d_->dims[first.source]);
        for (const auto& t : rel) {
            Path p{first.source, last.target, t.arrows};
            sum += path_action(p).scaled(A.field().reduce(t.coeff));
        }
        if (!sum.is_zero())
            throw ArgumentError("representation violates relation " + std::to_string(r));
    }
    // rad^N M must vanish.
    auto layer = [&](const std::vector<Matrix>& spaces) {
        std::vector<Matrix> next;
        for (std::size_t t = 0; t < A.num_vertices(); ++t) {
            std::vector<Matrix> parts;
            for (std::size_t a = 0; a < A.num_arrows(); ++a)
                if (A.arrow(a).target == t)
                    parts.push_back(d_->maps[a] * spaces[A.arrow(a).source]);
            next.push_back(column_space(hstack_all(A.field(), d_->dims[t], parts)));
        }
        return next;
    };
    std::vector<Matrix> spaces;
    for (std::size_t v = 0; v < A.num_vertices(); ++v)
        spaces.push_back(Matrix::identity(A.field(), d_->dims[v]));
    for (int k = 0; k < A.spec().nilpotency_bound; ++k)
        spaces = layer(spaces);
    for (const auto& s : spaces)
        if (s.cols() != 0)
            throw ArgumentError("representation is not nilpotent within the algebra's bound");
}

Representation Representation::zero(AlgebraPtr algebra)
{
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < algebra->num_arrows(); ++a)
        maps.emplace_back(algebra->field(), 0, 0);
    std::vector<std::size_t> dims(algebra->num_vertices(), 0);
    Representation r;
    auto d = std::make_shared<Data>();
    d->algebra = std::move(algebra);
    d->dims = dims;
    d->offsets = prefix_offsets(dims);
    d->maps = std::move(maps);
    d->free = std::vector<std::size_t>{};
    r.d_ = d;
    return r;
}

Matrix Representation::path_action(const Path& p) const
{
    Matrix m = Matrix::identity(field(), dim(p.source));
    for (auto a : p.arrows)
        m = d_->maps[a] * m;
    return m;
}

Matrix Representation::apply_path(const Path& p, const Matrix& m) const
{
    Matrix x = m;
    for (auto a : p.arrows)
        x = d_->maps[a] * x;
    return x;
}

bool Representation::operator==(const Representation& o) const
{
    if (d_ == o.d_)
        return true;
    return dersyz::same_algebra(algebra(), o.algebra()) && d_->dims == o.d_->dims && d_->maps == o.d_->maps;
}

Representation Representation::annotated_free(std::vector<std::size_t> generators) const
{
    auto d = std::make_shared<Data>(*d_);
    d->free = std::move(generators);
    Representation r;
    r.d_ = d;
    return r;
}

bool same_algebra(const Representation& a, const Representation& b)
{
    return same_algebra(a.algebra(), b.algebra());
}

void require_same_algebra(const Representation& a, const Representation& b, const char* op)
{
    if (!same_algebra(a, b))
        throw ArgumentError(std::string(op) + ": modules over different algebras");
}

ModuleHom::ModuleHom(Representation s, Representation t, std::vector<Matrix> maps)
    : src_(std::move(s)), tgt_(std::move(t)), maps_(std::move(maps))
{
    require_same_algebra(src_, tgt_, "module homomorphism");
    const std::size_t nv = src_.algebra()->num_vertices();
    if (maps_.size() != nv)
        throw ArgumentError("module homomorphism needs one matrix per vertex");
    for (std::size_t v = 0; v < nv; ++v)
        if (maps_[v].rows() != tgt_.dim(v) || maps_[v].cols() != src_.dim(v))
            throw ArgumentError("module homomorphism matrix has the wrong shape at vertex " + std::to_string(v));
    if (!commutes())
        throw ArgumentError("vertex maps do not commute with the arrows");
}

ModuleHom::ModuleHom(Representation s, Representation t, std::vector<Matrix> maps, Unchecked)
    : src_(std::move(s)), tgt_(std::move(t)), maps_(std::move(maps))
{
}

ModuleHom make_hom_unchecked(Representation source, Representation target, std::vector<Matrix> maps)
{
    return ModuleHom(std::move(source), std::move(target), std::move(maps), ModuleHom::Unchecked{});
}

bool ModuleHom::commutes() const
{
    const Algebra& A = *src_.algebra();
    for (std::size_t a = 0; a < A.num_arrows(); ++a) {
        const Arrow& ar = A.arrow(a);
        if (tgt_.arrow_map(a) * maps_[ar.source] != maps_[ar.target] * src_.arrow_map(a))
            return false;
    }
    return true;
}

ModuleHom ModuleHom::zero(const Representation& source, const Representation& target)
{
    require_same_algebra(source, target, "zero map");
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < source.dim_vector().size(); ++v)
        maps.emplace_back(source.field(), target.dim(v), source.dim(v));
    return make_hom_unchecked(source, target, std::move(maps));
}

ModuleHom ModuleHom::identity(const Representation& m)
{
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < m.dim_vector().size(); ++v)
        maps.push_back(Matrix::identity(m.field(), m.dim(v)));
    return make_hom_unchecked(m, m, std::move(maps));
}

ModuleHom ModuleHom::operator*(const ModuleHom& f) const
{
    if (f.tgt_.dim_vector() != src_.dim_vector() || !same_algebra(f.tgt_, src_))
        throw ArgumentError("composition of incompatible module homomorphisms");
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < maps_.size(); ++v)
        maps.push_back(maps_[v] * f.maps_[v]);
    return make_hom_unchecked(f.src_, tgt_, std::move(maps));
}

ModuleHom ModuleHom::operator+(const ModuleHom& o) const
{
    if (o.src_.dim_vector() != src_.dim_vector() || o.tgt_.dim_vector() != tgt_.dim_vector())
        throw ArgumentError("sum of module homomorphisms with different shapes");
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < maps_.size(); ++v)
        maps.push_back(maps_[v] + o.maps_[v]);
    return make_hom_unchecked(src_, tgt_, std::move(maps));
}

ModuleHom ModuleHom::operator-(const ModuleHom& o) const
{
    return *this + (-o);
}

ModuleHom ModuleHom::operator-() const
{
    std::vector<Matrix> maps;
    for (const auto& m : maps_)
        maps.push_back(-m);
    return make_hom_unchecked(src_, tgt_, std::move(maps));
}

ModuleHom ModuleHom::scaled(PrimeField::value_type k) const
{
    std::vector<Matrix> maps;
    for (const auto& m : maps_)
        maps.push_back(m.scaled(k));
    return make_hom_unchecked(src_, tgt_, std::move(maps));
}

bool ModuleHom::is_zero() const
{
    for (const auto& m : maps_)
        if (!m.is_zero())
            return false;
    return true;
}

std::size_t ModuleHom::rank() const
{
    std::size_t r = 0;
    for (const auto& m : maps_)
        r += dersyz::rank(m);
    return r;
}

bool ModuleHom::is_iso() const
{
    return src_.dim_vector() == tgt_.dim_vector() && rank() == src_.total_dim();
}

bool ModuleHom::is_injective() const
{
    return rank() == src_.total_dim();
}

bool ModuleHom::is_surjective() const
{
    return rank() == tgt_.total_dim();
}

std::optional<ModuleHom> ModuleHom::inverse() const
{
    if (src_.dim_vector() != tgt_.dim_vector())
        return std::nullopt;
    std::vector<Matrix> maps;
    for (const auto& m : maps_) {
        auto inv = dersyz::inverse(m);
        if (!inv)
            return std::nullopt;
        maps.push_back(std::move(*inv));
    }
    return make_hom_unchecked(tgt_, src_, std::move(maps));
}

Matrix ModuleHom::total() const
{
    Matrix out(src_.field(), tgt_.total_dim(), src_.total_dim());
    for (std::size_t v = 0; v < maps_.size(); ++v)
        out.set_block(tgt_.offset(v), src_.offset(v), maps_[v]);
    return out;
}

Representation free_module(AlgebraPtr algebra, const std::vector<std::size_t>& generators)
{
    const Algebra& A = *algebra;
    const PrimeField& F = A.field();
    const std::size_t nv = A.num_vertices();
    for (auto g : generators)
        if (g >= nv)
            throw ArgumentError("free module generator at an unknown vertex");
    std::vector<std::size_t> dims(nv, 0);
    for (auto g : generators)
        for (std::size_t w = 0; w < nv; ++w)
            dims[w] += A.paths_between(g, w).size();
    // position of each basis path inside its paths_between list
    std::vector<std::size_t> local(A.dimension(), 0);
    for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t w = 0; w < nv; ++w) {
            const auto& list = A.paths_between(v, w);
            for (std::size_t k = 0; k < list.size(); ++k)
                local[list[k]] = k;
        }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < A.num_arrows(); ++a) {
        const Arrow& ar = A.arrow(a);
        Matrix m(F, dims[ar.target], dims[ar.source]);
        std::size_t row0 = 0, col0 = 0;
        for (auto g : generators) {
            const auto& from = A.paths_between(g, ar.source);
            const auto& to = A.paths_between(g, ar.target);
            for (std::size_t c = 0; c < from.size(); ++c) {
                Path q = A.basis()[from[c]];
                q.arrows.push_back(a);
                q.target = ar.target;
                auto nf = A.normal_form(q);
                for (auto b : to)
                    if (nf[b])
                        m.at(row0 + local[b], col0 + c) = nf[b];
            }
            row0 += to.size();
            col0 += from.size();
        }
        maps.push_back(std::move(m));
    }
    return Representation(std::move(algebra), std::move(dims), std::move(maps)).annotated_free(generators);
}

Representation projective(const AlgebraPtr& algebra, std::size_t v)
{
    return free_module(algebra, {v});
}

Representation regular(const AlgebraPtr& algebra)
{
    std::vector<std::size_t> gens(algebra->num_vertices());
    std::iota(gens.begin(), gens.end(), 0);
    return free_module(algebra, gens);
}

Representation injective(const AlgebraPtr& algebra, std::size_t v)
{
    return dualize(projective(algebra->opposite(), v));
}

Representation semisimple(const AlgebraPtr& algebra, const std::vector<std::size_t>& dims)
{
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < algebra->num_arrows(); ++a)
        maps.emplace_back(algebra->field(), dims.at(algebra->arrow(a).target), dims.at(algebra->arrow(a).source));
    return Representation(algebra, dims, std::move(maps));
}

Representation simple(const AlgebraPtr& algebra, std::size_t v)
{
    if (v >= algebra->num_vertices())
        throw ArgumentError("simple module at an unknown vertex");
    std::vector<std::size_t> dims(algebra->num_vertices(), 0);
    dims[v] = 1;
    return semisimple(algebra, dims);
}

DirectSum direct_sum(const std::vector<Representation>& parts)
{
    if (parts.empty())
        throw ArgumentError("direct sum of an empty family needs an algebra");
    const AlgebraPtr& alg = parts.front().algebra();
    const PrimeField& F = alg->field();
    const std::size_t nv = alg->num_vertices();
    std::vector<std::size_t> dims(nv, 0);
    bool all_free = true;
    std::vector<std::size_t> gens;
    for (const auto& p : parts) {
        require_same_algebra(parts.front(), p, "direct sum");
        for (std::size_t v = 0; v < nv; ++v)
            dims[v] += p.dim(v);
        if (p.free_generators())
            gens.insert(gens.end(), p.free_generators()->begin(), p.free_generators()->end());
        else
            all_free = false;
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < alg->num_arrows(); ++a) {
        Matrix m(F, 0, 0);
        for (const auto& p : parts)
            m = Matrix::block_diag(m, p.arrow_map(a));
        maps.push_back(std::move(m));
    }
    DirectSum out;
    out.sum = Representation(alg, dims, std::move(maps));
    if (all_free)
        out.sum = out.sum.annotated_free(gens);
    std::vector<std::size_t> off(nv, 0);
    for (const auto& p : parts) {
        std::vector<Matrix> inc, proj;
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix i(F, dims[v], p.dim(v));
            for (std::size_t k = 0; k < p.dim(v); ++k)
                i.at(off[v] + k, k) = 1;
            proj.push_back(i.transpose());
            inc.push_back(std::move(i));
            off[v] += p.dim(v);
        }
        out.inclusions.push_back(make_hom_unchecked(p, out.sum, std::move(inc)));
        out.projections.push_back(make_hom_unchecked(out.sum, p, std::move(proj)));
    }
    return out;
}

Representation direct_sum(const Representation& a, const Representation& b)
{
    return direct_sum(std::vector<Representation>{a, b}).sum;
}

ModuleHom direct_sum(const ModuleHom& f, const ModuleHom& g)
{
    Representation s = direct_sum(f.source(), g.source());
    Representation t = direct_sum(f.target(), g.target());
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < f.maps().size(); ++v)
        maps.push_back(Matrix::block_diag(f.at(v), g.at(v)));
    return make_hom_unchecked(s, t, std::move(maps));
}

Representation power(const Representation& m, std::size_t k)
{
    if (k == 0)
        return Representation::zero(m.algebra());
    return direct_sum(std::vector<Representation>(k, m)).sum;
}

ModuleHom hom_from_free(const Representation& free, const Representation& target, const std::vector<Matrix>& images)
{
    require_same_algebra(free, target, "hom_from_free");
    if (!free.free_generators())
        throw ArgumentError("hom_from_free: source carries no free-generator annotation");
    const auto& gens = *free.free_generators();
    if (images.size() != gens.size())
        throw ArgumentError("hom_from_free: one image per generator required");
    const Algebra& A = *free.algebra();
    const std::size_t nv = A.num_vertices();
    std::vector<Matrix> maps;
    for (std::size_t w = 0; w < nv; ++w)
        maps.emplace_back(free.field(), target.dim(w), free.dim(w));
    std::vector<std::size_t> col(nv, 0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (images[i].rows() != target.dim(gens[i]) || images[i].cols() != 1)
            throw ArgumentError("hom_from_free: generator image has the wrong shape");
        for (std::size_t w = 0; w < nv; ++w)
            for (auto b : A.paths_between(gens[i], w))
                maps[w].set_block(0, col[w]++, target.apply_path(A.basis()[b], images[i]));
    }
    return make_hom_unchecked(free, target, std::move(maps));
}

std::vector<PrimeField::value_type> hom_coordinates(const ModuleHom& f)
{
    std::vector<PrimeField::value_type> out;
    for (const auto& m : f.maps()) {
        auto v = m.vec();
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

std::vector<ModuleHom> hom_basis(const Representation& m, const Representation& n)
{
    require_same_algebra(m, n, "hom_basis");
    const Algebra& A = *m.algebra();
    const PrimeField& F = A.field();
    const std::size_t nv = A.num_vertices();
    std::vector<ModuleHom> out;
    if (m.free_generators()) {
        const auto& gens = *m.free_generators();
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = 0; j < n.dim(gens[i]); ++j) {
                std::vector<Matrix> images;
                for (std::size_t k = 0; k < gens.size(); ++k)
                    images.emplace_back(F, n.dim(gens[k]), 1);
                images[i].at(j, 0) = 1;
                out.push_back(hom_from_free(m, n, images));
            }
        return out;
    }
    std::vector<std::size_t> off(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v)
        off[v + 1] = off[v] + n.dim(v) * m.dim(v);
    std::size_t rows = 0;
    for (std::size_t a = 0; a < A.num_arrows(); ++a)
        rows += n.dim(A.arrow(a).target) * m.dim(A.arrow(a).source);
    Matrix sys(F, rows, off[nv]);
    std::size_t r0 = 0;
    for (std::size_t a = 0; a < A.num_arrows(); ++a) {
        const std::size_t s = A.arrow(a).source, t = A.arrow(a).target;
        const Matrix& Na = n.arrow_map(a);
        const Matrix& Ma = m.arrow_map(a);
        const std::size_t nt = n.dim(t), ns = n.dim(s), ms = m.dim(s), mt = m.dim(t);
        // N_a f_s - f_t M_a = 0, entry (i, j) in row r0 + j*nt + i
        for (std::size_t j = 0; j < ms; ++j)
            for (std::size_t i = 0; i < nt; ++i) {
                std::size_t row = r0 + j * nt + i;
                for (std::size_t k = 0; k < ns; ++k)
                    if (Na(i, k))
                        sys.at(row, off[s] + j * ns + k) = F.add(sys(row, off[s] + j * ns + k), Na(i, k));
                for (std::size_t k = 0; k < mt; ++k)
                    if (Ma(k, j))
                        sys.at(row, off[t] + k * nt + i) = F.sub(sys(row, off[t] + k * nt + i), Ma(k, j));
            }
        r0 += nt * ms;
    }
    Matrix ker = kernel_basis(sys);
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        std::vector<Matrix> maps;
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix f(F, n.dim(v), m.dim(v));
            for (std::size_t j = 0; j < m.dim(v); ++j)
                for (std::size_t i = 0; i < n.dim(v); ++i)
                    f.at(i, j) = ker(off[v] + j * n.dim(v) + i, c);
            maps.push_back(std::move(f));
        }
        out.push_back(make_hom_unchecked(m, n, std::move(maps)));
    }
    return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n)
{
    if (m.free_generators()) {
        std::size_t d = 0;
        for (auto g : *m.free_generators())
            d += n.dim(g);
        return d;
    }
    return hom_basis(m, n).size();
}

Subobject submodule(const Representation& m, const std::vector<Matrix>& bases)
{
    const Algebra& A = *m.algebra();
    const std::size_t nv = A.num_vertices();
    if (bases.size() != nv)
        throw ArgumentError("submodule needs one basis per vertex");
    std::vector<std::size_t> dims(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        if (bases[v].rows() != m.dim(v))
            throw ArgumentError("submodule basis has the wrong height");
        dims[v] = bases[v].cols();
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < A.num_arrows(); ++a) {
        const Arrow& ar = A.arrow(a);
        auto x = solve_particular(bases[ar.target], m.arrow_map(a) * bases[ar.source]);
        if (!x)
            throw ArgumentError("subspaces are not closed under arrow '" + ar.name + "'");
        maps.push_back(std::move(*x));
    }
    Representation sub(m.algebra(), dims, std::move(maps));
    return {sub, make_hom_unchecked(sub, m, bases)};
}

std::vector<Matrix> generated_subspaces(const Representation& m, const std::vector<Matrix>& generators)
{
    const Algebra& A = *m.algebra();
    const std::size_t nv = A.num_vertices();
    std::vector<Matrix> spaces;
    for (std::size_t v = 0; v < nv; ++v)
        spaces.push_back(column_space(generators.at(v)));
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t a = 0; a < A.num_arrows(); ++a) {
            const Arrow& ar = A.arrow(a);
            Matrix grown = column_space(Matrix::hstack(spaces[ar.target], m.arrow_map(a) * spaces[ar.source]));
            if (grown.cols() > spaces[ar.target].cols()) {
                spaces[ar.target] = std::move(grown);
                changed = true;
            }
        }
    }
    return spaces;
}

Quotient quotient(const Representation& m, const std::vector<Matrix>& bases)
{
    const Algebra& A = *m.algebra();
    const PrimeField& F = A.field();
    const std::size_t nv = A.num_vertices();
    std::vector<Matrix> proj, section;
    std::vector<std::size_t> dims(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        const Matrix& U = bases.at(v);
        auto comp = complement_indices(U);
        Matrix C(F, m.dim(v), comp.size());
        for (std::size_t k = 0; k < comp.size(); ++k)
            C.at(comp[k], k) = 1;
        auto inv = inverse(Matrix::hstack(U, C));
        if (!inv)
            throw ArgumentError("quotient: subspace basis is not independent");
        proj.push_back(inv->block(U.cols(), 0, comp.size(), m.dim(v)));
        section.push_back(std::move(C));
        dims[v] = comp.size();
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < A.num_arrows(); ++a) {
        const Arrow& ar = A.arrow(a);
        maps.push_back(proj[ar.target] * m.arrow_map(a) * section[ar.source]);
    }
    Representation q(m.algebra(), dims, std::move(maps));
    return {q, make_hom_unchecked(m, q, std::move(proj)), std::move(section)};
}

Subobject kernel(const ModuleHom& f)
{
    std::vector<Matrix> bases;
    for (const auto& m : f.maps())
        bases.push_back(kernel_basis(m));
    return submodule(f.source(), bases);
}

Subobject image(const ModuleHom& f)
{
    std::vector<Matrix> bases;
    for (const auto& m : f.maps())
        bases.push_back(column_space(m));
    return submodule(f.target(), bases);
}

Quotient cokernel(const ModuleHom& f)
{
    std::vector<Matrix> bases;
    for (const auto& m : f.maps())
        bases.push_back(column_space(m));
    return quotient(f.target(), bases);
}

std::vector<Matrix> radical_subspaces(const Representation& m)
{
    const Algebra& A = *m.algebra();
    std::vector<Matrix> out;
    for (std::size_t t = 0; t < A.num_vertices(); ++t) {
        std::vector<Matrix> parts;
        for (std::size_t a = 0; a < A.num_arrows(); ++a)
            if (A.arrow(a).target == t)
                parts.push_back(m.arrow_map(a));
        out.push_back(column_space(hstack_all(m.field(), m.dim(t), parts)));
    }
    return out;
}

Quotient top(const Representation& m)
{
    return quotient(m, radical_subspaces(m));
}

std::vector<Matrix> socle_subspaces(const Representation& m)
{
    const Algebra& A = *m.algebra();
    std::vector<Matrix> out;
    for (std::size_t s = 0; s < A.num_vertices(); ++s) {
        Matrix stacked(m.field(), 0, m.dim(s));
        for (std::size_t a = 0; a < A.num_arrows(); ++a)
            if (A.arrow(a).source == s)
                stacked = Matrix::vstack(stacked, m.arrow_map(a));
        out.push_back(stacked.rows() == 0 ? Matrix::identity(m.field(), m.dim(s)) : kernel_basis(stacked));
    }
    return out;
}

ProjectiveCover projective_cover(const Representation& m)
{
    const Algebra& A = *m.algebra();
    const PrimeField& F = m.field();
    auto rad = radical_subspaces(m);
    std::vector<std::size_t> gens;
    std::vector<Matrix> images;
    for (std::size_t v = 0; v < A.num_vertices(); ++v)
        for (auto c : complement_indices(rad[v])) {
            gens.push_back(v);
            Matrix e(F, m.dim(v), 1);
            e.at(c, 0) = 1;
            images.push_back(std::move(e));
        }
    Representation P = free_module(m.algebra(), gens);
    ModuleHom epi = hom_from_free(P, m, images);
    if (!epi.is_surjective())
        throw std::logic_error("projective cover is not surjective");
    auto ker = kernel(epi);
    auto radP = radical_subspaces(P);
    for (std::size_t v = 0; v < A.num_vertices(); ++v)
        if (rank(Matrix::hstack(radP[v], ker.inclusion.at(v))) != radP[v].cols())
            throw std::logic_error("projective cover kernel not contained in the radical");
    return {P, epi};
}

bool is_projective(const Representation& m)
{
    if (m.free_generators())
        return true;
    // dim of the cover equals dim M exactly when the cover is an iso
    auto rad = radical_subspaces(m);
    std::size_t cover_dim = 0;
    const Algebra& A = *m.algebra();
    for (std::size_t v = 0; v < A.num_vertices(); ++v) {
        std::size_t t = m.dim(v) - rad[v].cols();
        for (std::size_t w = 0; w < A.num_vertices(); ++w)
            cover_dim += t * A.paths_between(v, w).size();
    }
    return cover_dim == m.total_dim();
}

bool is_injective(const Representation& m)
{
    return is_projective(dualize(m));
}

Representation dualize(const Representation& m)
{
    AlgebraPtr op = m.algebra()->opposite();
    std::vector<Matrix> maps;
    for (const auto& a : m.arrow_maps())
        maps.push_back(a.transpose());
    return Representation(op, m.dim_vector(), std::move(maps));
}

ModuleHom dualize(const ModuleHom& f)
{
    std::vector<Matrix> maps;
    for (const auto& m : f.maps())
        maps.push_back(m.transpose());
    return make_hom_unchecked(dualize(f.target()), dualize(f.source()), std::move(maps));
}

}  // namespace dersyz
