#include "dersyz/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dersyz/linalg.hpp"

namespace dersyz {

namespace {

constexpr std::size_t kMaxPaths = 20000;

void validate(const QuiverSpec& s)
{
    if (s.vertices.empty())
        throw ArgumentError("quiver has no vertices");
    std::set<std::string> labels(s.vertices.begin(), s.vertices.end());
    if (labels.size() != s.vertices.size())
        throw ArgumentError("duplicate vertex label");
    std::set<std::string> names;
    for (const auto& a : s.arrows) {
        if (a.source >= s.vertices.size() || a.target >= s.vertices.size())
            throw ArgumentError("arrow '" + a.name + "' has an undeclared endpoint");
        if (!names.insert(a.name).second)
            throw ArgumentError("duplicate arrow name '" + a.name + "'");
    }
    if (s.nilpotency_bound < 1)
        throw ArgumentError("nilpotency_bound must be positive");
    for (std::size_t r = 0; r < s.relations.size(); ++r) {
        const auto& rel = s.relations[r];
        if (rel.empty())
            throw ArgumentError("relation " + std::to_string(r) + " is empty");
        std::size_t src = 0, tgt = 0;
        for (std::size_t t = 0; t < rel.size(); ++t) {
            const auto& term = rel[t];
            if (term.arrows.size() < 2)
                throw ArgumentError("relation " + std::to_string(r) +
                                    " is not admissible: a term has length < 2");
            for (auto a : term.arrows)
                if (a >= s.arrows.size())
                    throw ArgumentError("relation " + std::to_string(r) + " uses an unknown arrow");
            for (std::size_t k = 0; k + 1 < term.arrows.size(); ++k)
                if (s.arrows[term.arrows[k]].target != s.arrows[term.arrows[k + 1]].source)
                    throw ArgumentError("relation " + std::to_string(r) + " has a non-composable path");
            std::size_t s0 = s.arrows[term.arrows.front()].source;
            std::size_t t0 = s.arrows[term.arrows.back()].target;
            if (t == 0) {
                src = s0;
                tgt = t0;
            } else if (s0 != src || t0 != tgt) {
                throw ArgumentError("relation " + std::to_string(r) + " mixes non-parallel paths");
            }
        }
    }
}

std::string serialize(const QuiverSpec& s)
{
    std::ostringstream os;
    os << "p=" << s.field.p() << ";N=" << s.nilpotency_bound << ";V=";
    for (const auto& v : s.vertices)
        os << v.size() << ':' << v << ',';
    os << ";A=";
    for (const auto& a : s.arrows)
        os << a.name.size() << ':' << a.name << '(' << a.source << '>' << a.target << "),";
    os << ";R=";
    for (const auto& rel : s.relations) {
        os << '[';
        for (const auto& t : rel) {
            os << s.field.reduce(t.coeff) << '*';
            for (auto a : t.arrows)
                os << a << '.';
            os << '+';
        }
        os << ']';
    }
    return os.str();
}

}  // namespace

std::size_t Algebra::vertex_index(const std::string& label) const
{
    for (std::size_t v = 0; v < spec_.vertices.size(); ++v)
        if (spec_.vertices[v] == label)
            return v;
    throw ArgumentError("unknown vertex '" + label + "'");
}

std::size_t Algebra::arrow_index(const std::string& name) const
{
    for (std::size_t a = 0; a < spec_.arrows.size(); ++a)
        if (spec_.arrows[a].name == name)
            return a;
    throw ArgumentError("unknown arrow '" + name + "'");
}

Algebra::Vector Algebra::normal_form(const Path& p) const
{
    Vector out(basis_.size(), 0);
    if (p.length() > static_cast<std::size_t>(spec_.nilpotency_bound))
        return out;
    // Paths of one length are stored contiguously in lexicographic order.
    auto it = std::lower_bound(all_paths_.begin(), all_paths_.end(), p, [](const Path& a, const Path& b) {
        if (a.length() != b.length())
            return a.length() < b.length();
        if (a.length() == 0)
            return a.source < b.source;
        return a.arrows < b.arrows;
    });
    if (it == all_paths_.end() || it->arrows != p.arrows || (p.length() == 0 && it->source != p.source))
        throw ArgumentError("normal_form: not a path of the quiver");
    return reduction_[static_cast<std::size_t>(it - all_paths_.begin())];
}

std::string Algebra::path_name(const Path& p) const
{
    if (p.length() == 0)
        return "e_" + spec_.vertices[p.source];
    std::string out;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
        if (k)
            out += '.';
        out += spec_.arrows[p.arrows[k]].name;
    }
    return out;
}

AlgebraPtr build_algebra(const QuiverSpec& spec)
{
    validate(spec);
    const PrimeField& F = spec.field;
    const std::size_t nv = spec.vertices.size();
    const std::size_t N = static_cast<std::size_t>(spec.nilpotency_bound);

    std::shared_ptr<Algebra> alg(new Algebra());
    alg->spec_ = spec;
    for (auto& rel : alg->spec_.relations)
        for (auto& t : rel)
            t.coeff = F.reduce(t.coeff);
    alg->fingerprint_ = serialize(alg->spec_);

    // All paths of length <= N, by length then lexicographically.
    auto& paths = alg->all_paths_;
    for (std::size_t v = 0; v < nv; ++v)
        paths.push_back(Path{v, v, {}});
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= N; ++len) {
        std::size_t level_end = paths.size();
        std::vector<Path> next;
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (std::size_t a = 0; a < spec.arrows.size(); ++a) {
                if (spec.arrows[a].source != paths[i].target)
                    continue;
                Path q = paths[i];
                q.arrows.push_back(a);
                q.target = spec.arrows[a].target;
                next.push_back(std::move(q));
            }
        }
        std::sort(next.begin(), next.end(), [](const Path& x, const Path& y) { return x.arrows < y.arrows; });
        if (paths.size() + next.size() > kMaxPaths)
            throw ArgumentError("path enumeration exceeds " + std::to_string(kMaxPaths) + " paths");
        level_begin = paths.size();
        for (auto& q : next)
            paths.push_back(std::move(q));
        if (next.empty())
            break;
    }
    const std::size_t np = paths.size();
    std::map<std::vector<std::size_t>, std::size_t> index_of;
    for (std::size_t i = nv; i < np; ++i)
        index_of[paths[i].arrows] = i;

    // Two-sided ideal generated by the relations, truncated modulo paths of
    // length > N. Columns are ordered from the largest path down so that
    // pivots are leading terms.
    std::vector<std::vector<PrimeField::value_type>> gens;
    auto col = [np](std::size_t path_index) { return np - 1 - path_index; };
    for (const auto& rel : alg->spec_.relations) {
        std::size_t src = spec.arrows[rel.front().arrows.front()].source;
        std::size_t tgt = spec.arrows[rel.front().arrows.back()].target;
        std::size_t min_len = rel.front().arrows.size();
        for (const auto& t : rel)
            min_len = std::min(min_len, t.arrows.size());
        if (min_len > N)
            continue;
        for (std::size_t u = 0; u < np; ++u) {
            if (paths[u].target != src || paths[u].length() + min_len > N)
                continue;
            for (std::size_t w = 0; w < np; ++w) {
                if (paths[w].source != tgt || paths[u].length() + min_len + paths[w].length() > N)
                    continue;
                std::vector<PrimeField::value_type> row(np, 0);
                bool nonzero = false;
                for (const auto& t : rel) {
                    std::vector<std::size_t> seq = paths[u].arrows;
                    seq.insert(seq.end(), t.arrows.begin(), t.arrows.end());
                    seq.insert(seq.end(), paths[w].arrows.begin(), paths[w].arrows.end());
                    if (seq.size() > N)
                        continue;
                    std::size_t c = col(index_of.at(seq));
                    row[c] = F.add(row[c], static_cast<PrimeField::value_type>(t.coeff));
                    nonzero = nonzero || row[c];
                }
                if (nonzero)
                    gens.push_back(std::move(row));
            }
        }
    }
    Matrix ideal(F, gens.size(), np);
    for (std::size_t r = 0; r < gens.size(); ++r)
        for (std::size_t c = 0; c < np; ++c)
            ideal.at(r, c) = gens[r][c];
    auto rr = rref(ideal);
    std::vector<long> pivot_row(np, -1);
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
        pivot_row[np - 1 - rr.pivots[r]] = static_cast<long>(r);

    alg->basis_position_.assign(np, -1);
    for (std::size_t i = 0; i < np; ++i) {
        if (pivot_row[i] >= 0)
            continue;
        if (paths[i].length() >= N)
            throw NilpotencyBoundExceeded("nilpotency bound exceeded: path " + alg->path_name(paths[i]) +
                                          " of length " + std::to_string(paths[i].length()) +
                                          " survives the relations");
        alg->basis_position_[i] = static_cast<long>(alg->basis_.size());
        alg->basis_.push_back(paths[i]);
    }
    const std::size_t dim = alg->basis_.size();
    alg->reduction_.assign(np, Algebra::Vector(dim, 0));
    for (std::size_t i = 0; i < np; ++i) {
        if (alg->basis_position_[i] >= 0) {
            alg->reduction_[i][static_cast<std::size_t>(alg->basis_position_[i])] = 1;
            continue;
        }
        std::size_t r = static_cast<std::size_t>(pivot_row[i]);
        for (std::size_t j = 0; j < np; ++j) {
            auto coef = rr.reduced(r, col(j));
            if (j == i || !coef)
                continue;
            // Rows are reduced, so every other entry sits on a basis path.
            alg->reduction_[i][static_cast<std::size_t>(alg->basis_position_[j])] = F.neg(coef);
        }
        if (paths[i].length() >= N &&
            std::any_of(alg->reduction_[i].begin(), alg->reduction_[i].end(), [](auto x) { return x != 0; }))
            throw NilpotencyBoundExceeded("nilpotency bound exceeded: path " + alg->path_name(paths[i]) +
                                          " rewrites to a nonzero combination of shorter paths");
    }

    alg->between_.assign(nv * nv, {});
    for (std::size_t b = 0; b < dim; ++b)
        alg->between_[alg->basis_[b].source * nv + alg->basis_[b].target].push_back(b);

    alg->products_.assign(dim * dim, Algebra::Vector(dim, 0));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const Path& x = alg->basis_[i];
            const Path& y = alg->basis_[j];
            if (x.target != y.source)
                continue;
            Path q{x.source, y.target, x.arrows};
            q.arrows.insert(q.arrows.end(), y.arrows.begin(), y.arrows.end());
            alg->products_[i * dim + j] = alg->normal_form(q);
        }
    }

    // Associativity of the table on every basis triple.
    auto mul = [&](const Algebra::Vector& a, const Algebra::Vector& b) {
        Algebra::Vector out(dim, 0);
        for (std::size_t i = 0; i < dim; ++i) {
            if (!a[i])
                continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (!b[j])
                    continue;
                auto c = F.mul(a[i], b[j]);
                const auto& pr = alg->products_[i * dim + j];
                for (std::size_t k = 0; k < dim; ++k)
                    if (pr[k])
                        out[k] = F.add(out[k], F.mul(c, pr[k]));
            }
        }
        return out;
    };
    if (dim <= 30) {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k) {
                    Algebra::Vector ek(dim, 0);
                    ek[k] = 1;
                    Algebra::Vector ei(dim, 0);
                    ei[i] = 1;
                    if (mul(alg->products_[i * dim + j], ek) != mul(ei, alg->products_[j * dim + k]))
                        throw ArgumentError("relations do not define an associative quotient");
                }
    }
    return alg;
}

QuiverSpec opposite_spec(const QuiverSpec& spec)
{
    QuiverSpec op = spec;
    for (auto& a : op.arrows)
        std::swap(a.source, a.target);
    for (auto& rel : op.relations)
        for (auto& t : rel)
            std::reverse(t.arrows.begin(), t.arrows.end());
    return op;
}

AlgebraPtr Algebra::opposite() const
{
    std::lock_guard<std::mutex> lock(opposite_mutex_);
    if (auto cached = opposite_.lock())
        return cached;
    auto op = build_algebra(opposite_spec(spec_));
    auto* mut = const_cast<Algebra*>(op.get());
    mut->opposite_ = shared_from_this();
    opposite_ = op;
    // The opposite keeps only a weak link back; this side owns it.
    opposite_owned_ = op;
    return op;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b)
{
    return a == b || (a && b && a->fingerprint() == b->fingerprint());
}

}  // namespace dersyz
