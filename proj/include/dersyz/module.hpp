#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "dersyz/algebra.hpp"
#include "dersyz/matrix.hpp"

namespace dersyz {

/// A finite-dimensional left module presented as a quiver representation.
/// Arrow matrices map the source vertex space to the target vertex space.
///
/// Copies share the underlying immutable data.
class Representation {
public:
    Representation() = default;
    /// Validates shapes, relations and nilpotency; throws ArgumentError.
    Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps);

    static Representation zero(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return d_->algebra; }
    const PrimeField& field() const { return d_->algebra->field(); }
    const std::vector<std::size_t>& dim_vector() const { return d_->dims; }
    std::size_t dim(std::size_t v) const { return d_->dims[v]; }
    std::size_t total_dim() const { return d_->offsets.back(); }
    /// Position of vertex v's block in the concatenated coordinate space.
    std::size_t offset(std::size_t v) const { return d_->offsets[v]; }
    const Matrix& arrow_map(std::size_t a) const { return d_->maps[a]; }
    const std::vector<Matrix>& arrow_maps() const { return d_->maps; }
    bool is_zero() const { return total_dim() == 0; }
    bool valid() const { return d_ != nullptr; }

    /// When the module was built as a direct sum of indecomposable
    /// projectives P_{g_1} ⊕ ... ⊕ P_{g_r} in standard path coordinates,
    /// the generator vertices g_i.
    const std::optional<std::vector<std::size_t>>& free_generators() const { return d_->free; }

    /// Action of a path (traversal order) from its source space to its
    /// target space.
    Matrix path_action(const Path& p) const;
    /// Image of `m` ∈ M_v under a path starting at v.
    Matrix apply_path(const Path& p, const Matrix& m) const;

    /// Identical data (same vertex spaces and arrow matrices).
    bool operator==(const Representation& o) const;

    /// Copy carrying a free-generator annotation. The caller guarantees the
    /// coordinates are the standard ones of free_module(generators).
    Representation annotated_free(std::vector<std::size_t> generators) const;

private:
    struct Data {
        AlgebraPtr algebra;
        std::vector<std::size_t> dims;
        std::vector<std::size_t> offsets;
        std::vector<Matrix> maps;
        std::optional<std::vector<std::size_t>> free;
    };
    std::shared_ptr<const Data> d_;
};

/// A module homomorphism as one matrix per vertex (target × source).
class ModuleHom {
public:
    ModuleHom() = default;
    /// Validates shapes and arrow commutation; throws ArgumentError.
    ModuleHom(Representation source, Representation target, std::vector<Matrix> maps);

    static ModuleHom zero(const Representation& source, const Representation& target);
    static ModuleHom identity(const Representation& m);

    const Representation& source() const { return src_; }
    const Representation& target() const { return tgt_; }
    const Matrix& at(std::size_t v) const { return maps_[v]; }
    const std::vector<Matrix>& maps() const { return maps_; }

    /// Composition right to left: (g * f) applies f first.
    ModuleHom operator*(const ModuleHom& f) const;
    ModuleHom operator+(const ModuleHom& o) const;
    ModuleHom operator-(const ModuleHom& o) const;
    ModuleHom operator-() const;
    ModuleHom scaled(PrimeField::value_type k) const;

    bool is_zero() const;
    bool is_iso() const;
    bool is_injective() const;
    bool is_surjective() const;
    std::optional<ModuleHom> inverse() const;
    /// Block-diagonal matrix on the concatenated coordinate spaces.
    Matrix total() const;
    std::size_t rank() const;
    bool commutes() const;

private:
    struct Unchecked {};
    ModuleHom(Representation s, Representation t, std::vector<Matrix> maps, Unchecked);
    friend ModuleHom make_hom_unchecked(Representation, Representation, std::vector<Matrix>);
    Representation src_;
    Representation tgt_;
    std::vector<Matrix> maps_;
};

/// Internal fast constructor for maps known to commute by construction.
ModuleHom make_hom_unchecked(Representation source, Representation target, std::vector<Matrix> maps);

/// P_{g_1} ⊕ ... ⊕ P_{g_r}; P_v has basis the normal-form paths starting at
/// v and arrows act by appending.
Representation free_module(AlgebraPtr algebra, const std::vector<std::size_t>& generators);
Representation projective(const AlgebraPtr& algebra, std::size_t v);
Representation injective(const AlgebraPtr& algebra, std::size_t v);
Representation simple(const AlgebraPtr& algebra, std::size_t v);
/// The regular module R as the sum of all P_v.
Representation regular(const AlgebraPtr& algebra);
/// Semisimple module with the given multiplicity at each vertex.
Representation semisimple(const AlgebraPtr& algebra, const std::vector<std::size_t>& dims);

struct DirectSum {
    Representation sum;
    std::vector<ModuleHom> inclusions;
    std::vector<ModuleHom> projections;
};
DirectSum direct_sum(const std::vector<Representation>& parts);
Representation direct_sum(const Representation& a, const Representation& b);
/// Block-diagonal sum of maps between the corresponding direct sums.
ModuleHom direct_sum(const ModuleHom& f, const ModuleHom& g);
Representation power(const Representation& m, std::size_t k);

/// Homomorphism F → N sending the i-th free generator to images[i]
/// (a column vector in N at the generator vertex).
ModuleHom hom_from_free(const Representation& free, const Representation& target,
                        const std::vector<Matrix>& images);

std::vector<ModuleHom> hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);
/// f ↦ coordinates of f in the concatenated vec() layout, used to express
/// homs in linear systems.
std::vector<PrimeField::value_type> hom_coordinates(const ModuleHom& f);

struct Subobject {
    Representation object;
    ModuleHom inclusion;
};
struct Quotient {
    Representation object;
    ModuleHom projection;
    /// Per-vertex section: columns are lifts of the quotient basis.
    std::vector<Matrix> section;
};

/// Submodule spanned by per-vertex column bases (columns independent and
/// the span closed under arrows; throws ArgumentError otherwise).
Subobject submodule(const Representation& m, const std::vector<Matrix>& bases);
/// Smallest submodule containing the given per-vertex columns.
std::vector<Matrix> generated_subspaces(const Representation& m, const std::vector<Matrix>& generators);
Quotient quotient(const Representation& m, const std::vector<Matrix>& bases);

Subobject kernel(const ModuleHom& f);
Subobject image(const ModuleHom& f);
Quotient cokernel(const ModuleHom& f);

/// Per-vertex column bases of rad M = sum of arrow images.
std::vector<Matrix> radical_subspaces(const Representation& m);
Quotient top(const Representation& m);
/// Per-vertex column bases of soc M = common kernel of outgoing arrows.
std::vector<Matrix> socle_subspaces(const Representation& m);

struct ProjectiveCover {
    Representation cover;
    ModuleHom epi;
};
/// Minimal projective cover; the kernel is verified to lie in rad P.
ProjectiveCover projective_cover(const Representation& m);
bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

/// Vector-space dual over the opposite algebra.
Representation dualize(const Representation& m);
/// D(f): D(N) → D(M).
ModuleHom dualize(const ModuleHom& f);

bool same_algebra(const Representation& a, const Representation& b);
void require_same_algebra(const Representation& a, const Representation& b, const char* op);

}  // namespace dersyz
