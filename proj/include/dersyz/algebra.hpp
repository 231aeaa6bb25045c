#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dersyz/field.hpp"

namespace dersyz {

struct Arrow {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;
};

/// A path written in traversal order: arrows[0] is applied first.
struct PathTerm {
    long long coeff = 1;
    std::vector<std::size_t> arrows;
};

using Relation = std::vector<PathTerm>;

struct QuiverSpec {
    PrimeField field;
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
    int nilpotency_bound = 1;
};

/// Thrown when the arrow ideal is not nilpotent modulo the relations within
/// the declared bound.
class NilpotencyBoundExceeded : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

/// A concrete path: length 0 paths are the vertex idempotents.
struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows;
    std::size_t length() const { return arrows.size(); }
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A finite-dimensional bound quiver algebra kQ/I over F_p.
///
/// The relations are oriented so that the largest path of each row of the
/// reduced ideal (ordered by length, then lexicographically by arrow index)
/// rewrites to the remaining terms; the surviving paths form the basis.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    using value_type = PrimeField::value_type;
    using Vector = std::vector<value_type>;

    const QuiverSpec& spec() const { return spec_; }
    const PrimeField& field() const { return spec_.field; }
    std::size_t num_vertices() const { return spec_.vertices.size(); }
    std::size_t num_arrows() const { return spec_.arrows.size(); }
    const Arrow& arrow(std::size_t a) const { return spec_.arrows[a]; }
    std::size_t vertex_index(const std::string& label) const;
    std::size_t arrow_index(const std::string& name) const;

    /// Normal-form paths, breadth-first by length then lexicographic.
    const std::vector<Path>& basis() const { return basis_; }
    std::size_t dimension() const { return basis_.size(); }
    /// Basis indices of paths from `v` to `w`, in basis order.
    const std::vector<std::size_t>& paths_between(std::size_t v, std::size_t w) const
    {
        return between_[v * num_vertices() + w];
    }

    /// Coordinates of an arbitrary path (traversal order) in the basis.
    Vector normal_form(const Path& p) const;
    /// Coordinates of basis[i] followed by basis[j].
    const Vector& product(std::size_t i, std::size_t j) const { return products_[i * basis_.size() + j]; }

    /// Arrow-reversed algebra; opposite()->opposite() is structurally this.
    AlgebraPtr opposite() const;
    /// Canonical serialization of the spec, used for algebra identity.
    const std::string& fingerprint() const { return fingerprint_; }

    std::string path_name(const Path& p) const;

private:
    friend AlgebraPtr build_algebra(const QuiverSpec& spec);
    Algebra() = default;

    QuiverSpec spec_;
    std::string fingerprint_;
    std::vector<Path> basis_;
    std::vector<std::vector<std::size_t>> between_;
    std::vector<Vector> products_;

    // Rewriting data over all paths of length <= bound.
    std::vector<Path> all_paths_;
    std::vector<long> basis_position_;    // all_paths index -> basis index or -1
    std::vector<Vector> reduction_;       // all_paths index -> normal form
    mutable std::mutex opposite_mutex_;
    mutable std::weak_ptr<const Algebra> opposite_;
    mutable std::shared_ptr<const Algebra> opposite_owned_;
};

/// Validates the spec and computes the path basis, multiplication table and
/// rewriting rules. Throws ArgumentError or NilpotencyBoundExceeded.
AlgebraPtr build_algebra(const QuiverSpec& spec);

QuiverSpec opposite_spec(const QuiverSpec& spec);

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace dersyz
