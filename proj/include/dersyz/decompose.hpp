#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dersyz/module.hpp"

namespace dersyz {

/// A direct summand of some module M with its split inclusion and projection.
struct Summand {
    Representation module;
    ModuleHom inclusion;   ///< summand → M
    ModuleHom projection;  ///< M → summand
};

struct Decomposition {
    /// Iso-classes of indecomposable summands with multiplicities. With
    /// stripping requested these are the nonprojective classes only.
    std::vector<std::pair<Representation, std::size_t>> pieces;
    /// Projective classes removed by stripping (empty otherwise).
    std::vector<std::pair<Representation, std::size_t>> stripped;
    /// Every summand, in splitting order; the inclusions give M ≅ ⊕ summands.
    std::vector<Summand> summands;
    /// Class of each summand: index into pieces, or into stripped when
    /// the flag is set and the summand is projective.
    std::vector<std::size_t> class_of;
    std::vector<bool> is_stripped;
};

/// Basis of the Jacobson radical of the subalgebra of n × n matrices spanned
/// by `basis` (assumed to contain the identity and be closed under product),
/// as coefficient vectors over `basis`.
std::vector<std::vector<PrimeField::value_type>> matrix_algebra_radical(const std::vector<Matrix>& basis);

/// Splits M into indecomposable summands. Every summand is certified to
/// have a local endomorphism ring. Throws InconclusiveError when the
/// randomized Fitting splitting does not settle within its retry budget.
std::vector<Summand> split_indecomposables(const Representation& m, std::uint64_t seed = 0);
Decomposition decompose(const Representation& m, bool strip_projectives = false, std::uint64_t seed = 0);
bool is_indecomposable(const Representation& m, std::uint64_t seed = 0);

/// For indecomposable X and Y: an isomorphism X → Y, if one exists.
/// Deterministic: X ≅ Y iff g∘f is invertible for some basis homs f, g.
std::optional<ModuleHom> indecomposable_isomorphism(const Representation& x, const Representation& y);

struct IsoResult {
    bool isomorphic = false;
    std::optional<ModuleHom> witness;
};
IsoResult is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed = 0);

/// M with all indecomposable projective summands removed.
Representation strip_projectives(const Representation& m, std::uint64_t seed = 0);
Representation strip_injectives(const Representation& m, std::uint64_t seed = 0);

}  // namespace dersyz
