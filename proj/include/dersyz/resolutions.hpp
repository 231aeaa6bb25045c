#pragma once

#include <cstdint>

#include "dersyz/complexes.hpp"

namespace dersyz {

enum class ResolutionMode { Minimal, Padded };

/// Finite model of a projective resolution P → X. Terms in degrees
/// [lo, window_top] are projective; degree window_top+1 holds the cap (the
/// cycles that remain to be resolved) and, when the window is below the
/// support of X, X's own terms continue above it.
struct CappedResolution {
    BoundedComplex target;
    int window_top = 0;
    BoundedComplex complex;
    ChainMap augmentation;  ///< complex → target, a quasi-isomorphism
    ResolutionMode mode = ResolutionMode::Minimal;

    int lo() const { return complex.lo(); }
    const Representation& cap() const { return complex.term(window_top + 1); }
    /// Zero cap and nothing above it: the resolution is finite within the window.
    bool closes() const;
};

CappedResolution min_proj_resolution(const Representation& m, int n);
/// Requires n ≥ lo(X) - 1. Padded mode adds one extra generator per degree,
/// mapped to a seeded random cycle, so the result is not minimal.
CappedResolution proj_resolution_complex(const BoundedComplex& x, int n,
                                         ResolutionMode mode = ResolutionMode::Minimal, std::uint64_t seed = 0);

/// (σ_{[m,∞)} P)[-m] on the capped complex, in degrees [0, window_top+1-m].
/// At m = window_top with a two-term injective model the cokernel is
/// returned in degree 0 instead. Requires lo(P) ≤ m ≤ window_top.
BoundedComplex capped_model(const CappedResolution& p, int m);

/// im d_i ⊆ rad of the codomain for lo < i ≤ window_top.
bool is_minimal(const CappedResolution& p);

/// Injective coresolution X → I; terms in degrees [window_bottom, hi] are
/// injective and the cap sits in degree window_bottom - 1.
struct CappedCoresolution {
    BoundedComplex target;
    int window_bottom = 0;
    BoundedComplex complex;
    ChainMap coaugmentation;  ///< target → complex, a quasi-isomorphism

    int hi() const { return complex.hi(); }
    const Representation& cap() const { return complex.term(window_bottom - 1); }
    bool closes() const;
};

/// dualize ∘ proj_resolution_complex ∘ dualize, with degrees negated.
CappedCoresolution inj_resolution(const BoundedComplex& x, int n,
                                  ResolutionMode mode = ResolutionMode::Minimal, std::uint64_t seed = 0);
CappedCoresolution min_inj_resolution(const Representation& m, int n);

/// (σ_{(-∞,m]} I)[-m], the mirror of capped_model. Requires
/// window_bottom ≤ m ≤ hi(I).
BoundedComplex capped_comodel(const CappedCoresolution& i, int m);

}  // namespace dersyz
