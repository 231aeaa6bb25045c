#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dersyz/resolutions.hpp"

namespace dersyz {

/// An object of the bounded derived category, with its homological window
/// [a, k] (tight) computed once.
class DerivedObject {
public:
    DerivedObject() = default;
    explicit DerivedObject(BoundedComplex representative);
    static DerivedObject module(const Representation& m, int degree = 0);

    const BoundedComplex& representative() const { return rep_; }
    const AlgebraPtr& algebra() const { return rep_.algebra(); }
    bool is_zero() const { return !window_; }
    const std::optional<std::pair<int, int>>& window() const { return window_; }
    /// Window ends; throw ArgumentError for the zero object.
    int a() const;
    int k() const;

private:
    BoundedComplex rep_;
    std::optional<std::pair<int, int>> window_;
};

struct ResolutionChoice {
    ResolutionMode mode = ResolutionMode::Minimal;
    std::uint64_t seed = 0;
};

struct SyzygyResult {
    int level = 0;
    bool cosyzygy = false;
    /// Capped model in degrees ≥ 0 (≤ 0 for cosyzygies).
    BoundedComplex representative;
    /// The module the representative is quasi-isomorphic to, when it has
    /// homology in degree 0 only.
    std::optional<Representation> module;
    /// module with projective (injective for cosyzygies) summands stripped.
    std::optional<Representation> reduced_module;
};

/// Smallest window_top accepted by syzygy(m, n, ·): max(n, k) + 1.
int required_window_top(const DerivedObject& m, int n);
/// Largest window_bottom accepted by cosyzygy(m, n, ·): min(n, a) - 1.
int required_window_bottom(const DerivedObject& m, int n);

SyzygyResult syzygy(const DerivedObject& m, int n, int window_top, ResolutionChoice choice = {});
SyzygyResult syzygy(const DerivedObject& m, int n);
SyzygyResult cosyzygy(const DerivedObject& m, int n, int window_bottom, ResolutionChoice choice = {});
SyzygyResult cosyzygy(const DerivedObject& m, int n);

/// dim Hom_D(X, Y[i]), from the total Hom complex on a projective
/// resolution of X capped high enough for degree i.
std::size_t derived_hom_dim(const BoundedComplex& x, const BoundedComplex& y, int i, ResolutionChoice choice = {});
std::size_t derived_hom_dim(const DerivedObject& x, const DerivedObject& y, int i, ResolutionChoice choice = {});
/// Window the resolution of X needs for derived_hom_dim(X, Y, i).
int required_hom_window(const BoundedComplex& x, const BoundedComplex& y, int i);

/// A triangle X →u Y →v Z → with a verified quasi-isomorphism between
/// cone(u) and Z. By default phi runs cone(u) → Z; with phi_into_cone set
/// it runs Z → cone(u).
struct TriangleWitness {
    BoundedComplex first, second, third;
    ChainMap u;                 ///< first → second
    std::optional<ChainMap> v;  ///< second → third; absent when only phi⁻¹ ∘ (Y → cone) realizes it
    ChainMap phi;
    bool phi_into_cone = false;

    bool verify() const;
};

/// (Ω^{n+1} M)[n-m] → (σ_{[m,n]} P)[-m] → Ω^m M, for n ≥ m.
TriangleWitness syzygy_triangle(const DerivedObject& m, int n, int mm, ResolutionChoice choice = {});
/// Ω_n M → (σ_{[m,n]} I)[-n] → (Ω_{m-1} M)[m-n], for n ≥ m.
TriangleWitness cosyzygy_triangle(const DerivedObject& m, int n, int mm, ResolutionChoice choice = {});

/// Triangle Ω^n L → Ω^n M → Ω^n N from a verified triangle L → M → N, by
/// lifting the first map to resolutions and truncating a mapping cylinder.
TriangleWitness triangle_of_syzygies(const TriangleWitness& t, int n);

enum class Equivalence { Yes, No, Inconclusive };
const char* to_string(Equivalence e);

/// X restricted to degrees [lo, hi] as a module over A ⊗ k(lo ← ... ← hi)/(d²):
/// vertex (v, i) carries X_i at v, arrow d goes from level i to level i-1.
/// Chain isomorphisms of such complexes are module isomorphisms.
Representation complex_module(const BoundedComplex& x, int lo, int hi);
Equivalence chain_isomorphic(const BoundedComplex& x, const BoundedComplex& y, std::uint64_t seed = 0);

/// Module level when both carry reduced modules; otherwise minimal capped
/// resolutions are compared by a seeded search for a chain isomorphism.
Equivalence projectively_equivalent(const SyzygyResult& x, const SyzygyResult& y, std::uint64_t seed = 0);
/// Complex-level comparison of X ⊕ P and Y ⊕ P' for projective modules P, P'.
Equivalence projectively_equivalent(const BoundedComplex& x, const BoundedComplex& y, std::uint64_t seed = 0);
/// Mirror for cosyzygies: injective summands in degree 0.
Equivalence injectively_equivalent(const SyzygyResult& x, const SyzygyResult& y, std::uint64_t seed = 0);
Equivalence injectively_equivalent(const BoundedComplex& x, const BoundedComplex& y, std::uint64_t seed = 0);

struct ShiftCheck {
    std::string identity;
    std::size_t lhs = 0;
    std::size_t rhs = 0;
    bool holds() const { return lhs == rhs; }
};

/// dim Hom(Ω^{n+m} M, N[j]) vs dim Hom(Ω^n M, N[j+m]); requires m ≥ 1 and j > -c.
ShiftCheck dimension_shift(const DerivedObject& m, const DerivedObject& nn, int n, int mm, int j);
/// dim Hom(N, Ω_n(M)[j]) vs dim Hom(N, Ω_{n+m}(M)[j+m]); requires m ≥ 1 and
/// j > d, where N ∈ D^[c,d]. For j ≤ d the injective terms can carry maps
/// from N and the two sides differ (N = S ⊕ S[1] over the dual numbers, j = 0).
ShiftCheck dimension_shift_dual(const DerivedObject& m, const DerivedObject& nn, int n, int mm, int j);
/// dim Hom(M, N[j]) vs dim Hom(Ω^k M, Ω_c(N)[j-k+c]); requires j > k - c.
ShiftCheck auslander_shift(const DerivedObject& m, const DerivedObject& nn, int j);

/// Every identity above whose side conditions hold for (n, m, j).
std::vector<ShiftCheck> verify_shift_identities(const DerivedObject& m, const DerivedObject& nn, int n, int mm, int j);

}  // namespace dersyz
