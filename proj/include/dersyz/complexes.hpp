#pragma once

#include <climits>
#include <map>
#include <optional>
#include <vector>

#include "dersyz/module.hpp"

namespace dersyz {

constexpr int kMinusInfinity = INT_MIN;
constexpr int kPlusInfinity = INT_MAX;

/// Finitely supported chain complex ... → X_i →d_i X_{i-1} → ...
/// Terms outside [lo, hi] are zero; an empty support has hi < lo.
class BoundedComplex {
public:
    BoundedComplex() = default;
    /// terms[k] sits in degree lo + k; diffs[k] is d_{lo+k+1}. Validates
    /// shapes and d∘d = 0.
    BoundedComplex(AlgebraPtr algebra, int lo, std::vector<Representation> terms, std::vector<ModuleHom> diffs);

    static BoundedComplex zero(AlgebraPtr algebra);
    static BoundedComplex concentrated(const Representation& m, int degree = 0);

    const AlgebraPtr& algebra() const { return alg_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
    bool in_support(int i) const { return i >= lo() && i <= hi(); }
    const Representation& term(int i) const;
    /// d_i : X_i → X_{i-1}; the zero map outside the support.
    ModuleHom differential(int i) const;
    bool is_zero() const;
    std::size_t total_dim() const;

    /// Same complex with zero end terms removed.
    BoundedComplex trimmed() const;

private:
    AlgebraPtr alg_;
    int lo_ = 0;
    std::vector<Representation> terms_;
    std::vector<ModuleHom> diffs_;
    Representation zero_;
};

/// Chain map with components f_i : X_i → Y_i satisfying d_Y f_i = f_{i-1} d_X.
class ChainMap {
public:
    ChainMap() = default;
    /// Missing components are zero. Validates shapes and commutation.
    ChainMap(BoundedComplex source, BoundedComplex target, std::map<int, ModuleHom> components);

    static ChainMap identity(const BoundedComplex& x);
    static ChainMap zero(const BoundedComplex& x, const BoundedComplex& y);

    const BoundedComplex& source() const { return src_; }
    const BoundedComplex& target() const { return tgt_; }
    ModuleHom component(int i) const;
    const std::map<int, ModuleHom>& components() const { return comps_; }

    /// Right to left: (g * f) applies f first.
    ChainMap operator*(const ChainMap& f) const;
    ChainMap operator+(const ChainMap& o) const;
    ChainMap operator-(const ChainMap& o) const;
    ChainMap operator-() const;
    bool commutes() const;
    bool is_zero() const;
    /// Degreewise isomorphism.
    bool is_iso() const;
    std::optional<ChainMap> inverse() const;

private:
    struct Unchecked {};
    ChainMap(BoundedComplex s, BoundedComplex t, std::map<int, ModuleHom> c, Unchecked);
    friend ChainMap make_chain_map_unchecked(BoundedComplex, BoundedComplex, std::map<int, ModuleHom>);
    BoundedComplex src_;
    BoundedComplex tgt_;
    std::map<int, ModuleHom> comps_;
};

ChainMap make_chain_map_unchecked(BoundedComplex source, BoundedComplex target, std::map<int, ModuleHom> components);

/// (X[m])_i = X_{i-m}, differential scaled by (-1)^m.
BoundedComplex shift(const BoundedComplex& x, int m);
ChainMap shift(const ChainMap& f, int m);

/// Brutal truncation σ_{[a,b]}; use kMinusInfinity / kPlusInfinity for
/// half-open intervals.
BoundedComplex truncate(const BoundedComplex& x, int a, int b);
/// Canonical chain map X → σ_{[n,∞)} X.
ChainMap truncation_projection(const BoundedComplex& x, int n);
/// Canonical chain map σ_{(-∞,n]} X → X.
ChainMap truncation_inclusion(const BoundedComplex& x, int n);

struct ConeResult {
    BoundedComplex cone;
    ChainMap from_target;  ///< Y → cone(f)
    ChainMap to_shift;     ///< cone(f) → X[1]
};
/// cone(f)_i = Y_i ⊕ X_{i-1} with differential [[d_Y, f], [0, -d_X]].
ConeResult cone(const ChainMap& f);

/// For u : A → B and a complex T with T_i ∈ {B_i, A_{i-1}} in each degree
/// (at most one of them nonzero): the map cone(u) → T that is the identity
/// on the nonzero summand. Throws ArgumentError when that is not a chain map.
ChainMap cone_identification(const ConeResult& c, const ChainMap& u, const BoundedComplex& t);

/// For u : A → B and a complex T with T_i equal to A_{i-1} or zero: the
/// map T → cone(u) into the A[1] summand. Throws ArgumentError when that is
/// not a chain map.
ChainMap cone_shift_inclusion(const ConeResult& c, const ChainMap& u, const BoundedComplex& t);

Representation homology(const BoundedComplex& x, int i);
/// Per-vertex dimensions of H_i(X), from ranks only.
std::vector<std::size_t> homology_dims(const BoundedComplex& x, int i);
std::size_t homology_dim(const BoundedComplex& x, int i);
bool is_acyclic(const BoundedComplex& x);
/// Smallest interval [a, k] outside which homology vanishes; nullopt when
/// the complex is acyclic.
std::optional<std::pair<int, int>> homology_window(const BoundedComplex& x);

/// h_i : X_i → Y_{i+1} with f = d h + h d.
using Homotopy = std::map<int, ModuleHom>;
std::optional<Homotopy> null_homotopy(const ChainMap& f);
bool is_quasi_iso(const ChainMap& f);
/// Applies a homotopy: (d h + h d)_i.
ChainMap homotopy_boundary(const BoundedComplex& x, const BoundedComplex& y, const Homotopy& h);

struct ComplexSum {
    BoundedComplex sum;
    std::vector<ChainMap> inclusions;
    std::vector<ChainMap> projections;
};
ComplexSum direct_sum(const std::vector<BoundedComplex>& parts);
BoundedComplex direct_sum(const BoundedComplex& a, const BoundedComplex& b);
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);

/// D(X)_j = D(X_{-j}) over the opposite algebra.
BoundedComplex dualize(const BoundedComplex& x);
/// D(f) : D(Y) → D(X).
ChainMap dualize(const ChainMap& f);

/// Total Hom complex Hom•(X, Y): degree-d elements are families
/// g_i : X_i → Y_{i+d}, with δ(g)_i = d_Y g_i - (-1)^d g_{i-1} d_X.
/// Degree-0 cycles are chain maps, degree-1 images are null-homotopic maps.
struct HomComplexBasis {
    int degree = 0;
    std::vector<int> slots;                      ///< degrees i with Hom(X_i, Y_{i+d}) ≠ 0
    std::vector<std::vector<ModuleHom>> basis;   ///< basis of each slot
    std::size_t size() const;
    /// Family of maps for a coefficient vector over the concatenated basis.
    std::map<int, ModuleHom> combine(const Matrix& coeffs, std::size_t column = 0) const;
};
HomComplexBasis hom_complex_basis(const BoundedComplex& x, const BoundedComplex& y, int d);

/// Entry-space coordinates of degree-d families: the per-vertex matrices of
/// every g_i, concatenated in degree order.
struct EntryLayout {
    int degree = 0;
    std::map<int, std::size_t> offset;
    std::size_t size = 0;
};
EntryLayout entry_layout(const BoundedComplex& x, const BoundedComplex& y, int d);
std::vector<PrimeField::value_type> entry_coordinates(const EntryLayout& layout, const std::map<int, ModuleHom>& maps);
/// Columns: δ of each basis element, in the entry space of degree d-1.
Matrix hom_complex_differential(const BoundedComplex& x, const BoundedComplex& y, const HomComplexBasis& basis);
/// Columns: each basis element in the entry space of its own degree.
Matrix hom_complex_embedding(const BoundedComplex& x, const BoundedComplex& y, const HomComplexBasis& basis);
/// dim H^d of the total Hom complex (maps X → Y[-d] up to homotopy).
std::size_t hom_complex_homology_dim(const BoundedComplex& x, const BoundedComplex& y, int d);

bool all_terms_projective(const BoundedComplex& x, int from = kMinusInfinity, int to = kPlusInfinity);

}  // namespace dersyz
