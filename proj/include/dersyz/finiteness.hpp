#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dersyz/derived.hpp"

namespace dersyz {

enum class Verdict { HoldsUpToBound, FailsWithCounterexample, Inconclusive };
const char* to_string(Verdict v);

/// Finite-horizon verdict. bounds records the window parameters the verdict
/// depends on; witness carries the data needed to re-check a failure.
struct BoundedVerdict {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::pair<std::string, long long>> bounds;
    std::vector<std::pair<std::string, std::string>> witness;
    std::string reason;
};

/// Iso-classes of indecomposable modules, named deterministically: S<v>, P<v>,
/// I<v> for simples, indecomposable projectives and injectives (the vertex
/// label is dropped on one-vertex algebras), otherwise M<dims>#k with k
/// counting classes of that dimension vector in discovery order.
class IsoClassRegistry {
public:
    explicit IsoClassRegistry(AlgebraPtr algebra);

    /// Index of the class of an indecomposable module, registering it if new.
    std::size_t classify(const Representation& indecomposable);
    const std::string& name(std::size_t id) const { return names_[id]; }
    const Representation& representative(std::size_t id) const { return reps_[id]; }
    std::size_t size() const { return reps_.size(); }

private:
    AlgebraPtr alg_;
    std::vector<Representation> reps_;
    std::vector<std::string> names_;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_dims_;
};

/// Class id → multiplicity.
using ClassMultiset = std::map<std::size_t, std::size_t>;

struct OrbitReport {
    std::vector<Representation> seeds;
    int n_max = 0;
    /// levels[n]: nonprojective indecomposable summands of Ω^n(seeds).
    std::vector<ClassMultiset> levels;
    /// Some level repeats an earlier one as a multiset.
    bool stabilized = false;
    /// Some level repeats an earlier one as a set of classes; from there on
    /// the union of classes is closed under Ω.
    bool support_stabilized = false;
    int repeat_from = -1;  ///< first level of the repeating pair (support)
    int repeat_at = -1;
    /// |union of classes in levels 0..n| for each n.
    std::vector<std::size_t> union_sizes;
    /// Set when dim_cap or a decomposition budget stopped the exploration.
    std::optional<std::string> inconclusive;
    std::vector<std::string> class_names;  ///< by class id

    std::vector<std::string> level_names(int n) const;  ///< sorted, with repeats
};

/// Module-level orbit. registry may be shared across calls for stable ids.
OrbitReport syzygy_orbit(const std::vector<Representation>& seeds, int n_max, std::size_t dim_cap,
                         IsoClassRegistry& registry, std::uint64_t seed = 0);
OrbitReport syzygy_orbit(const std::vector<Representation>& seeds, int n_max, std::size_t dim_cap,
                         std::uint64_t seed = 0);

/// Nonprojective indecomposable summands of the quotients P_v / U, for
/// submodules U of the indecomposable projectives P_v with dim P_v ≤ dim_cap.
/// Larger P_v contribute P_v / rad^t P_v only.
std::vector<Representation> quotient_seeds(const AlgebraPtr& alg, std::size_t dim_cap, std::uint64_t seed = 0);

struct SyzygyFiniteResult {
    BoundedVerdict verdict;
    OrbitReport orbit;
};

/// Holds up to the bound when the orbit of the seeds closes (a level's class
/// set repeats) within n_max; the classes from n_start on are then finite.
SyzygyFiniteResult detect_syzygy_finite(const AlgebraPtr& alg, int n_start, int n_max, std::size_t dim_cap,
                                        std::optional<std::vector<Representation>> seeds = std::nullopt,
                                        std::uint64_t seed = 0);

struct PhiPsi {
    bool conclusive = false;
    int phi = 0;
    int psi = 0;
    std::vector<std::size_t> ranks;  ///< rank of L^n⟨add M⟩ for n = 0..certified level
    int certified_level = 0;         ///< ranks are constant from here on
    std::string reason;
};

/// Igusa–Todorov functions. L is Ω on the free abelian group over nonprojective
/// indecomposables; Φ is the least n from which rank L^n⟨add M⟩ is constant and
/// Ψ adds the largest finite projective dimension among the summands of Ω^Φ M.
PhiPsi phi_psi(const Representation& m, int n_cap, std::uint64_t seed = 0);

/// Projective dimension when Ω^i M becomes projective for some i ≤ n_cap;
/// -1 when the orbit of nonprojective summands closes without reaching 0;
/// nullopt when neither happens within n_cap.
std::optional<int> projective_dimension(const Representation& m, int n_cap, std::uint64_t seed = 0);

struct ITSequence {
    Representation test;
    Representation syzygy;  ///< Ω^n of the test module
    Representation v0, v1;
    ModuleHom epi;          ///< v0 → syzygy
    ModuleHom kernel;       ///< v1 → v0
};

struct ITResult {
    BoundedVerdict verdict;
    Representation v;
    int n = 0;
    std::vector<ITSequence> sequences;  ///< one per test, when all succeed
    std::optional<std::size_t> counterexample;  ///< index into tests
};

/// Membership in add V by decomposition against V's indecomposable summands.
bool in_add(const Representation& x, const Representation& v, std::uint64_t seed = 0);

/// For each test M: an exact 0 → V1 → V0 → Ω^n M → 0 with V0, V1 ∈ add V.
/// The right add V-approximation decides existence of an epi; its kernel,
/// then seeded enlargements V0 ⊕ V_i^a with a ≤ dim Ω^n M, are tried as V1.
ITResult check_it_witness(const Representation& v, int n, const std::vector<Representation>& tests,
                          std::uint64_t seed = 0);

struct HomRow {
    std::string target;
    std::vector<std::size_t> dims;  ///< i = 0..i_max
    bool qualifies = false;         ///< zero on (i_max/2, i_max]
    bool unstable = false;          ///< nonzero inside the tail, but not at its end
    int last_nonzero = 0;
};

struct AuslanderEstimate {
    BoundedVerdict verdict;
    std::optional<int> bound;
    std::vector<HomRow> rows;
};

AuslanderEstimate auslander_bound_estimate(const Representation& m, const std::vector<Representation>& testset,
                                           int i_max, const std::vector<std::string>& names = {});

struct GarcResult {
    BoundedVerdict verdict;
    bool hypothesis = false;    ///< Hom(M, (M ⊕ R)[i]) = 0 for n < i ≤ i_max
    bool vacuous = false;
    std::optional<int> pd;      ///< within the window
    bool condition_module = false;   ///< tail vanishing for M
    bool condition_syzygy = false;   ///< tail vanishing for Ω^n M
    bool conditions_agree = false;
};

GarcResult garc_check(const Representation& m, int n, int i_max);

struct TiltingResult {
    BoundedVerdict verdict;
    std::vector<std::pair<int, std::size_t>> dims;  ///< (i, dim Hom(T, T[i]))
    std::size_t end_dim = 0;
};

/// Hom(T, T[i]) = 0 for i ≠ 0 in [i_lo, i_hi], T the sum of the summands.
/// Generation of the homotopy category is not checked.
TiltingResult tilting_hom_check(const std::vector<BoundedComplex>& summands, int i_lo, int i_hi);

}  // namespace dersyz
