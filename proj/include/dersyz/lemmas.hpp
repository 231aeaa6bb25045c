#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dersyz/derived.hpp"

namespace dersyz {

/// One mechanical check of a syzygy identity on concrete inputs.
struct LemmaCheck {
    std::string family;  ///< e.g. "syzygy.shift", "cosyzygy.sum", "triangle.syzygy-shift"
    std::string input;   ///< deterministic description of the inputs
    bool passed = false;
    std::string detail;  ///< verdict or the compared values
};

struct LemmaReport {
    std::vector<LemmaCheck> checks;
    std::size_t failures() const;
    bool all_passed() const { return failures() == 0; }
    /// Checks whose family starts with the prefix.
    LemmaReport only(const std::string& prefix) const;
    void append(const LemmaReport& other);
};

struct LemmaOptions {
    int n_max = 3;          ///< syzygy levels 0..n_max (cosyzygies -n_max..0)
    int m_max = 3;          ///< shift amounts for dimension shifting
    int j_max = 4;          ///< |j| bound for Hom degrees
    std::uint64_t seed = 0;
};

/// Test objects: the given modules at degree 0, plus S_0[-1] and the
/// two-term complex S_0 ⊕ S_0[1].
std::vector<DerivedObject> lemma_objects(const std::vector<Representation>& modules);

/// Window bounds, shift compatibility, iteration, projective summands,
/// perfectness and direct sums for syzygies.
LemmaReport check_syzygy_items(const std::vector<DerivedObject>& objects, const LemmaOptions& opt);
/// The same seven items for cosyzygies, plus D ∘ Ω^n = Ω_{-n} ∘ D.
LemmaReport check_cosyzygy_items(const std::vector<DerivedObject>& objects, const LemmaOptions& opt);
/// Minimal and padded resolutions give projectively equivalent syzygies.
LemmaReport check_resolution_independence(const std::vector<DerivedObject>& objects, const LemmaOptions& opt);
/// Dimension shifting and its dual over all legal (n, m, j).
LemmaReport check_dimension_shift(const std::vector<DerivedObject>& objects, const LemmaOptions& opt);
/// Hom(M, N[j]) against Hom(Ω^k M, Ω_c N[j-k+c]) for legal j.
LemmaReport check_syzygy_cosyzygy_shift(const std::vector<DerivedObject>& objects, const LemmaOptions& opt);
/// Syzygy and cosyzygy triangles verify; triangles with a bounded-above
/// projective middle term shift syzygies by one; syzygies of triangles
/// form verified triangles.
LemmaReport check_triangles(const std::vector<DerivedObject>& objects, const LemmaOptions& opt);

/// Triangles X → B → cone(f) with B a complex of projectives in degrees ≤ k,
/// for seeded chain maps f. Returns (triangle, k).
std::vector<std::pair<TriangleWitness, int>> projective_middle_triangles(const AlgebraPtr& alg,
                                                                         const std::vector<Representation>& modules,
                                                                         std::uint64_t seed);

/// Every family above.
LemmaReport verify_lemmas(const std::vector<Representation>& modules, const LemmaOptions& opt);

}  // namespace dersyz
