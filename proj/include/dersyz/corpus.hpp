#pragma once

#include <vector>

#include "dersyz/algebra.hpp"
#include "dersyz/module.hpp"

namespace dersyz::corpus {

/// Dual numbers F_2[a]/(a^2): one vertex "v", one loop "a".
QuiverSpec dual_numbers_spec();
/// Hereditary A_2 over F_2: vertices "1" → "2", arrow "alpha".
QuiverSpec a2_spec();
/// Linear A_3 over F_2 with radical square zero: 1 →alpha 2 →beta 3, beta·alpha = 0.
QuiverSpec a3_rad2_spec();

AlgebraPtr dual_numbers();
AlgebraPtr a2();
AlgebraPtr a3_rad2();

std::vector<AlgebraPtr> algebras();
/// Simples, indecomposable projectives and injectives, the regular module
/// and S_first ⊕ I_last.
std::vector<Representation> test_modules(const AlgebraPtr& alg);

}  // namespace dersyz::corpus
