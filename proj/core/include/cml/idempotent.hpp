#pragma once

#include <set>
#include <vector>

#include "cml/measure.hpp"

namespace cml {

/// The coset idempotent with transform equal to the indicator of
/// { n : n mod q in residues }: atoms at j/q with masses
/// (1/q) * sum_{r in residues} zeta_q^{jr}. Masses are exact (cyclotomic).
DiscreteMeasure idempotent_from_residues(int q, const std::set<int>& residues);

/// Exact test of mu * mu = mu (convolution square against the canonical
/// form). Approximate inputs are rejected with not_decidable_error.
bool is_idempotent(const DiscreteMeasure& m);

/// All 2^q residue-set measures for modulus q, deduplicated by canonical
/// form. Guarded at q <= 16.
std::vector<DiscreteMeasure> enumerate_idempotents(int q);

}  // namespace cml
