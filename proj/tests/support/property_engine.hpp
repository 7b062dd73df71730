#pragma once

#include <string>
#include <vector>

namespace conewright::testsupport {

// Outcome of one randomized or exhaustive property sweep: how many instances
// ran and one message per failing instance.
struct PropertySummary {
  std::string name;
  long long instances = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

// Randomized graded-ring axioms and normal-form idempotence over every
// distinct catalog presentation; one instance is one random class triple.
PropertySummary ring_axiom_sweep(unsigned long long seed, int triples_per_ring);

// Randomized Whitney/dual/twist/tensor identities and the character round
// trip over every catalog model; one instance is one random bundle draw.
PropertySummary bundle_identity_sweep(unsigned long long seed, int instances_per_space);

// Randomized linearity and shared-presentation consistency of the
// integration functionals; one instance is one random class pair.
PropertySummary integration_sweep(unsigned long long seed, int instances_per_model);

// Exhaustive comparison of every cycle-class product in both rank-2
// Grassmannian presentations against the combinatorial strip oracle,
// including top-degree duality integrals.
PropertySummary schubert_oracle_sweep();

// Cross-model tangent checks against the complete-intersection oracle:
// pointwise Chern pairings, Euler numbers, and the second-Chern pairings
// that feed the invariant tables.
PropertySummary tangent_oracle_sweep();

// All of the above with the default instance counts used by both the test
// suite and the acceptance gate (>= 1000 randomized instances in total).
std::vector<PropertySummary> run_all_property_sweeps();

}  // namespace conewright::testsupport
