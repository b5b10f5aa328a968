#pragma once

// Checks of the structural statements about minimal ultra summit graphs.
// Each returns an empty string on success and a description otherwise.

#include <string>

#include "garside/centralizer.hpp"
#include "generators.hpp"

namespace garside::testing {

/// Every vertex has exactly one outgoing black arrow, labelled ι, and one
/// outgoing grey arrow, labelled ∂(φ).
std::string one_black_one_grey_violation(const UssGraph& g);

/// Exactly one incoming arrow of each color, b₁b₂ and g₁g₂ left-weighted,
/// b₁g₂ = Δ and g₁b₂ = Δ at every vertex.
std::string arrow_identity_violation(const UssGraph& g);

/// One or two cycling orbits; with two, τ exchanges them; with one and
/// τ(x) ≠ x, k is even and τ(X_j) = X_{j+k/2}.
std::string orbit_shape_violation(const UssGraph& g);

/// Loop values F_λ on the fixed trees used for the two-generator cases,
/// compared with the closed forms. Requires g built from a minimal USS with
/// base vertex x.
std::string loop_identity_violation(const UssGraph& g);

/// A random element whose factors are all τ-invariant, slid into its USS.
NormalForm random_tau_invariant(Rng& rng, int n, int l);

}  // namespace garside::testing
