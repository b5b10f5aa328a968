#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "garside/conjugacy.hpp"

namespace garside::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random word of the given length over σ_i^{±1}.
BraidWord random_word(Rng& rng, int n, int length, bool positive_only = false);
SimpleElement random_simple(Rng& rng, int n);
NormalForm random_normal_form(Rng& rng, int n, int max_length);

/// A rigid ultra summit element, obtained by sliding a random normal form
/// with 1 ≤ ℓ ≤ max_l. Gives up after a bounded number of attempts.
std::optional<NormalForm> random_rigid(Rng& rng, int n, int max_l);

}  // namespace garside::testing
