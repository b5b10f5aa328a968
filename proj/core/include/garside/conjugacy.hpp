#pragma once

#include <vector>

#include "garside/normal_form.hpp"

namespace garside {

/// element = conjugator⁻¹ · start · conjugator.
struct ConjugationStep {
  NormalForm element;
  NormalForm conjugator;
};

/// Cycling orbit X_1, ..., X_k with X_j^{a_j} = X_{j+1} (indices mod k) and
/// a_j = ι(X_j).
struct OrbitInfo {
  std::vector<NormalForm> elements;
  std::vector<SimpleElement> conjugators;

  int k() const noexcept { return static_cast<int>(elements.size()); }
};

inline constexpr int kDefaultSlideCap = 1 << 16;
inline constexpr int kDefaultOrbitCap = 1 << 20;

/// g⁻¹xg
NormalForm conjugate(const NormalForm& x, const NormalForm& g);
/// s⁻¹xs
NormalForm conjugate(const NormalForm& x, const SimpleElement& s);

ConjugationStep cycling(const NormalForm& x);
/// Untwisted: conjugation by φ(x)⁻¹. Twisted: by ∂(φ(x)), giving τ(d(x)).
ConjugationStep decycling(const NormalForm& x, bool twisted);
/// Conjugation by the preferred prefix.
ConjugationStep cyclic_sliding(const NormalForm& x);

/// Iterates cyclic sliding until an element repeats and returns the first
/// element of the circuit with the cumulative conjugator from x.
/// Throws LimitExceeded("slide_steps") after step_cap slidings.
ConjugationStep slide_to_circuit(const NormalForm& x, int step_cap = kDefaultSlideCap);

/// Requires x to lie in its own cycling orbit (true for x in USS); throws
/// InvalidArgument when another element recurs first.
OrbitInfo cycling_orbit(const NormalForm& x, int cap = kDefaultOrbitCap);

/// α^{(i)} along the cycling trajectory of x, where
/// α^{(1)} = ι(x)⁻¹ α ι(x^α). Does not check that x, x^α are super summit.
NormalForm transport(const NormalForm& x, const NormalForm& alpha, int i);

/// ℓ(z) = summit_len and z returns to itself under cycling.
bool uss_membership(const NormalForm& z, int summit_len, int cap = kDefaultOrbitCap);

}  // namespace garside
