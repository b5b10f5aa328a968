#pragma once

// Independent reference computations used by the tests. None of these call
// the lattice or normal-form code under test except to convert results.

#include <cstdint>
#include <random>
#include <vector>

#include "garside/normal_form.hpp"

namespace garside::testing {

using Perm = std::vector<int>;

/// Composition in word order: (a·b)[i] = b[a[i]].
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
/// Permutation of the atom σ_i (1-based).
Perm atom_perm(int n, int i);
/// Inversion count = crossing count = word length of the permutation braid.
int inversions(const Perm& p);

/// All left divisors of s, by recursing through descents: σ_i ≼ s exactly when
/// the strands at positions i-1, i end up crossed.
std::vector<SimpleElement> divisors_by_descent(const SimpleElement& s);

/// Meet and join read off divisor sets: greatest common divisor and least
/// common multiple by length.
SimpleElement oracle_meet(const SimpleElement& s, const SimpleElement& t);
SimpleElement oracle_join(const SimpleElement& s, const SimpleElement& t);

/// Unreduced Burau matrices over Z/p at two fixed values of t. Used as an
/// independent equality check for braid words: equal braids always give equal
/// matrices.
class Burau {
 public:
  explicit Burau(int n);

  static constexpr std::uint64_t kPrime = 2147483647ULL;

  void apply(const GeneratorLetter& l);
  void apply_word(const BraidWord& w);

  friend bool operator==(const Burau&, const Burau&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> m_[2];
};

Burau burau_of(const BraidWord& w);
Burau burau_of(const NormalForm& x);

/// 1 ∨ z by search: the ≼-least simple s with z ≼ s, i.e. z⁻¹s positive.
/// Positivity of z⁻¹s is tested as inf(z⁻¹s) ≥ 0 through normalize of words.
SimpleElement brute_join_with_identity(const NormalForm& z);

/// Word for the inverse: reversed with signs flipped.
BraidWord inverse_word(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);

}  // namespace garside::testing
