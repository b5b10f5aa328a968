#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "garside/simple.hpp"

namespace garside {

/// An arbitrary word in the Artin generators of B_n.
class BraidWord {
 public:
  explicit BraidWord(StrandCount n) : n_(n) {}
  BraidWord(StrandCount n, std::vector<GeneratorLetter> letters);

  StrandCount strands() const noexcept { return n_; }
  const std::vector<GeneratorLetter>& letters() const noexcept { return letters_; }

  /// Accepts signed indices: +i for σ_i, -i for σ_i⁻¹.
  static BraidWord from_signed(StrandCount n, std::span<const int> letters);

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  StrandCount n_;
  std::vector<GeneratorLetter> letters_;
};

/// Left normal form Δ^p x₁⋯x_l: every factor is a proper simple element
/// (neither 1 nor Δ) and consecutive factors are left-weighted. Two braids are
/// equal iff their normal forms compare equal.
class NormalForm {
 public:
  /// The identity of B_n.
  explicit NormalForm(StrandCount n) : n_(n) {}
  /// Validates the normal-form invariants; throws InvalidArgument otherwise.
  NormalForm(StrandCount n, int inf, std::vector<SimpleElement> factors);

  static NormalForm delta_power(StrandCount n, int p);
  static NormalForm from_simple(const SimpleElement& s);

  StrandCount strands() const noexcept { return n_; }
  int inf() const noexcept { return inf_; }
  int sup() const noexcept { return inf_ + canonical_length(); }
  int canonical_length() const noexcept { return static_cast<int>(factors_.size()); }
  const std::vector<SimpleElement>& factors() const noexcept { return factors_; }

  bool is_identity() const noexcept { return inf_ == 0 && factors_.empty(); }
  bool is_delta_power() const noexcept { return factors_.empty(); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  std::size_t hash() const noexcept;

 private:
  struct Trusted {};
  NormalForm(Trusted, StrandCount n, int inf, std::vector<SimpleElement> factors)
      : n_(n), inf_(inf), factors_(std::move(factors)) {}
  friend class FactorSequence;

  StrandCount n_;
  int inf_ = 0;
  std::vector<SimpleElement> factors_;
};

/// Right normal form: x = factors[0]·factors[1]⋯factors[m-1]·Δ^inf where each
/// adjacent pair is right-weighted and no factor is 1 or Δ.
struct RightNormalForm {
  int inf = 0;
  std::vector<SimpleElement> factors;
};

NormalForm normalize(const BraidWord& w);
/// Normal form of Δ^inf·s₁⋯s_k for arbitrary simple elements.
NormalForm normalize_simples(StrandCount n, int inf, std::span<const SimpleElement> simples);

NormalForm multiply(const NormalForm& x, const NormalForm& y);
NormalForm multiply(const NormalForm& x, const SimpleElement& s);
NormalForm multiply(const SimpleElement& s, const NormalForm& x);
/// x·Δ^k
NormalForm multiply_delta_power(const NormalForm& x, int k);
/// Δ^k·x
NormalForm delta_power_multiply(int k, const NormalForm& x);

/// x⁻¹ = Δ^{-p-l} x'_l⋯x'_1 with x'_i = τ^{-p-i}(∂(x_i)); no sliding needed.
NormalForm invert(const NormalForm& x);

/// τ(x) = Δ⁻¹xΔ, applied factor-wise.
NormalForm tau(const NormalForm& x, int k = 1);

RightNormalForm right_normal_form(const NormalForm& x);
/// Leftmost non-Δ factor of the right normal form; nullopt for powers of Δ.
std::optional<SimpleElement> leftmost_right_factor(const NormalForm& x);

/// 1 ∨ z (prefix order). Only defined here when the result is simple, which
/// holds exactly when sup(z) <= 1; throws InvalidArgument otherwise.
SimpleElement join_with_identity(const NormalForm& z);
/// ≼-least positive h with w·h positive, i.e. 1 ∨ w⁻¹. Requires inf(w) >= -1.
SimpleElement least_positive_completion(const NormalForm& w);

/// Converts a normal form that is a single simple element (Δ^0 s, Δ^1 or the
/// identity) into that element.
std::optional<SimpleElement> as_simple(const NormalForm& x);

/// ι(x) = τ^{-p}(x₁); 1 when l = 0.
SimpleElement initial_factor(const NormalForm& x);
/// φ(x) = x_l; Δ when l = 0.
SimpleElement final_factor(const NormalForm& x);
std::pair<SimpleElement, SimpleElement> boundary_factors(const NormalForm& x);

/// 𝔭(x) = ι(x) ∧ ∂(φ(x)).
SimpleElement preferred_prefix(const NormalForm& x);
/// 𝔭(x) = 1; throws InvalidArgument when l = 0.
bool is_rigid(const NormalForm& x);

/// Expands Δ^p and the canonical factor words into a single word.
BraidWord to_word(const NormalForm& x);

}  // namespace garside

template <>
struct std::hash<garside::NormalForm> {
  std::size_t operator()(const garside::NormalForm& x) const noexcept { return x.hash(); }
};
