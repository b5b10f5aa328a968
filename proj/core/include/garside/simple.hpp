#pragma once

// Permutation braids: the simple elements [1, Δ] of the braid group B_n and
// the prefix lattice they form.
//
// Convention used throughout the library: words act left to right. A simple
// element is stored as the table perm[i] = final position of the strand that
// starts at position i (0-based), and the permutation of a product s·t is
// "apply s, then t", i.e. (s·t)[i] = t[s[i]]. The generator σ_k (1-based)
// exchanges positions k-1 and k.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace garside {

inline constexpr int kMaxStrands = 32;

/// Number of strands n of B_n; always 2 <= n <= kMaxStrands.
class StrandCount {
 public:
  explicit StrandCount(int n);

  int value() const noexcept { return n_; }
  friend bool operator==(StrandCount, StrandCount) = default;

 private:
  int n_;
};

/// σ_index^sign with 1 <= index <= n-1.
struct GeneratorLetter {
  int index = 1;
  int sign = 1;

  friend bool operator==(const GeneratorLetter&, const GeneratorLetter&) = default;
};

class SimpleElement {
 public:
  static SimpleElement identity(StrandCount n);
  static SimpleElement delta(StrandCount n);
  /// The atom σ_i, 1 <= i <= n-1.
  static SimpleElement atom(StrandCount n, int i);
  /// Builds from a 0-based permutation table; throws unless it is a bijection.
  static SimpleElement from_permutation(std::span<const int> perm);

  StrandCount strands() const noexcept { return StrandCount(n_); }
  int size() const noexcept { return n_; }

  /// Final position of the strand starting at position i (0-based).
  int operator[](int i) const noexcept { return perm_[static_cast<std::size_t>(i)]; }
  std::vector<int> permutation() const;
  std::vector<int> inverse_permutation() const;

  bool is_identity() const noexcept;
  bool is_delta() const noexcept;
  /// Number of crossings, i.e. the word length of the permutation braid.
  int length() const noexcept;

  friend bool operator==(const SimpleElement& a, const SimpleElement& b) noexcept;
  friend std::strong_ordering operator<=>(const SimpleElement& a,
                                          const SimpleElement& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  SimpleElement() = default;
  friend class SimpleBuilder;

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxStrands> perm_{};
};

SimpleElement delta(StrandCount n);

/// Greatest common left divisor s ∧ t.
SimpleElement meet(const SimpleElement& s, const SimpleElement& t);
/// Least common left multiple s ∨ t (always simple).
SimpleElement join(const SimpleElement& s, const SimpleElement& t);
/// Greatest common right divisor.
SimpleElement right_meet(const SimpleElement& s, const SimpleElement& t);

/// ∂(s) = s⁻¹Δ.
SimpleElement right_complement(const SimpleElement& s);
/// ∂⁻¹(s) = Δs⁻¹.
SimpleElement left_complement(const SimpleElement& s);

/// τ^k(s) = Δ^{-k} s Δ^k; only the parity of k matters.
SimpleElement tau(const SimpleElement& s, int k = 1);

/// Image under the word-reversal anti-automorphism (inverse permutation table).
SimpleElement reverse(const SimpleElement& s);

/// t ≼ s.
bool is_prefix(const SimpleElement& t, const SimpleElement& s);
/// t is a right divisor (suffix) of s.
bool is_suffix(const SimpleElement& t, const SimpleElement& s);

/// s·t when that product is again simple, nullopt otherwise.
std::optional<SimpleElement> product_if_simple(const SimpleElement& s,
                                               const SimpleElement& t);
/// s⁻¹·m; requires s ≼ m.
SimpleElement left_quotient(const SimpleElement& s, const SimpleElement& m);
/// m·s⁻¹; requires s to be a suffix of m.
SimpleElement right_quotient(const SimpleElement& m, const SimpleElement& s);

/// Exhaustive enumeration of {t simple : t ≼ s}. Refuses n > bound.
std::vector<SimpleElement> left_divisors(const SimpleElement& s, int bound = 8);

/// All n! simple elements of B_n in lexicographic order of their tables.
/// Refuses n > bound.
std::vector<SimpleElement> all_simples(StrandCount n, int bound = 8);

bool is_left_weighted(const SimpleElement& s, const SimpleElement& t);

/// Local sliding: (s·u, u⁻¹t) with u = ∂(s) ∧ t. The result is left-weighted
/// and has the same product.
std::pair<SimpleElement, SimpleElement> local_slide(const SimpleElement& s,
                                                    const SimpleElement& t);

/// Canonical positive word: strands are moved into their final positions from
/// the highest position down, each by a run of ascending generators.
std::vector<GeneratorLetter> simple_word(const SimpleElement& s);

/// Inverse of simple_word for any positive word in which no pair of strands
/// crosses twice. Throws InvalidArgument otherwise.
SimpleElement simple_from_word(StrandCount n, std::span<const GeneratorLetter> letters);

}  // namespace garside

template <>
struct std::hash<garside::SimpleElement> {
  std::size_t operator()(const garside::SimpleElement& s) const noexcept { return s.hash(); }
};
