#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "garside/conjugacy.hpp"

namespace garside {

/// Black: label ≼ ι(source). Grey: label ≼ ι(source⁻¹). Bicolored: both.
enum class ArrowColor { Black, Grey, Bicolored };

std::string_view to_string(ArrowColor c) noexcept;

struct ColoredSimple {
  SimpleElement element;
  ArrowColor color;

  friend bool operator==(const ColoredSimple&, const ColoredSimple&) = default;
};

struct Arrow {
  int source = 0;
  int target = 0;
  SimpleElement label;
  ArrowColor color = ArrowColor::Black;
};

/// The graph Γ_x on the ultra summit set: vertices in discovery order,
/// arrows labelled by minimal simple elements.
struct UssGraph {
  StrandCount n;
  int summit_len = 0;
  int base = 0;
  std::vector<NormalForm> vertices;
  std::vector<Arrow> arrows;
  std::unordered_map<NormalForm, int> index;

  std::optional<int> find(const NormalForm& v) const;
  /// Arrows leaving vertex v, in label order.
  std::vector<Arrow> out_arrows(int v) const;
};

enum class MinimalMethod { Auto, RigidPullback, BruteForce };

inline constexpr int kDefaultBruteForceBound = 7;
inline constexpr std::size_t kDefaultVertexCap = 100000;

/// ≼-least ρ with σ_i ≼ ρ and x^ρ super summit. x must be rigid and super
/// summit.
SimpleElement atom_pullback_sss(const NormalForm& x, int i);

/// Minimal simple elements of y ∈ USS(y), sorted by (color, permutation).
/// Auto uses the pullback for rigid y with ℓ ≥ 2 and brute force otherwise.
std::vector<ColoredSimple> minimal_simple_elements(const NormalForm& y, int summit_len,
                                                   MinimalMethod method = MinimalMethod::Auto,
                                                   int brute_force_bound = kDefaultBruteForceBound);

struct GraphOptions {
  std::size_t vertex_cap = kDefaultVertexCap;
  MinimalMethod method = MinimalMethod::Auto;
  int brute_force_bound = kDefaultBruteForceBound;
};

/// Slides x0 into its sliding circuits and closes the graph breadth-first.
UssGraph build_uss_graph(const NormalForm& x0, const GraphOptions& options = {});

/// ℓ(x) > 1, x rigid, and both ι(x) and ∂(φ(x)) minimal. Requires x ∈ USS(x).
bool check_minimal_uss(const NormalForm& x);

enum class OrbitTag { TwoOrbits, OneOrbitTauShift, OneOrbitTauFixed, NotMinimal };

std::string_view to_string(OrbitTag t) noexcept;

struct OrbitStructure {
  OrbitTag tag = OrbitTag::NotMinimal;
  int k = 0;
  OrbitInfo orbit;
};

/// Shape of the cycling orbit of x relative to τ(x); never NotMinimal.
OrbitStructure orbit_structure(const NormalForm& x);
/// orbit_structure, tagged NotMinimal when check_minimal_uss fails.
OrbitStructure classify(const NormalForm& x);

}  // namespace garside
