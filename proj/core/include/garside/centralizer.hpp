#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "garside/uss_graph.hpp"

namespace garside {

enum class CaseTag { TwoOrbits, OneOrbitTauShift, OneOrbitTauFixed, Fallback };

std::string_view to_string(CaseTag t) noexcept;

struct CentralizerOutput {
  std::vector<NormalForm> generators;
  CaseTag case_tag = CaseTag::Fallback;
  /// c with c⁻¹·input·c = representative.
  NormalForm conjugator;
  /// The ultra summit representative reached by sliding.
  NormalForm representative;
  int uss_size = 0;
  /// Cycling orbit length of the representative.
  int k = 0;
};

/// Tree of a UssGraph: parent_arrow[v] is the tree arrow into v (-1 at the
/// base) and gamma[v] the product of labels along the tree path, so that
/// base^{gamma[v]} = v.
struct SpanningTree {
  std::vector<int> parent_arrow;
  std::vector<NormalForm> gamma;
  std::vector<bool> in_tree;
};

/// ι(x)ι(c(x))⋯ι(c^{t-1}(x)) up to the first repetition; 1 for powers of Δ.
NormalForm preferred_cycling_conjugator(const NormalForm& x);

/// (A, B) for a minimal-USS orbit structure; throws on NotMinimal.
std::pair<NormalForm, NormalForm> theorem_case_generators(const OrbitStructure& st);

/// BFS tree from the base, level by level, black arrows taken before the
/// others within a level.
SpanningTree bfs_spanning_tree(const UssGraph& g);
/// Tree given by an explicit set of arrow indices; throws unless they form a
/// spanning tree oriented away from the base.
SpanningTree spanning_tree_from_arrows(const UssGraph& g, const std::vector<int>& tree_arrows);

/// γ_{s(λ)} λ γ_{t(λ)}⁻¹ for arrow index a.
NormalForm loop_value(const UssGraph& g, const SpanningTree& t, int a);

/// Loop values of all non-tree arrows of the BFS tree, identities and
/// duplicates removed.
std::vector<NormalForm> fallback_generators(const UssGraph& g);

CentralizerOutput centralizer_generators(const NormalForm& y, const GraphOptions& options = {});

}  // namespace garside
