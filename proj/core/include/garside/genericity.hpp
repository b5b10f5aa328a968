#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "garside/centralizer.hpp"

namespace garside {

struct SampleConfig {
  StrandCount n;
  int l = 1;
  int p = 0;
  std::uint64_t seed = 0;
  int trials = 1;
  /// Redraws allowed per factor before giving up.
  int redraw_cap = 1000;
};

/// Random element of B_n with inf = p and ℓ = l, deterministic in
/// (seed, n, l, p, trial). Each factor is uniform among the proper simples
/// that are left-weighted after the previous factor.
NormalForm sample_normal_form(const SampleConfig& cfg, std::uint64_t trial);

/// Factors x_{2c+1}, ..., x_{l-2c} with c = ⌈l/5⌉ (1-based).
std::vector<SimpleElement> middle_fifth(const NormalForm& x);

/// σ₁ and ∂(σ₁) both occur in the middle fifth, and sliding reaches a rigid
/// element through a conjugator of canonical length at most 2⌈l/5⌉.
bool sigma1_nonintrusive_proxy(const NormalForm& x);

struct ExperimentConfig {
  StrandCount n;
  std::vector<int> lengths;
  int trials = 1;
  std::uint64_t seed = 0;
  int p = 0;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
  GraphOptions graph;
};

struct ExperimentRow {
  int n = 0;
  int l = 0;
  int trials = 0;
  int rigid = 0;
  int minimal = 0;
  int two_orbits = 0;
  int tau_shift = 0;
  int tau_fixed = 0;
  int fallback = 0;
  /// Trials aborted by a LimitExceeded cap.
  int failures = 0;
  int proxy = 0;
  int proxy_minimal = 0;
  double mean_ms = 0.0;
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;
};

/// Runs the centralizer on `trials` samples per length. Trials run in
/// parallel; tallies depend only on the configuration.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Columns n,l,trials,rigid,minimal,two_orbits,tau_shift,tau_fixed,fallback,mean_ms.
std::string to_csv(const ExperimentReport& report);

}  // namespace garside
