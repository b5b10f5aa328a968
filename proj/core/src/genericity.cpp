#include "garside/genericity.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <thread>

#include "garside/errors.hpp"

namespace garside {

namespace {

int fifth(int l) { return (l + 4) / 5; }

struct TrialResult {
  bool failed = false;
  bool rigid = false;
  bool proxy = false;
  CaseTag tag = CaseTag::Fallback;
  double ms = 0.0;
};

TrialResult run_trial(const ExperimentConfig& cfg, int l, int trial) {
  SampleConfig sc{cfg.n, l, cfg.p, cfg.seed, cfg.trials};
  TrialResult r;
  try {
    const NormalForm x = sample_normal_form(sc, static_cast<std::uint64_t>(trial));
    const auto t0 = std::chrono::steady_clock::now();
    const CentralizerOutput out = centralizer_generators(x, cfg.graph);
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.tag = out.case_tag;
    r.rigid = out.representative.canonical_length() > 0 && is_rigid(out.representative);
    r.proxy = sigma1_nonintrusive_proxy(x);
  } catch (const LimitExceeded&) {
    r.failed = true;
  }
  return r;
}

}  // namespace

NormalForm sample_normal_form(const SampleConfig& cfg, std::uint64_t trial) {
  const int n = cfg.n.value();
  if (cfg.l < 1) throw InvalidArgument("sample length must be at least 1");
  if (cfg.trials < 1) throw InvalidArgument("trials must be at least 1");
  if (n < 3) throw InvalidArgument("B_2 has no simple element other than 1 and Δ");
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(cfg.l),
                    static_cast<std::uint32_t>(cfg.p), static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::vector<int> block_start(static_cast<std::size_t>(n));
  std::vector<SimpleElement> factors;
  factors.reserve(static_cast<std::size_t>(cfg.l));
  for (int i = 0; i < cfg.l; ++i) {
    // t follows s left-weighted iff no atom of ∂s starts t, i.e. t keeps the
    // two strands at such a boundary uncrossed. The admissible t are then
    // the permutations increasing on runs of positions; pick one uniformly by
    // shuffling final positions and sorting within runs.
    std::optional<SimpleElement> dprev;
    if (!factors.empty()) dprev = right_complement(factors.back());
    for (int j = 0, start = 0; j < n; ++j) {
      if (j > 0 && !(dprev && is_prefix(SimpleElement::atom(cfg.n, j), *dprev))) start = j;
      block_start[static_cast<std::size_t>(j)] = start;
    }
    for (int attempt = 0;; ++attempt) {
      if (attempt >= cfg.redraw_cap) {
        throw LimitExceeded("redraw_cap", "factor " + std::to_string(i) + " needed more than " +
                                              std::to_string(cfg.redraw_cap) + " redraws");
      }
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int j = 0; j < n;) {
        int end = j + 1;
        while (end < n && block_start[static_cast<std::size_t>(end)] == j) ++end;
        std::sort(perm.begin() + j, perm.begin() + end);
        j = end;
      }
      const SimpleElement s = SimpleElement::from_permutation(perm);
      if (s.is_identity() || s.is_delta()) continue;
      factors.push_back(s);
      break;
    }
  }
  return NormalForm(cfg.n, cfg.p, std::move(factors));
}

std::vector<SimpleElement> middle_fifth(const NormalForm& x) {
  const int l = x.canonical_length();
  const int c = fifth(l);
  const int first = 2 * c + 1;
  const int last = l - 2 * c;
  if (first > last) return {};
  const auto& f = x.factors();
  return {f.begin() + (first - 1), f.begin() + last};
}

bool sigma1_nonintrusive_proxy(const NormalForm& x) {
  const auto mid = middle_fifth(x);
  const SimpleElement s1 = SimpleElement::atom(x.strands(), 1);
  const SimpleElement ds1 = right_complement(s1);
  if (std::find(mid.begin(), mid.end(), s1) == mid.end()) return false;
  if (std::find(mid.begin(), mid.end(), ds1) == mid.end()) return false;
  const ConjugationStep slid = slide_to_circuit(x);
  if (slid.element.canonical_length() == 0 || !is_rigid(slid.element)) return false;
  return slid.conjugator.canonical_length() <= 2 * fifth(x.canonical_length());
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw InvalidArgument("trials must be at least 1");
  if (cfg.lengths.empty()) throw InvalidArgument("no lengths given");
  for (int l : cfg.lengths)
    if (l < 1) throw InvalidArgument("lengths must be at least 1");
  unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(cfg.trials));

  ExperimentReport report;
  for (int l : cfg.lengths) {
    std::vector<TrialResult> results(static_cast<std::size_t>(cfg.trials));
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
          for (int i = next++; i < cfg.trials; i = next++) {
            try {
              results[static_cast<std::size_t>(i)] = run_trial(cfg, l, i);
            } catch (...) {
              std::lock_guard lock(error_mutex);
              if (!error) error = std::current_exception();
            }
          }
        });
      }
    }
    if (error) std::rethrow_exception(error);

    ExperimentRow row;
    row.n = cfg.n.value();
    row.l = l;
    row.trials = cfg.trials;
    double total_ms = 0.0;
    int timed = 0;
    for (const auto& r : results) {
      if (r.failed) {
        ++row.failures;
        continue;
      }
      row.rigid += r.rigid;
      row.proxy += r.proxy;
      const bool minimal = r.tag != CaseTag::Fallback;
      row.minimal += minimal;
      row.proxy_minimal += r.proxy && minimal;
      switch (r.tag) {
        case CaseTag::TwoOrbits: ++row.two_orbits; break;
        case CaseTag::OneOrbitTauShift: ++row.tau_shift; break;
        case CaseTag::OneOrbitTauFixed: ++row.tau_fixed; break;
        case CaseTag::Fallback: ++row.fallback; break;
      }
      total_ms += r.ms;
      ++timed;
    }
    row.mean_ms = timed > 0 ? total_ms / timed : 0.0;
    report.rows.push_back(row);
  }
  return report;
}

std::string to_csv(const ExperimentReport& report) {
  std::string out = "n,l,trials,rigid,minimal,two_orbits,tau_shift,tau_fixed,fallback,mean_ms\n";
  char buf[256];
  for (const auto& r : report.rows) {
    std::snprintf(buf, sizeof buf, "%d,%d,%d,%d,%d,%d,%d,%d,%d,%.3f\n", r.n, r.l, r.trials, r.rigid,
                  r.minimal, r.two_orbits, r.tau_shift, r.tau_fixed, r.fallback, r.mean_ms);
    out += buf;
  }
  return out;
}

}  // namespace garside
