#include "garside/conjugacy.hpp"

#include <string>
#include <unordered_map>
#include <unordered_set>

#include "garside/errors.hpp"

namespace garside {

namespace {

void require_same(StrandCount a, StrandCount b) {
  if (a != b) throw InvalidArgument("braids on different strand counts");
}

}  // namespace

NormalForm conjugate(const NormalForm& x, const NormalForm& g) {
  require_same(x.strands(), g.strands());
  if (g.is_identity()) return x;
  return multiply(invert(g), multiply(x, g));
}

NormalForm conjugate(const NormalForm& x, const SimpleElement& s) {
  require_same(x.strands(), s.strands());
  if (s.is_identity()) return x;
  // s⁻¹ = Δ⁻¹·∂⁻¹(s)
  return delta_power_multiply(-1, multiply(left_complement(s), multiply(x, s)));
}

ConjugationStep cycling(const NormalForm& x) {
  const StrandCount n = x.strands();
  if (x.is_delta_power()) return {x, NormalForm(n)};
  const auto& f = x.factors();
  std::vector<SimpleElement> seq(f.begin() + 1, f.end());
  // Δ^p x_2⋯x_l τ^{-p}(x_1)
  seq.push_back(tau(f.front(), -x.inf()));
  return {normalize_simples(n, x.inf(), seq), NormalForm::from_simple(initial_factor(x))};
}

ConjugationStep decycling(const NormalForm& x, bool twisted) {
  const StrandCount n = x.strands();
  if (x.is_delta_power()) return {x, NormalForm(n)};
  const auto& f = x.factors();
  // x_l Δ^p x_1⋯x_{l-1} = Δ^p τ^p(x_l) x_1⋯x_{l-1}
  std::vector<SimpleElement> seq;
  seq.reserve(f.size());
  seq.push_back(tau(f.back(), x.inf()));
  seq.insert(seq.end(), f.begin(), f.end() - 1);
  NormalForm d = normalize_simples(n, x.inf(), seq);
  if (twisted) {
    return {tau(d), NormalForm::from_simple(right_complement(f.back()))};
  }
  return {std::move(d), invert(NormalForm::from_simple(f.back()))};
}

ConjugationStep cyclic_sliding(const NormalForm& x) {
  const SimpleElement p = preferred_prefix(x);
  return {conjugate(x, p), NormalForm::from_simple(p)};
}

ConjugationStep slide_to_circuit(const NormalForm& x, int step_cap) {
  std::unordered_map<NormalForm, int> seen;
  std::vector<ConjugationStep> trail;
  NormalForm cur = x;
  NormalForm acc(x.strands());
  for (int step = 0;; ++step) {
    if (auto it = seen.find(cur); it != seen.end()) return trail[static_cast<std::size_t>(it->second)];
    if (step > step_cap) {
      throw LimitExceeded("slide_steps",
                          "no sliding circuit within " + std::to_string(step_cap) + " steps");
    }
    seen.emplace(cur, step);
    trail.push_back({cur, acc});
    const SimpleElement p = preferred_prefix(cur);
    if (p.is_identity()) return trail.back();
    cur = conjugate(cur, p);
    acc = multiply(acc, p);
  }
}

OrbitInfo cycling_orbit(const NormalForm& x, int cap) {
  OrbitInfo orbit;
  std::unordered_set<NormalForm> seen;
  NormalForm cur = x;
  for (;;) {
    if (static_cast<int>(orbit.elements.size()) >= cap) {
      throw LimitExceeded("orbit_length",
                          "cycling orbit longer than " + std::to_string(cap));
    }
    seen.insert(cur);
    orbit.elements.push_back(cur);
    orbit.conjugators.push_back(initial_factor(cur));
    cur = cycling(cur).element;
    if (cur == x) return orbit;
    if (seen.contains(cur)) {
      throw InvalidArgument("element does not recur under cycling; it is not in its ultra summit set");
    }
  }
}

NormalForm transport(const NormalForm& x, const NormalForm& alpha, int i) {
  require_same(x.strands(), alpha.strands());
  if (i < 0) throw InvalidArgument("transport index must be non-negative");
  NormalForm cx = x;
  NormalForm a = alpha;
  for (int j = 0; j < i; ++j) {
    const NormalForm y = conjugate(cx, a);
    // ι(x)⁻¹ α ι(x^α)
    a = multiply(invert(NormalForm::from_simple(initial_factor(cx))),
                 multiply(a, initial_factor(y)));
    cx = cycling(cx).element;
  }
  return a;
}

bool uss_membership(const NormalForm& z, int summit_len, int cap) {
  if (z.canonical_length() != summit_len) return false;
  if (z.is_delta_power()) return true;
  std::unordered_set<NormalForm> seen{z};
  NormalForm cur = z;
  for (int step = 0; step < cap; ++step) {
    cur = cycling(cur).element;
    if (cur == z) return true;
    if (cur.canonical_length() != summit_len) return false;
    if (!seen.insert(cur).second) return false;
  }
  throw LimitExceeded("orbit_length", "cycling orbit longer than " + std::to_string(cap));
}

}  // namespace garside
