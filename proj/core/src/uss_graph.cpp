#include "garside/uss_graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "garside/errors.hpp"

namespace garside {

std::string_view to_string(ArrowColor c) noexcept {
  switch (c) {
    case ArrowColor::Black: return "black";
    case ArrowColor::Grey: return "grey";
    case ArrowColor::Bicolored: return "bicolored";
  }
  return "?";
}

std::string_view to_string(OrbitTag t) noexcept {
  switch (t) {
    case OrbitTag::TwoOrbits: return "TwoOrbits";
    case OrbitTag::OneOrbitTauShift: return "OneOrbitTauShift";
    case OrbitTag::OneOrbitTauFixed: return "OneOrbitTauFixed";
    case OrbitTag::NotMinimal: return "NotMinimal";
  }
  return "?";
}

std::optional<int> UssGraph::find(const NormalForm& v) const {
  if (auto it = index.find(v); it != index.end()) return it->second;
  return std::nullopt;
}

std::vector<Arrow> UssGraph::out_arrows(int v) const {
  std::vector<Arrow> out;
  for (const auto& a : arrows)
    if (a.source == v) out.push_back(a);
  return out;
}

namespace {

std::vector<SimpleElement> keep_minimal(std::vector<SimpleElement> cands) {
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<SimpleElement> out;
  for (const auto& s : cands) {
    const bool dominated = std::any_of(cands.begin(), cands.end(), [&](const SimpleElement& t) {
      return t != s && is_prefix(t, s);
    });
    if (!dominated) out.push_back(s);
  }
  return out;
}

std::vector<ColoredSimple> colorize(const NormalForm& y, const std::vector<SimpleElement>& mins) {
  std::vector<ColoredSimple> out;
  out.reserve(mins.size());
  if (y.is_delta_power()) {
    for (const auto& s : mins) out.push_back({s, ArrowColor::Bicolored});
    return out;
  }
  const SimpleElement iota = initial_factor(y);
  const SimpleElement iota_inv = right_complement(final_factor(y));
  for (const auto& s : mins) {
    const bool black = is_prefix(s, iota);
    const bool grey = is_prefix(s, iota_inv);
    if (!black && !grey) {
      throw std::logic_error("minimal simple element is a prefix of neither ι(y) nor ι(y⁻¹)");
    }
    out.push_back({s, black && grey ? ArrowColor::Bicolored
                                    : (black ? ArrowColor::Black : ArrowColor::Grey)});
  }
  std::sort(out.begin(), out.end(), [](const ColoredSimple& a, const ColoredSimple& b) {
    if (a.color != b.color) return a.color < b.color;
    return a.element < b.element;
  });
  return out;
}

std::vector<SimpleElement> pullback_minimals(const NormalForm& y) {
  const StrandCount n = y.strands();
  std::vector<SimpleElement> cands;
  for (int i = 1; i < n.value(); ++i) {
    const SimpleElement rho = atom_pullback_sss(y, i);
    const ConjugationStep slid = slide_to_circuit(conjugate(y, rho));
    const auto c = as_simple(multiply(rho, slid.conjugator));
    if (!c) throw std::logic_error("pulled-back conjugator is not simple");
    cands.push_back(*c);
  }
  return keep_minimal(std::move(cands));
}

std::vector<SimpleElement> brute_force_minimals(const NormalForm& y, int summit_len, int bound) {
  if (y.strands().value() > bound) {
    throw LimitExceeded("brute_force_bound", "brute-force minimal elements refused for n = " +
                                                 std::to_string(y.strands().value()) + " > " +
                                                 std::to_string(bound));
  }
  std::vector<SimpleElement> cands;
  for (const auto& s : all_simples(y.strands(), bound)) {
    if (s.is_identity()) continue;
    if (uss_membership(conjugate(y, s), summit_len)) cands.push_back(s);
  }
  return keep_minimal(std::move(cands));
}

}  // namespace

SimpleElement atom_pullback_sss(const NormalForm& x, int i) {
  const StrandCount n = x.strands();
  const int p = x.inf();
  const int r = x.canonical_length();
  SimpleElement rho = SimpleElement::atom(n, i);
  const int cap = n.value() * (n.value() - 1) / 2;
  for (int iter = 0;; ++iter) {
    const NormalForm y = conjugate(x, rho);
    if (y.canonical_length() <= r) return rho;
    if (iter >= cap) {
      throw LimitExceeded("pullback_steps", "atom pullback did not stabilise within " +
                                                std::to_string(cap) + " steps");
    }
    // 1 ∨ y⁻¹Δ^p ∨ yΔ^{-p-r}
    const SimpleElement u =
        join(least_positive_completion(delta_power_multiply(-p, y)),
             least_positive_completion(delta_power_multiply(p + r, invert(y))));
    const auto next = product_if_simple(rho, u);
    if (!next) throw InvalidArgument("atom pullback left [1, Δ]; input is not super summit");
    rho = *next;
  }
}

std::vector<ColoredSimple> minimal_simple_elements(const NormalForm& y, int summit_len,
                                                   MinimalMethod method, int brute_force_bound) {
  if (method == MinimalMethod::Auto) {
    method = y.canonical_length() >= 2 && is_rigid(y) ? MinimalMethod::RigidPullback
                                                      : MinimalMethod::BruteForce;
  }
  if (method == MinimalMethod::RigidPullback) {
    if (y.canonical_length() < 1 || !is_rigid(y)) {
      throw InvalidArgument("rigid pullback needs a rigid element");
    }
    return colorize(y, pullback_minimals(y));
  }
  return colorize(y, brute_force_minimals(y, summit_len, brute_force_bound));
}

UssGraph build_uss_graph(const NormalForm& x0, const GraphOptions& options) {
  const NormalForm start = slide_to_circuit(x0).element;
  UssGraph g{x0.strands(), start.canonical_length(), 0, {}, {}, {}};
  g.vertices.push_back(start);
  g.index.emplace(start, 0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const NormalForm y = g.vertices[static_cast<std::size_t>(v)];
    for (const auto& [s, color] :
         minimal_simple_elements(y, g.summit_len, options.method, options.brute_force_bound)) {
      NormalForm z = conjugate(y, s);
      int target;
      if (auto it = g.index.find(z); it != g.index.end()) {
        target = it->second;
      } else {
        if (g.vertices.size() >= options.vertex_cap) {
          throw LimitExceeded("vertex_cap", "ultra summit set exceeds the vertex cap of " +
                                                std::to_string(options.vertex_cap));
        }
        target = static_cast<int>(g.vertices.size());
        g.index.emplace(z, target);
        g.vertices.push_back(std::move(z));
        queue.push_back(target);
      }
      g.arrows.push_back({v, target, s, color});
    }
  }
  return g;
}

bool check_minimal_uss(const NormalForm& x) {
  if (x.canonical_length() <= 1 || !is_rigid(x)) return false;
  const auto mins = minimal_simple_elements(x, x.canonical_length(), MinimalMethod::RigidPullback);
  const ColoredSimple black{initial_factor(x), ArrowColor::Black};
  const ColoredSimple grey{right_complement(final_factor(x)), ArrowColor::Grey};
  return std::find(mins.begin(), mins.end(), black) != mins.end() &&
         std::find(mins.begin(), mins.end(), grey) != mins.end();
}

OrbitStructure orbit_structure(const NormalForm& x) {
  OrbitStructure st;
  st.orbit = cycling_orbit(x);
  st.k = st.orbit.k();
  const NormalForm tx = tau(x);
  if (tx == x) {
    st.tag = OrbitTag::OneOrbitTauFixed;
  } else if (st.k % 2 == 0 && st.orbit.elements[static_cast<std::size_t>(st.k / 2)] == tx) {
    st.tag = OrbitTag::OneOrbitTauShift;
  } else {
    st.tag = OrbitTag::TwoOrbits;
  }
  return st;
}

OrbitStructure classify(const NormalForm& x) {
  OrbitStructure st = orbit_structure(x);
  if (!check_minimal_uss(x)) st.tag = OrbitTag::NotMinimal;
  return st;
}

}  // namespace garside
