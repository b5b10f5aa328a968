#include "garside/centralizer.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "garside/errors.hpp"

namespace garside {

std::string_view to_string(CaseTag t) noexcept {
  switch (t) {
    case CaseTag::TwoOrbits: return "TwoOrbits";
    case CaseTag::OneOrbitTauShift: return "OneOrbitTauShift";
    case CaseTag::OneOrbitTauFixed: return "OneOrbitTauFixed";
    case CaseTag::Fallback: return "Fallback";
  }
  return "?";
}

namespace {

NormalForm product(StrandCount n, const std::vector<SimpleElement>& simples, std::size_t count) {
  return normalize_simples(n, 0, std::span<const SimpleElement>(simples.data(), count));
}

// c·g·c⁻¹
NormalForm conjugate_back(const NormalForm& g, const NormalForm& c) {
  if (c.is_identity()) return g;
  return multiply(c, multiply(g, invert(c)));
}

}  // namespace

NormalForm preferred_cycling_conjugator(const NormalForm& x) {
  const StrandCount n = x.strands();
  if (x.is_delta_power()) return NormalForm(n);
  std::unordered_set<NormalForm> seen;
  std::vector<SimpleElement> iotas;
  NormalForm cur = x;
  while (seen.insert(cur).second) {
    if (static_cast<int>(iotas.size()) >= kDefaultOrbitCap) {
      throw LimitExceeded("orbit_length", "cycling did not repeat");
    }
    iotas.push_back(initial_factor(cur));
    cur = cycling(cur).element;
  }
  return product(n, iotas, iotas.size());
}

std::pair<NormalForm, NormalForm> theorem_case_generators(const OrbitStructure& st) {
  if (st.tag == OrbitTag::NotMinimal || st.orbit.elements.empty()) {
    throw InvalidArgument("theorem cases need a minimal ultra summit set");
  }
  const StrandCount n = st.orbit.elements.front().strands();
  const auto& a = st.orbit.conjugators;
  switch (st.tag) {
    case OrbitTag::OneOrbitTauFixed:
      return {product(n, a, a.size()), NormalForm::delta_power(n, 1)};
    case OrbitTag::OneOrbitTauShift:
      return {multiply_delta_power(product(n, a, a.size() / 2), -1),
              NormalForm::delta_power(n, 2)};
    default:
      return {product(n, a, a.size()), NormalForm::delta_power(n, 2)};
  }
}

SpanningTree bfs_spanning_tree(const UssGraph& g) {
  const std::size_t nv = g.vertices.size();
  SpanningTree t{std::vector<int>(nv, -1), {}, std::vector<bool>(g.arrows.size(), false)};
  std::vector<std::vector<int>> out(nv);
  for (std::size_t a = 0; a < g.arrows.size(); ++a) {
    out[static_cast<std::size_t>(g.arrows[a].source)].push_back(static_cast<int>(a));
  }
  std::vector<bool> reached(nv, false);
  reached[static_cast<std::size_t>(g.base)] = true;
  std::vector<int> order{g.base};
  std::vector<int> level{g.base};
  while (!level.empty()) {
    std::vector<int> next;
    for (const bool black_pass : {true, false}) {
      for (int v : level) {
        for (int a : out[static_cast<std::size_t>(v)]) {
          const Arrow& arr = g.arrows[static_cast<std::size_t>(a)];
          if ((arr.color == ArrowColor::Black) != black_pass) continue;
          const auto w = static_cast<std::size_t>(arr.target);
          if (reached[w]) continue;
          reached[w] = true;
          t.parent_arrow[w] = a;
          t.in_tree[static_cast<std::size_t>(a)] = true;
          next.push_back(arr.target);
        }
      }
    }
    order.insert(order.end(), next.begin(), next.end());
    level = std::move(next);
  }
  if (order.size() != nv) throw InvalidArgument("graph is not reachable from its base");
  t.gamma.assign(nv, NormalForm(g.n));
  for (int v : order) {
    const int a = t.parent_arrow[static_cast<std::size_t>(v)];
    if (a < 0) continue;
    const Arrow& arr = g.arrows[static_cast<std::size_t>(a)];
    t.gamma[static_cast<std::size_t>(v)] =
        multiply(t.gamma[static_cast<std::size_t>(arr.source)], arr.label);
  }
  return t;
}

SpanningTree spanning_tree_from_arrows(const UssGraph& g, const std::vector<int>& tree_arrows) {
  const std::size_t nv = g.vertices.size();
  SpanningTree t{std::vector<int>(nv, -1), {}, std::vector<bool>(g.arrows.size(), false)};
  for (int a : tree_arrows) {
    const Arrow& arr = g.arrows.at(static_cast<std::size_t>(a));
    auto& slot = t.parent_arrow[static_cast<std::size_t>(arr.target)];
    if (arr.target == g.base || slot != -1) {
      throw InvalidArgument("arrow " + std::to_string(a) + " does not fit a tree rooted at the base");
    }
    slot = a;
    t.in_tree[static_cast<std::size_t>(a)] = true;
  }
  t.gamma.assign(nv, NormalForm(g.n));
  std::vector<int> state(nv, 0);  // 0 unknown, 1 in progress, 2 done
  state[static_cast<std::size_t>(g.base)] = 2;
  for (std::size_t v0 = 0; v0 < nv; ++v0) {
    std::vector<int> stack;
    for (int v = static_cast<int>(v0); state[static_cast<std::size_t>(v)] != 2;) {
      const auto vi = static_cast<std::size_t>(v);
      if (state[vi] == 1 || t.parent_arrow[vi] < 0) {
        throw InvalidArgument("tree arrows do not reach vertex " + std::to_string(v));
      }
      state[vi] = 1;
      stack.push_back(v);
      v = g.arrows[static_cast<std::size_t>(t.parent_arrow[vi])].source;
    }
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      const auto vi = static_cast<std::size_t>(*it);
      const Arrow& arr = g.arrows[static_cast<std::size_t>(t.parent_arrow[vi])];
      t.gamma[vi] = multiply(t.gamma[static_cast<std::size_t>(arr.source)], arr.label);
      state[vi] = 2;
    }
  }
  return t;
}

NormalForm loop_value(const UssGraph& g, const SpanningTree& t, int a) {
  const Arrow& arr = g.arrows.at(static_cast<std::size_t>(a));
  return multiply(multiply(t.gamma[static_cast<std::size_t>(arr.source)], arr.label),
                  invert(t.gamma[static_cast<std::size_t>(arr.target)]));
}

std::vector<NormalForm> fallback_generators(const UssGraph& g) {
  const SpanningTree t = bfs_spanning_tree(g);
  std::vector<NormalForm> gens;
  std::unordered_set<NormalForm> seen;
  for (std::size_t a = 0; a < g.arrows.size(); ++a) {
    if (t.in_tree[a]) continue;
    NormalForm f = loop_value(g, t, static_cast<int>(a));
    if (f.is_identity() || !seen.insert(f).second) continue;
    gens.push_back(std::move(f));
  }
  return gens;
}

CentralizerOutput centralizer_generators(const NormalForm& y, const GraphOptions& options) {
  ConjugationStep slid = slide_to_circuit(y);
  CentralizerOutput out{{}, CaseTag::Fallback, std::move(slid.conjugator), std::move(slid.element),
                        0, 0};
  const NormalForm& x = out.representative;

  if (x.canonical_length() >= 2 && is_rigid(x) && check_minimal_uss(x)) {
    const OrbitStructure st = orbit_structure(x);
    auto [a, b] = theorem_case_generators(st);
    out.generators = {conjugate_back(a, out.conjugator), conjugate_back(b, out.conjugator)};
    out.k = st.k;
    switch (st.tag) {
      case OrbitTag::TwoOrbits:
        out.case_tag = CaseTag::TwoOrbits;
        out.uss_size = 2 * st.k;
        break;
      case OrbitTag::OneOrbitTauShift:
        out.case_tag = CaseTag::OneOrbitTauShift;
        out.uss_size = st.k;
        break;
      default:
        out.case_tag = CaseTag::OneOrbitTauFixed;
        out.uss_size = st.k;
        break;
    }
    return out;
  }

  const UssGraph g = build_uss_graph(x, options);
  out.case_tag = CaseTag::Fallback;
  out.uss_size = static_cast<int>(g.vertices.size());
  out.k = cycling_orbit(x).k();
  for (const auto& f : fallback_generators(g)) {
    out.generators.push_back(conjugate_back(f, out.conjugator));
  }
  return out;
}

}  // namespace garside
