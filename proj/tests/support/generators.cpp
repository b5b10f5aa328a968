#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace garside::testing {

BraidWord random_word(Rng& rng, int n, int length, bool positive_only) {
  std::vector<GeneratorLetter> letters;
  letters.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    const int sign = positive_only || uniform(rng, 0, 1) == 0 ? 1 : -1;
    letters.push_back({uniform(rng, 1, n - 1), sign});
  }
  return BraidWord(StrandCount(n), std::move(letters));
}

SimpleElement random_simple(Rng& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return SimpleElement::from_permutation(p);
}

NormalForm random_normal_form(Rng& rng, int n, int max_length) {
  const int l = uniform(rng, 0, max_length);
  std::vector<SimpleElement> f;
  for (int i = 0; i < l; ++i) f.push_back(random_simple(rng, n));
  return normalize_simples(StrandCount(n), uniform(rng, -2, 2), f);
}

std::optional<NormalForm> random_rigid(Rng& rng, int n, int max_l) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    const int l = uniform(rng, 1, max_l);
    std::vector<SimpleElement> f;
    for (int i = 0; i < l; ++i) f.push_back(random_simple(rng, n));
    const NormalForm x = normalize_simples(StrandCount(n), uniform(rng, -1, 1), f);
    const NormalForm y = slide_to_circuit(x).element;
    if (y.canonical_length() >= 1 && y.canonical_length() <= max_l && is_rigid(y)) return y;
  }
  return std::nullopt;
}

}  // namespace garside::testing
