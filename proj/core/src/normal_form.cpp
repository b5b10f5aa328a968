#include "garside/normal_form.hpp"

#include <algorithm>
#include <string>

#include "garside/errors.hpp"

namespace garside {

namespace {

void require_same(StrandCount a, StrandCount b) {
  if (a != b) {
    throw InvalidArgument("braids on different strand counts (" + std::to_string(a.value()) +
                          " vs " + std::to_string(b.value()) + ")");
  }
}

}  // namespace

// Mutable Δ^inf·f₁⋯f_k kept in left normal form after every operation.
class FactorSequence {
 public:
  explicit FactorSequence(StrandCount n, int inf = 0) : n_(n), inf_(inf) {}
  explicit FactorSequence(const NormalForm& x) : n_(x.n_), inf_(x.inf_), f_(x.factors_) {}

  // this·s; one right-to-left pass of local slidings.
  void append(const SimpleElement& s) {
    if (s.is_identity()) return;
    if (s.is_delta()) {
      right_delta(1);
      return;
    }
    f_.push_back(s);
    for (std::size_t i = f_.size() - 1; i > 0; --i) {
      auto [a, b] = local_slide(f_[i - 1], f_[i]);
      if (a == f_[i - 1]) break;
      f_[i - 1] = a;
      f_[i] = b;
    }
    tidy();
  }

  // s·this; one left-to-right pass of local slidings.
  void prepend(const SimpleElement& s0) {
    const SimpleElement s = tau(s0, inf_);
    if (s.is_identity()) return;
    if (s.is_delta()) {
      ++inf_;
      return;
    }
    std::vector<SimpleElement> out;
    out.reserve(f_.size() + 1);
    SimpleElement carry = s;
    std::size_t i = 0;
    bool carry_live = true;
    for (; i < f_.size(); ++i) {
      auto [a, b] = local_slide(carry, f_[i]);
      if (a == carry) break;
      out.push_back(a);
      if (b.is_identity()) {
        carry_live = false;
        ++i;
        break;
      }
      carry = b;
    }
    if (carry_live) out.push_back(carry);
    out.insert(out.end(), f_.begin() + static_cast<std::ptrdiff_t>(i), f_.end());
    f_ = std::move(out);
    tidy();
  }

  // this·Δ^k
  void right_delta(int k) {
    inf_ += k;
    if (k % 2 != 0)
      for (auto& s : f_) s = tau(s);
  }

  // Δ^k·this
  void left_delta(int k) { inf_ += k; }

  NormalForm finish() && { return NormalForm(NormalForm::Trusted{}, n_, inf_, std::move(f_)); }

  // Caller guarantees the invariants.
  static NormalForm trusted(StrandCount n, int inf, std::vector<SimpleElement> f) {
    return NormalForm(NormalForm::Trusted{}, n, inf, std::move(f));
  }

 private:
  void tidy() {
    std::size_t lead = 0;
    while (lead < f_.size() && f_[lead].is_delta()) ++lead;
    if (lead > 0) {
      inf_ += static_cast<int>(lead);
      f_.erase(f_.begin(), f_.begin() + static_cast<std::ptrdiff_t>(lead));
    }
    while (!f_.empty() && f_.back().is_identity()) f_.pop_back();
  }

  StrandCount n_;
  int inf_;
  std::vector<SimpleElement> f_;
};

BraidWord::BraidWord(StrandCount n, std::vector<GeneratorLetter> letters)
    : n_(n), letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto& l = letters_[i];
    if (l.index < 1 || l.index >= n.value() || (l.sign != 1 && l.sign != -1)) {
      throw InvalidArgument("letter " + std::to_string(i) + " (index " + std::to_string(l.index) +
                            ") is not a generator of B_" + std::to_string(n.value()));
    }
  }
}

BraidWord BraidWord::from_signed(StrandCount n, std::span<const int> letters) {
  std::vector<GeneratorLetter> out;
  out.reserve(letters.size());
  for (int v : letters) {
    if (v == 0) throw InvalidArgument("generator index 0 is not allowed");
    out.push_back({v > 0 ? v : -v, v > 0 ? 1 : -1});
  }
  return BraidWord(n, std::move(out));
}

NormalForm::NormalForm(StrandCount n, int inf, std::vector<SimpleElement> factors)
    : n_(n), inf_(inf), factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& s = factors_[i];
    if (s.size() != n.value()) throw InvalidArgument("factor on the wrong strand count");
    if (s.is_identity() || s.is_delta()) {
      throw InvalidArgument("factor " + std::to_string(i) + " is trivial or Δ");
    }
    if (i > 0 && !is_left_weighted(factors_[i - 1], s)) {
      throw InvalidArgument("factors " + std::to_string(i - 1) + ", " + std::to_string(i) +
                            " are not left-weighted");
    }
  }
}

NormalForm NormalForm::delta_power(StrandCount n, int p) {
  return NormalForm(Trusted{}, n, p, {});
}

NormalForm NormalForm::from_simple(const SimpleElement& s) {
  if (s.is_identity()) return NormalForm(s.strands());
  if (s.is_delta()) return delta_power(s.strands(), 1);
  return NormalForm(Trusted{}, s.strands(), 0, {s});
}

std::size_t NormalForm::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(inf_) * 0x9E3779B97F4A7C15ULL ^ n_.value();
  for (const auto& s : factors_) h = (h ^ s.hash()) * 0x100000001B3ULL + 0x9E3779B9;
  return h;
}

NormalForm normalize(const BraidWord& w) {
  const StrandCount n = w.strands();
  FactorSequence seq(n);
  for (const auto& letter : w.letters()) {
    const SimpleElement atom = SimpleElement::atom(n, letter.index);
    if (letter.sign > 0) {
      seq.append(atom);
    } else {
      // σ_i⁻¹ = Δ⁻¹·∂⁻¹(σ_i)
      seq.right_delta(-1);
      seq.append(left_complement(atom));
    }
  }
  return std::move(seq).finish();
}

NormalForm normalize_simples(StrandCount n, int inf, std::span<const SimpleElement> simples) {
  FactorSequence seq(n, inf);
  for (const auto& s : simples) {
    require_same(n, s.strands());
    seq.append(s);
  }
  return std::move(seq).finish();
}

NormalForm multiply(const NormalForm& x, const NormalForm& y) {
  require_same(x.strands(), y.strands());
  if (x.canonical_length() >= y.canonical_length()) {
    FactorSequence seq(x);
    seq.right_delta(y.inf());
    for (const auto& s : y.factors()) seq.append(s);
    return std::move(seq).finish();
  }
  FactorSequence seq(y);
  const auto& xf = x.factors();
  for (auto it = xf.rbegin(); it != xf.rend(); ++it) seq.prepend(*it);
  seq.left_delta(x.inf());
  return std::move(seq).finish();
}

NormalForm multiply(const NormalForm& x, const SimpleElement& s) {
  require_same(x.strands(), s.strands());
  FactorSequence seq(x);
  seq.append(s);
  return std::move(seq).finish();
}

NormalForm multiply(const SimpleElement& s, const NormalForm& x) {
  require_same(x.strands(), s.strands());
  FactorSequence seq(x);
  seq.prepend(s);
  return std::move(seq).finish();
}

NormalForm multiply_delta_power(const NormalForm& x, int k) {
  FactorSequence seq(x);
  seq.right_delta(k);
  return std::move(seq).finish();
}

NormalForm delta_power_multiply(int k, const NormalForm& x) {
  FactorSequence seq(x);
  seq.left_delta(k);
  return std::move(seq).finish();
}

NormalForm invert(const NormalForm& x) {
  const int p = x.inf();
  const int l = x.canonical_length();
  std::vector<SimpleElement> out;
  out.reserve(static_cast<std::size_t>(l));
  for (int i = l; i >= 1; --i) {
    out.push_back(tau(right_complement(x.factors()[static_cast<std::size_t>(i - 1)]), p + i));
  }
  return FactorSequence::trusted(x.strands(), -p - l, std::move(out));
}

NormalForm tau(const NormalForm& x, int k) {
  if (k % 2 == 0) return x;
  std::vector<SimpleElement> out;
  out.reserve(x.factors().size());
  for (const auto& s : x.factors()) out.push_back(tau(s));
  return FactorSequence::trusted(x.strands(), x.inf(), std::move(out));
}

RightNormalForm right_normal_form(const NormalForm& x) {
  // rev(x) = Δ^p τ^p(rev x_l)⋯τ^p(rev x_1); its left normal form reversed is
  // the right normal form of x.
  const int p = x.inf();
  std::vector<SimpleElement> rev;
  rev.reserve(x.factors().size());
  for (auto it = x.factors().rbegin(); it != x.factors().rend(); ++it) {
    rev.push_back(tau(reverse(*it), p));
  }
  const NormalForm z = normalize_simples(x.strands(), p, rev);
  RightNormalForm r;
  r.inf = z.inf();
  for (auto it = z.factors().rbegin(); it != z.factors().rend(); ++it) {
    r.factors.push_back(reverse(*it));
  }
  return r;
}

std::optional<SimpleElement> leftmost_right_factor(const NormalForm& x) {
  if (x.is_delta_power()) return std::nullopt;
  return right_normal_form(x).factors.front();
}

SimpleElement least_positive_completion(const NormalForm& w) {
  if (w.inf() >= 0) return SimpleElement::identity(w.strands());
  if (w.inf() < -1) {
    throw InvalidArgument("completion is not simple: infimum " + std::to_string(w.inf()) +
                          " is below -1");
  }
  SimpleElement d = delta(w.strands());
  for (const auto& f : w.factors()) d = left_quotient(f, join(f, d));
  return d;
}

SimpleElement join_with_identity(const NormalForm& z) {
  if (z.sup() > 1) {
    throw InvalidArgument("1 ∨ z is not simple when sup(z) = " + std::to_string(z.sup()));
  }
  return least_positive_completion(invert(z));
}

std::optional<SimpleElement> as_simple(const NormalForm& x) {
  if (x.is_identity()) return SimpleElement::identity(x.strands());
  if (x.inf() == 1 && x.factors().empty()) return delta(x.strands());
  if (x.inf() == 0 && x.factors().size() == 1) return x.factors().front();
  return std::nullopt;
}

SimpleElement initial_factor(const NormalForm& x) {
  if (x.factors().empty()) return SimpleElement::identity(x.strands());
  return tau(x.factors().front(), -x.inf());
}

SimpleElement final_factor(const NormalForm& x) {
  if (x.factors().empty()) return delta(x.strands());
  return x.factors().back();
}

std::pair<SimpleElement, SimpleElement> boundary_factors(const NormalForm& x) {
  return {initial_factor(x), final_factor(x)};
}

SimpleElement preferred_prefix(const NormalForm& x) {
  return meet(initial_factor(x), right_complement(final_factor(x)));
}

bool is_rigid(const NormalForm& x) {
  if (x.factors().empty()) throw InvalidArgument("rigidity needs canonical length >= 1");
  return preferred_prefix(x).is_identity();
}

BraidWord to_word(const NormalForm& x) {
  const StrandCount n = x.strands();
  const auto dw = simple_word(delta(n));
  std::vector<GeneratorLetter> out;
  for (int i = 0; i < x.inf(); ++i) out.insert(out.end(), dw.begin(), dw.end());
  for (int i = 0; i < -x.inf(); ++i) {
    for (auto it = dw.rbegin(); it != dw.rend(); ++it) out.push_back({it->index, -1});
  }
  for (const auto& s : x.factors()) {
    const auto w = simple_word(s);
    out.insert(out.end(), w.begin(), w.end());
  }
  return BraidWord(n, std::move(out));
}

}  // namespace garside
