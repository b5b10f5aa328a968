#include "garside/simple.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "garside/errors.hpp"

namespace garside {

StrandCount::StrandCount(int n) : n_(n) {
  if (n < 2 || n > kMaxStrands) {
    throw InvalidArgument("strand count must lie in [2, " + std::to_string(kMaxStrands) +
                          "], got " + std::to_string(n));
  }
}

// Grants the free functions below access to the raw table.
class SimpleBuilder {
 public:
  explicit SimpleBuilder(int n) { s_.n_ = static_cast<std::uint8_t>(n); }
  explicit SimpleBuilder(const SimpleElement& s) : s_(s) {}

  std::uint8_t& operator[](int i) { return s_.perm_[static_cast<std::size_t>(i)]; }
  SimpleElement build() const { return s_; }

  static const std::uint8_t* data(const SimpleElement& s) { return s.perm_.data(); }

 private:
  SimpleElement s_;
};

namespace {

void require_same(const SimpleElement& a, const SimpleElement& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("simple elements on different strand counts (" +
                          std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
}

std::array<std::uint8_t, kMaxStrands> inverse_table(const SimpleElement& s) {
  std::array<std::uint8_t, kMaxStrands> inv{};
  for (int i = 0; i < s.size(); ++i) inv[static_cast<std::size_t>(s[i])] = static_cast<std::uint8_t>(i);
  return inv;
}

// (s·t)[i] = t[s[i]]
SimpleElement compose(const SimpleElement& s, const SimpleElement& t) {
  SimpleBuilder b(s.size());
  for (int i = 0; i < s.size(); ++i) b[i] = static_cast<std::uint8_t>(t[s[i]]);
  return b.build();
}

}  // namespace

SimpleElement SimpleElement::identity(StrandCount n) {
  SimpleBuilder b(n.value());
  for (int i = 0; i < n.value(); ++i) b[i] = static_cast<std::uint8_t>(i);
  return b.build();
}

SimpleElement SimpleElement::delta(StrandCount n) {
  SimpleBuilder b(n.value());
  for (int i = 0; i < n.value(); ++i) b[i] = static_cast<std::uint8_t>(n.value() - 1 - i);
  return b.build();
}

SimpleElement SimpleElement::atom(StrandCount n, int i) {
  if (i < 1 || i >= n.value()) {
    throw InvalidArgument("atom index " + std::to_string(i) + " out of range for B_" +
                          std::to_string(n.value()));
  }
  SimpleBuilder b(SimpleElement::identity(n));
  std::swap(b[i - 1], b[i]);
  return b.build();
}

SimpleElement SimpleElement::from_permutation(std::span<const int> perm) {
  const StrandCount n(static_cast<int>(perm.size()));
  std::vector<bool> seen(perm.size(), false);
  SimpleBuilder b(n.value());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const int v = perm[i];
    if (v < 0 || v >= n.value() || seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("permutation table is not a bijection of {0.." +
                            std::to_string(n.value() - 1) + "}");
    }
    seen[static_cast<std::size_t>(v)] = true;
    b[static_cast<int>(i)] = static_cast<std::uint8_t>(v);
  }
  return b.build();
}

std::vector<int> SimpleElement::permutation() const {
  return {perm_.begin(), perm_.begin() + n_};
}

std::vector<int> SimpleElement::inverse_permutation() const {
  std::vector<int> inv(n_);
  for (int i = 0; i < n_; ++i) inv[static_cast<std::size_t>((*this)[i])] = i;
  return inv;
}

bool SimpleElement::is_identity() const noexcept {
  for (int i = 0; i < n_; ++i)
    if ((*this)[i] != i) return false;
  return true;
}

bool SimpleElement::is_delta() const noexcept {
  for (int i = 0; i < n_; ++i)
    if ((*this)[i] != n_ - 1 - i) return false;
  return true;
}

int SimpleElement::length() const noexcept {
  int crossings = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)[i] > (*this)[j]) ++crossings;
  return crossings;
}

bool operator==(const SimpleElement& a, const SimpleElement& b) noexcept {
  return a.n_ == b.n_ && std::equal(a.perm_.begin(), a.perm_.begin() + a.n_, b.perm_.begin());
}

std::strong_ordering operator<=>(const SimpleElement& a, const SimpleElement& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.perm_.begin(), a.perm_.begin() + a.n_,
                                                b.perm_.begin(), b.perm_.begin() + b.n_);
}

std::size_t SimpleElement::hash() const noexcept {
  // FNV-1a over the table
  std::size_t h = 1469598103934665603ULL ^ n_;
  for (int i = 0; i < n_; ++i) {
    h ^= perm_[static_cast<std::size_t>(i)];
    h *= 1099511628211ULL;
  }
  return h;
}

SimpleElement delta(StrandCount n) { return SimpleElement::delta(n); }

SimpleElement meet(const SimpleElement& s, const SimpleElement& t) {
  require_same(s, t);
  const int n = s.size();
  // order[pos] = strand (by starting position) currently at pos. Appending σ_k
  // keeps a common prefix exactly when the two strands at k, k+1 cross in both.
  std::array<std::uint8_t, kMaxStrands> order{};
  std::iota(order.begin(), order.begin() + n, std::uint8_t{0});
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k + 1 < n; ++k) {
      const int a = order[static_cast<std::size_t>(k)];
      const int b = order[static_cast<std::size_t>(k + 1)];
      if (s[a] > s[b] && t[a] > t[b]) {
        std::swap(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k + 1)]);
        changed = true;
      }
    }
  }
  SimpleBuilder out(n);
  for (int pos = 0; pos < n; ++pos) out[order[static_cast<std::size_t>(pos)]] = static_cast<std::uint8_t>(pos);
  return out.build();
}

SimpleElement right_meet(const SimpleElement& s, const SimpleElement& t) {
  return reverse(meet(reverse(s), reverse(t)));
}

SimpleElement join(const SimpleElement& s, const SimpleElement& t) {
  // ∂ turns the prefix order into the reversed suffix order, so the least
  // common multiple is ∂⁻¹ of the greatest common suffix of the complements.
  require_same(s, t);
  return left_complement(right_meet(right_complement(s), right_complement(t)));
}

SimpleElement right_complement(const SimpleElement& s) {
  const int n = s.size();
  const auto inv = inverse_table(s);
  SimpleBuilder b(n);
  for (int j = 0; j < n; ++j) b[j] = static_cast<std::uint8_t>(n - 1 - inv[static_cast<std::size_t>(j)]);
  return b.build();
}

SimpleElement left_complement(const SimpleElement& s) {
  const int n = s.size();
  const auto inv = inverse_table(s);
  SimpleBuilder b(n);
  for (int i = 0; i < n; ++i) b[i] = inv[static_cast<std::size_t>(n - 1 - i)];
  return b.build();
}

SimpleElement tau(const SimpleElement& s, int k) {
  if (k % 2 == 0) return s;
  const int n = s.size();
  SimpleBuilder b(n);
  for (int i = 0; i < n; ++i) b[i] = static_cast<std::uint8_t>(n - 1 - s[n - 1 - i]);
  return b.build();
}

SimpleElement reverse(const SimpleElement& s) {
  const auto inv = inverse_table(s);
  SimpleBuilder b(s.size());
  for (int i = 0; i < s.size(); ++i) b[i] = inv[static_cast<std::size_t>(i)];
  return b.build();
}

bool is_prefix(const SimpleElement& t, const SimpleElement& s) {
  require_same(t, s);
  // every crossing of t is a crossing of s
  const int n = s.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (t[i] > t[j] && s[i] < s[j]) return false;
  return true;
}

bool is_suffix(const SimpleElement& t, const SimpleElement& s) {
  return is_prefix(reverse(t), reverse(s));
}

std::optional<SimpleElement> product_if_simple(const SimpleElement& s, const SimpleElement& t) {
  require_same(s, t);
  SimpleElement st = compose(s, t);
  if (st.length() != s.length() + t.length()) return std::nullopt;
  return st;
}

SimpleElement left_quotient(const SimpleElement& s, const SimpleElement& m) {
  require_same(s, m);
  const auto inv = inverse_table(s);
  SimpleBuilder b(s.size());
  for (int j = 0; j < s.size(); ++j) b[j] = static_cast<std::uint8_t>(m[inv[static_cast<std::size_t>(j)]]);
  return b.build();
}

SimpleElement right_quotient(const SimpleElement& m, const SimpleElement& s) {
  // m = q·s  ⇒  q[i] = s⁻¹[m[i]]
  require_same(m, s);
  const auto inv = inverse_table(s);
  SimpleBuilder b(s.size());
  for (int i = 0; i < s.size(); ++i) b[i] = inv[static_cast<std::size_t>(m[i])];
  return b.build();
}

std::vector<SimpleElement> all_simples(StrandCount n, int bound) {
  if (n.value() > bound) {
    throw LimitExceeded("oracle_bound", "refusing to enumerate " + std::to_string(n.value()) +
                                            "! simple elements (bound n <= " +
                                            std::to_string(bound) + ")");
  }
  std::vector<int> perm(static_cast<std::size_t>(n.value()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SimpleElement> out;
  do {
    out.push_back(SimpleElement::from_permutation(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<SimpleElement> left_divisors(const SimpleElement& s, int bound) {
  // t ≼ s iff t⁻¹s is a permutation braid whose length makes up the difference.
  std::vector<SimpleElement> out;
  const int len = s.length();
  for (const auto& t : all_simples(s.strands(), bound)) {
    if (t.length() + left_quotient(t, s).length() == len) out.push_back(t);
  }
  return out;
}

bool is_left_weighted(const SimpleElement& s, const SimpleElement& t) {
  return meet(right_complement(s), t).is_identity();
}

std::pair<SimpleElement, SimpleElement> local_slide(const SimpleElement& s,
                                                    const SimpleElement& t) {
  require_same(s, t);
  const SimpleElement u = meet(right_complement(s), t);
  if (u.is_identity()) return {s, t};
  return {compose(s, u), left_quotient(u, t)};
}

std::vector<GeneratorLetter> simple_word(const SimpleElement& s) {
  const int n = s.size();
  // target[pos] = final position of the strand currently at pos
  std::array<std::uint8_t, kMaxStrands> target{};
  for (int i = 0; i < n; ++i) target[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s[i]);
  std::vector<GeneratorLetter> word;
  for (int goal = n - 1; goal > 0; --goal) {
    int pos = 0;
    while (target[static_cast<std::size_t>(pos)] != goal) ++pos;
    for (; pos < goal; ++pos) {
      std::swap(target[static_cast<std::size_t>(pos)], target[static_cast<std::size_t>(pos + 1)]);
      word.push_back({pos + 1, 1});
    }
  }
  return word;
}

SimpleElement simple_from_word(StrandCount n, std::span<const GeneratorLetter> letters) {
  const int size = n.value();
  std::array<std::uint8_t, kMaxStrands> strand_at{};
  std::iota(strand_at.begin(), strand_at.begin() + size, std::uint8_t{0});
  for (std::size_t idx = 0; idx < letters.size(); ++idx) {
    const auto& letter = letters[idx];
    if (letter.sign != 1) throw InvalidArgument("simple words must be positive");
    if (letter.index < 1 || letter.index >= size) {
      throw InvalidArgument("generator index " + std::to_string(letter.index) +
                            " out of range for B_" + std::to_string(size));
    }
    auto& left = strand_at[static_cast<std::size_t>(letter.index - 1)];
    auto& right = strand_at[static_cast<std::size_t>(letter.index)];
    if (left > right) {
      throw InvalidArgument("letter " + std::to_string(idx) + " crosses strands " +
                            std::to_string(right + 1) + " and " + std::to_string(left + 1) +
                            " a second time; word is not a permutation braid");
    }
    std::swap(left, right);
  }
  SimpleBuilder b(size);
  for (int pos = 0; pos < size; ++pos) b[strand_at[static_cast<std::size_t>(pos)]] = static_cast<std::uint8_t>(pos);
  return b.build();
}

}  // namespace garside
