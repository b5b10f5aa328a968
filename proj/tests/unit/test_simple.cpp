#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "garside/errors.hpp"
#include "garside/simple.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace garside;
using garside::testing::divisors_by_descent;
using garside::testing::oracle_join;
using garside::testing::oracle_meet;

namespace {

SimpleElement S(int n, std::initializer_list<int> word) {
  std::vector<GeneratorLetter> letters;
  for (int i : word) letters.push_back({i, 1});
  return simple_from_word(StrandCount(n), letters);
}

std::vector<int> indices(const std::vector<GeneratorLetter>& w) {
  std::vector<int> out;
  for (const auto& l : w) out.push_back(l.index);
  return out;
}

}  // namespace

TEST(StrandCount, RejectsOutOfRange) {
  EXPECT_THROW(StrandCount(1), InvalidArgument);
  EXPECT_THROW(StrandCount(kMaxStrands + 1), InvalidArgument);
  EXPECT_EQ(StrandCount(2).value(), 2);
}

TEST(Delta, SmallCases) {
  EXPECT_EQ(delta(StrandCount(2)), SimpleElement::atom(StrandCount(2), 1));
  EXPECT_EQ(indices(simple_word(delta(StrandCount(3)))), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(delta(StrandCount(4)).length(), 6);
  for (int n = 2; n <= 9; ++n) {
    const auto d = delta(StrandCount(n));
    EXPECT_EQ(d.length(), n * (n - 1) / 2);
    for (int i = 0; i < n; ++i) EXPECT_EQ(d[i], n - 1 - i);
  }
}

TEST(Atoms, ConventionSwapsAdjacentPositions) {
  const auto s = SimpleElement::atom(StrandCount(4), 2);
  EXPECT_EQ(s.permutation(), (std::vector<int>{0, 2, 1, 3}));
  EXPECT_THROW(SimpleElement::atom(StrandCount(4), 4), InvalidArgument);
  EXPECT_THROW(SimpleElement::atom(StrandCount(4), 0), InvalidArgument);
}

TEST(Meet, Examples) {
  EXPECT_TRUE(meet(S(3, {1}), S(3, {2})).is_identity());
  EXPECT_EQ(meet(S(3, {2, 1}), S(3, {2, 1})), S(3, {2, 1}));
  EXPECT_EQ(meet(S(3, {2, 1}), S(3, {2})), S(3, {2}));
  EXPECT_THROW(meet(S(3, {1}), S(4, {1})), InvalidArgument);
}

TEST(Join, Examples) {
  EXPECT_EQ(join(S(3, {1}), S(3, {1})), S(3, {1}));
  EXPECT_EQ(join(S(4, {1}), S(4, {3})), S(4, {1, 3}));
  EXPECT_EQ(join(S(3, {1}), S(3, {2})), delta(StrandCount(3)));
}

TEST(Complements, Examples) {
  const StrandCount n(3);
  EXPECT_EQ(right_complement(SimpleElement::identity(n)), delta(n));
  EXPECT_EQ(right_complement(S(3, {1})), S(3, {2, 1}));
  EXPECT_EQ(right_complement(S(3, {2, 1})), S(3, {2}));
  EXPECT_EQ(left_complement(S(3, {1})), S(3, {1, 2}));
}

TEST(Tau, Examples) {
  EXPECT_EQ(tau(S(3, {1})), S(3, {2}));
  EXPECT_EQ(tau(delta(StrandCount(5))), delta(StrandCount(5)));
  EXPECT_EQ(tau(S(5, {1, 2})), S(5, {4, 3}));
  EXPECT_EQ(tau(S(5, {1, 2}), 2), S(5, {1, 2}));
  EXPECT_EQ(tau(S(5, {1, 2}), -1), S(5, {4, 3}));
}

TEST(Prefix, Examples) {
  EXPECT_TRUE(is_prefix(S(3, {2}), S(3, {2, 1})));
  EXPECT_FALSE(is_prefix(S(3, {1}), S(3, {2, 1})));
  EXPECT_TRUE(is_prefix(S(3, {2, 1}), S(3, {2, 1})));
  EXPECT_TRUE(is_suffix(S(3, {1}), S(3, {2, 1})));
  EXPECT_FALSE(is_suffix(S(3, {2}), S(3, {2, 1})));
}

TEST(LeftDivisors, Examples) {
  const StrandCount n(3);
  const auto a = left_divisors(S(3, {1}));
  EXPECT_EQ(std::set<SimpleElement>(a.begin(), a.end()),
            (std::set<SimpleElement>{SimpleElement::identity(n), S(3, {1})}));
  EXPECT_EQ(left_divisors(delta(n)).size(), 6u);
  const auto b = left_divisors(S(3, {1, 2}));
  EXPECT_EQ(std::set<SimpleElement>(b.begin(), b.end()),
            (std::set<SimpleElement>{SimpleElement::identity(n), S(3, {1}), S(3, {1, 2})}));
  EXPECT_THROW(left_divisors(delta(StrandCount(9))), LimitExceeded);
  EXPECT_EQ(left_divisors(delta(StrandCount(9)), 9).size(), 362880u);
}

TEST(LeftDivisors, AgreesWithDescentOracle) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& s : all_simples(StrandCount(n))) {
      auto lib = left_divisors(s);
      std::sort(lib.begin(), lib.end());
      EXPECT_EQ(lib, divisors_by_descent(s));
    }
  }
}

TEST(LocalSlide, Examples) {
  const auto [a, b] = local_slide(S(3, {1}), S(3, {1}));
  EXPECT_EQ(a, S(3, {1}));
  EXPECT_EQ(b, S(3, {1}));
  EXPECT_TRUE(is_left_weighted(S(3, {1}), S(3, {1})));
  const auto [c, d] = local_slide(S(3, {1}), S(3, {2}));
  EXPECT_EQ(c, S(3, {1, 2}));
  EXPECT_TRUE(d.is_identity());
  for (const auto& s : all_simples(StrandCount(4))) {
    const auto [e, f] = local_slide(s, SimpleElement::identity(StrandCount(4)));
    EXPECT_EQ(e, s);
    EXPECT_TRUE(f.is_identity());
  }
}

TEST(SimpleWord, RoundTrip) {
  EXPECT_TRUE(simple_from_word(StrandCount(3), {}).is_identity());
  const auto s = S(3, {2, 1});
  EXPECT_EQ(s.permutation(), (std::vector<int>{1, 2, 0}));
  for (int n = 2; n <= 6; ++n) {
    for (const auto& t : all_simples(StrandCount(n))) {
      const auto w = simple_word(t);
      EXPECT_EQ(static_cast<int>(w.size()), t.length());
      EXPECT_EQ(simple_from_word(StrandCount(n), w), t);
    }
  }
}

TEST(SimpleWord, RejectsNonPermutationBraids) {
  const std::vector<GeneratorLetter> twice{{1, 1}, {1, 1}};
  EXPECT_THROW(simple_from_word(StrandCount(3), twice), InvalidArgument);
  const std::vector<GeneratorLetter> back{{1, 1}, {2, 1}, {1, 1}, {2, 1}};
  EXPECT_THROW(simple_from_word(StrandCount(3), back), InvalidArgument);
  const std::vector<GeneratorLetter> neg{{1, -1}};
  EXPECT_THROW(simple_from_word(StrandCount(3), neg), InvalidArgument);
}

TEST(FromPermutation, RejectsNonBijections) {
  const std::vector<int> bad{0, 0, 1};
  EXPECT_THROW(SimpleElement::from_permutation(bad), InvalidArgument);
  const std::vector<int> out_of_range{0, 3, 1};
  EXPECT_THROW(SimpleElement::from_permutation(out_of_range), InvalidArgument);
}

TEST(Lattice, ExhaustiveLawsAndOracle) {
  for (int n = 2; n <= 4; ++n) {
    const auto all = all_simples(StrandCount(n));
    for (const auto& s : all) {
      for (const auto& t : all) {
        const auto m = meet(s, t);
        const auto j = join(s, t);
        ASSERT_EQ(m, oracle_meet(s, t));
        ASSERT_EQ(j, oracle_join(s, t));
        EXPECT_EQ(m, meet(t, s));
        EXPECT_EQ(j, join(t, s));
        EXPECT_EQ(meet(s, join(s, t)), s);
        EXPECT_EQ(join(s, meet(s, t)), s);
        EXPECT_EQ(is_prefix(t, s), meet(t, s) == t);
      }
    }
  }
  const auto b5 = all_simples(StrandCount(5));
  garside::testing::Rng rng(7);
  for (int trial = 0; trial < 4000; ++trial) {
    const auto& a = b5[static_cast<std::size_t>(garside::testing::uniform(rng, 0, 119))];
    const auto& b = b5[static_cast<std::size_t>(garside::testing::uniform(rng, 0, 119))];
    const auto& c = b5[static_cast<std::size_t>(garside::testing::uniform(rng, 0, 119))];
    EXPECT_EQ(meet(meet(a, b), c), meet(a, meet(b, c)));
    EXPECT_EQ(join(join(a, b), c), join(a, join(b, c)));
    EXPECT_EQ(meet(a, a), a);
    EXPECT_EQ(join(a, a), a);
  }
}

TEST(Lattice, RandomAgainstOracleUpToEight) {
  garside::testing::Rng rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = garside::testing::uniform(rng, 6, 8);
    const auto a = garside::testing::random_simple(rng, n);
    const auto b = garside::testing::random_simple(rng, n);
    const auto da = left_divisors(a);
    const auto db = left_divisors(b);
    const auto m = meet(a, b);
    const auto j = join(a, b);
    EXPECT_TRUE(is_prefix(m, a) && is_prefix(m, b));
    EXPECT_TRUE(is_prefix(a, j) && is_prefix(b, j));
    // Every common divisor divides the meet.
    for (const auto& d : da) {
      if (std::find(db.begin(), db.end(), d) != db.end()) EXPECT_TRUE(is_prefix(d, m));
    }
  }
}

TEST(Complements, ExhaustiveIdentities) {
  for (int n = 2; n <= 5; ++n) {
    const StrandCount sn(n);
    std::set<SimpleElement> image;
    for (const auto& s : all_simples(sn)) {
      const auto r = right_complement(s);
      const auto l = left_complement(s);
      image.insert(r);
      EXPECT_EQ(right_complement(r), tau(s));
      EXPECT_EQ(left_complement(r), s);
      EXPECT_EQ(right_complement(l), s);
      EXPECT_EQ(product_if_simple(s, r), delta(sn));
      EXPECT_EQ(product_if_simple(l, s), delta(sn));
      EXPECT_EQ(tau(tau(s)), s);
      EXPECT_EQ(reverse(reverse(s)), s);
    }
    EXPECT_EQ(image.size(), all_simples(sn).size());
  }
}

TEST(Quotients, InvertProducts) {
  for (const auto& s : all_simples(StrandCount(4))) {
    for (const auto& m : all_simples(StrandCount(4))) {
      if (is_prefix(s, m)) {
        const auto q = left_quotient(s, m);
        EXPECT_EQ(product_if_simple(s, q), m);
      }
      if (is_suffix(s, m)) {
        const auto q = right_quotient(m, s);
        EXPECT_EQ(product_if_simple(q, s), m);
      }
      const auto p = product_if_simple(s, m);
      EXPECT_EQ(p.has_value(), s.length() + m.length() == garside::testing::inversions(
                                                             garside::testing::compose(
                                                                 s.permutation(), m.permutation())));
    }
  }
}

TEST(LocalSlide, PreservesProductAndIsLeftWeighted) {
  garside::testing::Rng rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = garside::testing::uniform(rng, 3, 7);
    const auto s = garside::testing::random_simple(rng, n);
    const auto t = garside::testing::random_simple(rng, n);
    const auto [a, b] = local_slide(s, t);
    EXPECT_TRUE(is_left_weighted(a, b));
    EXPECT_EQ(garside::testing::compose(a.permutation(), b.permutation()),
              garside::testing::compose(s.permutation(), t.permutation()));
    EXPECT_EQ(a.length() + b.length(), s.length() + t.length());
  }
}

TEST(Hash, EqualElementsHashEqually) {
  const auto a = S(5, {1, 2, 3});
  const auto b = SimpleElement::from_permutation(a.permutation());
  EXPECT_EQ(a, b);
  EXPECT_EQ(std::hash<SimpleElement>{}(a), std::hash<SimpleElement>{}(b));
}
