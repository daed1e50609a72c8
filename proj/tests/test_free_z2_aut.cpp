#include <gtest/gtest.h>

#include "support.hpp"

using namespace gnk;
using gnk::test::tr;

namespace {

using ZW = Z2FreeWord;

OrderedPair a(int ij) { return OrderedPair::make(ij / 10, ij % 10); }

// Test-side evaluation: substitute the single-generator rule letter by
// letter, innermost generator first, reducing with a random cancellation order.
ZW reduce_random_order(ZW w, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == w[i + 1]) sites.push_back(i);
    if (sites.empty()) return w;
    const auto at = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(at), w.begin() + static_cast<std::ptrdiff_t>(at + 2));
  }
}

ZW substitute_one(const Triple& t, const ZW& w) {
  const int i = t.left, j = t.middle, k = t.right;
  ZW out;
  for (const auto& x : w) {
    if (x == OrderedPair{i, j}) {
      out.insert(out.end(), {OrderedPair{i, k}, x, OrderedPair{i, k}});
    } else if (x == OrderedPair{k, j}) {
      out.insert(out.end(), {OrderedPair{k, i}, x, OrderedPair{k, i}});
    } else {
      out.push_back(x);
    }
  }
  return out;
}

ZW oracle_image(const Word<Triple>& w, const OrderedPair& x, std::mt19937_64& rng) {
  ZW cur{x};
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = reduce_random_order(substitute_one(*it, cur), rng);
  return cur;
}

}  // namespace

TEST(GAction, GeneratorExample) {
  const auto g = g_of_generator(tr(1, 2, 3), 3);
  EXPECT_EQ(g.image(a(12)), (ZW{a(13), a(12), a(13)}));
  EXPECT_EQ(g.image(a(32)), (ZW{a(31), a(32), a(31)}));
  EXPECT_EQ(g.moved().size(), 2u);
  for (const auto& x : ordered_pair_labels(3))
    if (!(x == a(12)) && !(x == a(32))) {
      EXPECT_EQ(g.image(x), ZW{x});
    }
}

TEST(GAction, ReversalGivesSameAutomorphism) {
  // formula read at (3,2,1): a_32 -> a_31 a_32 a_31, a_12 -> a_13 a_12 a_13
  FreeAutomorphism manual(4);
  manual.set_image(a(32), {a(31), a(32), a(31)});
  manual.set_image(a(12), {a(13), a(12), a(13)});
  EXPECT_TRUE(aut_equal(g_of_generator(tr(3, 2, 1), 4), manual));
}

TEST(GAction, Involutions) {
  for (int n = 3; n <= 6; ++n)
    for (const auto& t : backtick_generators(n)) {
      const auto g = g_of_generator(t, n);
      EXPECT_TRUE(compose(g, g).is_identity());
    }
}

TEST(GAction, MatchesSubstitutionOracle) {
  std::mt19937_64 rng(13);
  const auto gens = backtick_generators(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = test::random_word(rng, gens, 7);
    const auto g = g_of_word(w, 4);
    for (const auto& x : ordered_pair_labels(4)) EXPECT_EQ(g.image(x), oracle_image(w, x, rng));
  }
}

TEST(GAction, Homomorphism) {
  std::mt19937_64 rng(17);
  const auto gens = backtick_generators(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = test::random_word(rng, gens, 5);
    const auto v = test::random_word(rng, gens, 5);
    EXPECT_TRUE(aut_equal(g_of_word(concat(u, v), 5), compose(g_of_word(u, 5), g_of_word(v, 5))));
    EXPECT_TRUE(compose(g_of_word(u, 5), g_of_word(reverse_word(u), 5)).is_identity());
  }
}

TEST(GAction, RelatorsActTrivially) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& r : enumerate_relators<Triple>(n)) EXPECT_TRUE(g_of_word(r.word, n).is_identity());
    const auto rep = verify_g_well_defined(n);
    EXPECT_EQ(rep.summary, CheckSummary::pass);
    EXPECT_TRUE(rep.involutions);
  }
}

TEST(GAction, DisjointTriplesCommute) {
  const auto x = g_of_generator(tr(1, 2, 3), 5), y = g_of_generator(tr(1, 4, 5), 5);
  EXPECT_TRUE(aut_equal(compose(x, y), compose(y, x)));
}

TEST(GAction, SharedPairDoesNotCommute) {
  const auto x = g_of_generator(tr(1, 2, 3), 4), y = g_of_generator(tr(1, 2, 4), 4);
  EXPECT_FALSE(aut_equal(compose(x, y), compose(y, x)));
}

TEST(FreeAutomorphism, ApplyReducesAndDropsIdentity) {
  FreeAutomorphism f(3);
  f.set_image(a(12), {a(13), a(13), a(12)});
  EXPECT_TRUE(f.is_identity());
  f.set_image(a(12), {a(13), a(12), a(13)});
  EXPECT_EQ(gnk::apply(f, ZW{a(13), a(12), a(13)}), (ZW{a(12)}));
  EXPECT_THROW(f.set_image(a(14), {a(12)}), ParameterError);
  EXPECT_THROW(FreeAutomorphism(1), ParameterError);
  EXPECT_THROW(aut_equal(FreeAutomorphism(3), FreeAutomorphism(4)), ParameterError);
}

TEST(FreeReduce, OrderIndependent) {
  std::mt19937_64 rng(19);
  const auto labels = ordered_pair_labels(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto w = test::random_word(rng, labels, 16);
    EXPECT_EQ(reduce_random_order(w, rng), free_reduce_involutive(w));
  }
}
