#include <gtest/gtest.h>

#include <map>

#include "support.hpp"

using namespace gnk;
using gnk::test::pp;
using gnk::test::tr;

namespace {

constexpr auto kOrd = CommutationMode::ordered;
constexpr auto kUns = CommutationMode::unordered_sets;

using PW = Word<PairPairGenerator>;

std::map<RelatorTag, std::size_t> tally(const RelatorList<Triple>& rel) {
  std::map<RelatorTag, std::size_t> out;
  for (const auto& r : rel) ++out[r.tag];
  return out;
}

std::size_t choose(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST(Generators, Counts) {
  for (int n = 3; n <= 7; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    EXPECT_EQ(backtick_generators(n).size(), 3 * choose(nn, 3));
    EXPECT_EQ(plain_generators(n).size(), choose(nn, 3));
  }
}

TEST(Relators, ThreeStrands) {
  const auto rel = enumerate_relators<Triple>(3);
  EXPECT_EQ(rel.size(), 3u);
  for (const auto& r : rel) EXPECT_EQ(r.tag, RelatorTag::r1_square);
}

TEST(Relators, FourStrands) {
  const auto rel = enumerate_relators<Triple>(4);
  const auto t = tally(rel);
  EXPECT_EQ(t.count(RelatorTag::r2_commute), 0u);  // any two triples in 4 strands share 2
  EXPECT_EQ(t.at(RelatorTag::r1_square), 12u);
  const Word<Triple> half{tr(1, 2, 3), tr(1, 2, 4), tr(1, 3, 4), tr(2, 3, 4)};
  const auto quad = concat(half, half);
  bool found = false;
  for (const auto& r : rel) found = found || r.word == quad;
  EXPECT_TRUE(found);
  EXPECT_EQ(t.at(RelatorTag::r3_quad), 12u);  // 24 orderings, rotation+reversal pairs
}

TEST(Relators, CommuteOnlyWhenAtMostOneStrandShared) {
  for (const auto& r : enumerate_relators<Triple>(6)) {
    if (r.tag != RelatorTag::r2_commute) continue;
    const auto a = r.word[0].sorted_strands(), b = r.word[1].sorted_strands();
    int shared = 0;
    for (auto x : a)
      for (auto y : b) shared += x == y;
    EXPECT_LE(shared, 1);
  }
  // triples on {1,2,3} and {4,5,6} commute; {1,2,3}, {1,4,5} too
  bool disjoint = false, one = false;
  for (const auto& r : enumerate_relators<Triple>(6)) {
    if (r.tag != RelatorTag::r2_commute) continue;
    disjoint = disjoint || (r.word[0] == tr(1, 2, 3) && r.word[1] == tr(4, 5, 6));
    one = one || (r.word[0] == tr(1, 2, 3) && r.word[1] == tr(1, 4, 5));
  }
  EXPECT_TRUE(disjoint);
  EXPECT_TRUE(one);
}

TEST(Relators, PlainVariant) {
  const auto rel = enumerate_relators<PlainTriple>(4);
  std::size_t sq = 0, quad = 0;
  for (const auto& r : rel) {
    sq += r.tag == RelatorTag::r1_square;
    quad += r.tag == RelatorTag::r3_quad;
  }
  EXPECT_EQ(sq, 4u);
  EXPECT_GE(quad, 1u);
  EXPECT_THROW(enumerate_relators(G3Context{4, G3Variant::plain}), ParameterError);
  EXPECT_EQ(enumerate_relators(G3Context{4, G3Variant::backtick}).size(), 24u);
}

TEST(Phi, GeneratorExamples) {
  EXPECT_EQ(phi_generator(tr(1, 2, 3)), (PW{pp(12, 13), pp(32, 31)}));
  // a'_{312} is stored as a'_{213}; the formula read at (3,1,2) gives the
  // same letters in the other order, equal since they commute
  EXPECT_EQ(phi_generator(tr(3, 1, 2)), (PW{pp(21, 23), pp(31, 32)}));
  EXPECT_EQ(words_equal(phi_generator(tr(3, 1, 2)), PW{pp(31, 32), pp(21, 23)}, kOrd).verdict,
            Verdict::equal);
  // formula at (3,2,1) against the stored image of a'_{123}
  EXPECT_EQ(words_equal(phi_generator(tr(1, 2, 3)), PW{pp(32, 31), pp(12, 13)}, kOrd).verdict,
            Verdict::equal);
  EXPECT_EQ(phi_generator(tr(3, 2, 1)), phi_generator(tr(1, 2, 3)));
}

TEST(Phi, WorkedWord) {
  EXPECT_EQ(phi_word(Word<Triple>{tr(1, 2, 3), tr(1, 3, 2)}),
            (PW{pp(12, 13), pp(32, 31), pp(13, 12), pp(23, 21)}));
  EXPECT_EQ(phi_word(Word<Triple>{tr(1, 2, 3), tr(1, 3, 2)}), test::worked_word());
}

TEST(Phi, ImageLettersCommuteAndSquareToOne) {
  for (const auto& t : backtick_generators(5)) {
    const auto img = phi_generator(t);
    EXPECT_TRUE(commutes(img[0], img[1], kOrd));
    EXPECT_TRUE(reduce_to_minimal(concat(img, img), kOrd).output.empty());
  }
}

TEST(Phi, HomomorphismAndReversal) {
  std::mt19937_64 rng(2);
  const auto gens = backtick_generators(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto u = test::random_word(rng, gens, 6);
    const auto v = test::random_word(rng, gens, 6);
    EXPECT_EQ(phi_word(concat(u, v)), concat(phi_word(u), phi_word(v)));
    // phi(rev w) is equal, as a group element, to rev(phi(w))
    const auto lhs = phi_word(reverse_word(u));
    const auto rhs = reverse_word(phi_word(u));
    EXPECT_EQ(words_equal(lhs, rhs, kOrd).verdict, Verdict::equal);
  }
}

TEST(Projection, ForgetsMiddle) {
  const Word<Triple> w{tr(1, 2, 3), tr(2, 1, 3), tr(1, 2, 4)};
  const auto p = project_to_plain(w);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], p[1]);
  EXPECT_EQ(p[2], PlainTriple::make(1, 2, 4));
  // relators go to relators-or-identity in the plain group: parity survives
  for (const auto& r : enumerate_relators<Triple>(5))
    EXPECT_TRUE(parity_vector(project_to_plain(r.word)).empty());
}

TEST(CertifyViaPhi, Examples) {
  const Word<Triple> w{tr(1, 2, 3), tr(1, 3, 2)};
  const auto ord = certify_minimal_via_phi(w, kOrd);
  EXPECT_EQ(ord.verdict, ViaPhiVerdict::inconclusive);
  EXPECT_EQ(ord.image.status, MinimalityStatus::not_minimal);
  const auto uns = certify_minimal_via_phi(w, kUns);
  EXPECT_EQ(uns.verdict, ViaPhiVerdict::minimal);
  EXPECT_EQ(certify_minimal_via_phi(Word<Triple>{tr(1, 2, 3)}, kOrd).verdict, ViaPhiVerdict::minimal);
}

TEST(Verify, OrderedPasses) {
  for (int n : {3, 4}) {
    const auto rep = verify_phi_well_defined(n, kOrd);
    EXPECT_EQ(rep.summary, CheckSummary::pass);
    EXPECT_EQ(rep.count(Verdict::equal), rep.checks.size());
    EXPECT_EQ(rep.checks.size(), enumerate_relators<Triple>(n).size());
  }
}

TEST(Verify, UnorderedFailsOnSquares) {
  const auto rep = verify_phi_well_defined(3, kUns);
  EXPECT_EQ(rep.summary, CheckSummary::fail);
  for (const auto& c : rep.checks) {
    EXPECT_EQ(c.tag, RelatorTag::r1_square);
    EXPECT_EQ(c.verdict, Verdict::distinct);
  }
}

TEST(Verify, RankLimits) {
  EXPECT_THROW(verify_phi_well_defined(2), ParameterError);
  EXPECT_THROW(verify_phi_well_defined(kMaxVerifyRank + 1), ParameterError);
}
