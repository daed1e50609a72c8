#include <gtest/gtest.h>

#include <sstream>

#include "gnk/cli.hpp"
#include "support.hpp"

using namespace gnk;
using gnk::test::pp;
using gnk::test::tr;

namespace {

struct Run {
  int status;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int s = cli::run(args, out, err);
  return {s, out.str(), err.str()};
}

}  // namespace

TEST(Cli, EqualEmptyWords) {
  const auto r = run({"equal", "--lhs", "[]", "--rhs", "[]"});
  EXPECT_EQ(r.status, cli::kOk);
  EXPECT_EQ(r.j()["verdict"], "EQUAL");
}

TEST(Cli, EqualDistinctIsNegative) {
  const auto r = run({"equal", "--lhs", "[[[1,2],[1,3]]]", "--rhs", "[]"});
  EXPECT_EQ(r.status, cli::kNegative);
  EXPECT_EQ(r.j()["evidence"], "parity-certificate");
}

TEST(Cli, InvariantWorkedExample) {
  const auto r = run({"invariant", "--n", "3", "--braid", "s2 s2", "--mode", "ordered"});
  ASSERT_EQ(r.status, cli::kOk) << r.err;
  const auto j = r.j();
  EXPECT_EQ(j["f"].size(), 2u);
  EXPECT_EQ(j["phi_image"].size(), 4u);
  EXPECT_EQ(j["phi"]["output"].size(), 2u);
  EXPECT_EQ(j["parity"].size(), 2u);
  EXPECT_TRUE(j["nontrivial"].get<bool>());
  EXPECT_EQ(j["seed"], 1);
  // f round-trips and agrees with the library
  const auto f = j["f"].get<Word<Triple>>();
  EXPECT_EQ(f, f_invariant(parse_braid("s2 s2", 3)).word);
  EXPECT_EQ(events_from_json(j["events"]).size(), 2u);
}

TEST(Cli, InvariantIsDeterministic) {
  const std::vector<std::string> args{"invariant", "--n", "4", "--braid", "s1 s3 s3 s1^-1", "--seed", "5"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, VerifyPhiPasses) {
  const auto r = run({"verify-relations", "--group", "phi", "--n", "4", "--mode", "ordered"});
  ASSERT_EQ(r.status, cli::kOk);
  const auto j = r.j();
  EXPECT_EQ(j["summary"], "PASS");
  EXPECT_EQ(j["unknown"], 0);
  EXPECT_EQ(j["relators"].size(), 24u);
}

TEST(Cli, VerifyPhiUnorderedFails) {
  const auto r = run({"verify-relations", "--group", "phi", "--n", "3", "--mode", "unordered-sets"});
  EXPECT_EQ(r.status, cli::kNegative);
  EXPECT_EQ(r.j()["summary"], "FAIL");
}

TEST(Cli, VerifyG) {
  const auto r = run({"verify-relations", "--group", "g", "--n", "4"});
  EXPECT_EQ(r.status, cli::kOk);
  EXPECT_TRUE(r.j()["involutions"].get<bool>());
}

TEST(Cli, ReduceRoundTrip) {
  const auto w = test::worked_word();
  const auto r = run({"reduce", "--word", json(w).dump(), "--verbose"});
  ASSERT_EQ(r.status, cli::kOk);
  const auto cert = certificate_from_json<OrderedPair>(r.j());
  EXPECT_EQ(cert.input, w);
  EXPECT_EQ(cert.output, reduce_to_minimal(w).output);
  EXPECT_EQ(cert.status, ReductionStatus::minimal_certified);
  EXPECT_TRUE(cert.move_trace.has_value());
  // re-serialising gives the same fields
  const auto again = certificate_json(cert, true);
  for (const char* key : {"input", "output", "status", "mode", "states", "move_trace"})
    EXPECT_EQ(again[key], r.j()[key]) << key;
}

TEST(Cli, ReduceTripleWordGoesThroughPhi) {
  const auto r = run({"reduce", "--word", "[[1,2,3],[1,3,2]]", "--mode", "unordered-sets"});
  ASSERT_EQ(r.status, cli::kOk);
  EXPECT_TRUE(r.j()["phi_image"].get<bool>());
  EXPECT_EQ(r.j()["output"].size(), 4u);
}

TEST(Cli, CertifyMinimal) {
  EXPECT_EQ(run({"certify-minimal", "--word", "[[1,2,3]]"}).status, cli::kOk);
  EXPECT_EQ(run({"certify-minimal", "--word", "[[1,2,3],[1,3,2]]"}).status, cli::kInconclusive);
  EXPECT_EQ(run({"certify-minimal", "--word", json(test::worked_word()).dump()}).status,
            cli::kNegative);
  EXPECT_EQ(run({"certify-minimal", "--mode", "unordered-sets", "--word",
                 json(test::worked_word()).dump()})
                .status,
            cli::kOk);
}

TEST(Cli, Act) {
  const auto r = run({"act", "--n", "3", "--word", "[[1,2,3]]", "--target", "[[1,2]]"});
  ASSERT_EQ(r.status, cli::kOk);
  const auto j = r.j();
  EXPECT_EQ(j["image"].get<Z2FreeWord>(), (Z2FreeWord{{1, 3}, {1, 2}, {1, 3}}));
  EXPECT_TRUE(aut_equal(automorphism_from_json(j["automorphism"], 3), g_of_generator(tr(1, 2, 3), 3)));
  EXPECT_TRUE(run({"act", "--n", "3", "--word", "[[1,2,3],[1,2,3]]"}).j()["identity"].get<bool>());
}

TEST(Cli, Events) {
  const auto r = run({"events", "--n", "3", "--braid", "s2 s2"});
  ASSERT_EQ(r.status, cli::kOk);
  const auto ev = events_from_json(r.j());
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_EQ(ev[0].middle(), ev[0].triple.middle);
  const auto csv = run({"events", "--n", "3", "--braid", "s2 s2", "--csv"});
  EXPECT_EQ(csv.out.rfind("t,i,j,k,middle\n", 0), 0u);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 3);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"equal", "--lhs", "[", "--rhs", "[]"}).status, cli::kInputError);
  EXPECT_EQ(run({"invariant", "--n", "3", "--braid", "s1"}).status, cli::kInputError);
  EXPECT_EQ(run({"invariant", "--n", "3", "--braid", "s9"}).status, cli::kInputError);
  EXPECT_EQ(run({"reduce", "--word", "[]", "--mode", "sideways"}).status, cli::kInputError);
  EXPECT_EQ(run({"reduce", "--word", "[]", "--budget", "0"}).status, cli::kInputError);
  EXPECT_EQ(run({"nonsense"}).status, cli::kInputError);
  EXPECT_EQ(run({}).status, cli::kInputError);
  EXPECT_EQ(run({"act", "--n", "3", "--word", "[[1,2,4]]"}).status, cli::kInputError);
  EXPECT_FALSE(run({"equal", "--lhs", "[", "--rhs", "[]"}).err.empty());
}

TEST(Cli, BudgetExhaustedIsInconclusive) {
  const auto r = run({"reduce", "--word", "[[[1,2],[1,3]],[[1,2],[2,3]],[[1,3],[2,3]]]", "--budget", "1"});
  EXPECT_EQ(r.status, cli::kInconclusive);
  EXPECT_EQ(r.j()["status"], "BUDGET_EXHAUSTED");
}

TEST(Cli, PrettyOutput) {
  const auto r = run({"equal", "--lhs", "[]", "--rhs", "[]", "--pretty"});
  EXPECT_EQ(r.status, cli::kOk);
  EXPECT_NE(r.out.find("EQUAL"), std::string::npos);
}

TEST(JsonIo, GeneratorEncodings) {
  EXPECT_EQ(json(tr(3, 2, 1)).dump(), "[1,2,3]");
  EXPECT_EQ(json::parse("[3,1,2]").get<Triple>(), tr(2, 1, 3));
  EXPECT_EQ(json::parse("[[1,3],[1,2]]").get<PairPairGenerator>(), pp(12, 13));
  EXPECT_EQ(json(pp(13, 12)).dump(), "[[1,2],[1,3]]");
}
