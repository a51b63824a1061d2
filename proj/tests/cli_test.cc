#include "coreblocks/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

using namespace coreblocks;

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  RunResult res;
  res.code = run_command(std::move(args), out, err);
  res.out = out.str();
  res.err = err.str();
  return res;
}

TEST(Cli, Core) {
  RunResult r = run({"core", "-e", "3", "4,3,3,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4,2,1,1\n");
  EXPECT_EQ(r.err, "");
  EXPECT_EQ(run({"core", "-e", "0", "4,3,3,1"}).out, "4,3,3,1\n");
  EXPECT_EQ(run({"core", "-e", "1", "4,3,3,1"}).out, "-\n");
}

TEST(Cli, Quotient) {
  RunResult r = run({"quotient", "-e", "3", "-s", "1", "4,3,3,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-|-|1\n");
}

TEST(Cli, Weight) {
  EXPECT_EQ(run({"weight", "-e", "3", "4,3,3,1"}).out, "1\n");
  EXPECT_EQ(run({"weight", "-e", "0", "4,3,3,1"}).out, "0\n");
}

TEST(Cli, Block) {
  EXPECT_EQ(run({"block", "-e", "3", "-s", "1", "4,3,3,1"}).out, "3,5,3\n");
  EXPECT_EQ(run({"block", "-e", "2", "-S", "0,1", "1|1"}).out, "1,1\n");
}

TEST(Cli, Score) {
  EXPECT_EQ(run({"score", "-e", "2", "-s", "0", "3,2,1"}).out, "4,2 0\n");
  EXPECT_EQ(run({"score", "-e", "2", "-S", "0,1", "--alpha", "1,1"}).out, "0,0 1\n");
}

TEST(Cli, Shift) {
  EXPECT_EQ(run({"shift", "-e", "2", "--ehat", "1", "2"}).out, "1,1\n");
  EXPECT_EQ(run({"shift", "-e", "2", "--ehat", "1", "--core", "3,2,1"}).out, "4,3,2,1\n");
  EXPECT_EQ(run({"shift", "-e", "2", "--ehat", "1", "--alpha", "2,0"}).out, "0,2\n");
  EXPECT_EQ(run({"shift", "-e", "2", "--ehat", "1", "--alpha", "4,2", "--classify"}).out,
            "not-block\n");
}

TEST(Cli, Bound) {
  EXPECT_EQ(run({"bound", "5", "5", "--exact"}).out, "15\n");
  EXPECT_EQ(run({"bound", "4", "5", "--closed"}).out, "9\n");
  EXPECT_EQ(run({"bound", "5", "7", "--closed"}).out, "-\n");
  EXPECT_EQ(run({"bound", "3", "8", "--bounds"}).out, "8 8\n");
  EXPECT_EQ(run({"bound", "2", "2"}).out, "2\t2\t1\t1\t1\t1\t1|2\n");
  EXPECT_EQ(run({"bound", "2", "3", "--exact", "--strategy", "full"}).out, "1\n");
}

TEST(Cli, Abacus) {
  RunResult r = run({"abacus", "-e", "3", "-s", "1", "4,3,3,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "2 | O · O · ·\n"
            "1 | O O O O ·\n"
            "0 | O · · · ·\n"
            "        ^\n");
}

TEST(Cli, JsonFormat) {
  EXPECT_EQ(run({"--format", "json", "core", "-e", "3", "4,3,3,1"}).out,
            "{\"core\":\"4,2,1,1\"}\n");
  EXPECT_EQ(run({"--format", "json", "block", "-e", "3", "-s", "1", "4,3,3,1"}).out,
            "{\"block\":{\"coeffs\":[3,5,3],\"e\":3}}\n");
  RunResult r = run({"--format", "json", "bound", "2", "2"});
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["N"], 1);
  EXPECT_EQ(j["closed"], 1);
  EXPECT_EQ(j["witness"], "1|2");
}

TEST(Cli, VerifySuite) {
  RunResult r = run({"verify", "roundtrips", "--max-n", "5", "--max-e", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("roundtrips/beta-partition: PASS\n"), std::string::npos);
  EXPECT_NE(r.out.find("passed 6/6\n"), std::string::npos);

  RunResult tsv = run({"--format", "tsv", "verify", "weights", "--max-n", "4", "--max-e", "2"});
  EXPECT_EQ(tsv.code, 0);
  EXPECT_EQ(tsv.out, "weights\tabacus-vs-block\tPASS\t\nweights\te0-zero\tPASS\t\n");

  RunResult js = run({"--format", "json", "verify", "membership", "--max-n", "4"});
  EXPECT_EQ(js.code, 0);
  nlohmann::json j = nlohmann::json::parse(js.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["cases"].size(), 6u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"core", "4,3,3,1"}).code, 2);           // missing -e
  EXPECT_EQ(run({"frobnicate"}).code, 2);                // unknown subcommand
  EXPECT_EQ(run({}).code, 2);                            // no subcommand
  EXPECT_EQ(run({"core", "-e", "3", "3,x"}).code, 2);    // bad literal
  EXPECT_EQ(run({"core", "-e", "3", "1,2"}).code, 2);    // increasing parts
  EXPECT_EQ(run({"quotient", "-e", "0", "1"}).code, 2);  // quotient needs e >= 1
  EXPECT_EQ(run({"score", "-e", "2"}).code, 2);          // no input given
  EXPECT_EQ(run({"verify", "bogus"}).code, 2);           // unknown suite
  EXPECT_EQ(run({"shift", "-e", "2", "--ehat", "1", "--core", "2"}).code, 1);  // not a 2-core
  EXPECT_EQ(run({"shift", "-e", "2", "--ehat", "1", "--alpha", "0,1", "--classify"}).code, 1);
  EXPECT_EQ(run({"shift", "-e", "2", "--ehat", "1", "--classify", "2,1"}).code, 2);  // no --alpha
  EXPECT_EQ(run({"bound", "7", "7", "--exact", "--strategy", "full"}).code, 3);  // guard
  RunResult bad = run({"core", "-e", "3", "3,x"});
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, Help) {
  RunResult r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"core", "--help"}).code, 0);
}

TEST(Serialize, BlockVectorRoundTrip) {
  BlockVector alpha(3);
  alpha.set_coeff(0, 3);
  alpha.set_coeff(1, 5);
  alpha.set_coeff(2, 3);
  nlohmann::json j = alpha;
  EXPECT_EQ(j.dump(), "{\"coeffs\":[3,5,3],\"e\":3}");
  EXPECT_EQ(j.get<BlockVector>(), alpha);

  BlockVector sparse(0);
  sparse.set_coeff(-2, 1);
  sparse.set_coeff(4, -3);
  nlohmann::json js = sparse;
  EXPECT_EQ(js.get<BlockVector>(), sparse);
  EXPECT_EQ(js["e"], 0);
}

TEST(Serialize, PartitionLiterals) {
  nlohmann::json j = Partition({4, 3, 3, 1});
  EXPECT_EQ(j.get<std::string>(), "4,3,3,1");
  EXPECT_EQ(j.get<Partition>(), Partition({4, 3, 3, 1}));
  nlohmann::json jm = Multipartition::parse("2,1|-");
  EXPECT_EQ(jm.get<Multipartition>(), Multipartition::parse("2,1|-"));
}

}  // namespace
