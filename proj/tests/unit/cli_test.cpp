#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "builders.hpp"
#include "cli.hpp"
#include "leafpow/gadget.hpp"
#include "leafpow/generators.hpp"
#include "leafpow/io.hpp"
#include "leafpow/tree_metric.hpp"

namespace leafpow {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("leafpow_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int call(std::vector<std::string> args) {
    args.insert(args.begin(), "leafpow");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return cli::main_entry(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }
  Json result() const { return parse_json(out_.str()); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(Cli, RecognizeAndVerify) {
  const std::string g = file("c4.json", graph_to_json(testing_support::cycle4()).dump());
  EXPECT_EQ(call({"recognize", "-g", g, "--q", "1"}), cli::kNegative);
  EXPECT_EQ(result()["result"], "NONE");
  EXPECT_EQ(call({"recognize", "-g", g, "--q", "2", "-o", path("cert.json"), "--emit-dot", path("t.dot")}),
            cli::kOk);
  EXPECT_TRUE(fs::exists(path("t.dot")));
  EXPECT_EQ(call({"verify", "-g", g, "-c", path("cert.json")}), cli::kOk);
  EXPECT_EQ(result()["result"], "PASS");

  const std::string k4 = file("k4.json", graph_to_json(SimpleGraph::complete({"a", "b", "c", "d"})).dump());
  EXPECT_EQ(call({"verify", "-g", k4, "-c", path("cert.json")}), cli::kNegative);
  EXPECT_EQ(result()["status"], "edge-mismatch");
  EXPECT_TRUE(result().contains("pair"));
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(call({}), cli::kUsage);
  EXPECT_EQ(call({"recognize"}), cli::kUsage);
  EXPECT_EQ(call({"recognize", "-g", path("missing.json")}), cli::kUsage);
  const std::string junk = file("junk.json", "{\"vertices\": 3}");
  EXPECT_EQ(call({"recognize", "-g", junk}), cli::kUsage);
  const std::string g = file("c4.json", graph_to_json(testing_support::cycle4()).dump());
  EXPECT_EQ(call({"recognize", "-g", g, "--q", "0"}), cli::kUsage);
  EXPECT_EQ(call({"recognize", "-g", g, "--cap", "3"}), cli::kCapacity);
  const std::string big = file("k9.json", graph_to_json(SimpleGraph::complete(leaf_names(9))).dump());
  EXPECT_EQ(call({"recognize", "-g", big}), cli::kCapacity);
  EXPECT_EQ(call({"non-glp", "9"}), cli::kCapacity);
  EXPECT_EQ(call({"--help"}), cli::kOk);
}

TEST_F(Cli, LeafRankAndKLeafPower) {
  const std::string p3 = file("p3.json", graph_to_json(testing_support::path3()).dump());
  EXPECT_EQ(call({"leaf-rank", "-g", p3}), cli::kOk);
  EXPECT_EQ(result()["leaf_rank"], 3);
  EXPECT_EQ(call({"leaf-rank", "-g", p3, "--ceiling", "2"}), cli::kCapacity);
  EXPECT_EQ(call({"k-leaf-power", "-g", p3, "--k", "2"}), cli::kNegative);
  EXPECT_EQ(call({"k-leaf-power", "-g", p3, "--k", "3"}), cli::kOk);
  EXPECT_EQ(tree_from_json(result()).leaf_count(), 3U);
}

TEST_F(Cli, GadgetPipeline) {
  Rng rng(121);
  const auto [toc, tree] = random_realizable_toc(rng, 3);
  const std::string t = file("s.toc", format_toc(toc));
  const std::string tr = file("tree.json", tree_to_json(tree).dump());
  EXPECT_EQ(call({"toc-realize", "-t", t}), cli::kOk);
  EXPECT_EQ(call({"gen-gs", "-t", t, "--graph-out", path("g.json"), "--roles-out", path("r.json")}), cli::kOk);
  EXPECT_EQ(call({"make-leafroot", "-t", t, "--tree", tr, "-o", path("cert.json")}), cli::kOk);
  EXPECT_EQ(call({"verify", "-g", path("g.json"), "-c", path("cert.json")}), cli::kOk);
  EXPECT_EQ(call({"extract-toc", "-c", path("cert.json"), "-r", path("r.json")}), cli::kOk);
  EXPECT_FALSE(realization_violation(tree_from_json(result()), toc));

  const std::string other = file("o.toc", "a b c : ab < ac < bc\n");
  const WeightedTree bad = testing_support::star({{"a", "3"}, {"b", "2"}, {"c", "1"}});
  EXPECT_EQ(call({"make-leafroot", "-t", other, "--tree", file("bad.json", tree_to_json(bad).dump())}),
            cli::kNegative);
}

TEST_F(Cli, Transforms) {
  const std::string g = file("c4.json", graph_to_json(testing_support::cycle4()).dump());
  ASSERT_EQ(call({"recognize", "-g", g, "--q", "2", "-o", path("cert.json")}), cli::kOk);
  EXPECT_EQ(call({"lift", "-c", path("cert.json"), "-o", path("lifted.json")}), cli::kOk);
  EXPECT_EQ(certificate_from_json(result()).order(), 3U);
  EXPECT_EQ(call({"verify", "-g", g, "-c", path("lifted.json")}), cli::kOk);
  EXPECT_EQ(call({"complement-cert", "-c", path("cert.json")}), cli::kOk);
  EXPECT_EQ(graph_from_certificate(certificate_from_json(result())), complement(testing_support::cycle4()));
  EXPECT_EQ(call({"glp-step", "-g", g}), cli::kOk);
  EXPECT_EQ(graph_from_json(result()).size(), 8U);
  EXPECT_EQ(call({"non-glp", "2"}), cli::kOk);
  EXPECT_EQ(graph_from_json(result()).size(), 8U);
}

TEST_F(Cli, FourPointCheck) {
  const DistanceMatrix tree_m =
      leaf_distance_matrix(testing_support::star({{"a", "1"}, {"b", "2"}, {"c", "3"}, {"d", "4"}}));
  EXPECT_EQ(call({"check-4pc", "-m", file("m.json", distance_matrix_to_json(tree_m).dump())}), cli::kOk);
  EXPECT_EQ(result()["result"], "PASS");
  const std::string square = file("sq.json", R"({"labels": ["a", "b", "c", "d"], "matrix": [
      ["0", "1", "1.415", "1"], ["1", "0", "1", "1.415"], ["1.415", "1", "0", "1"], ["1", "1.415", "1", "0"]]})");
  EXPECT_EQ(call({"check-4pc", "-m", square}), cli::kNegative);
  EXPECT_EQ(result()["result"], "FAIL");
  const std::string asym = file("as.json", R"({"labels": ["a", "b"], "matrix": [["0", "1"], ["2", "0"]]})");
  EXPECT_EQ(call({"check-4pc", "-m", asym}), cli::kUsage);
}

TEST_F(Cli, FuzzReplays) {
  EXPECT_EQ(call({"fuzz", "--seed", "3", "--rounds", "40"}), cli::kOk);
  const Json first = result();
  EXPECT_EQ(first["result"], "PASS");
  EXPECT_EQ(call({"fuzz", "--seed", "3", "--rounds", "40"}), cli::kOk);
  EXPECT_EQ(result(), first);
}

}  // namespace
}  // namespace leafpow
