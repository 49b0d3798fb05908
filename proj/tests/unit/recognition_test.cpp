#include <gtest/gtest.h>

#include <map>

#include "builders.hpp"
#include "leafpow/errors.hpp"
#include "leafpow/generators.hpp"
#include "leafpow/hierarchy.hpp"
#include "leafpow/io.hpp"
#include "leafpow/recognition.hpp"
#include "leafpow/tree_metric.hpp"
#include "oracles.hpp"

namespace leafpow {
namespace {

using testing_support::cycle4;
using testing_support::path3;

std::uint64_t mask_of(const SimpleGraph& g) {
  std::uint64_t mask = 0;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j, ++bit) {
      if (g.adjacent(i, j)) mask |= std::uint64_t{1} << bit;
    }
  }
  return mask;
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

void expect_certifies(const SimpleGraph& g, const std::optional<GlpCertificate>& cert,
                      std::size_t q) {
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->order(), q);
  EXPECT_TRUE(verify_certificate(g, *cert).passed());
  for (const TreeEdge& e : cert->tree.edges()) EXPECT_TRUE(e.weight.is_integer());
  for (const Rational& t : cert->thresholds.values()) EXPECT_TRUE(t.is_integer());
}

TEST(Recognition, FourCycle) {
  EXPECT_FALSE(recognize_glp(cycle4(), 1));
  expect_certifies(cycle4(), recognize_glp(cycle4(), 2), 2);
}

TEST(Recognition, ChordalFilterIsOnlyAShortcut) {
  RecognitionOptions options;
  options.use_chordal_filter = false;
  RecognitionStats stats;
  EXPECT_FALSE(recognize_glp(cycle4(), 1, options, &stats));
  EXPECT_FALSE(stats.rejected_by_chordality);
  EXPECT_GT(stats.topologies_scanned, 0U);
  RecognitionStats filtered;
  EXPECT_FALSE(recognize_glp(cycle4(), 1, {}, &filtered));
  EXPECT_TRUE(filtered.rejected_by_chordality);
}

TEST(Recognition, SingleVertexAndEmpty) {
  const SimpleGraph one = SimpleGraph::edgeless({"a"});
  expect_certifies(one, recognize_glp(one, 1), 1);
  EXPECT_THROW(recognize_glp(SimpleGraph(), 1), InvalidGraph);
}

TEST(Recognition, Caps) {
  const SimpleGraph big = SimpleGraph::complete(leaf_names(9));
  EXPECT_THROW(recognize_glp(big, 1), CapacityExceeded);
  EXPECT_THROW(recognize_glp(SimpleGraph::complete(leaf_names(7)), 3), CapacityExceeded);
  EXPECT_THROW(is_k_leaf_power(big, 2), CapacityExceeded);
}

TEST(Recognition, AllGraphsOnFourVerticesMatchOracle) {
  const std::size_t n = 4;
  const std::set<std::uint64_t> oracle_set = oracle::small_leaf_powers(n, 2, 4, 8);
  for (std::uint64_t mask = 0; mask < (1U << pair_count(n)); ++mask) {
    const SimpleGraph g = graph_from_mask(n, mask);
    const auto cert = recognize_glp(g, 1);
    EXPECT_EQ(cert.has_value(), oracle_set.count(mask) == 1) << mask;
    EXPECT_EQ(cert.has_value(), !oracle::has_induced_long_cycle(g)) << mask;
    if (cert) expect_certifies(g, cert, 1);
  }
}

TEST(Recognition, AllGraphsOnFiveVerticesContainOracle) {
  const std::size_t n = 5;
  const std::set<std::uint64_t> oracle_set = oracle::small_leaf_powers(n, 3, 3, 6);
  std::size_t members = 0;
  for (std::uint64_t mask = 0; mask < (1U << pair_count(n)); ++mask) {
    const SimpleGraph g = graph_from_mask(n, mask);
    const auto cert = recognize_glp(g, 1);
    if (oracle_set.count(mask)) EXPECT_TRUE(cert) << mask;
    // Every chordal graph this small is a leaf power.
    EXPECT_EQ(cert.has_value(), !oracle::has_induced_long_cycle(g)) << mask;
    if (cert) {
      ++members;
      EXPECT_TRUE(verify_certificate(g, *cert).passed()) << mask;
    }
  }
  EXPECT_GE(members, oracle_set.size());
}

TEST(Recognition, OrderTwoOnFourVerticesIsEverything) {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const SimpleGraph g = graph_from_mask(4, mask);
    expect_certifies(g, recognize_glp(g, 2), 2);
  }
}

TEST(Recognition, MembershipIsMonotoneInOrder) {
  Rng rng(61);
  for (int round = 0; round < 30; ++round) {
    const SimpleGraph g = random_graph(rng, 5);
    for (std::size_t q = 1; q < 3; ++q) {
      if (recognize_glp(g, q)) expect_certifies(g, recognize_glp(g, q + 1), q + 1);
    }
  }
}

TEST(Recognition, OptionsDoNotChangeTheWitness) {
  Rng rng(62);
  for (int round = 0; round < 15; ++round) {
    const SimpleGraph g = random_graph(rng, 6);
    const std::size_t q = 1 + rng.below(2);
    const auto base = recognize_glp(g, q);
    RecognitionOptions threaded;
    threaded.threads = 3;
    RecognitionOptions plain;
    plain.use_symmetry = false;
    plain.use_binary_decision = false;
    plain.use_chordal_filter = false;
    for (const RecognitionOptions& o : {threaded, plain}) {
      const auto other = recognize_glp(g, q, o);
      ASSERT_EQ(base.has_value(), other.has_value()) << round;
      if (base) EXPECT_EQ(certificate_to_json(*base), certificate_to_json(*other)) << round;
    }
  }
}

TEST(Recognition, LiftedCertificatesAreFound) {
  Rng rng(63);
  for (int round = 0; round < 20; ++round) {
    const GlpCertificate c = random_certificate(rng, 2 + rng.below(5), 1 + rng.below(2));
    const SimpleGraph g = graph_from_certificate(c);
    expect_certifies(g, recognize_glp(g, c.order()), c.order());
  }
}

TEST(LeafPower, TreeMeetsTheThreshold) {
  Rng rng(64);
  for (int round = 0; round < 30; ++round) {
    const SimpleGraph g = random_graph(rng, 5, 60);
    for (std::int64_t k = 2; k <= 6; ++k) {
      const auto tree = is_k_leaf_power(g, k);
      if (!tree) continue;
      EXPECT_EQ(tree->labels(), g.names());
      const auto cert = GlpCertificate{*tree, ThresholdSequence({Rational(k)})};
      EXPECT_TRUE(verify_certificate(g, cert).passed());
      for (const TreeEdge& e : tree->edges()) EXPECT_TRUE(e.weight.is_integer());
    }
  }
}

TEST(LeafRank, KnownValues) {
  // A single edge of weight 1 is a leaf root.
  EXPECT_EQ(leaf_rank(SimpleGraph::complete({"a", "b"})), 1);
  EXPECT_EQ(leaf_rank(SimpleGraph::complete(leaf_names(5))), 2);
  EXPECT_EQ(leaf_rank(SimpleGraph::edgeless({"a", "b"})), 1);
  EXPECT_EQ(leaf_rank(path3()), 3);
  EXPECT_EQ(leaf_rank(cycle4()), std::nullopt);
}

TEST(LeafRank, MatchesOracleOnFourVertices) {
  std::map<std::uint64_t, std::int64_t> oracle_rank;
  for (std::int64_t k = 8; k >= 1; --k) {
    for (std::uint64_t mask : oracle::small_leaf_powers(4, 2, 4, k)) oracle_rank[mask] = k;
  }
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const auto rank = leaf_rank(graph_from_mask(4, mask));
    const auto it = oracle_rank.find(mask);
    ASSERT_EQ(rank.has_value(), it != oracle_rank.end()) << mask;
    if (rank) EXPECT_EQ(*rank, it->second) << mask;
  }
}

TEST(LeafRank, Ceiling) {
  LeafRankOptions options;
  options.ceiling = 2;
  EXPECT_THROW(leaf_rank(path3(), options), CeilingExceeded);
}

TEST(Recognition, HierarchyFamilyOrderTwo) {
  const SimpleGraph g = non_glp_family(2);
  EXPECT_EQ(g.size(), 8U);
  const auto cert = glp_step_certificate(*recognize_glp(cycle4(), 2));
  EXPECT_TRUE(verify_certificate(g, cert).passed());
}

}  // namespace
}  // namespace leafpow
