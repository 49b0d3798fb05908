#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "builders.hpp"
#include "leafpow/errors.hpp"
#include "leafpow/generators.hpp"
#include "leafpow/simple_graph.hpp"
#include "oracles.hpp"

namespace leafpow {
namespace {

using testing_support::cycle4;

TEST(SimpleGraph, Validation) {
  EXPECT_THROW(SimpleGraph({"a", "a"}, {}), InvalidGraph);
  EXPECT_THROW(SimpleGraph({"a", "b"}, {{"a", "a"}}), InvalidGraph);
  EXPECT_THROW(SimpleGraph({"a", "b"}, {{"a", "c"}}), InvalidGraph);
  EXPECT_THROW(SimpleGraph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InvalidGraph);
  const SimpleGraph g({"b", "a"}, {{"b", "a"}});
  EXPECT_EQ(g.names(), (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(g.adjacent("a", "b"));
}

TEST(SimpleGraph, ComplementBasics) {
  const SimpleGraph k4 = SimpleGraph::complete({"a", "b", "c", "d"});
  EXPECT_EQ(complement(k4), SimpleGraph::edgeless({"a", "b", "c", "d"}));
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const SimpleGraph g = random_graph(rng, 1 + rng.below(8));
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(complement(g).edge_count() + g.edge_count(), g.size() * (g.size() - 1) / 2);
  }
}

TEST(SimpleGraph, DisjointUnionTags) {
  const SimpleGraph u = disjoint_union(cycle4(), cycle4());
  EXPECT_EQ(u.size(), 8U);
  EXPECT_EQ(u.edge_count(), 8U);
  EXPECT_TRUE(u.adjacent("a#1", "b#1"));
  EXPECT_FALSE(u.adjacent("a#1", "b#2"));
}

TEST(Chordal, Examples) {
  EXPECT_FALSE(is_chordal(cycle4()));
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_TRUE(is_chordal(SimpleGraph::complete(leaf_names(n))));
  EXPECT_TRUE(is_chordal(testing_support::path3()));
}

TEST(Chordal, AgreesWithInducedCycleSearch) {
  Rng rng(32);
  int chordal = 0;
  for (int i = 0; i < 400; ++i) {
    const SimpleGraph g = random_graph(rng, 1 + rng.below(8), 30 + rng.below(60));
    const bool expected = !oracle::has_induced_long_cycle(g);
    ASSERT_EQ(is_chordal(g), expected);
    chordal += expected ? 1 : 0;
  }
  EXPECT_GT(chordal, 50);
  EXPECT_LT(chordal, 390);
}

TEST(Connectivity, Basics) {
  EXPECT_TRUE(is_connected(cycle4()));
  EXPECT_FALSE(is_connected(disjoint_union(cycle4(), cycle4())));
  EXPECT_TRUE(is_connected(SimpleGraph::edgeless({"a"})));
}

TEST(Automorphisms, CountsAgreeWithBruteForce) {
  Rng rng(33);
  for (int i = 0; i < 30; ++i) {
    const SimpleGraph g = random_graph(rng, 1 + rng.below(6));
    const std::size_t n = g.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t count = 0;
    do {
      bool ok = true;
      for (std::size_t u = 0; u < n && ok; ++u) {
        for (std::size_t v = 0; v < n && ok; ++v) ok = g.adjacent(u, v) == g.adjacent(perm[u], perm[v]);
      }
      count += ok ? 1 : 0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const auto autos = automorphisms(g, 1000);
    EXPECT_EQ(autos.size(), count);
    ASSERT_FALSE(autos.empty());
    for (std::size_t v = 0; v < n; ++v) EXPECT_EQ(autos[0][v], v);
  }
  EXPECT_EQ(automorphisms(cycle4(), 1000).size(), 8U);
  EXPECT_EQ(automorphisms(cycle4(), 3).size(), 3U);
}

TEST(CanonicalForm, InvariantUnderRenaming) {
  Rng rng(34);
  for (int i = 0; i < 20; ++i) {
    const SimpleGraph g = random_graph(rng, 2 + rng.below(5));
    std::vector<std::string> names = g.names();
    rng.shuffle(names);
    EXPECT_EQ(canonical_form(g.renamed(names)), canonical_form(g));
  }
  EXPECT_NE(canonical_form(cycle4()), canonical_form(SimpleGraph::complete({"a", "b", "c", "d"})));
}

}  // namespace
}  // namespace leafpow
