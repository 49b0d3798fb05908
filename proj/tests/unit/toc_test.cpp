#include <gtest/gtest.h>

#include <set>

#include "builders.hpp"
#include "leafpow/errors.hpp"
#include "leafpow/generators.hpp"
#include "leafpow/toc.hpp"
#include "leafpow/topology.hpp"
#include "leafpow/tree_metric.hpp"

namespace leafpow {
namespace {

using testing_support::star;

constexpr const char* kSample =
    "# sample\n"
    "S: a b c d\n"
    "a b c : ab < ac < bc\n"
    "a b d : ab < bd < ad\n"
    "a c d : cd < ac < ad   # trailing comment\n"
    "b c d : b,c < c,d < b,d\n"
    "a a c : aa < ac\n";

TEST(TocParse, Sample) {
  const TocInstance toc = parse_toc(kSample);
  EXPECT_EQ(toc.elements(), (std::vector<std::string>{"a", "b", "c", "d"}));
  EXPECT_EQ(toc.triples().size(), 4U);
  // Triple a b c: ab < ac < bc.
  EXPECT_TRUE(toc.less(0, 1, 2));
  EXPECT_TRUE(toc.less(1, 0, 2));
  EXPECT_TRUE(toc.less(2, 0, 1));
  // Triple a c d: cd < ac < ad.
  EXPECT_TRUE(toc.less(0, 2, 3));
  EXPECT_TRUE(toc.less(3, 2, 0));
  EXPECT_TRUE(toc.less(2, 3, 0));
  EXPECT_TRUE(toc.less(1, 1, 3));
  EXPECT_FALSE(toc.less(1, 3, 1));
  EXPECT_THROW(toc.less(0, 1, 1), std::invalid_argument);
}

TEST(TocParse, RoundTrip) {
  Rng rng(71);
  for (int round = 0; round < 30; ++round) {
    const TocInstance toc = random_toc(rng, 1 + rng.below(6));
    EXPECT_EQ(parse_toc(format_toc(toc)), toc);
  }
  const TocInstance multi = parse_toc("x1 x2 x3 : x1,x2 < x2,x3 < x1,x3\n");
  EXPECT_EQ(parse_toc(format_toc(multi)), multi);
}

TEST(TocParse, Errors) {
  const char* bad[] = {
      "a b c : ab < ac\n",
      "a b c : ab < ac < ad\n",
      "a b c : ab < ac < bc\na b c : ab < ac < bc\n",
      "a b c ab < ac < bc\n",
      "S: a b c\na b d : ab < ad < bd\n",
      "S: a b c d\na b c : ab < ac < bc\n",
      "a b c : abc < ac < bc\n",
      "a a c : ac < aa\n",
      "a a a : aa < aa\n",
      "S: a a\n",
      "S: a\nS: b\n",
  };
  for (const char* text : bad) EXPECT_THROW(parse_toc(text), FormatError) << text;
}

TEST(TocInstance, Validation) {
  using Orders = std::map<std::array<std::size_t, 3>, std::array<ElementPair, 3>>;
  EXPECT_THROW(TocInstance({"b", "a"}, {}), FormatError);
  EXPECT_THROW(TocInstance({"a", "b", "c"}, {}), FormatError);
  EXPECT_THROW(TocInstance({"a", "b", "c"}, Orders{{{0, 1, 2}, {ElementPair{0, 1}, {0, 1}, {1, 2}}}}),
               FormatError);
  EXPECT_THROW(TocInstance({"a b"}, {}), FormatError);
  EXPECT_NO_THROW(TocInstance({"a", "b", "c"}, Orders{{{0, 1, 2}, {ElementPair{1, 2}, {0, 1}, {0, 2}}}}));
}

TEST(ExtendedOrder, IsATriangleOrder) {
  Rng rng(72);
  for (int round = 0; round < 20; ++round) {
    const TocInstance toc = random_toc(rng, 1 + rng.below(5));
    const ExtendedOrder ext(toc);
    const std::size_t m = ext.size();
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        for (std::size_t z = 0; z < m; ++z) {
          if (y == z) continue;
          EXPECT_NE(ext.less(x, y, z), ext.less(x, z, y));
          if (x == y || x == z) continue;
          // No cyclic triple: xy < xz, zx < zy, yz < yx.
          EXPECT_FALSE(ext.less(x, y, z) && ext.less(z, x, y) && ext.less(y, z, x));
        }
      }
    }
    // Mirrors the base order on minus signs.
    for (const auto& [t, order] : toc.triples()) {
      const auto [a, b, c] = t;
      EXPECT_EQ(ext.less(ExtendedOrder::minus(a), ExtendedOrder::minus(b), ExtendedOrder::minus(c)),
                toc.less(a, b, c));
    }
    EXPECT_EQ(ext.as_instance().size(), m);
  }
}

TEST(ExtendedOrder, SignRules) {
  const ExtendedOrder ext(parse_toc("a b c : ab < ac < bc\n"));
  const std::size_t ap = ExtendedOrder::plus(0), am = ExtendedOrder::minus(0);
  const std::size_t bp = ExtendedOrder::plus(1), bm = ExtendedOrder::minus(1);
  EXPECT_EQ(ext.name(ap), "a+");
  EXPECT_EQ(ext.name(bm), "b-");
  EXPECT_TRUE(ext.less(ap, am, bp));
  EXPECT_TRUE(ext.less(am, ap, bm));
  EXPECT_TRUE(ext.less(ap, bp, bm));
  EXPECT_FALSE(ext.less(ap, bm, bp));
  EXPECT_TRUE(ext.less(ap, ap, am));
}

TEST(Realization, GeneratedTreesRealizeTheirOrder) {
  Rng rng(73);
  for (int round = 0; round < 40; ++round) {
    const auto [toc, tree] = random_realizable_toc(rng, 3 + rng.below(4));
    EXPECT_FALSE(realization_violation(tree, toc));
    EXPECT_EQ(order_from_tree(tree), toc);
  }
}

TEST(Realization, TiesAndMismatches) {
  const WeightedTree unit = star({{"a", "1"}, {"b", "1"}, {"c", "1"}});
  EXPECT_THROW(order_from_tree(unit), FormatError);
  const TocInstance toc = parse_toc("a b c : ab < ac < bc\n");
  const auto v = realization_violation(unit, toc);
  ASSERT_TRUE(v);
  EXPECT_NE(v->find(">="), std::string::npos);
  EXPECT_TRUE(realization_violation(star({{"a", "1"}, {"b", "1"}}), toc));
  EXPECT_FALSE(realization_violation(star({{"a", "1"}, {"b", "2"}, {"c", "3"}}), toc));
}

// All orders on four elements reachable by small integer trees, collected
// without the library's order reader.
std::set<std::vector<int>> oracle_realizable_codes() {
  std::set<std::vector<int>> codes;
  const auto catalog = enumerate_topologies(4);
  for (const Topology& t : catalog->topologies) {
    const TopologyShape s = shape_of(t);
    const std::size_t m = s.edges.size();
    std::vector<std::int64_t> w(m, 1);
    for (;;) {
      std::int64_t d[4][4] = {};
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
          for (std::size_t e = 0; e < m; ++e) d[i][j] += ((s.path(i, j) >> e) & 1U) ? w[e] : 0;
        }
      }
      std::vector<int> code;
      bool tie = false;
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = a + 1; b < 4; ++b) {
          for (std::size_t c = b + 1; c < 4; ++c) {
            const std::int64_t ab = d[a][b], ac = d[a][c], bc = d[b][c];
            tie = tie || ab == ac || ab == bc || ac == bc;
            // Rank of each pair within the triple.
            code.push_back((ab > ac) + (ab > bc));
            code.push_back((ac > ab) + (ac > bc));
          }
        }
      }
      if (!tie) codes.insert(code);
      std::size_t e = 0;
      while (e < m && w[e] == 7) w[e++] = 1;
      if (e == m) break;
      ++w[e];
    }
  }
  return codes;
}

std::vector<int> code_of(const TocInstance& toc) {
  std::vector<int> code;
  for (const auto& [t, order] : toc.triples()) {
    auto rank = [&](ElementPair p) {
      return static_cast<int>(std::find(order.begin(), order.end(), p) - order.begin());
    };
    code.push_back(rank({t[0], t[1]}));
    code.push_back(rank({t[0], t[2]}));
  }
  return code;
}

TEST(Realizability, AllOrdersOnFourElements) {
  const std::set<std::vector<int>> oracle_codes = oracle_realizable_codes();
  std::size_t realizable = 0;
  for (std::uint64_t code = 0; code < toc_count(4); ++code) {
    const TocInstance toc = toc_from_code(4, code);
    const auto tree = toc_realizability_small(toc);
    EXPECT_EQ(tree.has_value(), oracle_codes.count(code_of(toc)) == 1) << code;
    if (tree) {
      ++realizable;
      EXPECT_FALSE(realization_violation(*tree, toc));
    }
  }
  EXPECT_EQ(realizable, oracle_codes.size());
  EXPECT_LT(realizable, toc_count(4));
}

TEST(Realizability, SmallSets) {
  const auto one = toc_realizability_small(parse_toc("S: a\n"));
  ASSERT_TRUE(one);
  EXPECT_EQ(one->labels(), std::vector<std::string>{"a"});
  EXPECT_TRUE(toc_realizability_small(parse_toc("S: a b\n")));
  EXPECT_TRUE(toc_realizability_small(parse_toc("a b c : bc < ab < ac\n")));
  EXPECT_THROW(toc_realizability_small(toc_from_code(8, 0)), CapacityExceeded);
}

TEST(Realizability, ThreadsAgree) {
  Rng rng(74);
  for (int round = 0; round < 10; ++round) {
    const TocInstance toc = random_toc(rng, 5);
    TocSearchOptions threaded;
    threaded.threads = 3;
    const auto a = toc_realizability_small(toc);
    const auto b = toc_realizability_small(toc, threaded);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) EXPECT_EQ(leaf_distance_matrix(*a).d, leaf_distance_matrix(*b).d);
  }
}

}  // namespace
}  // namespace leafpow
