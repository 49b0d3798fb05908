#pragma once

// Independent reference implementations used only by the tests. None of them
// share code with the library beyond the value types.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leafpow/rational.hpp"
#include "leafpow/simple_graph.hpp"
#include "leafpow/weighted_tree.hpp"

namespace oracle {

using leafpow::Rational;

// All-pairs shortest paths over the tree's edge list treated as a general
// graph; entries indexed by vertex.
std::vector<std::vector<Rational>> floyd_warshall(const leafpow::WeightedTree& tree);

// True iff some vertex subset of size >= 4 induces a cycle.
bool has_induced_long_cycle(const leafpow::SimpleGraph& graph);

// Number of leaf-labelled unrooted trees without degree-2 vertices, counted
// as sets of pairwise compatible nontrivial splits.
std::uint64_t count_split_systems(std::size_t n, bool binary_only = false);

// Edge masks (pair order (0,1),(0,2),...) of every graph on n vertices that is
// a k-leaf power for some k <= max_k, over all trees with at most
// max_internal internal vertices (degree >= 2) and integer weights in
// [1, max_weight]. Trees come from Pruefer sequences.
std::set<std::uint64_t> small_leaf_powers(std::size_t n, std::size_t max_internal,
                                          std::int64_t max_weight, std::int64_t max_k);

// minimize c.x over x >= 0 (two variables) subject to a_i . x >= b_i by
// enumerating candidate vertices; nullopt if infeasible. The LP must be bounded.
struct Row2 {
  Rational a0, a1, b;
};
std::optional<Rational> lp2_min(const std::vector<Row2>& rows, const Rational& c0, const Rational& c1);

}  // namespace oracle
