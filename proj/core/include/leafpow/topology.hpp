#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "leafpow/rational.hpp"
#include "leafpow/weighted_tree.hpp"

namespace leafpow {

using LeafMask = std::uint32_t;
using EdgeMask = std::uint64_t;

// Unrooted tree on leaves 0..n-1 whose internal vertices all have degree at
// least 3, stored as its nontrivial splits. Each split is recorded by the side
// not containing leaf 0; the list is sorted.
struct Topology {
  std::size_t leaves = 0;
  std::vector<LeafMask> splits;

  std::size_t internal_count() const { return leaves <= 2 ? 0 : splits.size() + 1; }
  std::size_t edge_count() const { return leaves <= 2 ? leaves - 1 : leaves + splits.size(); }
  bool is_binary() const { return leaves <= 3 || splits.size() + 3 == leaves; }

  friend bool operator==(const Topology&, const Topology&) = default;
};

// Canonical order: fewer internal vertices first, then splits lexicographically.
bool canonical_less(const Topology& a, const Topology& b);

// Explicit vertices and edges. Vertices 0..n-1 are the leaves, internal
// vertices follow. Edges: the pendant edge of leaf i is edge i, internal edges
// follow in split order.
struct TopologyShape {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<LeafMask> edge_side;  // leaves on one side of each edge

  // Edges on the path between leaves i and j.
  EdgeMask path(std::size_t i, std::size_t j) const;
};

TopologyShape shape_of(const Topology& topology);

// Topology with leaf i renamed perm[i].
Topology permuted(const Topology& topology, const std::vector<std::size_t>& perm);

// Weighted tree for the topology: leaf i labeled leaf_names[i], weights in
// edge order. Internal vertex ids avoid clashing with the leaf names.
WeightedTree realize(const Topology& topology, const std::vector<std::string>& leaf_names,
                     const std::vector<Rational>& weights);

struct TopologyCatalog {
  std::size_t n_leaves = 0;
  std::vector<Topology> topologies;  // canonical order
};

inline constexpr std::size_t kDefaultTopologyCap = 9;

// Every topology on n leaves with at most max_internal internal vertices, in
// canonical order. Results for the unrestricted catalog are cached per n.
// Throws CapacityExceeded above `cap` and std::invalid_argument for n < 2.
std::shared_ptr<const TopologyCatalog> enumerate_topologies(std::size_t n,
                                                            std::size_t max_internal = SIZE_MAX,
                                                            std::size_t cap = kDefaultTopologyCap);

// Number of topologies without building them: binary ones are (2n-5)!!.
std::uint64_t binary_topology_count(std::size_t n);

}  // namespace leafpow
