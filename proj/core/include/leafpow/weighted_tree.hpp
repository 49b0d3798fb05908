#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leafpow/rational.hpp"

namespace leafpow {

using VertexIndex = std::size_t;

struct TreeEdge {
  VertexIndex u;
  VertexIndex v;
  Rational weight;
};

struct Incidence {
  VertexIndex neighbor;
  std::size_t edge;
};

// Positively edge-weighted tree whose degree-1 vertices may carry external
// labels. Immutable once constructed; the constructor validates the tree
// invariants and throws InvalidTree on any violation.
class WeightedTree {
 public:
  WeightedTree(std::vector<std::string> vertex_ids, std::vector<TreeEdge> edges,
               std::map<std::string, VertexIndex> leaf_labels);

  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t leaf_count() const { return labels_.size(); }

  const std::string& vertex_id(VertexIndex v) const { return ids_.at(v); }
  std::optional<VertexIndex> find_vertex(std::string_view id) const;

  std::span<const TreeEdge> edges() const { return edges_; }
  std::span<const Incidence> neighbors(VertexIndex v) const { return adjacency_.at(v); }
  std::size_t degree(VertexIndex v) const { return adjacency_.at(v).size(); }

  const std::map<std::string, VertexIndex>& leaf_labels() const { return labels_; }
  // Labels in lexicographic order.
  std::vector<std::string> labels() const;
  bool has_label(std::string_view label) const;
  VertexIndex vertex_of(std::string_view label) const;  // throws LabelNotFound
  const std::string* label_of(VertexIndex v) const;     // nullptr when unlabeled

  // Sum of weights along the path from `from` to every vertex.
  std::vector<Rational> distances_from(VertexIndex from) const;
  Rational vertex_distance(VertexIndex a, VertexIndex b) const;

  // Same tree with every edge weight multiplied by `factor` (> 0).
  WeightedTree scaled(const Rational& factor) const;

 private:
  std::vector<std::string> ids_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::map<std::string, VertexIndex> labels_;
  std::vector<const std::string*> label_of_vertex_;
  std::map<std::string, VertexIndex, std::less<>> index_of_id_;
};

}  // namespace leafpow
