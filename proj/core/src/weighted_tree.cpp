#include "leafpow/weighted_tree.hpp"

#include <set>
#include <utility>

#include "leafpow/errors.hpp"

namespace leafpow {

WeightedTree::WeightedTree(std::vector<std::string> vertex_ids, std::vector<TreeEdge> edges,
                           std::map<std::string, VertexIndex> leaf_labels)
    : ids_(std::move(vertex_ids)), edges_(std::move(edges)), labels_(std::move(leaf_labels)) {
  const std::size_t n = ids_.size();
  if (n == 0) throw InvalidTree("tree has no vertices");
  for (VertexIndex v = 0; v < n; ++v) {
    if (ids_[v].empty()) throw InvalidTree("empty vertex identifier");
    if (!index_of_id_.emplace(ids_[v], v).second) {
      throw InvalidTree("duplicate vertex identifier: " + ids_[v]);
    }
  }
  if (edges_.size() + 1 != n) {
    throw InvalidTree("a tree on " + std::to_string(n) + " vertices needs " +
                      std::to_string(n - 1) + " edges, got " + std::to_string(edges_.size()));
  }
  adjacency_.assign(n, {});
  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const TreeEdge& edge = edges_[e];
    if (edge.u >= n || edge.v >= n) throw InvalidTree("edge endpoint out of range");
    if (edge.u == edge.v) throw InvalidTree("self-loop at " + ids_[edge.u]);
    if (edge.weight.sign() <= 0) {
      throw InvalidTree("non-positive weight " + edge.weight.str() + " on edge " + ids_[edge.u] +
                        "-" + ids_[edge.v]);
    }
    if (!seen.emplace(std::min(edge.u, edge.v), std::max(edge.u, edge.v)).second) {
      throw InvalidTree("duplicate edge " + ids_[edge.u] + "-" + ids_[edge.v]);
    }
    adjacency_[edge.u].push_back({edge.v, e});
    adjacency_[edge.v].push_back({edge.u, e});
  }
  // |E| = |V| - 1 plus connectivity makes it a tree.
  std::vector<bool> reached(n, false);
  std::vector<VertexIndex> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexIndex v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : adjacency_[v]) {
      if (!reached[inc.neighbor]) {
        reached[inc.neighbor] = true;
        ++count;
        stack.push_back(inc.neighbor);
      }
    }
  }
  if (count != n) throw InvalidTree("edges do not form a connected tree");

  label_of_vertex_.assign(n, nullptr);
  for (const auto& [label, v] : labels_) {
    if (label.empty()) throw InvalidTree("empty leaf label");
    if (v >= n) throw InvalidTree("label " + label + " refers to a missing vertex");
    if (label_of_vertex_[v] != nullptr) {
      throw InvalidTree("vertex " + ids_[v] + " carries two labels");
    }
    const std::size_t deg = adjacency_[v].size();
    if (!(deg == 1 || (n == 1 && deg == 0))) {
      throw InvalidTree("labeled vertex " + ids_[v] + " has degree " + std::to_string(deg));
    }
    label_of_vertex_[v] = &label;
  }
}

std::optional<VertexIndex> WeightedTree::find_vertex(std::string_view id) const {
  const auto it = index_of_id_.find(id);
  if (it == index_of_id_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> WeightedTree::labels() const {
  std::vector<std::string> out;
  out.reserve(labels_.size());
  for (const auto& entry : labels_) out.push_back(entry.first);
  return out;
}

bool WeightedTree::has_label(std::string_view label) const {
  return labels_.find(std::string(label)) != labels_.end();
}

VertexIndex WeightedTree::vertex_of(std::string_view label) const {
  const auto it = labels_.find(std::string(label));
  if (it == labels_.end()) throw LabelNotFound(std::string(label));
  return it->second;
}

const std::string* WeightedTree::label_of(VertexIndex v) const { return label_of_vertex_.at(v); }

std::vector<Rational> WeightedTree::distances_from(VertexIndex from) const {
  std::vector<Rational> dist(ids_.size());
  std::vector<bool> done(ids_.size(), false);
  std::vector<VertexIndex> stack{from};
  done.at(from) = true;
  while (!stack.empty()) {
    const VertexIndex v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : adjacency_[v]) {
      if (done[inc.neighbor]) continue;
      done[inc.neighbor] = true;
      dist[inc.neighbor] = dist[v] + edges_[inc.edge].weight;
      stack.push_back(inc.neighbor);
    }
  }
  return dist;
}

Rational WeightedTree::vertex_distance(VertexIndex a, VertexIndex b) const {
  return distances_from(a).at(b);
}

WeightedTree WeightedTree::scaled(const Rational& factor) const {
  if (factor.sign() <= 0) throw InvalidTree("scale factor must be positive");
  std::vector<TreeEdge> edges = edges_;
  for (TreeEdge& e : edges) e.weight *= factor;
  return WeightedTree(ids_, std::move(edges), labels_);
}

}  // namespace leafpow
