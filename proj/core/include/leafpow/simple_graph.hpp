#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace leafpow {

// Finite undirected simple graph on named vertices. Vertex indices follow the
// lexicographic order of the names, so equal graphs have equal indexings.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  // Throws InvalidGraph on duplicate names, unknown endpoints, self-loops or
  // repeated edges.
  SimpleGraph(std::vector<std::string> names,
              const std::vector<std::pair<std::string, std::string>>& edges);

  static SimpleGraph edgeless(std::vector<std::string> names);
  static SimpleGraph complete(std::vector<std::string> names);
  // Builds from a symmetric adjacency matrix over already sorted names.
  static SimpleGraph from_matrix(std::vector<std::string> sorted_names,
                                 std::vector<std::vector<char>> adjacency);

  std::size_t size() const { return names_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t v) const { return names_.at(v); }
  bool contains(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws InvalidGraph

  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u][v] != 0; }
  bool adjacent(std::string_view u, std::string_view v) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const;
  // Edges as index pairs (u < v) in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  SimpleGraph induced(const std::vector<std::size_t>& vertices) const;
  SimpleGraph renamed(const std::vector<std::string>& new_names) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.names_ == b.names_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<char>> adj_;
  std::size_t edge_count_ = 0;
};

SimpleGraph complement(const SimpleGraph& graph);

// Vertex "a" of the first operand becomes "a" + tag1, of the second "a" + tag2.
SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2,
                           std::string_view tag1 = "#1", std::string_view tag2 = "#2");

// Perfect-elimination-ordering test via maximum cardinality search.
bool is_chordal(const SimpleGraph& graph);

bool is_connected(const SimpleGraph& graph);

// Automorphisms as vertex permutations (perm[v] = image of v), identity first,
// at most `limit` of them.
std::vector<std::vector<std::size_t>> automorphisms(const SimpleGraph& graph, std::size_t limit);

// Canonical form under vertex relabeling: the lexicographically smallest
// upper-triangle adjacency string over all vertex orders. Only for small graphs.
std::string canonical_form(const SimpleGraph& graph);

}  // namespace leafpow
