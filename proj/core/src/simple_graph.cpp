#include "leafpow/simple_graph.hpp"

#include <algorithm>
#include <numeric>

#include "leafpow/errors.hpp"

namespace leafpow {

SimpleGraph::SimpleGraph(std::vector<std::string> names,
                         const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InvalidGraph("empty vertex name");
    if (i > 0 && names_[i] == names_[i - 1]) {
      throw InvalidGraph("duplicate vertex name: " + names_[i]);
    }
  }
  adj_.assign(names_.size(), std::vector<char>(names_.size(), 0));
  for (const auto& [a, b] : edges) {
    const std::size_t u = index_of(a);
    const std::size_t v = index_of(b);
    if (u == v) throw InvalidGraph("self-loop at " + a);
    if (adj_[u][v]) throw InvalidGraph("repeated edge " + a + "-" + b);
    adj_[u][v] = adj_[v][u] = 1;
    ++edge_count_;
  }
}

SimpleGraph SimpleGraph::edgeless(std::vector<std::string> names) {
  return SimpleGraph(std::move(names), {});
}

SimpleGraph SimpleGraph::complete(std::vector<std::string> names) {
  return complement(edgeless(std::move(names)));
}

SimpleGraph SimpleGraph::from_matrix(std::vector<std::string> sorted_names,
                                     std::vector<std::vector<char>> adjacency) {
  SimpleGraph g = edgeless(sorted_names);
  if (g.names_ != sorted_names) throw InvalidGraph("vertex names must be sorted");
  const std::size_t n = g.size();
  if (adjacency.size() != n) throw InvalidGraph("adjacency matrix has the wrong size");
  for (std::size_t u = 0; u < n; ++u) {
    if (adjacency[u].size() != n) throw InvalidGraph("adjacency matrix has the wrong size");
    if (adjacency[u][u]) throw InvalidGraph("self-loop at " + g.names_[u]);
    for (std::size_t v = 0; v < u; ++v) {
      if ((adjacency[u][v] != 0) != (adjacency[v][u] != 0)) {
        throw InvalidGraph("adjacency matrix is not symmetric");
      }
      if (adjacency[u][v]) ++g.edge_count_;
    }
    for (char& c : adjacency[u]) c = c ? 1 : 0;
  }
  g.adj_ = std::move(adjacency);
  return g;
}

bool SimpleGraph::contains(std::string_view name) const {
  return std::binary_search(names_.begin(), names_.end(), name);
}

std::size_t SimpleGraph::index_of(std::string_view name) const {
  const auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) {
    throw InvalidGraph("unknown vertex: " + std::string(name));
  }
  return static_cast<std::size_t>(it - names_.begin());
}

bool SimpleGraph::adjacent(std::string_view u, std::string_view v) const {
  return adjacent(index_of(u), index_of(v));
}

std::vector<std::size_t> SimpleGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < size(); ++u) {
    if (adj_[v][u]) out.push_back(u);
  }
  return out;
}

std::size_t SimpleGraph::degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count(adj_[v].begin(), adj_[v].end(), 1));
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v = u + 1; v < size(); ++v) {
      if (adj_[u][v]) out.emplace_back(u, v);
    }
  }
  return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<std::size_t>& vertices) const {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    names.push_back(names_.at(vertices[i]));
    for (std::size_t j = 0; j < i; ++j) {
      if (adj_[vertices[i]][vertices[j]]) edges.emplace_back(names_[vertices[j]], names_[vertices[i]]);
    }
  }
  return SimpleGraph(std::move(names), edges);
}

SimpleGraph SimpleGraph::renamed(const std::vector<std::string>& new_names) const {
  if (new_names.size() != size()) throw InvalidGraph("renaming has the wrong length");
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : this->edges()) edges.emplace_back(new_names[u], new_names[v]);
  return SimpleGraph(new_names, edges);
}

SimpleGraph complement(const SimpleGraph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) adj[u][v] = (u != v && !graph.adjacent(u, v)) ? 1 : 0;
  }
  return SimpleGraph::from_matrix(graph.names(), std::move(adj));
}

SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2, std::string_view tag1,
                           std::string_view tag2) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  auto add = [&](const SimpleGraph& g, std::string_view tag) {
    for (const std::string& name : g.names()) names.push_back(name + std::string(tag));
    for (const auto& [u, v] : g.edges()) {
      edges.emplace_back(g.name(u) + std::string(tag), g.name(v) + std::string(tag));
    }
  };
  add(g1, tag1);
  add(g2, tag2);
  return SimpleGraph(std::move(names), edges);
}

bool is_chordal(const SimpleGraph& graph) {
  const std::size_t n = graph.size();
  // Maximum cardinality search; the reverse visit order is a perfect
  // elimination ordering iff the graph is chordal.
  std::vector<std::size_t> weight(n, 0);
  std::vector<std::size_t> visit_time(n, n);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (visit_time[v] == n && (pick == n || weight[v] > weight[pick])) pick = v;
    }
    visit_time[pick] = step;
    order.push_back(pick);
    for (std::size_t u = 0; u < n; ++u) {
      if (visit_time[u] == n && graph.adjacent(pick, u)) ++weight[u];
    }
  }
  for (std::size_t v : order) {
    // Earlier-visited neighbors of v must be a clique; it suffices that they
    // are all adjacent to the latest-visited one among them.
    std::size_t parent = n;
    for (std::size_t u = 0; u < n; ++u) {
      if (graph.adjacent(v, u) && visit_time[u] < visit_time[v] &&
          (parent == n || visit_time[u] > visit_time[parent])) {
        parent = u;
      }
    }
    if (parent == n) continue;
    for (std::size_t u = 0; u < n; ++u) {
      if (u != parent && graph.adjacent(v, u) && visit_time[u] < visit_time[v] &&
          !graph.adjacent(parent, u)) {
        return false;
      }
    }
  }
  return true;
}

bool is_connected(const SimpleGraph& graph) {
  const std::size_t n = graph.size();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u = 0; u < n; ++u) {
      if (!seen[u] && graph.adjacent(v, u)) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

std::vector<std::vector<std::size_t>> automorphisms(const SimpleGraph& graph, std::size_t limit) {
  const std::size_t n = graph.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = graph.degree(v);
  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t v) -> void {
    if (out.size() >= limit) return;
    if (v == n) {
      out.push_back(image);
      return;
    }
    // Try the identity image first so the identity is reported first.
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t w = (v + k) % n;
      if (used[w] || degree[w] != degree[v]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = graph.adjacent(u, v) == graph.adjacent(image[u], w);
      if (!ok) continue;
      used[w] = true;
      image[v] = w;
      self(self, v + 1);
      used[w] = false;
      if (out.size() >= limit) return;
    }
  };
  extend(extend, 0);
  return out;
}

std::string canonical_form(const SimpleGraph& graph) {
  const std::size_t n = graph.size();
  if (n > 9) throw CapacityExceeded("canonical_form is limited to 9 vertices");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string code;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) code.push_back(graph.adjacent(perm[i], perm[j]) ? '1' : '0');
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

}  // namespace leafpow
