#include "leafpow/topology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

#include "leafpow/errors.hpp"

namespace leafpow {

bool canonical_less(const Topology& a, const Topology& b) {
  if (a.internal_count() != b.internal_count()) return a.internal_count() < b.internal_count();
  return a.splits < b.splits;
}

EdgeMask TopologyShape::path(std::size_t i, std::size_t j) const {
  EdgeMask mask = 0;
  for (std::size_t e = 0; e < edge_side.size(); ++e) {
    if (((edge_side[e] >> i) & 1U) != ((edge_side[e] >> j) & 1U)) mask |= EdgeMask{1} << e;
  }
  return mask;
}

TopologyShape shape_of(const Topology& t) {
  TopologyShape s;
  const std::size_t n = t.leaves;
  if (n < 2) throw std::invalid_argument("topology needs at least two leaves");
  if (n == 2) {
    s.vertex_count = 2;
    s.edges = {{0, 1}};
    s.edge_side = {1U};
    return s;
  }
  const std::size_t root = n;
  s.vertex_count = n + 1 + t.splits.size();
  auto owner = [&](LeafMask cluster) {
    // Smallest split strictly containing `cluster`, as a vertex index.
    std::size_t best = root;
    int best_size = 64;
    for (std::size_t k = 0; k < t.splits.size(); ++k) {
      const LeafMask sk = t.splits[k];
      if (sk != cluster && (sk & cluster) == cluster && std::popcount(sk) < best_size) {
        best = n + 1 + k;
        best_size = std::popcount(sk);
      }
    }
    return best;
  };
  s.edges.emplace_back(0, root);
  s.edge_side.push_back(1U);
  for (std::size_t i = 1; i < n; ++i) {
    s.edges.emplace_back(i, owner(LeafMask{1} << i));
    s.edge_side.push_back(LeafMask{1} << i);
  }
  for (std::size_t k = 0; k < t.splits.size(); ++k) {
    s.edges.emplace_back(n + 1 + k, owner(t.splits[k]));
    s.edge_side.push_back(t.splits[k]);
  }
  return s;
}

Topology permuted(const Topology& t, const std::vector<std::size_t>& perm) {
  Topology out{t.leaves, {}};
  const LeafMask full = (t.leaves >= 32) ? ~LeafMask{0} : ((LeafMask{1} << t.leaves) - 1);
  out.splits.reserve(t.splits.size());
  for (LeafMask s : t.splits) {
    LeafMask m = 0;
    for (std::size_t i = 0; i < t.leaves; ++i) {
      if ((s >> i) & 1U) m |= LeafMask{1} << perm[i];
    }
    if (m & 1U) m = full & ~m;
    out.splits.push_back(m);
  }
  std::sort(out.splits.begin(), out.splits.end());
  return out;
}

WeightedTree realize(const Topology& t, const std::vector<std::string>& leaf_names,
                     const std::vector<Rational>& weights) {
  const TopologyShape s = shape_of(t);
  if (leaf_names.size() != t.leaves) throw std::invalid_argument("realize: wrong number of names");
  if (weights.size() != s.edges.size()) throw std::invalid_argument("realize: wrong number of weights");
  std::string prefix = "_i";
  while (std::any_of(leaf_names.begin(), leaf_names.end(),
                     [&](const std::string& name) { return name.rfind(prefix, 0) == 0; })) {
    prefix.insert(0, "_");
  }
  std::vector<std::string> ids(leaf_names);
  for (std::size_t v = t.leaves; v < s.vertex_count; ++v) {
    ids.push_back(prefix + std::to_string(v - t.leaves));
  }
  std::vector<TreeEdge> edges;
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    edges.push_back({s.edges[e].first, s.edges[e].second, weights[e]});
  }
  std::map<std::string, VertexIndex> labels;
  for (std::size_t i = 0; i < t.leaves; ++i) labels.emplace(leaf_names[i], i);
  return WeightedTree(std::move(ids), std::move(edges), std::move(labels));
}

namespace {

struct Builder {
  std::size_t n;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t internal = 0;  // internal vertices are n, n+1, ...
  std::vector<Topology>* out;

  Topology finish() const {
    const std::size_t nv = n + internal;
    std::vector<std::vector<std::size_t>> adj(nv);
    for (const auto& [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    // Leaf sets below each vertex, rooted at leaf 0.
    std::vector<LeafMask> below(nv, 0);
    std::vector<std::size_t> parent(nv, nv), order;
    std::vector<std::size_t> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (std::size_t w : adj[v]) {
        if (parent[w] == nv) {
          parent[w] = v;
          stack.push_back(w);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::size_t v = *it;
      if (v < n) below[v] |= LeafMask{1} << v;
      if (v != 0) below[parent[v]] |= below[v];
    }
    Topology t{n, {}};
    for (std::size_t v = n; v < nv; ++v) {
      if (parent[v] >= n) t.splits.push_back(below[v]);
    }
    std::sort(t.splits.begin(), t.splits.end());
    return t;
  }

  void grow(std::size_t k) {
    if (k == n) {
      out->push_back(finish());
      return;
    }
    const std::size_t edge_total = edges.size();
    for (std::size_t e = 0; e < edge_total; ++e) {
      const auto [a, b] = edges[e];
      const std::size_t c = n + internal;
      ++internal;
      edges[e] = {a, c};
      edges.emplace_back(c, b);
      edges.emplace_back(k, c);
      grow(k + 1);
      edges.pop_back();
      edges.pop_back();
      edges[e] = {a, b};
      --internal;
    }
    for (std::size_t v = n; v < n + internal; ++v) {
      edges.emplace_back(k, v);
      grow(k + 1);
      edges.pop_back();
    }
  }
};

std::shared_ptr<const TopologyCatalog> build_catalog(std::size_t n) {
  auto catalog = std::make_shared<TopologyCatalog>();
  catalog->n_leaves = n;
  if (n == 2) {
    catalog->topologies.push_back(Topology{2, {}});
    return catalog;
  }
  Builder b{n, {{0, n}, {1, n}, {2, n}}, 1, &catalog->topologies};
  b.grow(3);
  std::sort(catalog->topologies.begin(), catalog->topologies.end(), canonical_less);
  return catalog;
}

}  // namespace

std::shared_ptr<const TopologyCatalog> enumerate_topologies(std::size_t n, std::size_t max_internal,
                                                            std::size_t cap) {
  if (n < 2) throw std::invalid_argument("topology enumeration needs at least two leaves");
  if (n > cap) {
    throw CapacityExceeded("topology enumeration on " + std::to_string(n) +
                           " leaves exceeds the configured cap of " + std::to_string(cap));
  }
  if (n > 31) throw CapacityExceeded("topology enumeration supports at most 31 leaves");
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const TopologyCatalog>> cache;
  std::shared_ptr<const TopologyCatalog> full;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = build_catalog(n);
    full = slot;
  }
  if (max_internal >= n) return full;
  auto filtered = std::make_shared<TopologyCatalog>();
  filtered->n_leaves = n;
  for (const Topology& t : full->topologies) {
    if (t.internal_count() <= max_internal) filtered->topologies.push_back(t);
  }
  return filtered;
}

std::uint64_t binary_topology_count(std::size_t n) {
  std::uint64_t count = 1;
  for (std::size_t k = 3; n >= 4 && k <= 2 * n - 5; k += 2) count *= k;
  return count;
}

}  // namespace leafpow
