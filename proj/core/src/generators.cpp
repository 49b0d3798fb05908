#include "leafpow/generators.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "leafpow/errors.hpp"
#include "leafpow/tree_metric.hpp"

namespace leafpow {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::between with hi < lo");
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::string leaf_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i);
}

std::vector<std::string> leaf_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(leaf_name(i));
  return out;
}

namespace {

Rational random_weight(Rng& rng, const TreeShape& shape) {
  return Rational(rng.between(1, shape.max_numerator), rng.between(1, shape.max_denominator));
}

}  // namespace

WeightedTree random_tree(Rng& rng, std::size_t n, const TreeShape& shape) {
  if (n == 0) throw std::invalid_argument("random_tree needs a leaf");
  const std::vector<std::string> names = leaf_names(n);
  if (n == 1) return WeightedTree({names[0]}, {}, {{names[0], 0}});
  // Vertices 0..n-1 are the leaves; internal vertices follow.
  std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 1}};
  std::size_t next = n;
  std::vector<std::size_t> internal;
  for (std::size_t leaf = 2; leaf < n; ++leaf) {
    if (!internal.empty() && rng.chance(shape.join_percent, 100)) {
      edges.emplace_back(leaf, internal[rng.below(internal.size())]);
      continue;
    }
    const std::size_t e = rng.below(edges.size());
    const auto [a, b] = edges[e];
    const std::size_t c = next++;
    internal.push_back(c);
    edges[e] = {a, c};
    edges.emplace_back(c, b);
    edges.emplace_back(leaf, c);
  }
  if (shape.subdivide_percent > 0) {
    const std::size_t count = edges.size();
    for (std::size_t e = 0; e < count; ++e) {
      if (!rng.chance(shape.subdivide_percent, 100)) continue;
      const auto [a, b] = edges[e];
      const std::size_t c = next++;
      edges[e] = {a, c};
      edges.emplace_back(c, b);
    }
  }
  std::vector<std::string> ids = names;
  for (std::size_t v = n; v < next; ++v) ids.push_back("_i" + std::to_string(v - n));
  std::vector<TreeEdge> tree_edges;
  for (const auto& [a, b] : edges) tree_edges.push_back({a, b, random_weight(rng, shape)});
  std::map<std::string, VertexIndex> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace(names[i], i);
  return WeightedTree(std::move(ids), std::move(tree_edges), std::move(labels));
}

GlpCertificate random_certificate(Rng& rng, std::size_t n, std::size_t q, const TreeShape& shape) {
  if (q == 0) throw std::invalid_argument("random_certificate needs q >= 1");
  WeightedTree tree = random_tree(rng, n, shape);
  std::set<Rational> candidates;
  if (n >= 2) {
    const DistanceMatrix m = leaf_distance_matrix(tree);
    std::set<Rational> d;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) d.insert(m.d[i][j]);
    }
    candidates = d;
    candidates.insert(*d.begin() / 2);
    candidates.insert(*d.rbegin() + 1);
    for (auto it = d.begin(); std::next(it) != d.end(); ++it) {
      candidates.insert((*it + *std::next(it)) / 2);
    }
  } else {
    candidates.insert(1);
  }
  std::vector<Rational> pool(candidates.begin(), candidates.end());
  while (pool.size() < q) pool.push_back(pool.back() + 1);
  rng.shuffle(pool);
  pool.resize(q);
  std::sort(pool.begin(), pool.end());
  return GlpCertificate{std::move(tree), ThresholdSequence(std::move(pool))};
}

SimpleGraph random_graph(Rng& rng, std::size_t n, std::uint64_t edge_percent) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      adj[i][j] = adj[j][i] = rng.chance(edge_percent, 100) ? 1 : 0;
    }
  }
  return SimpleGraph::from_matrix(leaf_names(n), std::move(adj));
}

SimpleGraph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      adj[i][j] = adj[j][i] = static_cast<char>((mask >> bit) & 1U);
    }
  }
  return SimpleGraph::from_matrix(leaf_names(n), std::move(adj));
}

std::pair<TocInstance, WeightedTree> random_realizable_toc(Rng& rng, std::size_t n) {
  TreeShape shape;
  shape.max_numerator = 40;
  shape.max_denominator = 1;
  for (;;) {
    WeightedTree tree = random_tree(rng, n, shape);
    try {
      TocInstance toc = order_from_tree(tree);
      return {std::move(toc), std::move(tree)};
    } catch (const FormatError&) {
      // tied distances on some triple; draw again
    }
  }
}

namespace {

const std::array<std::array<int, 3>, 6> kPermutations{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

template <typename Digit>
TocInstance toc_with(std::size_t n, Digit&& digit) {
  std::map<std::array<std::size_t, 3>, std::array<ElementPair, 3>> orders;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        const std::array<ElementPair, 3> pairs{ElementPair{a, b}, ElementPair{a, c}, ElementPair{b, c}};
        const auto& p = kPermutations[digit()];
        orders.emplace(std::array<std::size_t, 3>{a, b, c},
                       std::array<ElementPair, 3>{pairs[p[0]], pairs[p[1]], pairs[p[2]]});
      }
    }
  }
  return TocInstance(leaf_names(n), std::move(orders));
}

}  // namespace

TocInstance random_toc(Rng& rng, std::size_t n) {
  return toc_with(n, [&] { return rng.below(6); });
}

std::uint64_t toc_count(std::size_t n) {
  const std::size_t triples = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < triples; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / 6) {
      throw CapacityExceeded("too many triangle orders to count");
    }
    count *= 6;
  }
  return count;
}

TocInstance toc_from_code(std::size_t n, std::uint64_t code) {
  if (code >= toc_count(n)) throw std::invalid_argument("triangle order code out of range");
  return toc_with(n, [&] {
    const std::uint64_t d = code % 6;
    code /= 6;
    return d;
  });
}

}  // namespace leafpow
