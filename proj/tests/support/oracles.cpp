#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>

namespace oracle {

std::vector<std::vector<Rational>> floyd_warshall(const leafpow::WeightedTree& tree) {
  const std::size_t n = tree.vertex_count();
  std::vector<std::vector<std::optional<Rational>>> d(n, std::vector<std::optional<Rational>>(n));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = Rational(0);
  for (const auto& e : tree.edges()) {
    d[e.u][e.v] = e.weight;
    d[e.v][e.u] = e.weight;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!d[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!d[k][j]) continue;
        const Rational via = *d[i][k] + *d[k][j];
        if (!d[i][j] || via < *d[i][j]) d[i][j] = via;
      }
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = d[i][j].value();
  }
  return out;
}

bool has_induced_long_cycle(const leafpow::SimpleGraph& graph) {
  const std::size_t n = graph.size();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) < 4) continue;
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) vs.push_back(v);
    }
    bool two_regular = true;
    for (std::size_t v : vs) {
      std::size_t deg = 0;
      for (std::size_t w : vs) deg += (v != w && graph.adjacent(v, w)) ? 1 : 0;
      two_regular = two_regular && deg == 2;
    }
    if (!two_regular) continue;
    // 2-regular and connected means a single cycle.
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{vs[0]};
    seen[vs[0]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : vs) {
        if (!seen[w] && graph.adjacent(v, w)) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached == vs.size()) return true;
  }
  return false;
}

std::uint64_t count_split_systems(std::size_t n, bool binary_only) {
  // Splits as the side avoiding leaf 0, each side with at least two leaves.
  std::vector<std::uint32_t> splits;
  const std::uint32_t full = (1U << n) - 1;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (s & 1U) continue;
    const int k = std::popcount(s);
    if (k >= 2 && static_cast<std::size_t>(k) <= n - 2) splits.push_back(s);
  }
  auto compatible = [&](std::uint32_t a, std::uint32_t b) {
    return (a & b) == 0 || (a & b) == a || (a & b) == b;
  };
  std::uint64_t count = 0;
  std::vector<std::uint32_t> chosen;
  const std::size_t binary_size = n >= 3 ? n - 3 : 0;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (!binary_only || chosen.size() == binary_size) ++count;
    for (std::size_t i = from; i < splits.size(); ++i) {
      if (std::all_of(chosen.begin(), chosen.end(),
                      [&](std::uint32_t c) { return compatible(c, splits[i]); })) {
        chosen.push_back(splits[i]);
        grow(i + 1);
        chosen.pop_back();
      }
    }
  };
  grow(0);
  return count;
}

std::set<std::uint64_t> small_leaf_powers(std::size_t n, std::size_t max_internal,
                                          std::int64_t max_weight, std::int64_t max_k) {
  std::set<std::uint64_t> found;
  auto record = [&](const std::vector<std::vector<std::int64_t>>& d) {
    for (std::int64_t k = 1; k <= max_k; ++k) {
      std::uint64_t mask = 0;
      std::size_t bit = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++bit) {
          if (d[i][j] <= k) mask |= std::uint64_t{1} << bit;
        }
      }
      found.insert(mask);
    }
  };
  // n == 2: a single weighted edge.
  if (n == 2) {
    for (std::int64_t w = 1; w <= max_weight; ++w) record({{0, w}, {w, 0}});
  }
  for (std::size_t m = 1; m <= max_internal; ++m) {
    const std::size_t total = n + m;
    const std::size_t len = total - 2;
    // Leaves never appear in the sequence, so symbols are internal vertices.
    std::vector<std::size_t> seq(len, 0);
    for (;;) {
      bool all_internal_used = true;
      for (std::size_t v = 0; v < m; ++v) {
        all_internal_used = all_internal_used && std::count(seq.begin(), seq.end(), v) > 0;
      }
      if (all_internal_used) {
        std::vector<std::size_t> degree(total, 1);
        for (std::size_t s : seq) ++degree[n + s];
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t s : seq) {
          std::size_t leaf = 0;
          while (degree[leaf] != 1) ++leaf;
          edges.emplace_back(leaf, n + s);
          --degree[leaf];
          --degree[n + s];
        }
        std::vector<std::size_t> last;
        for (std::size_t v = 0; v < total; ++v) {
          if (degree[v] == 1) last.push_back(v);
        }
        edges.emplace_back(last[0], last[1]);
        // Every weighting of this shape.
        std::vector<std::int64_t> w(edges.size(), 1);
        for (;;) {
          std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> nb(total);
          for (std::size_t e = 0; e < edges.size(); ++e) {
            nb[edges[e].first].emplace_back(edges[e].second, w[e]);
            nb[edges[e].second].emplace_back(edges[e].first, w[e]);
          }
          std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, 0));
          for (std::size_t src = 0; src < n; ++src) {
            std::vector<std::int64_t> dist(total, -1);
            std::vector<std::size_t> stack{src};
            dist[src] = 0;
            while (!stack.empty()) {
              const std::size_t v = stack.back();
              stack.pop_back();
              for (const auto& [u, len_uv] : nb[v]) {
                if (dist[u] < 0) {
                  dist[u] = dist[v] + len_uv;
                  stack.push_back(u);
                }
              }
            }
            for (std::size_t j = 0; j < n; ++j) d[src][j] = dist[j];
          }
          record(d);
          std::size_t e = 0;
          while (e < w.size() && w[e] == max_weight) w[e++] = 1;
          if (e == w.size()) break;
          ++w[e];
        }
      }
      std::size_t i = 0;
      while (i < len && seq[i] == m - 1) seq[i++] = 0;
      if (i == len) break;
      ++seq[i];
    }
  }
  return found;
}

std::optional<Rational> lp2_min(const std::vector<Row2>& rows, const Rational& c0, const Rational& c1) {
  std::vector<Row2> all = rows;
  all.push_back({1, 0, 0});
  all.push_back({0, 1, 0});
  auto feasible = [&](const Rational& x, const Rational& y) {
    return std::all_of(all.begin(), all.end(), [&](const Row2& r) { return r.a0 * x + r.a1 * y >= r.b; });
  };
  std::optional<Rational> best;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Rational det = all[i].a0 * all[j].a1 - all[i].a1 * all[j].a0;
      if (det.is_zero()) continue;
      const Rational x = (all[i].b * all[j].a1 - all[i].a1 * all[j].b) / det;
      const Rational y = (all[i].a0 * all[j].b - all[i].b * all[j].a0) / det;
      if (!feasible(x, y)) continue;
      const Rational v = c0 * x + c1 * y;
      if (!best || v < *best) best = v;
    }
  }
  return best;
}

}  // namespace oracle
