#include "leafpow/tree_metric.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <utility>

#include "leafpow/errors.hpp"

namespace leafpow {

Rational distance(const WeightedTree& tree, std::string_view a, std::string_view b) {
  const VertexIndex va = tree.vertex_of(a);
  const VertexIndex vb = tree.vertex_of(b);
  return tree.vertex_distance(va, vb);
}

Rational vertex_distance(const WeightedTree& tree, std::string_view a, std::string_view b) {
  const auto va = tree.find_vertex(a);
  if (!va) throw LabelNotFound(std::string(a));
  const auto vb = tree.find_vertex(b);
  if (!vb) throw LabelNotFound(std::string(b));
  return tree.vertex_distance(*va, *vb);
}

std::size_t DistanceMatrix::index_of(std::string_view label) const {
  const auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) throw LabelNotFound(std::string(label));
  return static_cast<std::size_t>(it - labels.begin());
}

const Rational& DistanceMatrix::at(std::string_view a, std::string_view b) const {
  return d[index_of(a)][index_of(b)];
}

DistanceMatrix leaf_distance_matrix(const WeightedTree& tree) {
  DistanceMatrix m;
  m.labels = tree.labels();
  const std::size_t n = m.labels.size();
  m.d.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<Rational> from = tree.distances_from(tree.vertex_of(m.labels[i]));
    for (std::size_t j = 0; j < n; ++j) m.d[i][j] = from[tree.vertex_of(m.labels[j])];
  }
  return m;
}

Rational diameter(const WeightedTree& tree) {
  if (tree.leaf_count() < 2) throw DegenerateTree("diameter needs at least two leaves");
  const DistanceMatrix m = leaf_distance_matrix(tree);
  Rational best;
  for (const auto& row : m.d) {
    for (const Rational& v : row) best = std::max(best, v);
  }
  return best;
}

QuartetVerdict four_point_classify(const std::array<std::array<Rational, 4>, 4>& d) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (!d[i][i].is_zero()) throw MalformedMetric("nonzero diagonal entry");
    for (std::size_t j = 0; j < i; ++j) {
      if (d[i][j] != d[j][i]) throw MalformedMetric("distance mapping is not symmetric");
    }
  }
  constexpr std::size_t x = 0, y = 1, z = 2, t = 3;
  QuartetVerdict out{QuartetCase::kViolation,
                     {d[x][y] + d[t][z], d[x][z] + d[t][y], d[y][z] + d[t][x]}};
  const auto& s = out.sums;
  if (s[0] == s[1] && s[1] == s[2]) {
    out.case_id = QuartetCase::kCase4;
  } else if (s[0] == s[1] && s[0] > s[2]) {
    out.case_id = QuartetCase::kCase1;
  } else if (s[0] == s[2] && s[0] > s[1]) {
    out.case_id = QuartetCase::kCase2;
  } else if (s[1] == s[2] && s[1] > s[0]) {
    out.case_id = QuartetCase::kCase3;
  }
  return out;
}

QuartetVerdict four_point_classify(const WeightedTree& tree, std::string_view x,
                                   std::string_view y, std::string_view z, std::string_view t) {
  const std::array<std::string_view, 4> pts{x, y, z, t};
  std::array<std::array<Rational, 4>, 4> d;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) d[i][j] = distance(tree, pts[i], pts[j]);
  }
  return four_point_classify(d);
}

bool check_split_lemma(const WeightedTree& tree, std::string_view a1, std::string_view a2,
                       std::string_view b1, std::string_view b2, std::string_view x,
                       std::string_view y) {
  auto d = [&](std::string_view p, std::string_view q) { return distance(tree, p, q); };
  const bool near_x = std::max(d(a1, x), d(a2, x)) < std::min(d(b1, x), d(b2, x));
  const bool near_y = std::max(d(b1, y), d(b2, y)) < std::min(d(a1, y), d(a2, y));
  return near_x && near_y;
}

bool check_twins_lemma(const WeightedTree& tree, std::string_view a1, std::string_view a2,
                       std::string_view b, std::string_view c, std::string_view x) {
  auto d = [&](std::string_view p, std::string_view q) { return distance(tree, p, q); };
  return d(a2, x) < d(a1, x) && d(a1, x) < d(b, x) && d(b, x) < d(c, x) &&
         d(a1, b) < d(a2, b) && d(a1, c) < d(a2, c);
}

namespace {

// The sweeps only compare sums and differences of distances, so a common
// integer scaling preserves their outcome. When the scaled matrix fits
// comfortably in 64 bits the sweeps run on machine integers.
std::optional<std::vector<std::vector<std::int64_t>>> integer_matrix(const DistanceMatrix& m) {
  Rational lcm(1);
  for (const auto& row : m.d) {
    for (const Rational& v : row) lcm = integer_lcm(lcm, v.denominator());
  }
  constexpr std::int64_t kLimit = std::int64_t{1} << 60;
  std::vector<std::vector<std::int64_t>> out(m.size(), std::vector<std::int64_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const auto v = (m.d[i][j] * lcm).to_int64();
      if (!v || std::llabs(*v) >= kLimit / 4) return std::nullopt;
      out[i][j] = *v;
    }
  }
  return out;
}

template <typename Matrix>
QuartetCensus four_point_sweep_impl(const Matrix& d, std::size_t n) {
  QuartetCensus census;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t z = y + 1; z < n; ++z) {
        for (std::size_t t = z + 1; t < n; ++t) {
          const auto s0 = d[x][y] + d[t][z];
          const auto s1 = d[x][z] + d[t][y];
          const auto s2 = d[y][z] + d[t][x];
          int c = 0;
          if (s0 == s1 && s1 == s2) {
            c = 4;
          } else if (s0 == s1 && s0 > s2) {
            c = 1;
          } else if (s0 == s2 && s0 > s1) {
            c = 2;
          } else if (s1 == s2 && s1 > s0) {
            c = 3;
          }
          ++census.by_case[static_cast<std::size_t>(c)];
          if (c == 0 && !census.first_violation) census.first_violation = {x, y, z, t};
        }
      }
    }
  }
  return census;
}

template <typename Matrix>
LemmaSweep split_sweep_impl(const Matrix& d, std::size_t n) {
  using Value = std::decay_t<decltype(d[0][0])>;
  LemmaSweep out;
  std::vector<std::size_t> members;
  std::vector<std::pair<Value, std::size_t>> keyed;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t a1 = 0; a1 < n; ++a1) {
        for (std::size_t a2 = 0; a2 < n; ++a2) {
          const Value& ax = std::max(d[a1][x], d[a2][x]);
          const Value& ay = std::min(d[a1][y], d[a2][y]);
          // Partners b satisfy d(b,x) > max_a d(a,x) and d(b,y) < min_a d(a,y);
          // every ordered pair of partners meets the hypotheses.
          members.clear();
          for (std::size_t b = 0; b < n; ++b) {
            if (d[b][x] > ax && d[b][y] < ay) members.push_back(b);
          }
          if (members.empty()) continue;
          out.hypotheses_met += members.size() * members.size();
          // The conclusion says d(a1,b) - d(a2,b) is the same for every partner.
          keyed.clear();
          for (std::size_t b : members) keyed.emplace_back(d[a1][b] - d[a2][b], b);
          std::sort(keyed.begin(), keyed.end(),
                    [](const auto& l, const auto& r) { return l.first < r.first; });
          if (keyed.front().first == keyed.back().first) continue;
          std::uint64_t same = 0;
          for (std::size_t i = 0; i < keyed.size();) {
            std::size_t j = i;
            while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
            same += (j - i) * (j - i);
            i = j;
          }
          out.failures += members.size() * members.size() - same;
          if (out.first_failure.empty()) {
            out.first_failure = {a1, a2, keyed.front().second, keyed.back().second, x, y};
          }
        }
      }
    }
  }
  return out;
}

template <typename Matrix>
LemmaSweep twins_sweep_impl(const Matrix& d, std::size_t n) {
  LemmaSweep out;
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t a1 = 0; a1 < n; ++a1) {
      for (std::size_t a2 = 0; a2 < n; ++a2) {
        if (!(d[a2][x] < d[a1][x])) continue;
        members.clear();
        for (std::size_t v = 0; v < n; ++v) {
          if (d[a1][v] < d[a2][v] && d[a1][x] < d[v][x]) members.push_back(v);
        }
        for (std::size_t b : members) {
          for (std::size_t c : members) {
            if (!(d[b][x] < d[c][x])) continue;
            ++out.hypotheses_met;
            if (!(d[a2][b] < d[a2][c])) {
              ++out.failures;
              if (out.first_failure.empty()) out.first_failure = {a1, a2, b, c, x};
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

QuartetCensus four_point_sweep(const DistanceMatrix& m) {
  if (const auto ints = integer_matrix(m)) return four_point_sweep_impl(*ints, m.size());
  return four_point_sweep_impl(m.d, m.size());
}

LemmaSweep split_lemma_sweep(const DistanceMatrix& m) {
  if (const auto ints = integer_matrix(m)) return split_sweep_impl(*ints, m.size());
  return split_sweep_impl(m.d, m.size());
}

LemmaSweep twins_lemma_sweep(const DistanceMatrix& m) {
  if (const auto ints = integer_matrix(m)) return twins_sweep_impl(*ints, m.size());
  return twins_sweep_impl(m.d, m.size());
}

namespace {

// Rebuilds the subtree on the vertices flagged in `keep`, which must induce a
// connected subtree, with unlabeled degree-2 vertices merged away and leaf
// labels restricted to `labels`.
WeightedTree rebuild(const WeightedTree& tree, const std::vector<bool>& keep,
                     const std::map<std::string, VertexIndex>& labels) {
  const std::size_t n = tree.vertex_count();
  std::vector<std::size_t> kept_degree(n, 0);
  for (VertexIndex v = 0; v < n; ++v) {
    if (!keep[v]) continue;
    for (const Incidence& inc : tree.neighbors(v)) kept_degree[v] += keep[inc.neighbor] ? 1 : 0;
  }
  std::vector<bool> labeled(n, false);
  for (const auto& entry : labels) labeled[entry.second] = true;
  std::vector<bool> node(n, false);
  for (VertexIndex v = 0; v < n; ++v) node[v] = keep[v] && (labeled[v] || kept_degree[v] != 2);

  std::vector<VertexIndex> new_index(n, n);
  std::vector<std::string> ids;
  for (VertexIndex v = 0; v < n; ++v) {
    if (!node[v]) continue;
    new_index[v] = ids.size();
    ids.push_back(tree.vertex_id(v));
  }
  std::vector<TreeEdge> edges;
  for (VertexIndex u = 0; u < n; ++u) {
    if (!node[u]) continue;
    for (const Incidence& start : tree.neighbors(u)) {
      if (!keep[start.neighbor]) continue;
      VertexIndex prev = u;
      VertexIndex cur = start.neighbor;
      Rational w = tree.edges()[start.edge].weight;
      while (!node[cur]) {
        for (const Incidence& inc : tree.neighbors(cur)) {
          if (inc.neighbor != prev && keep[inc.neighbor]) {
            prev = cur;
            cur = inc.neighbor;
            w += tree.edges()[inc.edge].weight;
            break;
          }
        }
      }
      if (u < cur) edges.push_back({new_index[u], new_index[cur], w});
    }
  }
  std::map<std::string, VertexIndex> new_labels;
  for (const auto& [label, v] : labels) new_labels.emplace(label, new_index[v]);
  return WeightedTree(std::move(ids), std::move(edges), std::move(new_labels));
}

}  // namespace

WeightedTree contract_degree_two(const WeightedTree& tree) {
  return rebuild(tree, std::vector<bool>(tree.vertex_count(), true), tree.leaf_labels());
}

WeightedTree restrict_to_leaves(const WeightedTree& tree, std::span<const std::string> subset) {
  std::map<std::string, VertexIndex> labels;
  for (const std::string& label : subset) labels.emplace(label, tree.vertex_of(label));
  if (labels.size() < 2) throw DegenerateTree("restriction needs at least two distinct leaves");

  const std::size_t n = tree.vertex_count();
  std::vector<bool> keep(n, true);
  std::vector<bool> wanted(n, false);
  for (const auto& entry : labels) wanted[entry.second] = true;
  std::vector<std::size_t> deg(n);
  std::vector<VertexIndex> queue;
  for (VertexIndex v = 0; v < n; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] <= 1 && !wanted[v]) queue.push_back(v);
  }
  while (!queue.empty()) {
    const VertexIndex v = queue.back();
    queue.pop_back();
    if (!keep[v]) continue;
    keep[v] = false;
    for (const Incidence& inc : tree.neighbors(v)) {
      const VertexIndex w = inc.neighbor;
      if (!keep[w]) continue;
      if (--deg[w] <= 1 && !wanted[w]) queue.push_back(w);
    }
  }
  return rebuild(tree, keep, labels);
}

WeightedTree relabel_leaves(const WeightedTree& tree,
                            const std::vector<std::pair<std::string, std::string>>& rename) {
  std::map<std::string, VertexIndex> labels;
  for (const auto& [from, to] : rename) {
    if (!labels.emplace(to, tree.vertex_of(from)).second) {
      throw InvalidTree("relabeling maps two leaves to " + to);
    }
  }
  std::vector<std::string> ids;
  for (VertexIndex v = 0; v < tree.vertex_count(); ++v) ids.push_back(tree.vertex_id(v));
  return WeightedTree(std::move(ids), {tree.edges().begin(), tree.edges().end()},
                      std::move(labels));
}

}  // namespace leafpow
