#include "leafpow/certificate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "leafpow/errors.hpp"
#include "leafpow/linear_feasibility.hpp"
#include "leafpow/tree_metric.hpp"

namespace leafpow {

ThresholdSequence::ThresholdSequence(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw FormatError("threshold sequence must have at least one entry");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].sign() <= 0) throw FormatError("threshold " + values_[i].str() + " is not positive");
    if (i > 0 && !(values_[i - 1] < values_[i])) {
      throw FormatError("thresholds must be strictly increasing");
    }
  }
}

std::size_t ThresholdSequence::count_at_least(const Rational& d) const {
  const auto it = std::lower_bound(values_.begin(), values_.end(), d);
  return static_cast<std::size_t>(values_.end() - it);
}

SimpleGraph graph_from_certificate(const GlpCertificate& cert) {
  const DistanceMatrix m = leaf_distance_matrix(cert.tree);
  const std::size_t n = m.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      adj[i][j] = adj[j][i] = (cert.thresholds.count_at_least(m.d[i][j]) % 2 == 1) ? 1 : 0;
    }
  }
  return SimpleGraph::from_matrix(m.labels, std::move(adj));
}

VerifyResult verify_certificate(const SimpleGraph& graph, const GlpCertificate& cert) {
  VerifyResult result;
  const WeightedTree& tree = cert.tree;
  for (VertexIndex v = 0; v < tree.vertex_count(); ++v) {
    if (tree.degree(v) == 1 && tree.label_of(v) == nullptr) {
      result.status = VerifyResult::Status::kVertexSetMismatch;
      result.message = "tree leaf " + tree.vertex_id(v) + " carries no label";
      return result;
    }
  }
  const std::vector<std::string> labels = tree.labels();
  if (labels != graph.names()) {
    result.status = VerifyResult::Status::kVertexSetMismatch;
    std::vector<std::string> missing, extra;
    std::set_difference(graph.names().begin(), graph.names().end(), labels.begin(), labels.end(),
                        std::back_inserter(missing));
    std::set_difference(labels.begin(), labels.end(), graph.names().begin(), graph.names().end(),
                        std::back_inserter(extra));
    result.message = "leaf labels differ from graph vertices";
    if (!missing.empty()) result.message += "; no leaf for vertex " + missing.front();
    if (!extra.empty()) result.message += "; leaf " + extra.front() + " is not a graph vertex";
    return result;
  }
  const SimpleGraph induced = graph_from_certificate(cert);
  for (std::size_t u = 0; u < graph.size(); ++u) {
    for (std::size_t v = u + 1; v < graph.size(); ++v) {
      if (graph.adjacent(u, v) != induced.adjacent(u, v)) {
        result.status = VerifyResult::Status::kEdgeMismatch;
        result.pair = std::make_pair(graph.name(u), graph.name(v));
        result.expected_edge = graph.adjacent(u, v);
        result.message = "pair " + graph.name(u) + "," + graph.name(v) +
                         (result.expected_edge ? " is an edge of the graph but not of the certificate"
                                               : " is an edge of the certificate but not of the graph");
        return result;
      }
    }
  }
  return result;
}

std::vector<std::vector<int>> merged_order_pattern(const GlpCertificate& cert) {
  const DistanceMatrix m = leaf_distance_matrix(cert.tree);
  // Item ids: leaf pairs (i<j) in row-major order, then thresholds.
  std::vector<std::pair<Rational, int>> items;
  int id = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) items.emplace_back(m.d[i][j], id++);
  }
  for (const Rational& t : cert.thresholds.values()) items.emplace_back(t, id++);
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<int>> classes;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i == 0 || items[i].first != items[i - 1].first) classes.emplace_back();
    classes.back().push_back(items[i].second);
  }
  for (auto& c : classes) std::sort(c.begin(), c.end());
  return classes;
}

GlpCertificate clear_denominators(const GlpCertificate& cert) {
  Rational lcm(1);
  for (const TreeEdge& e : cert.tree.edges()) lcm = integer_lcm(lcm, e.weight.denominator());
  for (const Rational& t : cert.thresholds.values()) lcm = integer_lcm(lcm, t.denominator());
  std::vector<Rational> thresholds = cert.thresholds.values();
  for (Rational& t : thresholds) t *= lcm;
  return GlpCertificate{cert.tree.scaled(lcm), ThresholdSequence(std::move(thresholds))};
}

bool within_weight_bound(const std::vector<Rational>& weights, std::size_t edge_count) {
  const Rational bound_squared = pow(Rational(static_cast<std::int64_t>(edge_count)),
                                     static_cast<unsigned>(edge_count));
  return std::all_of(weights.begin(), weights.end(),
                     [&](const Rational& w) { return w * w <= bound_squared; });
}

namespace {

// Edge indices on the path between every ordered pair of labeled leaves.
std::vector<std::vector<std::vector<std::size_t>>> leaf_paths(const WeightedTree& tree,
                                                              const std::vector<VertexIndex>& leaves) {
  const std::size_t nv = tree.vertex_count();
  std::vector<std::vector<std::vector<std::size_t>>> out(leaves.size());
  for (std::size_t a = 0; a < leaves.size(); ++a) {
    std::vector<std::size_t> via(nv, 0);
    std::vector<VertexIndex> from(nv, nv);
    std::vector<VertexIndex> stack{leaves[a]};
    from[leaves[a]] = leaves[a];
    while (!stack.empty()) {
      const VertexIndex v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : tree.neighbors(v)) {
        if (from[inc.neighbor] != nv) continue;
        from[inc.neighbor] = v;
        via[inc.neighbor] = inc.edge;
        stack.push_back(inc.neighbor);
      }
    }
    out[a].resize(leaves.size());
    for (std::size_t b = 0; b < leaves.size(); ++b) {
      for (VertexIndex v = leaves[b]; v != leaves[a]; v = from[v]) out[a][b].push_back(via[v]);
      std::sort(out[a][b].begin(), out[a][b].end());
    }
  }
  return out;
}

}  // namespace

GlpCertificate integerize_certificate(const GlpCertificate& cert, IntegerizeReport* report) {
  IntegerizeReport local;
  IntegerizeReport& rep = report ? *report : local;
  rep = IntegerizeReport{};
  const WeightedTree& tree = cert.tree;
  const std::vector<std::string> labels = tree.labels();
  const std::size_t n = labels.size();
  const std::size_t m = tree.edge_count();
  auto fallback = [&]() {
    rep.used_fallback = true;
    return clear_denominators(cert);
  };
  if (n < 2 || m == 0) return fallback();

  std::vector<VertexIndex> leaves;
  for (const std::string& l : labels) leaves.push_back(tree.vertex_of(l));
  const auto paths = leaf_paths(tree, leaves);
  const DistanceMatrix dm = leaf_distance_matrix(tree);

  struct PairItem {
    std::size_t a, b;
    Rational d;
  };
  std::vector<PairItem> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) pairs.push_back({a, b, dm.d[a][b]});
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const PairItem& x, const PairItem& y) { return x.d < y.d; });

  // Separation system on the weights alone: consecutive path sums in sorted
  // order are either tied or at least one apart, every weight at least one.
  ExactLp lp(m, std::vector<Rational>(m, Rational(1)), std::vector<Rational>(m, Rational(1)));
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    std::vector<Rational> coeff(m);
    for (std::size_t e : paths[pairs[i].a][pairs[i].b]) coeff[e] += 1;
    for (std::size_t e : paths[pairs[i - 1].a][pairs[i - 1].b]) coeff[e] -= 1;
    std::vector<LinearTerm> terms;
    for (std::size_t e = 0; e < m; ++e) {
      if (!coeff[e].is_zero()) terms.emplace_back(e, coeff[e]);
    }
    const bool ok = pairs[i].d == pairs[i - 1].d ? lp.add_equal(terms, 0) : lp.add_at_least(terms, 1);
    if (!ok) return fallback();
  }
  std::vector<Rational> x = lp.solution();
  Rational lcm(1);
  for (const Rational& v : x) lcm = integer_lcm(lcm, v.denominator());
  for (Rational& v : x) v *= lcm;

  // Distinct distance values before and after, aligned by rank.
  std::vector<Rational> old_values, new_values;
  for (const PairItem& p : pairs) {
    if (!old_values.empty() && old_values.back() == p.d) continue;
    old_values.push_back(p.d);
    Rational s;
    for (std::size_t e : paths[p.a][p.b]) s += x[e];
    new_values.push_back(s);
  }

  // Thresholds either coincide with a distance value or sit in a gap; gap g
  // lies above value g-1 (gap 0 is below the smallest distance).
  const std::vector<Rational>& theta = cert.thresholds.values();
  std::vector<std::pair<bool, std::size_t>> slot(theta.size());
  std::map<std::size_t, std::size_t> per_gap;
  for (std::size_t t = 0; t < theta.size(); ++t) {
    const auto it = std::lower_bound(old_values.begin(), old_values.end(), theta[t]);
    const std::size_t g = static_cast<std::size_t>(it - old_values.begin());
    if (it != old_values.end() && *it == theta[t]) {
      slot[t] = {true, g};
    } else {
      slot[t] = {false, g};
      ++per_gap[g];
    }
  }
  Rational spread(1);
  for (const auto& [g, count] : per_gap) {
    if (g == old_values.size()) continue;  // above every distance, unbounded room
    const Rational base = g == 0 ? Rational(0) : new_values[g - 1];
    const Rational width = new_values[g] - base;
    const Rational need = (Rational(static_cast<std::int64_t>(count) + 1) / width).ceil();
    spread = std::max(spread, need);
  }
  std::vector<Rational> new_theta(theta.size());
  std::map<std::size_t, std::int64_t> used;
  for (std::size_t t = 0; t < theta.size(); ++t) {
    const auto [exact, g] = slot[t];
    if (exact) {
      new_theta[t] = spread * new_values[g];
    } else {
      const Rational base = g == 0 ? Rational(0) : spread * new_values[g - 1];
      new_theta[t] = base + Rational(++used[g]);
    }
  }

  std::vector<TreeEdge> edges(tree.edges().begin(), tree.edges().end());
  for (std::size_t e = 0; e < m; ++e) edges[e].weight = x[e] * spread;
  std::vector<std::string> ids;
  for (VertexIndex v = 0; v < tree.vertex_count(); ++v) ids.push_back(tree.vertex_id(v));
  GlpCertificate out{WeightedTree(std::move(ids), std::move(edges), tree.leaf_labels()),
                     ThresholdSequence(std::move(new_theta))};
  if (merged_order_pattern(out) != merged_order_pattern(cert)) return fallback();
  rep.basic_weights = std::move(x);
  rep.lcm = lcm;
  rep.spread = spread;
  return out;
}

}  // namespace leafpow
