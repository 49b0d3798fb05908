#include "leafpow/hierarchy.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "leafpow/tree_metric.hpp"

namespace leafpow {

namespace {

// Smallest and largest leaf-pair distance; nullopt below two leaves.
std::optional<std::pair<Rational, Rational>> distance_range(const WeightedTree& tree) {
  if (tree.leaf_count() < 2) return std::nullopt;
  const DistanceMatrix m = leaf_distance_matrix(tree);
  Rational lo = m.d[0][1], hi = m.d[0][1];
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      lo = std::min(lo, m.d[i][j]);
      hi = std::max(hi, m.d[i][j]);
    }
  }
  return std::make_pair(lo, hi);
}

}  // namespace

GlpCertificate cert_lift(const GlpCertificate& cert) {
  const auto range = distance_range(cert.tree);
  // Below every distance and below theta_1, so no parity changes.
  Rational first = cert.thresholds[0];
  if (range && range->first < first) first = range->first;
  first /= 2;
  std::vector<Rational> values{first};
  values.insert(values.end(), cert.thresholds.values().begin(), cert.thresholds.values().end());
  return GlpCertificate{cert.tree, ThresholdSequence(std::move(values))};
}

GlpCertificate cert_complement(const GlpCertificate& cert) {
  const auto range = distance_range(cert.tree);
  Rational top = cert.thresholds.largest();
  if (range && top < range->second) top = range->second;
  std::vector<Rational> values = cert.thresholds.values();
  values.push_back(top + 1);
  return GlpCertificate{cert.tree, ThresholdSequence(std::move(values))};
}

SimpleGraph glp_step(const SimpleGraph& graph) {
  return complement(disjoint_union(graph, graph, "#1", "#2"));
}

SimpleGraph non_glp_family(std::size_t q) {
  if (q == 0) throw std::invalid_argument("non_glp_family needs q >= 1");
  SimpleGraph g({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
  for (std::size_t i = 1; i < q; ++i) g = glp_step(g);
  return g;
}

GlpCertificate disjoint_union_certificate(const GlpCertificate& cert) {
  const WeightedTree& t = cert.tree;
  const std::size_t nv = t.vertex_count();
  std::vector<std::string> ids;
  std::vector<TreeEdge> edges;
  std::map<std::string, VertexIndex> labels;
  std::vector<TreeEdge> base(t.edges().begin(), t.edges().end());

  // Join point: first unlabeled vertex, else the middle of a lone leaf edge,
  // else the single vertex itself.
  VertexIndex join = nv;
  for (VertexIndex v = 0; v < nv; ++v) {
    if (!t.label_of(v)) {
      join = v;
      break;
    }
  }
  std::vector<std::string> local_ids;
  for (VertexIndex v = 0; v < nv; ++v) local_ids.push_back(t.vertex_id(v));
  if (join == nv && base.size() == 1) {
    std::string mid = "_join";
    while (t.find_vertex(mid)) mid.insert(0, "_");
    local_ids.push_back(mid);
    const TreeEdge e = base[0];
    base = {{e.u, nv, e.weight / 2}, {nv, e.v, e.weight / 2}};
    join = nv;
  } else if (join == nv) {
    join = 0;
  }
  const std::size_t local = local_ids.size();
  for (const char* tag : {"#1", "#2"}) {
    const std::size_t offset = ids.size();
    for (const std::string& id : local_ids) ids.push_back(id + tag);
    for (const TreeEdge& e : base) edges.push_back({e.u + offset, e.v + offset, e.weight});
    for (const auto& [label, v] : t.leaf_labels()) labels.emplace(label + tag, v + offset);
  }
  edges.push_back({join, join + local, cert.thresholds.largest() + 1});
  return GlpCertificate{WeightedTree(std::move(ids), std::move(edges), std::move(labels)),
                        cert.thresholds};
}

GlpCertificate glp_step_certificate(const GlpCertificate& cert) {
  return cert_complement(disjoint_union_certificate(cert));
}

}  // namespace leafpow
