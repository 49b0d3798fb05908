#include "leafpow/recognition.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "leafpow/errors.hpp"
#include "leafpow/linear_feasibility.hpp"
#include "leafpow/topology.hpp"
#include "parallel_scan.hpp"

namespace leafpow {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Counters {
  std::atomic<std::uint64_t> scanned{0};
  std::atomic<std::uint64_t> skipped{0};
  std::atomic<std::uint64_t> lp_nodes{0};

  void export_to(RecognitionStats* stats) const {
    if (!stats) return;
    stats->topologies_scanned += scanned.load();
    stats->topologies_skipped += skipped.load();
    stats->lp_nodes += lp_nodes.load();
  }
};

void check_size(const SimpleGraph& graph, std::size_t cap, const char* what) {
  if (graph.size() == 0) throw InvalidGraph("graph has no vertices");
  if (graph.size() > cap) {
    throw CapacityExceeded(std::string(what) + " on " + std::to_string(graph.size()) +
                           " vertices exceeds the configured cap of " + std::to_string(cap));
  }
}

WeightedTree lone_vertex_tree(const SimpleGraph& graph) {
  return WeightedTree({graph.name(0)}, {}, {{graph.name(0), 0}});
}

std::vector<std::vector<std::size_t>> symmetry_group(const SimpleGraph& graph,
                                                     const RecognitionOptions& options) {
  if (!options.use_symmetry) return {};
  auto perms = automorphisms(graph, options.automorphism_limit);
  if (!perms.empty()) perms.erase(perms.begin());  // identity
  return perms;
}

// True if some automorphism maps t to a canonically earlier topology. When
// the search stops at the first feasible topology, that earlier image has
// already been found infeasible, and so t is infeasible too.
bool dominated(const Topology& t, const std::vector<std::vector<std::size_t>>& perms) {
  for (const auto& perm : perms) {
    if (canonical_less(permuted(t, perm), t)) return true;
  }
  return false;
}

std::vector<LinearTerm> path_terms(EdgeMask path) {
  std::vector<LinearTerm> terms;
  while (path) {
    const int e = std::countr_zero(path);
    terms.emplace_back(static_cast<std::size_t>(e), Rational(1));
    path &= path - 1;
  }
  return terms;
}

// Pairs in the order the search fixes them: ones with a single choice first,
// then greedily the pair sharing the most edges with those already fixed,
// longer paths first on ties.
std::vector<std::size_t> search_order(const std::vector<EdgeMask>& paths,
                                      const std::vector<bool>& forced) {
  std::vector<std::size_t> order;
  EdgeMask covered = 0;
  for (std::size_t p = 0; p < paths.size(); ++p) {
    if (forced[p]) {
      order.push_back(p);
      covered |= paths[p];
    }
  }
  std::vector<bool> placed(forced);
  for (std::size_t round = order.size(); round < paths.size(); ++round) {
    std::size_t pick = kNone;
    std::pair<int, int> best{-1, -1};
    for (std::size_t p = 0; p < paths.size(); ++p) {
      if (placed[p]) continue;
      const std::pair<int, int> score{std::popcount(paths[p] & covered), std::popcount(paths[p])};
      if (score > best) {
        best = score;
        pick = p;
      }
    }
    placed[pick] = true;
    covered |= paths[pick];
    order.push_back(pick);
  }
  return order;
}

struct PairIndex {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> edge;
};

PairIndex pair_index(const SimpleGraph& graph) {
  PairIndex out;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    for (std::size_t j = i + 1; j < graph.size(); ++j) {
      out.pairs.emplace_back(i, j);
      out.edge.push_back(graph.adjacent(i, j));
    }
  }
  return out;
}

// Margin-one feasibility of GLP(q) on one topology. Variables: the edge
// weights, then theta_1..theta_q. A pair in region r has exactly r thresholds
// strictly below its distance.
class GlpTopologySearch {
 public:
  GlpTopologySearch(const Topology& t, const PairIndex& pi, std::size_t q, Counters& counters)
      : q_(q), counters_(counters) {
    const TopologyShape s = shape_of(t);
    m_ = s.edges.size();
    for (const auto& [i, j] : pi.pairs) paths_.push_back(s.path(i, j));
    regions_.resize(pi.pairs.size());
    std::vector<bool> forced(pi.pairs.size());
    for (std::size_t p = 0; p < pi.pairs.size(); ++p) {
      for (std::size_t r = 0; r <= q; ++r) {
        if (((q - r) % 2 == 1) == pi.edge[p]) regions_[p].push_back(r);
      }
      forced[p] = regions_[p].size() == 1;
    }
    order_ = search_order(paths_, forced);
  }

  std::optional<std::vector<Rational>> run() {
    ExactLp lp(m_ + q_, Rational(1));
    for (std::size_t i = 0; i + 1 < q_; ++i) {
      const std::vector<LinearTerm> gap{{m_ + i + 1, Rational(1)}, {m_ + i, Rational(-1)}};
      lp.add_at_least(gap, 1);
    }
    counters_.lp_nodes.fetch_add(1);
    return descend(lp, 0);
  }

 private:
  bool add_region(ExactLp& lp, std::size_t p, std::size_t r) const {
    std::vector<LinearTerm> terms = path_terms(paths_[p]);
    if (r >= 1) {
      terms.emplace_back(m_ + r - 1, Rational(-1));
      if (!lp.add_at_least(terms, 1)) return false;
      terms.pop_back();
    }
    if (r + 1 <= q_) {
      terms.emplace_back(m_ + r, Rational(-1));
      if (!lp.add_at_most(terms, 0)) return false;
    }
    return true;
  }

  std::optional<std::vector<Rational>> descend(ExactLp& lp, std::size_t depth) {
    // Single-choice pairs never branch, so add them in place.
    while (depth < order_.size() && regions_[order_[depth]].size() == 1) {
      if (!add_region(lp, order_[depth], regions_[order_[depth]][0])) return std::nullopt;
      ++depth;
    }
    if (depth == order_.size()) return lp.solution();
    const std::size_t p = order_[depth];
    for (std::size_t r : regions_[p]) {
      ExactLp branch = lp;
      counters_.lp_nodes.fetch_add(1);
      if (!add_region(branch, p, r)) continue;
      if (auto found = descend(branch, depth + 1)) return found;
    }
    return std::nullopt;
  }

  std::size_t q_;
  std::size_t m_ = 0;
  Counters& counters_;
  std::vector<EdgeMask> paths_;
  std::vector<std::vector<std::size_t>> regions_;
  std::vector<std::size_t> order_;
};

struct TopologyWitness {
  std::size_t topology;
  std::vector<Rational> values;
};

}  // namespace

std::optional<GlpCertificate> recognize_glp(const SimpleGraph& graph, std::size_t q,
                                            const RecognitionOptions& options,
                                            RecognitionStats* stats) {
  if (q == 0) throw std::invalid_argument("recognize_glp: q must be at least 1");
  check_size(graph, options.caps.for_order(q), "GLP recognition");
  std::vector<Rational> unit_thresholds;
  for (std::size_t i = 1; i <= q; ++i) unit_thresholds.emplace_back(static_cast<std::int64_t>(i));
  if (graph.size() == 1) {
    return GlpCertificate{lone_vertex_tree(graph), ThresholdSequence(unit_thresholds)};
  }
  if (q == 1 && options.use_chordal_filter && !is_chordal(graph)) {
    if (stats) stats->rejected_by_chordality = true;
    return std::nullopt;
  }

  const std::size_t n = graph.size();
  const auto catalog = enumerate_topologies(n, SIZE_MAX, std::max(n, kDefaultTopologyCap));
  const auto& tops = catalog->topologies;
  const PairIndex pi = pair_index(graph);
  const auto perms = symmetry_group(graph, options);
  Counters counters;

  auto scan = [&](const std::vector<std::size_t>& indices) {
    return detail::first_feasible<TopologyWitness>(
        indices.size(), options.threads, [&](std::size_t pos) -> std::optional<TopologyWitness> {
          const Topology& t = tops[indices[pos]];
          if (dominated(t, perms)) {
            counters.skipped.fetch_add(1);
            return std::nullopt;
          }
          counters.scanned.fetch_add(1);
          GlpTopologySearch search(t, pi, q, counters);
          auto values = search.run();
          if (!values) return std::nullopt;
          return TopologyWitness{indices[pos], std::move(*values)};
        });
  };

  std::optional<TopologyWitness> witness;
  if (options.use_binary_decision) {
    std::vector<std::size_t> binary, other;
    for (std::size_t i = 0; i < tops.size(); ++i) (tops[i].is_binary() ? binary : other).push_back(i);
    auto decided = scan(binary);
    if (decided) {
      // Binary topologies come last in canonical order, so an earlier witness
      // can only be non-binary.
      auto earlier = scan(other);
      witness = earlier ? std::move(earlier->second) : std::move(decided->second);
    }
  } else {
    std::vector<std::size_t> all(tops.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    if (auto found = scan(all)) witness = std::move(found->second);
  }
  counters.export_to(stats);
  if (!witness) return std::nullopt;

  const Topology& t = tops[witness->topology];
  const std::size_t m = t.edge_count();
  std::vector<Rational> weights(witness->values.begin(), witness->values.begin() + m);
  std::vector<Rational> thresholds(witness->values.begin() + m, witness->values.end());
  GlpCertificate raw{realize(t, graph.names(), weights), ThresholdSequence(std::move(thresholds))};
  GlpCertificate cert = integerize_certificate(raw);
  if (!verify_certificate(graph, cert).passed()) {
    throw std::logic_error("recognize_glp produced a certificate that does not verify");
  }
  return cert;
}

namespace {

// Integer feasibility of a k-leaf root on one topology by branch and bound.
// Weights can be capped at k + 1 without loss: a heavier edge lies on no
// edge path and every non-edge path through it stays above k.
std::optional<std::vector<Rational>> k_leaf_on_topology(const Topology& t, const PairIndex& pi,
                                                         std::int64_t k, Counters& counters) {
  const TopologyShape s = shape_of(t);
  const std::size_t m = s.edges.size();
  ExactLp lp(m, std::vector<Rational>(m, Rational(1)), std::vector<Rational>(m, Rational(1)));
  for (std::size_t e = 0; e < m; ++e) {
    const std::vector<LinearTerm> cap{{e, Rational(1)}};
    if (!lp.add_at_most(cap, k + 1)) return std::nullopt;
  }
  for (std::size_t p = 0; p < pi.pairs.size(); ++p) {
    const auto terms = path_terms(s.path(pi.pairs[p].first, pi.pairs[p].second));
    const bool ok = pi.edge[p] ? lp.add_at_most(terms, k) : lp.add_at_least(terms, k + 1);
    if (!ok) return std::nullopt;
  }
  auto branch = [&](auto&& self, const ExactLp& node) -> std::optional<std::vector<Rational>> {
    counters.lp_nodes.fetch_add(1);
    std::vector<Rational> x = node.solution();
    std::size_t frac = kNone;
    for (std::size_t e = 0; e < m && frac == kNone; ++e) {
      if (!x[e].is_integer()) frac = e;
    }
    if (frac == kNone) return x;
    const std::vector<LinearTerm> var{{frac, Rational(1)}};
    ExactLp down = node;
    if (down.add_at_most(var, x[frac].floor())) {
      if (auto r = self(self, down)) return r;
    }
    ExactLp up = node;
    if (up.add_at_least(var, x[frac].ceil())) return self(self, up);
    return std::nullopt;
  };
  return branch(branch, lp);
}

}  // namespace

std::optional<WeightedTree> is_k_leaf_power(const SimpleGraph& graph, std::int64_t k,
                                            const RecognitionOptions& options,
                                            RecognitionStats* stats) {
  if (k < 1) throw std::invalid_argument("is_k_leaf_power: k must be at least 1");
  check_size(graph, options.caps.max_vertices_k_leaf, "k-leaf-power recognition");
  if (graph.size() == 1) return lone_vertex_tree(graph);
  if (options.use_chordal_filter && !is_chordal(graph)) {
    if (stats) stats->rejected_by_chordality = true;
    return std::nullopt;
  }
  const std::size_t n = graph.size();
  const auto catalog = enumerate_topologies(n, SIZE_MAX, std::max(n, kDefaultTopologyCap));
  const auto& tops = catalog->topologies;
  const PairIndex pi = pair_index(graph);
  const auto perms = symmetry_group(graph, options);
  Counters counters;
  auto found = detail::first_feasible<std::vector<Rational>>(
      tops.size(), options.threads, [&](std::size_t i) -> std::optional<std::vector<Rational>> {
        if (dominated(tops[i], perms)) {
          counters.skipped.fetch_add(1);
          return std::nullopt;
        }
        counters.scanned.fetch_add(1);
        return k_leaf_on_topology(tops[i], pi, k, counters);
      });
  counters.export_to(stats);
  if (!found) return std::nullopt;
  return realize(tops[found->first], graph.names(), found->second);
}

std::optional<std::int64_t> leaf_rank(const SimpleGraph& graph, const LeafRankOptions& options) {
  // The GLP(1) certificate is integral, so its threshold bounds the rank.
  const auto cert = recognize_glp(graph, 1, options.recognition);
  if (!cert) return std::nullopt;
  if (graph.size() == 1) return 1;
  const auto theta = cert->thresholds[0].to_int64();
  const std::int64_t upper = theta ? *theta : INT64_MAX;
  const std::int64_t last = std::min(upper, options.ceiling);
  for (std::int64_t k = 1; k <= last; ++k) {
    if (is_k_leaf_power(graph, k, options.recognition)) return k;
  }
  if (upper > options.ceiling) {
    throw CeilingExceeded("leaf rank exceeds the search ceiling of " +
                          std::to_string(options.ceiling));
  }
  throw std::logic_error("leaf_rank: no k-leaf root found up to the certificate threshold");
}

}  // namespace leafpow
