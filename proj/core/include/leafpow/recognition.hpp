#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "leafpow/certificate.hpp"
#include "leafpow/simple_graph.hpp"
#include "leafpow/weighted_tree.hpp"

namespace leafpow {

struct RecognitionCaps {
  std::size_t max_vertices_q_le2 = 8;
  std::size_t max_vertices_q3 = 6;
  std::size_t max_vertices_higher = 5;
  std::size_t max_vertices_k_leaf = 8;

  std::size_t for_order(std::size_t q) const {
    return q <= 2 ? max_vertices_q_le2 : (q == 3 ? max_vertices_q3 : max_vertices_higher);
  }
};

struct RecognitionOptions {
  RecognitionCaps caps;
  std::size_t threads = 1;
  // Skip topologies that a graph automorphism maps to an earlier topology.
  bool use_symmetry = true;
  std::size_t automorphism_limit = 512;
  // Reject non-chordal graphs before searching when q = 1.
  bool use_chordal_filter = true;
  // Decide membership over binary topologies first; see recognize_glp.
  bool use_binary_decision = true;
};

struct RecognitionStats {
  std::uint64_t topologies_scanned = 0;
  std::uint64_t topologies_skipped = 0;
  std::uint64_t lp_nodes = 0;
  bool rejected_by_chordality = false;
};

// GLP(q) membership by exhaustive topology search with exact linear
// feasibility. Returns an integerized certificate built on the first feasible
// topology in canonical catalog order, or nullopt. Throws CapacityExceeded
// above the configured vertex cap and InvalidGraph for the empty graph.
//
// Any strictly feasible point on a topology with a high-degree vertex survives
// splitting that vertex with a short enough new edge, so membership is decided
// by binary topologies alone; the canonical-first witness is then located by a
// scan that is guaranteed to stop at or before the binary witness.
std::optional<GlpCertificate> recognize_glp(const SimpleGraph& graph, std::size_t q,
                                            const RecognitionOptions& options = {},
                                            RecognitionStats* stats = nullptr);

// Integer-weighted tree with leaves V such that u ~ v iff d(u,v) <= k, from
// the first feasible topology in canonical order.
std::optional<WeightedTree> is_k_leaf_power(const SimpleGraph& graph, std::int64_t k,
                                            const RecognitionOptions& options = {},
                                            RecognitionStats* stats = nullptr);

struct LeafRankOptions {
  RecognitionOptions recognition;
  std::int64_t ceiling = 1024;
};

// Smallest k for which graph is a k-leaf power, or nullopt if it is not a leaf
// power. Throws CeilingExceeded if the rank could lie above the ceiling.
std::optional<std::int64_t> leaf_rank(const SimpleGraph& graph, const LeafRankOptions& options = {});

}  // namespace leafpow
