#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leafpow/rational.hpp"
#include "leafpow/simple_graph.hpp"
#include "leafpow/weighted_tree.hpp"

namespace leafpow {

// Strictly increasing sequence of positive thresholds, q = size() >= 1.
class ThresholdSequence {
 public:
  // Throws FormatError if empty, non-positive or not strictly increasing.
  explicit ThresholdSequence(std::vector<Rational> values);

  std::size_t order() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t i) const { return values_.at(i); }
  const Rational& largest() const { return values_.back(); }

  // Number of thresholds t with d <= t.
  std::size_t count_at_least(const Rational& d) const;

 private:
  std::vector<Rational> values_;
};

struct GlpCertificate {
  WeightedTree tree;
  ThresholdSequence thresholds;

  std::size_t order() const { return thresholds.order(); }
};

// Graph on the leaf labels; u ~ v iff d(u,v) <= theta_i for an odd number of i.
SimpleGraph graph_from_certificate(const GlpCertificate& cert);

struct VerifyResult {
  enum class Status { kPass, kEdgeMismatch, kVertexSetMismatch };
  Status status = Status::kPass;
  // First differing pair for kEdgeMismatch, in graph order.
  std::optional<std::pair<std::string, std::string>> pair;
  bool expected_edge = false;  // adjacency in the graph under test
  std::string message;

  bool passed() const { return status == Status::kPass; }
};

VerifyResult verify_certificate(const SimpleGraph& graph, const GlpCertificate& cert);

struct IntegerizeReport {
  // Weights at the basic optimum of the separation system, already scaled to
  // integers, in tree edge order. Empty when the fallback was taken.
  std::vector<Rational> basic_weights;
  Rational lcm{1};          // common denominator used for that scaling
  Rational spread{1};       // extra factor applied to make room for thresholds
  bool used_fallback = false;
};

// Integer weights and thresholds with the same merged order pattern of
// leaf-pair distances and thresholds, hence the same graph.
GlpCertificate integerize_certificate(const GlpCertificate& cert,
                                      IntegerizeReport* report = nullptr);

// Multiplies weights and thresholds by the lcm of all denominators.
GlpCertificate clear_denominators(const GlpCertificate& cert);

// Equality classes, in increasing value order, of the merged sequence of
// leaf-pair distances (ids 0.. in row-major pair order) and thresholds (ids
// following the pairs). Certificates with equal patterns induce the same graph.
std::vector<std::vector<int>> merged_order_pattern(const GlpCertificate& cert);

// True iff |E|^{|E|/2} bounds every weight, tested as w^2 <= |E|^|E|.
bool within_weight_bound(const std::vector<Rational>& weights, std::size_t edge_count);

}  // namespace leafpow
