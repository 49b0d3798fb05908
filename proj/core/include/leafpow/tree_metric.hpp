#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leafpow/rational.hpp"
#include "leafpow/weighted_tree.hpp"

namespace leafpow {

// Distance between two labeled leaves. Throws LabelNotFound.
Rational distance(const WeightedTree& tree, std::string_view a, std::string_view b);

// Distance between two vertices given by identifier.
Rational vertex_distance(const WeightedTree& tree, std::string_view a, std::string_view b);

// Square matrix of leaf-to-leaf distances, rows in label order.
struct DistanceMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> d;

  std::size_t size() const { return labels.size(); }
  std::size_t index_of(std::string_view label) const;  // throws LabelNotFound
  const Rational& at(std::string_view a, std::string_view b) const;
};

DistanceMatrix leaf_distance_matrix(const WeightedTree& tree);

// Maximum leaf-to-leaf distance. Throws DegenerateTree with fewer than two leaves.
Rational diameter(const WeightedTree& tree);

enum class QuartetCase { kCase1 = 1, kCase2 = 2, kCase3 = 3, kCase4 = 4, kViolation = 0 };

struct QuartetVerdict {
  QuartetCase case_id;
  // d(x,y)+d(t,z), d(x,z)+d(t,y), d(y,z)+d(t,x)
  std::array<Rational, 3> sums;
};

// Points are ordered (x, y, z, t). Throws MalformedMetric unless the matrix is
// symmetric with a zero diagonal.
QuartetVerdict four_point_classify(const std::array<std::array<Rational, 4>, 4>& d);
QuartetVerdict four_point_classify(const WeightedTree& tree, std::string_view x,
                                   std::string_view y, std::string_view z, std::string_view t);

// True iff x and y witness the hypotheses of the split lemma for the pairs
// (a1, a2) and (b1, b2).
bool check_split_lemma(const WeightedTree& tree, std::string_view a1, std::string_view a2,
                       std::string_view b1, std::string_view b2, std::string_view x,
                       std::string_view y);

// True iff d(a2,x) < d(a1,x) < d(b,x) < d(c,x), d(a1,b) < d(a2,b) and d(a1,c) < d(a2,c).
bool check_twins_lemma(const WeightedTree& tree, std::string_view a1, std::string_view a2,
                       std::string_view b, std::string_view c, std::string_view x);

// Exhaustive sweeps over all tuples of matrix indices. A failure is a tuple
// satisfying the hypotheses but not the conclusion.
struct QuartetCensus {
  std::array<std::uint64_t, 5> by_case{};  // index 0 counts violations
  std::optional<std::array<std::size_t, 4>> first_violation;
};
QuartetCensus four_point_sweep(const DistanceMatrix& m);

struct LemmaSweep {
  std::uint64_t hypotheses_met = 0;
  std::uint64_t failures = 0;
  std::vector<std::size_t> first_failure;
};
// Tuples (a1, a2, b1, b2, x, y). Ordered tuples are counted, so each unordered
// configuration contributes several times.
LemmaSweep split_lemma_sweep(const DistanceMatrix& m);
// Tuples (a1, a2, b, c, x).
LemmaSweep twins_lemma_sweep(const DistanceMatrix& m);

// Removes every unlabeled degree-2 vertex, merging its two edges.
WeightedTree contract_degree_two(const WeightedTree& tree);

// Minimal subtree spanning the given leaves, degree-2 contracted. Throws
// DegenerateTree for fewer than two labels and LabelNotFound for unknown ones.
WeightedTree restrict_to_leaves(const WeightedTree& tree, std::span<const std::string> subset);

// Same tree with leaf labels renamed through `rename` (old label -> new label);
// labels absent from the map are dropped.
WeightedTree relabel_leaves(const WeightedTree& tree,
                            const std::vector<std::pair<std::string, std::string>>& rename);

}  // namespace leafpow
