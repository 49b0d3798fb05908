#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "leafpow/certificate.hpp"
#include "leafpow/simple_graph.hpp"
#include "leafpow/toc.hpp"
#include "leafpow/weighted_tree.hpp"

namespace leafpow {

// Seeded generator with a portable bounded draw, so a seed replays the same
// instances on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool chance(std::uint64_t numerator, std::uint64_t denominator) {
    return below(denominator) < numerator;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// "a".."z", then "x26", "x27", ...
std::string leaf_name(std::size_t i);
std::vector<std::string> leaf_names(std::size_t n);

struct TreeShape {
  // Odds of attaching a new leaf to an existing internal vertex instead of
  // subdividing an edge; yields non-binary trees.
  std::uint64_t join_percent = 20;
  // Odds of subdividing each edge once more with an unlabeled degree-2 vertex.
  std::uint64_t subdivide_percent = 0;
  std::int64_t max_numerator = 9;
  std::int64_t max_denominator = 4;  // 1 gives integer weights
};

// Random tree on leaves leaf_names(n), n >= 1.
WeightedTree random_tree(Rng& rng, std::size_t n, const TreeShape& shape = {});

// Random certificate of order q whose thresholds sit at or between leaf
// distances, so the certified graphs are not all trivial.
GlpCertificate random_certificate(Rng& rng, std::size_t n, std::size_t q,
                                  const TreeShape& shape = {});

SimpleGraph random_graph(Rng& rng, std::size_t n, std::uint64_t edge_percent = 50);

// Graph on leaf_names(n) whose edges are the set bits of mask over the pairs
// (0,1), (0,2), ..., (n-2,n-1).
SimpleGraph graph_from_mask(std::size_t n, std::uint64_t mask);

// Triangle order read off a random integer tree with no tied distances on any
// triple, with that tree.
std::pair<TocInstance, WeightedTree> random_realizable_toc(Rng& rng, std::size_t n);

// Triangle order with an independent uniform order on every triple.
TocInstance random_toc(Rng& rng, std::size_t n);

std::uint64_t toc_count(std::size_t n);  // 6^(n choose 3)
// The code-th triangle order on leaf_names(n), code < toc_count(n); each
// triple takes one digit in base 6.
TocInstance toc_from_code(std::size_t n, std::uint64_t code);

}  // namespace leafpow
