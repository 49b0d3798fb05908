#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leafpow/weighted_tree.hpp"

namespace leafpow {

// Unordered pair of element indices, first <= second.
using ElementPair = std::array<std::size_t, 2>;

// Ground set S with a strict total order on the three pairs of every triple.
// Elements are kept in lexicographic order and referenced by index.
class TocInstance {
 public:
  // `orders` maps each sorted triple (a < b < c) to its three pairs listed
  // from smallest to largest. Throws FormatError unless every triple appears
  // exactly once with a permutation of its own pairs.
  TocInstance(std::vector<std::string> elements,
              std::map<std::array<std::size_t, 3>, std::array<ElementPair, 3>> orders);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element(std::size_t i) const { return elements_.at(i); }
  std::size_t index_of(std::string_view name) const;  // throws FormatError

  const std::map<std::array<std::size_t, 3>, std::array<ElementPair, 3>>& triples() const {
    return orders_;
  }

  // ij < ik. For j == i this is the ii < ik convention (true when k != i);
  // for k == i it is false. Requires j != k.
  bool less(std::size_t i, std::size_t j, std::size_t k) const;

  friend bool operator==(const TocInstance& a, const TocInstance& b) {
    return a.elements_ == b.elements_ && a.orders_ == b.orders_;
  }

 private:
  std::vector<std::string> elements_;
  std::map<std::array<std::size_t, 3>, std::array<ElementPair, 3>> orders_;
};

// Characters that may not appear in element names.
inline constexpr std::string_view kReservedElementChars = " \t,<:#()";

// Text format, one triple per line (`#` starts a comment):
//   S: a b c d            optional, declares the ground set
//   a b c : ab < ac < bc  pairs written as two single-character names or as x,y
//   a a c : aa < ac       degenerate lines are accepted and must put aa first
TocInstance parse_toc(std::string_view text);
std::string format_toc(const TocInstance& toc);

// Sign-doubled ground set S' = {i+, i-} with the extended triangle order.
// Index 2i is i+, index 2i+1 is i-; names are the element name plus "+"/"-".
class ExtendedOrder {
 public:
  explicit ExtendedOrder(const TocInstance& base);

  const TocInstance& base() const { return base_; }
  // The extended order as a triangle order on S' (elements sorted by name,
  // hence indexed differently from the 2i / 2i+1 convention).
  const TocInstance& as_instance() const { return extended_; }

  std::size_t size() const { return 2 * base_.size(); }
  static std::size_t plus(std::size_t i) { return 2 * i; }
  static std::size_t minus(std::size_t i) { return 2 * i + 1; }
  static std::size_t element_of(std::size_t x) { return x / 2; }
  static bool is_plus(std::size_t x) { return x % 2 == 0; }
  const std::string& name(std::size_t x) const { return names_.at(x); }

  // xy < xz over S' in the 2i / 2i+1 indexing; requires y != z.
  bool less(std::size_t x, std::size_t y, std::size_t z) const;

 private:
  bool rule(std::size_t x, std::size_t y, std::size_t z) const;

  TocInstance base_;
  std::vector<std::string> names_;
  std::vector<std::size_t> extended_index_;  // 2i / 2i+1 index -> index in extended_
  TocInstance extended_;
};

// First violated relation as "ij < ik but d(i,j) >= d(i,k)", or nullopt when
// the tree's leaf distances realize the order. Leaves must be exactly S.
std::optional<std::string> realization_violation(const WeightedTree& tree, const TocInstance& toc);

// Triangle order read off a tree whose labels form S. Throws FormatError if
// some triple has two equal distances.
TocInstance order_from_tree(const WeightedTree& tree);

struct TocSearchOptions {
  std::size_t cap = 7;
  std::size_t threads = 1;
};

// Exhaustive realizability check: a realizing tree from the first feasible
// topology in canonical order, or nullopt. Throws CapacityExceeded above cap.
std::optional<WeightedTree> toc_realizability_small(const TocInstance& toc,
                                                    const TocSearchOptions& options = {});

}  // namespace leafpow
