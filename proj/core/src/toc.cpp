#include "leafpow/toc.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "leafpow/errors.hpp"
#include "leafpow/linear_feasibility.hpp"
#include "leafpow/topology.hpp"
#include "leafpow/tree_metric.hpp"
#include "parallel_scan.hpp"

namespace leafpow {

namespace {

ElementPair make_pair_of(std::size_t a, std::size_t b) {
  return a < b ? ElementPair{a, b} : ElementPair{b, a};
}

void check_element_name(const std::string& name) {
  if (name.empty()) throw FormatError("empty element name");
  if (name.find_first_of(kReservedElementChars) != std::string::npos) {
    throw FormatError("element name contains a reserved character: " + name);
  }
}

}  // namespace

TocInstance::TocInstance(std::vector<std::string> elements,
                         std::map<std::array<std::size_t, 3>, std::array<ElementPair, 3>> orders)
    : elements_(std::move(elements)), orders_(std::move(orders)) {
  if (!std::is_sorted(elements_.begin(), elements_.end())) {
    throw FormatError("TOC elements must be sorted");
  }
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    check_element_name(elements_[i]);
    if (i > 0 && elements_[i] == elements_[i - 1]) {
      throw FormatError("duplicate element " + elements_[i]);
    }
  }
  const std::size_t n = elements_.size();
  const std::size_t expected = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
  if (orders_.size() != expected) {
    throw FormatError("triangle order lists " + std::to_string(orders_.size()) +
                      " triples, expected " + std::to_string(expected));
  }
  for (const auto& [triple, order] : orders_) {
    const auto [a, b, c] = triple;
    if (!(a < b && b < c && c < n)) throw FormatError("malformed triple in triangle order");
    std::set<ElementPair> want{{a, b}, {a, c}, {b, c}};
    std::set<ElementPair> got(order.begin(), order.end());
    if (want != got) {
      throw FormatError("order for triple " + elements_[a] + " " + elements_[b] + " " +
                        elements_[c] + " is not a permutation of its pairs");
    }
  }
}

std::size_t TocInstance::index_of(std::string_view name) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), name);
  if (it == elements_.end() || *it != name) throw FormatError("unknown element " + std::string(name));
  return static_cast<std::size_t>(it - elements_.begin());
}

bool TocInstance::less(std::size_t i, std::size_t j, std::size_t k) const {
  if (j == k) throw std::invalid_argument("TocInstance::less needs j != k");
  if (j == i) return true;
  if (k == i) return false;
  std::array<std::size_t, 3> t{i, j, k};
  std::sort(t.begin(), t.end());
  const auto& order = orders_.at(t);
  const ElementPair ij = make_pair_of(i, j);
  const ElementPair ik = make_pair_of(i, k);
  for (const ElementPair& p : order) {
    if (p == ij) return true;
    if (p == ik) return false;
  }
  throw std::logic_error("pair missing from triple order");
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::pair<std::string, std::string> parse_pair_token(const std::string& token, std::size_t line) {
  const auto comma = token.find(',');
  if (comma != std::string::npos) {
    return {trim(std::string_view(token).substr(0, comma)),
            trim(std::string_view(token).substr(comma + 1))};
  }
  if (token.size() == 2) return {token.substr(0, 1), token.substr(1, 1)};
  throw FormatError("line " + std::to_string(line) + ": cannot read pair '" + token +
                    "'; write it as two single-character names or as x,y");
}

}  // namespace

TocInstance parse_toc(std::string_view text) {
  struct Line {
    std::size_t number;
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> pairs;
  };
  std::vector<Line> lines;
  std::optional<std::set<std::string>> declared;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    const auto colon = body.find(':');
    if (colon == std::string::npos) {
      throw FormatError("line " + std::to_string(number) + ": expected ':'");
    }
    const std::string head = trim(body.substr(0, colon));
    const std::string tail = body.substr(colon + 1);
    if (head == "S") {
      if (declared) throw FormatError("line " + std::to_string(number) + ": ground set declared twice");
      declared.emplace();
      for (const std::string& name : split_ws(tail)) {
        check_element_name(name);
        if (!declared->insert(name).second) {
          throw FormatError("line " + std::to_string(number) + ": duplicate element " + name);
        }
      }
      continue;
    }
    Line line{number, split_ws(head), {}};
    if (line.names.size() != 3) {
      throw FormatError("line " + std::to_string(number) + ": a triple needs three names");
    }
    std::string rest = tail;
    std::size_t pos;
    while ((pos = rest.find('<')) != std::string::npos) {
      line.pairs.push_back(parse_pair_token(trim(rest.substr(0, pos)), number));
      rest = rest.substr(pos + 1);
    }
    line.pairs.push_back(parse_pair_token(trim(rest), number));
    for (const std::string& name : line.names) {
      check_element_name(name);
      seen.insert(name);
    }
    lines.push_back(std::move(line));
  }
  if (declared) {
    for (const std::string& name : seen) {
      if (!declared->count(name)) throw FormatError("element " + name + " is not in the declared set");
    }
  }
  const std::set<std::string>& names = declared ? *declared : seen;
  const std::vector<std::string> elements(names.begin(), names.end());
  auto index = [&](const std::string& name) {
    return static_cast<std::size_t>(std::lower_bound(elements.begin(), elements.end(), name) -
                                    elements.begin());
  };

  std::map<std::array<std::size_t, 3>, std::array<ElementPair, 3>> orders;
  for (const Line& line : lines) {
    const std::string where = "line " + std::to_string(line.number) + ": ";
    std::array<std::size_t, 3> ids{index(line.names[0]), index(line.names[1]), index(line.names[2])};
    std::set<std::size_t> distinct(ids.begin(), ids.end());
    std::vector<ElementPair> pairs;
    for (const auto& [a, b] : line.pairs) {
      if (!names.count(a) || !names.count(b)) throw FormatError(where + "pair uses an unknown element");
      pairs.push_back(make_pair_of(index(a), index(b)));
    }
    if (distinct.size() == 3) {
      if (pairs.size() != 3) throw FormatError(where + "a triple order lists three pairs");
      std::array<std::size_t, 3> key = ids;
      std::sort(key.begin(), key.end());
      const std::set<ElementPair> want{{key[0], key[1]}, {key[0], key[2]}, {key[1], key[2]}};
      if (std::set<ElementPair>(pairs.begin(), pairs.end()) != want) {
        throw FormatError(where + "pairs do not match the triple");
      }
      if (!orders.emplace(key, std::array<ElementPair, 3>{pairs[0], pairs[1], pairs[2]}).second) {
        throw FormatError(where + "triple listed twice");
      }
    } else if (distinct.size() == 2) {
      // i i k : ii < ik, the only admissible order for a degenerate triple.
      const std::size_t i = ids[0] == ids[1] || ids[0] == ids[2] ? ids[0] : ids[1];
      const std::size_t k = *std::find_if(ids.begin(), ids.end(), [&](std::size_t v) { return v != i; });
      if (pairs.size() != 2 || pairs[0] != ElementPair{i, i} || pairs[1] != make_pair_of(i, k)) {
        throw FormatError(where + "degenerate triple must read " + elements[i] + elements[i] +
                          " < " + elements[i] + elements[k]);
      }
    } else {
      throw FormatError(where + "triple repeats one element three times");
    }
  }
  return TocInstance(elements, std::move(orders));
}

std::string format_toc(const TocInstance& toc) {
  const bool single = std::all_of(toc.elements().begin(), toc.elements().end(),
                                  [](const std::string& e) { return e.size() == 1; });
  auto pair_text = [&](const ElementPair& p) {
    return single ? toc.element(p[0]) + toc.element(p[1])
                  : toc.element(p[0]) + "," + toc.element(p[1]);
  };
  std::ostringstream out;
  out << "S:";
  for (const std::string& e : toc.elements()) out << ' ' << e;
  out << '\n';
  for (const auto& [t, order] : toc.triples()) {
    out << toc.element(t[0]) << ' ' << toc.element(t[1]) << ' ' << toc.element(t[2]) << " : "
        << pair_text(order[0]) << " < " << pair_text(order[1]) << " < " << pair_text(order[2])
        << '\n';
  }
  return out.str();
}

ExtendedOrder::ExtendedOrder(const TocInstance& base)
    : base_(base), extended_(std::vector<std::string>{}, {}) {
  const std::size_t n2 = 2 * base_.size();
  for (std::size_t i = 0; i < base_.size(); ++i) {
    names_.push_back(base_.element(i) + "+");
    names_.push_back(base_.element(i) + "-");
  }
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  extended_index_.resize(n2);
  for (std::size_t x = 0; x < n2; ++x) {
    extended_index_[x] = static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), names_[x]) - sorted.begin());
  }
  std::map<std::array<std::size_t, 3>, std::array<ElementPair, 3>> orders;
  for (std::size_t a = 0; a < n2; ++a) {
    for (std::size_t b = a + 1; b < n2; ++b) {
      for (std::size_t c = b + 1; c < n2; ++c) {
        // Each rule family must orient both comparisons at a shared element
        // oppositely, and the three pairwise verdicts must be transitive.
        for (const auto& [x, y, z] : {std::array{a, b, c}, std::array{b, a, c}, std::array{c, a, b}}) {
          if (rule(x, y, z) == rule(x, z, y)) {
            throw std::logic_error("extended order is not antisymmetric at " + names_[x]);
          }
        }
        const ElementPair ab{a, b}, ac{a, c}, bc{b, c};
        const bool ab_ac = rule(a, b, c);
        const bool ab_bc = rule(b, a, c);
        const bool ac_bc = rule(c, a, b);
        std::array<std::pair<int, ElementPair>, 3> ranked{
            std::pair<int, ElementPair>{(ab_ac ? 0 : 1) + (ab_bc ? 0 : 1), ab},
            {(ab_ac ? 1 : 0) + (ac_bc ? 0 : 1), ac},
            {(ab_bc ? 1 : 0) + (ac_bc ? 1 : 0), bc}};
        std::sort(ranked.begin(), ranked.end());
        if (ranked[0].first != 0 || ranked[1].first != 1 || ranked[2].first != 2) {
          throw std::logic_error("extended order is cyclic on a triple");
        }
        std::array<std::size_t, 3> key{extended_index_[a], extended_index_[b], extended_index_[c]};
        std::array<ElementPair, 3> order;
        for (std::size_t r = 0; r < 3; ++r) {
          order[r] = make_pair_of(extended_index_[ranked[r].second[0]],
                                  extended_index_[ranked[r].second[1]]);
        }
        std::sort(key.begin(), key.end());
        orders.emplace(key, order);
      }
    }
  }
  extended_ = TocInstance(std::move(sorted), std::move(orders));
}

bool ExtendedOrder::rule(std::size_t x, std::size_t y, std::size_t z) const {
  if (y == x) return true;   // xx < xz
  if (z == x) return false;
  const std::size_t i = element_of(x), j = element_of(y), k = element_of(z);
  if (j == i) return true;   // {x,y} = {i+,i-} and z outside
  if (k == i) return false;
  if (j == k) return is_plus(y);  // x j+ < x j-
  return base_.less(i, j, k);     // sign-lifted copy of ij < ik
}

bool ExtendedOrder::less(std::size_t x, std::size_t y, std::size_t z) const {
  if (y == z) throw std::invalid_argument("ExtendedOrder::less needs y != z");
  return rule(x, y, z);
}

std::optional<std::string> realization_violation(const WeightedTree& tree, const TocInstance& toc) {
  if (tree.labels() != toc.elements()) return "tree leaves differ from the ground set";
  const DistanceMatrix m = leaf_distance_matrix(tree);
  for (const auto& [t, order] : toc.triples()) {
    for (std::size_t r = 0; r + 1 < 3; ++r) {
      const ElementPair lo = order[r], hi = order[r + 1];
      if (!(m.d[lo[0]][lo[1]] < m.d[hi[0]][hi[1]])) {
        auto name = [&](const ElementPair& p) { return toc.element(p[0]) + toc.element(p[1]); };
        return name(lo) + " < " + name(hi) + " but d = " + m.d[lo[0]][lo[1]].str() + " >= " +
               m.d[hi[0]][hi[1]].str() + " (triple " + toc.element(t[0]) + " " + toc.element(t[1]) +
               " " + toc.element(t[2]) + ")";
      }
    }
  }
  return std::nullopt;
}

TocInstance order_from_tree(const WeightedTree& tree) {
  const DistanceMatrix m = leaf_distance_matrix(tree);
  const std::size_t n = m.size();
  std::map<std::array<std::size_t, 3>, std::array<ElementPair, 3>> orders;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        std::array<ElementPair, 3> order{ElementPair{a, b}, ElementPair{a, c}, ElementPair{b, c}};
        std::sort(order.begin(), order.end(), [&](const ElementPair& p, const ElementPair& q) {
          return m.d[p[0]][p[1]] < m.d[q[0]][q[1]];
        });
        for (std::size_t r = 0; r + 1 < 3; ++r) {
          if (m.d[order[r][0]][order[r][1]] == m.d[order[r + 1][0]][order[r + 1][1]]) {
            throw FormatError("tree has tied distances on triple " + m.labels[a] + " " +
                              m.labels[b] + " " + m.labels[c]);
          }
        }
        orders.emplace(std::array<std::size_t, 3>{a, b, c}, order);
      }
    }
  }
  return TocInstance(m.labels, std::move(orders));
}

std::optional<WeightedTree> toc_realizability_small(const TocInstance& toc,
                                                    const TocSearchOptions& options) {
  const std::size_t n = toc.size();
  if (n == 0) throw FormatError("triangle order has an empty ground set");
  if (n > options.cap) {
    throw CapacityExceeded("TOC realizability on " + std::to_string(n) +
                           " elements exceeds the configured cap of " + std::to_string(options.cap));
  }
  if (n == 1) return WeightedTree({toc.element(0)}, {}, {{toc.element(0), 0}});
  const auto catalog = enumerate_topologies(n, SIZE_MAX, std::max(n, kDefaultTopologyCap));
  const auto& tops = catalog->topologies;
  auto found = detail::first_feasible<std::vector<Rational>>(
      tops.size(), options.threads, [&](std::size_t idx) -> std::optional<std::vector<Rational>> {
        const TopologyShape s = shape_of(tops[idx]);
        ExactLp lp(s.edges.size(), Rational(1));
        for (const auto& [t, order] : toc.triples()) {
          for (std::size_t r = 0; r + 1 < 3; ++r) {
            const EdgeMask hi = s.path(order[r + 1][0], order[r + 1][1]);
            const EdgeMask lo = s.path(order[r][0], order[r][1]);
            std::vector<LinearTerm> terms;
            for (std::size_t e = 0; e < s.edges.size(); ++e) {
              const int c = static_cast<int>((hi >> e) & 1U) - static_cast<int>((lo >> e) & 1U);
              if (c != 0) terms.emplace_back(e, Rational(c));
            }
            if (!lp.add_at_least(terms, 1)) return std::nullopt;
          }
        }
        return lp.solution();
      });
  if (!found) return std::nullopt;
  WeightedTree tree = realize(tops[found->first], toc.elements(), found->second);
  if (realization_violation(tree, toc)) throw std::logic_error("realizing tree fails its own check");
  return tree;
}

}  // namespace leafpow
