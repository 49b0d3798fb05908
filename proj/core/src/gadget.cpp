#include "leafpow/gadget.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "leafpow/errors.hpp"
#include "leafpow/tree_metric.hpp"

namespace leafpow {

std::string GadgetRoles::extended_name(std::size_t x) const {
  return elements.at(ExtendedOrder::element_of(x)) + (ExtendedOrder::is_plus(x) ? "+" : "-");
}

GadgetRoles standard_roles(const std::vector<std::string>& elements) {
  GadgetRoles roles;
  roles.elements = elements;
  const std::size_t m = roles.extended_size();
  for (std::size_t x = 0; x < m; ++x) roles.v.push_back("v(" + roles.extended_name(x) + ")");
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      roles.u.push_back("u(" + roles.extended_name(x) + "," + roles.extended_name(y) + ")");
    }
  }
  roles.o = "O";
  return roles;
}

GadgetGraph build_gs(const TocInstance& toc) {
  if (toc.size() == 0) throw FormatError("gadget needs a nonempty ground set");
  const ExtendedOrder ext(toc);
  GadgetRoles roles = standard_roles(toc.elements());
  const std::size_t m = ext.size();
  std::vector<std::string> names = roles.v;
  names.insert(names.end(), roles.u.begin(), roles.u.end());
  names.push_back(roles.o);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t x = 0; x < m; ++x) {
    edges.emplace_back(roles.o, roles.v[x]);
    for (std::size_t y = x + 1; y < m; ++y) edges.emplace_back(roles.v[x], roles.v[y]);
  }
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t z = y + 1; z < m; ++z) edges.emplace_back(roles.u_of(x, y), roles.u_of(x, z));
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t z = 0; z < m; ++z) {
      for (std::size_t y = 0; y < m; ++y) {
        if (y != z && ext.less(x, y, z)) edges.emplace_back(roles.u_of(x, z), roles.v[y]);
      }
    }
  }
  return GadgetGraph{SimpleGraph(std::move(names), edges), std::move(roles)};
}

namespace {

void check_roles(const GadgetGraph& gadget) {
  const GadgetRoles& r = gadget.roles;
  const std::size_t m = r.extended_size();
  if (r.elements.empty() || r.v.size() != m || r.u.size() != m * m) {
    throw InvalidWitness("role map does not match its ground set");
  }
  std::set<std::string> named(r.v.begin(), r.v.end());
  named.insert(r.u.begin(), r.u.end());
  named.insert(r.o);
  if (named.size() != 1 + m + m * m) throw InvalidWitness("role map assigns a vertex twice");
  if (std::set<std::string>(gadget.graph.names().begin(), gadget.graph.names().end()) != named) {
    throw InvalidWitness("role map does not cover the graph's vertices");
  }
}

}  // namespace

TocInstance recover_toc(const GadgetGraph& gadget) {
  check_roles(gadget);
  const GadgetRoles& r = gadget.roles;
  const std::size_t n = r.elements.size();
  auto less = [&](std::size_t i, std::size_t j, std::size_t k) {
    return gadget.graph.adjacent(r.u_of(ExtendedOrder::minus(i), ExtendedOrder::minus(k)),
                                 r.v[ExtendedOrder::minus(j)]);
  };
  std::map<std::array<std::size_t, 3>, std::array<ElementPair, 3>> orders;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        const bool ab_ac = less(a, b, c), ab_bc = less(b, a, c), ac_bc = less(c, a, b);
        if (ab_ac == less(a, c, b) || ab_bc == less(b, c, a) || ac_bc == less(c, b, a)) {
          throw InvalidWitness("gadget adjacencies do not orient triple " + r.elements[a] + " " +
                               r.elements[b] + " " + r.elements[c]);
        }
        std::array<std::pair<int, ElementPair>, 3> ranked{
            std::pair<int, ElementPair>{(ab_ac ? 0 : 1) + (ab_bc ? 0 : 1), ElementPair{a, b}},
            {(ab_ac ? 1 : 0) + (ac_bc ? 0 : 1), ElementPair{a, c}},
            {(ab_bc ? 1 : 0) + (ac_bc ? 1 : 0), ElementPair{b, c}}};
        std::sort(ranked.begin(), ranked.end());
        if (ranked[0].first != 0 || ranked[1].first != 1) {
          throw InvalidWitness("gadget adjacencies are cyclic on triple " + r.elements[a] + " " +
                               r.elements[b] + " " + r.elements[c]);
        }
        orders.emplace(std::array<std::size_t, 3>{a, b, c},
                       std::array<ElementPair, 3>{ranked[0].second, ranked[1].second, ranked[2].second});
      }
    }
  }
  return TocInstance(r.elements, std::move(orders));
}

LeafRootConstruction leaf_root_from_tree(const WeightedTree& tree, const TocInstance& toc,
                                         const LeafRootOptions& options) {
  if (tree.labels() != toc.elements()) {
    throw RealizationMismatch("tree leaves differ from the ground set");
  }
  if (toc.size() < 2) throw DegenerateTree("leaf root construction needs at least two elements");
  if (options.check_realization) {
    if (auto violation = realization_violation(tree, toc)) throw RealizationMismatch(*violation);
  }

  Rational common(1);
  for (const TreeEdge& e : tree.edges()) common = integer_lcm(common, e.weight.denominator());
  WeightedTree base = tree.scaled(common);
  Rational diam = diameter(base);
  if (diam < Rational(6)) {
    base = base.scaled(6);
    diam *= 6;
  }
  const Rational five_d = diam * 5;

  const ExtendedOrder ext(toc);
  const GadgetRoles roles = standard_roles(toc.elements());
  const std::size_t n = toc.size();
  const std::size_t m = ext.size();

  // Scaled tree, O, the p vertices, v leaves and the O(x) hubs.
  std::vector<std::string> ids;
  std::vector<TreeEdge> edges;
  for (VertexIndex v = 0; v < base.vertex_count(); ++v) {
    const std::string* label = base.label_of(v);
    ids.push_back(label ? LeafRootConstruction::leaf_vertex(*label)
                        : LeafRootConstruction::base_vertex(base.vertex_id(v)));
  }
  for (const TreeEdge& e : base.edges()) edges.push_back({e.u, e.v, e.weight * 4});
  VertexIndex anchor = base.vertex_of(toc.element(0));
  for (VertexIndex v = 0; v < base.vertex_count(); ++v) {
    if (base.degree(v) >= 2) {
      anchor = v;
      break;
    }
  }
  auto add_vertex = [&](std::string id, VertexIndex parent, Rational w) {
    ids.push_back(std::move(id));
    edges.push_back({parent, ids.size() - 1, std::move(w)});
    return ids.size() - 1;
  };
  const VertexIndex o = add_vertex(roles.o, anchor, five_d);
  std::vector<VertexIndex> p(m), v_leaf(m), o_hub(m);
  for (std::size_t i = 0; i < n; ++i) {
    const VertexIndex leaf = base.vertex_of(toc.element(i));
    p[ExtendedOrder::plus(i)] =
        add_vertex(LeafRootConstruction::p_vertex(ext.name(ExtendedOrder::plus(i))), leaf, 1);
    p[ExtendedOrder::minus(i)] =
        add_vertex(LeafRootConstruction::p_vertex(ext.name(ExtendedOrder::minus(i))), leaf, 2);
  }
  for (std::size_t x = 0; x < m; ++x) {
    v_leaf[x] = add_vertex(roles.v[x], p[x], 1);
    o_hub[x] = add_vertex(LeafRootConstruction::o_vertex(ext.name(x)), p[x], five_d);
  }
  const WeightedTree staged(ids, edges, {});

  // u leaves hang in a star around each O(x).
  std::map<std::string, VertexIndex> labels;
  for (std::size_t x = 0; x < m; ++x) {
    const std::vector<Rational> from_p = staged.distances_from(p[x]);
    for (std::size_t y = 0; y < m; ++y) {
      Rational w = five_d - from_p[v_leaf[y]];
      if (w.sign() <= 0) throw std::logic_error("non-positive weight in leaf root construction");
      labels.emplace(roles.u_of(x, y), add_vertex(roles.u_of(x, y), o_hub[x], std::move(w)));
    }
  }
  labels.emplace(roles.o, o);
  for (std::size_t x = 0; x < m; ++x) labels.emplace(roles.v[x], v_leaf[x]);

  const std::string anchor_id = ids[anchor];
  WeightedTree final_tree(std::move(ids), std::move(edges), std::move(labels));
  return LeafRootConstruction{
      GlpCertificate{std::move(final_tree), ThresholdSequence({diam * 10 - 1})}, std::move(base),
      diam, anchor_id};
}

WeightedTree extract_toc_tree(const GlpCertificate& cert, const GadgetGraph& gadget) {
  if (cert.order() != 1) throw InvalidWitness("extraction needs a certificate with one threshold");
  const TocInstance toc = recover_toc(gadget);
  const GadgetGraph rebuilt = build_gs(toc);
  std::map<std::string, std::string> standard;
  for (std::size_t x = 0; x < gadget.roles.v.size(); ++x) standard[gadget.roles.v[x]] = rebuilt.roles.v[x];
  for (std::size_t k = 0; k < gadget.roles.u.size(); ++k) standard[gadget.roles.u[k]] = rebuilt.roles.u[k];
  standard[gadget.roles.o] = rebuilt.roles.o;
  std::vector<std::string> renamed;
  for (const std::string& name : gadget.graph.names()) renamed.push_back(standard.at(name));
  if (!(gadget.graph.renamed(renamed) == rebuilt.graph)) {
    throw InvalidWitness("graph is not the gadget of the triangle order it encodes");
  }
  const VerifyResult verdict = verify_certificate(gadget.graph, cert);
  if (!verdict.passed()) throw InvalidWitness("certificate does not verify: " + verdict.message);

  const std::size_t n = toc.size();
  if (n == 1) return WeightedTree({toc.element(0)}, {}, {{toc.element(0), 0}});
  std::vector<std::string> minus_leaves;
  std::vector<std::pair<std::string, std::string>> rename;
  for (std::size_t i = 0; i < n; ++i) {
    minus_leaves.push_back(gadget.roles.v[ExtendedOrder::minus(i)]);
    rename.emplace_back(minus_leaves.back(), toc.element(i));
  }
  WeightedTree out = relabel_leaves(restrict_to_leaves(cert.tree, minus_leaves), rename);
  if (auto violation = realization_violation(out, toc)) {
    throw std::logic_error("extracted tree does not realize the order: " + *violation);
  }
  return out;
}

namespace {

struct Recorder {
  ClaimCheck check;

  explicit Recorder(std::string name) { check.name = std::move(name); }
  void expect(bool ok, const std::string& what) {
    ++check.checked;
    if (!ok && check.failed++ == 0) check.first_failure = what;
  }
};

}  // namespace

std::vector<ClaimCheck> check_construction(const LeafRootConstruction& c, const TocInstance& toc) {
  const WeightedTree& t = c.certificate.tree;
  const ExtendedOrder ext(toc);
  const std::size_t n = toc.size();
  const std::size_t m = ext.size();
  const Rational five_d = c.diameter * 5;
  auto at = [&](const std::string& id) {
    auto v = t.find_vertex(id);
    if (!v) throw std::logic_error("construction lacks vertex " + id);
    return *v;
  };
  auto from = [&](const std::string& id) { return t.distances_from(at(id)); };

  std::vector<std::vector<Rational>> from_p(m);
  for (std::size_t x = 0; x < m; ++x) from_p[x] = from(LeafRootConstruction::p_vertex(ext.name(x)));
  auto pv = [&](std::size_t x, std::size_t y) { return from_p[x][at("v(" + ext.name(y) + ")")]; };
  auto base_d = [&](std::size_t i, std::size_t j) {
    return distance(c.base, toc.element(i), toc.element(j));
  };

  Recorder threshold("threshold");
  threshold.expect(c.certificate.order() == 1 && c.certificate.thresholds[0] == c.diameter * 10 - 1,
                   "threshold is not 10 D - 1");
  threshold.expect(c.diameter == diameter(c.base) && Rational(6) <= c.diameter,
                   "D is not the diameter of the scaled input, or is below 6");

  Recorder table("construction distances");
  for (std::size_t i = 0; i < n; ++i) {
    const auto from_leaf = from(LeafRootConstruction::leaf_vertex(toc.element(i)));
    for (std::size_t j = i + 1; j < n; ++j) {
      table.expect(from_leaf[at(LeafRootConstruction::leaf_vertex(toc.element(j)))] == base_d(i, j) * 4,
                   "p'(" + toc.element(i) + ") to p'(" + toc.element(j) + ") is not 4 d");
    }
    table.expect(from_leaf[at(LeafRootConstruction::p_vertex(ext.name(ExtendedOrder::plus(i))))] == 1,
                 "p'(" + toc.element(i) + ") to its + copy is not 1");
    table.expect(from_leaf[at(LeafRootConstruction::p_vertex(ext.name(ExtendedOrder::minus(i))))] == 2,
                 "p'(" + toc.element(i) + ") to its - copy is not 2");
  }
  {
    const auto from_o = from("O");
    std::optional<Rational> nearest;
    for (VertexIndex v = 0; v < c.base.vertex_count(); ++v) {
      const std::string* label = c.base.label_of(v);
      const Rational& d = from_o[at(label ? LeafRootConstruction::leaf_vertex(*label)
                                          : LeafRootConstruction::base_vertex(c.base.vertex_id(v)))];
      if (!nearest || d < *nearest) nearest = d;
    }
    table.expect(nearest && *nearest == five_d, "O is not at 5 D from the scaled tree");
  }
  for (std::size_t x = 0; x < m; ++x) {
    const auto from_hub = from(LeafRootConstruction::o_vertex(ext.name(x)));
    const std::string hub = "O(" + ext.name(x) + ")";
    table.expect(from_hub[at(LeafRootConstruction::p_vertex(ext.name(x)))] == five_d,
                 "p to " + hub + " is not 5 D");
    for (std::size_t y = 0; y < m; ++y) {
      const std::string u = "u(" + ext.name(x) + "," + ext.name(y) + ")";
      table.expect(from_hub[at(u)] == five_d - pv(x, y), u + " to " + hub + " is not 5 D - d(p, v)");
    }
  }

  Recorder exact("p-v distances");
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const Rational d = pv(x, y);
      const std::size_t i = ExtendedOrder::element_of(x), j = ExtendedOrder::element_of(y);
      const std::string where = "p(" + ext.name(x) + ") to v(" + ext.name(y) + ")";
      exact.expect((d == 1) == (x == y), where + ": distance 1 exactly when equal");
      exact.expect((d == 4) == (x != y && i == j), where + ": distance 4 exactly for a sign pair");
      if (i != j) {
        const Rational want = base_d(i, j) * 4 + 3 + (ExtendedOrder::is_plus(x) ? 0 : 1) +
                              (ExtendedOrder::is_plus(y) ? 0 : 1);
        exact.expect(Rational(4) < d && d == want, where + " is not 4 d + 3 + signs");
      }
    }
  }

  Recorder order("p-v order");
  const Rational cap = c.diameter * 4 + 5;
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t z = 0; z < m; ++z) {
        if (y == z) continue;
        const bool by_distance = pv(x, y) < pv(x, z) && pv(x, z) <= cap;
        order.expect(ext.less(x, y, z) == by_distance,
                     ext.name(x) + ext.name(y) + " < " + ext.name(x) + ext.name(z) +
                         " disagrees with the p distances");
      }
    }
  }
  return {threshold.check, table.check, exact.check, order.check};
}

std::vector<ClaimCheck> check_leaf_root_properties(const GlpCertificate& cert,
                                                   const GadgetGraph& gadget) {
  const TocInstance toc = recover_toc(gadget);
  const ExtendedOrder ext(toc);
  const GadgetRoles& r = gadget.roles;
  const WeightedTree& t = cert.tree;
  const std::size_t n = toc.size();
  const std::size_t m = ext.size();
  auto from = [&](const std::string& label) { return t.distances_from(t.vertex_of(label)); };

  Recorder twins("sign twins");
  for (std::size_t i = 0; i < n; ++i) {
    const auto from_plus = from(r.v[ExtendedOrder::plus(i)]);
    const auto from_minus = from(r.v[ExtendedOrder::minus(i)]);
    for (std::size_t z = 0; z < m; ++z) {
      if (ExtendedOrder::element_of(z) == i) continue;
      const VertexIndex vz = t.vertex_of(r.v[z]);
      twins.expect(from_plus[vz] < from_minus[vz],
                   "v(" + ext.name(z) + ") is not closer to " + ext.name(ExtendedOrder::plus(i)) +
                       " than to " + ext.name(ExtendedOrder::minus(i)));
    }
  }

  Recorder witness("u ordering");
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t im = ExtendedOrder::minus(i), ip = ExtendedOrder::plus(i);
    const auto from_u = from(r.u_of(im, ip));
    for (std::size_t z = 0; z < m; ++z) {
      for (std::size_t z2 = 0; z2 < m; ++z2) {
        if (z == z2 || !ext.less(im, z, z2)) continue;
        witness.expect(from_u[t.vertex_of(r.v[z])] < from_u[t.vertex_of(r.v[z2])],
                       r.u_of(im, ip) + " is not closer to v(" + ext.name(z) + ") than to v(" +
                           ext.name(z2) + ")");
      }
    }
  }
  return {twins.check, witness.check};
}

}  // namespace leafpow
