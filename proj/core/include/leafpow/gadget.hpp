#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leafpow/certificate.hpp"
#include "leafpow/simple_graph.hpp"
#include "leafpow/toc.hpp"
#include "leafpow/weighted_tree.hpp"

namespace leafpow {

// Role map of the gadget graph. S' is indexed as in ExtendedOrder
// (2i = i+, 2i+1 = i-).
struct GadgetRoles {
  std::vector<std::string> elements;  // S, sorted
  std::vector<std::string> v;         // v[x]
  std::vector<std::string> u;         // u[x * |S'| + y]
  std::string o;

  std::size_t extended_size() const { return 2 * elements.size(); }
  std::string extended_name(std::size_t x) const;
  const std::string& u_of(std::size_t x, std::size_t y) const {
    return u.at(x * extended_size() + y);
  }
};

// Names used by build_gs: "v(a+)", "u(a+,b-)", "O".
GadgetRoles standard_roles(const std::vector<std::string>& elements);

struct GadgetGraph {
  SimpleGraph graph;
  GadgetRoles roles;
};

// v-vertices and O form a clique, each U_x is a clique, and u_{x,z} ~ v_y
// iff xy < xz in the extended order. u_{x,x} gets no v-neighbour.
GadgetGraph build_gs(const TocInstance& toc);

// Triangle order encoded in a gadget: ij < ik iff u(i-,k-) ~ v(j-).
// Throws InvalidWitness if the adjacencies do not form a triangle order.
TocInstance recover_toc(const GadgetGraph& gadget);

struct LeafRootOptions {
  bool check_realization = true;
};

struct LeafRootConstruction {
  GlpCertificate certificate;  // q = 1, threshold 10 D - 1
  WeightedTree base;           // input after clearing denominators and the x6 step
  Rational diameter;           // D = diam(base)
  std::string o_anchor;        // vertex of the x4 tree that O hangs from

  // Certificate tree vertex ids.
  static std::string base_vertex(const std::string& id) { return "T'(" + id + ")"; }
  static std::string leaf_vertex(const std::string& element) { return "p'(" + element + ")"; }
  static std::string p_vertex(const std::string& x) { return "p(" + x + ")"; }
  static std::string o_vertex(const std::string& x) { return "O(" + x + ")"; }
};

// Leaf root of build_gs(toc).graph from a tree realizing toc. Throws
// RealizationMismatch when the tree does not realize the order and
// DegenerateTree when |S| < 2.
LeafRootConstruction leaf_root_from_tree(const WeightedTree& tree, const TocInstance& toc,
                                         const LeafRootOptions& options = {});

// Tree on S realizing the order, read off the v(i-) leaves of a leaf root of
// the gadget. Throws InvalidWitness unless cert is a q = 1 certificate of
// gadget.graph and gadget.graph is the gadget of the order it encodes.
WeightedTree extract_toc_tree(const GlpCertificate& cert, const GadgetGraph& gadget);

struct ClaimCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  bool held() const { return failed == 0; }
};

// Exact checks on a constructed leaf root: the distance table of the
// construction, the exact p(x)-v(y) distances, and the order they induce.
std::vector<ClaimCheck> check_construction(const LeafRootConstruction& construction,
                                           const TocInstance& toc);

// Checks that any leaf root of the gadget must pass (with k = threshold):
// v(i+) is closer than v(i-) to every other v, and u(i-,i+) sees the v's in
// the order of i-.
std::vector<ClaimCheck> check_leaf_root_properties(const GlpCertificate& cert,
                                                   const GadgetGraph& gadget);

}  // namespace leafpow
