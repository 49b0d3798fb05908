#include "leafpow/io.hpp"

#include <set>
#include <sstream>

#include "leafpow/errors.hpp"

namespace leafpow {

namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

const Json& member(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string(what) + " JSON lacks \"" + key + "\"");
  }
  return j.at(key);
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

Json rational_to_json(const Rational& value) { return value.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw FormatError("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

Json tree_to_json(const WeightedTree& tree) {
  Json vertices = Json::array();
  for (VertexIndex v = 0; v < tree.vertex_count(); ++v) vertices.push_back(tree.vertex_id(v));
  Json edges = Json::array();
  for (const TreeEdge& e : tree.edges()) {
    edges.push_back({tree.vertex_id(e.u), tree.vertex_id(e.v), rational_to_json(e.weight)});
  }
  Json leaves = Json::object();
  for (const auto& [label, v] : tree.leaf_labels()) leaves[label] = tree.vertex_id(v);
  return Json{{"vertices", vertices}, {"edges", edges}, {"leaves", leaves}};
}

WeightedTree tree_from_json(const Json& j) {
  return guarded("tree", [&] {
    std::vector<std::string> ids = member(j, "vertices", "tree").get<std::vector<std::string>>();
    std::map<std::string, VertexIndex> index;
    for (std::size_t v = 0; v < ids.size(); ++v) {
      if (!index.emplace(ids[v], v).second) throw InvalidTree("duplicate vertex " + ids[v]);
    }
    auto lookup = [&](const Json& id) {
      const std::string s = id.get<std::string>();
      auto it = index.find(s);
      if (it == index.end()) throw InvalidTree("unknown vertex " + s);
      return it->second;
    };
    std::vector<TreeEdge> edges;
    for (const Json& e : member(j, "edges", "tree")) {
      if (!e.is_array() || e.size() != 3) throw InvalidTree("tree edge must be [u, v, weight]");
      edges.push_back({lookup(e[0]), lookup(e[1]), rational_from_json(e[2])});
    }
    std::map<std::string, VertexIndex> labels;
    for (const auto& [label, id] : member(j, "leaves", "tree").items()) labels.emplace(label, lookup(id));
    return WeightedTree(std::move(ids), std::move(edges), std::move(labels));
  });
}

Json graph_to_json(const SimpleGraph& graph) {
  Json edges = Json::array();
  for (const auto& [u, v] : graph.edges()) edges.push_back({graph.name(u), graph.name(v)});
  return Json{{"vertices", graph.names()}, {"edges", edges}};
}

SimpleGraph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    auto names = member(j, "vertices", "graph").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const Json& e : member(j, "edges", "graph")) {
      if (!e.is_array() || e.size() != 2) throw InvalidGraph("graph edge must be [a, b]");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return SimpleGraph(std::move(names), edges);
  });
}

Json certificate_to_json(const GlpCertificate& cert) {
  Json thresholds = Json::array();
  for (const Rational& t : cert.thresholds.values()) thresholds.push_back(rational_to_json(t));
  return Json{{"tree", tree_to_json(cert.tree)}, {"thresholds", thresholds}};
}

GlpCertificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    WeightedTree tree = tree_from_json(member(j, "tree", "certificate"));
    std::vector<Rational> values;
    for (const Json& t : member(j, "thresholds", "certificate")) values.push_back(rational_from_json(t));
    return GlpCertificate{std::move(tree), ThresholdSequence(std::move(values))};
  });
}

Json roles_to_json(const GadgetRoles& roles) {
  Json v = Json::object(), u = Json::object();
  const std::size_t m = roles.extended_size();
  for (std::size_t x = 0; x < m; ++x) {
    v[roles.extended_name(x)] = roles.v[x];
    for (std::size_t y = 0; y < m; ++y) {
      u[roles.extended_name(x) + "," + roles.extended_name(y)] = roles.u_of(x, y);
    }
  }
  return Json{{"v", v}, {"u", u}, {"O", roles.o}};
}

GadgetRoles roles_from_json(const Json& j) {
  return guarded("role map", [&] {
    const Json& v = member(j, "v", "role map");
    const Json& u = member(j, "u", "role map");
    if (!v.is_object() || !u.is_object()) throw FormatError("role map \"v\" and \"u\" must be objects");
    // S' names are an element name followed by '+' or '-'.
    std::set<std::string> elements;
    for (const auto& [key, _] : v.items()) {
      if (key.size() < 2 || (key.back() != '+' && key.back() != '-')) {
        throw FormatError("role map key " + key + " is not a signed element");
      }
      elements.insert(key.substr(0, key.size() - 1));
    }
    GadgetRoles roles;
    roles.elements.assign(elements.begin(), elements.end());
    const std::size_t m = roles.extended_size();
    if (v.size() != m || u.size() != m * m) throw FormatError("role map is incomplete");
    auto get = [&](const Json& obj, const std::string& key) {
      if (!obj.contains(key)) throw FormatError("role map lacks " + key);
      return obj.at(key).get<std::string>();
    };
    for (std::size_t x = 0; x < m; ++x) roles.v.push_back(get(v, roles.extended_name(x)));
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        roles.u.push_back(get(u, roles.extended_name(x) + "," + roles.extended_name(y)));
      }
    }
    roles.o = member(j, "O", "role map").get<std::string>();
    return roles;
  });
}

Json distance_matrix_to_json(const DistanceMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.d) {
    Json r = Json::array();
    for (const Rational& x : row) r.push_back(rational_to_json(x));
    rows.push_back(r);
  }
  return Json{{"labels", m.labels}, {"matrix", rows}};
}

DistanceMatrix distance_matrix_from_json(const Json& j) {
  return guarded("distance matrix", [&] {
    DistanceMatrix m;
    m.labels = member(j, "labels", "distance matrix").get<std::vector<std::string>>();
    if (std::set<std::string>(m.labels.begin(), m.labels.end()).size() != m.labels.size()) {
      throw FormatError("distance matrix labels repeat");
    }
    const Json& rows = member(j, "matrix", "distance matrix");
    if (!rows.is_array() || rows.size() != m.labels.size()) {
      throw FormatError("distance matrix needs one row per label");
    }
    for (const Json& row : rows) {
      if (!row.is_array() || row.size() != m.labels.size()) {
        throw FormatError("distance matrix rows must be square");
      }
      std::vector<Rational> r;
      for (const Json& x : row) r.push_back(rational_from_json(x));
      m.d.push_back(std::move(r));
    }
    return m;
  });
}

std::string graph_to_dot(const SimpleGraph& graph) {
  std::ostringstream out;
  out << "graph G {\n";
  for (const std::string& name : graph.names()) out << "  " << dot_quote(name) << ";\n";
  for (const auto& [u, v] : graph.edges()) {
    out << "  " << dot_quote(graph.name(u)) << " -- " << dot_quote(graph.name(v)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string tree_to_dot(const WeightedTree& tree) {
  std::ostringstream out;
  out << "graph T {\n";
  for (VertexIndex v = 0; v < tree.vertex_count(); ++v) {
    out << "  " << dot_quote(tree.vertex_id(v));
    if (const std::string* label = tree.label_of(v)) {
      out << " [shape=box, label=" << dot_quote(*label) << "]";
    } else {
      out << " [shape=point]";
    }
    out << ";\n";
  }
  for (const TreeEdge& e : tree.edges()) {
    out << "  " << dot_quote(tree.vertex_id(e.u)) << " -- " << dot_quote(tree.vertex_id(e.v))
        << " [label=" << dot_quote(e.weight.str()) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace leafpow
