#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "leafpow/certificate.hpp"
#include "leafpow/errors.hpp"
#include "leafpow/gadget.hpp"
#include "leafpow/generators.hpp"
#include "leafpow/hierarchy.hpp"
#include "leafpow/io.hpp"
#include "leafpow/recognition.hpp"
#include "leafpow/toc.hpp"
#include "leafpow/tree_metric.hpp"

namespace leafpow::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_text(const std::string& path, const char* what) {
  if (path.empty()) throw UsageError(std::string("missing input: ") + what);
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

Json read_json(const std::string& path, const char* what) { return parse_json(read_text(path, what)); }

struct Context {
  const CommandConfig& config;
  std::ostream& out;
  std::ostream& err;

  // Prints the primary JSON and mirrors it to --output.
  void emit(const Json& j) const {
    const std::string text = j.dump(2) + "\n";
    out << text;
    write_text(config.output_path, text);
  }
  void dot(const std::string& text) const { write_text(config.dot_path, text); }
  int none() const {
    emit(Json{{"result", "NONE"}});
    return kNegative;
  }
};

RecognitionOptions recognition_options(const CommandConfig& c) {
  RecognitionOptions o;
  o.threads = std::max<std::size_t>(1, c.threads);
  if (c.cap) {
    o.caps.max_vertices_q_le2 = o.caps.max_vertices_q3 = o.caps.max_vertices_higher =
        o.caps.max_vertices_k_leaf = *c.cap;
  }
  return o;
}

int cmd_verify(const Context& ctx) {
  const SimpleGraph graph = graph_from_json(read_json(ctx.config.graph_path, "--graph"));
  const GlpCertificate cert = certificate_from_json(read_json(ctx.config.cert_path, "--cert"));
  const VerifyResult r = verify_certificate(graph, cert);
  if (r.passed()) {
    ctx.emit(Json{{"result", "PASS"}});
    return kOk;
  }
  Json j{{"result", "FAIL"}, {"message", r.message}};
  j["status"] = r.status == VerifyResult::Status::kVertexSetMismatch ? "vertex-set-mismatch"
                                                                      : "edge-mismatch";
  if (r.pair) {
    j["pair"] = {r.pair->first, r.pair->second};
    j["expected_edge"] = r.expected_edge;
  }
  ctx.err << "FAIL: " << r.message << "\n";
  ctx.emit(j);
  return kNegative;
}

int cmd_recognize(const Context& ctx) {
  const SimpleGraph graph = graph_from_json(read_json(ctx.config.graph_path, "--graph"));
  RecognitionStats stats;
  const auto cert = recognize_glp(graph, ctx.config.q, recognition_options(ctx.config), &stats);
  ctx.err << "topologies scanned " << stats.topologies_scanned << ", skipped "
          << stats.topologies_skipped << ", lp nodes " << stats.lp_nodes << "\n";
  if (!cert) return ctx.none();
  ctx.dot(tree_to_dot(cert->tree));
  ctx.emit(certificate_to_json(*cert));
  return kOk;
}

int cmd_leaf_rank(const Context& ctx) {
  const SimpleGraph graph = graph_from_json(read_json(ctx.config.graph_path, "--graph"));
  LeafRankOptions o;
  o.recognition = recognition_options(ctx.config);
  o.ceiling = ctx.config.ceiling;
  const auto rank = leaf_rank(graph, o);
  if (!rank) return ctx.none();
  ctx.emit(Json{{"result", "FOUND"}, {"leaf_rank", *rank}});
  return kOk;
}

int cmd_k_leaf_power(const Context& ctx) {
  const SimpleGraph graph = graph_from_json(read_json(ctx.config.graph_path, "--graph"));
  const auto tree = is_k_leaf_power(graph, ctx.config.k, recognition_options(ctx.config));
  if (!tree) return ctx.none();
  ctx.dot(tree_to_dot(*tree));
  ctx.emit(tree_to_json(*tree));
  return kOk;
}

int cmd_gen_gs(const Context& ctx) {
  const TocInstance toc = parse_toc(read_text(ctx.config.toc_path, "--toc"));
  const GadgetGraph g = build_gs(toc);
  const Json graph = graph_to_json(g.graph), roles = roles_to_json(g.roles);
  write_text(ctx.config.graph_out, graph.dump(2) + "\n");
  write_text(ctx.config.roles_out, roles.dump(2) + "\n");
  ctx.dot(graph_to_dot(g.graph));
  ctx.emit(Json{{"graph", graph}, {"roles", roles}});
  return kOk;
}

int cmd_make_leafroot(const Context& ctx) {
  const TocInstance toc = parse_toc(read_text(ctx.config.toc_path, "--toc"));
  const WeightedTree tree = tree_from_json(read_json(ctx.config.tree_path, "--tree"));
  const LeafRootConstruction c = leaf_root_from_tree(tree, toc);
  ctx.err << "diameter " << c.diameter << ", threshold " << c.certificate.thresholds[0] << "\n";
  ctx.dot(tree_to_dot(c.certificate.tree));
  ctx.emit(certificate_to_json(c.certificate));
  return kOk;
}

int cmd_extract_toc(const Context& ctx) {
  const GlpCertificate cert = certificate_from_json(read_json(ctx.config.cert_path, "--cert"));
  GadgetRoles roles = roles_from_json(read_json(ctx.config.roles_path, "--roles"));
  GadgetGraph gadget{graph_from_certificate(cert), std::move(roles)};
  const WeightedTree tree = extract_toc_tree(cert, gadget);
  ctx.dot(tree_to_dot(tree));
  ctx.emit(tree_to_json(tree));
  return kOk;
}

int cmd_cert_transform(const Context& ctx, GlpCertificate (*fn)(const GlpCertificate&)) {
  const GlpCertificate cert = certificate_from_json(read_json(ctx.config.cert_path, "--cert"));
  const GlpCertificate out = fn(cert);
  ctx.dot(tree_to_dot(out.tree));
  ctx.emit(certificate_to_json(out));
  return kOk;
}

int cmd_glp_step(const Context& ctx) {
  const SimpleGraph graph = graph_from_json(read_json(ctx.config.graph_path, "--graph"));
  const SimpleGraph out = glp_step(graph);
  ctx.dot(graph_to_dot(out));
  ctx.emit(graph_to_json(out));
  return kOk;
}

int cmd_non_glp(const Context& ctx) {
  if (ctx.config.q > 5) throw CapacityExceeded("non-glp output is limited to q <= 5");
  const SimpleGraph out = non_glp_family(ctx.config.q);
  ctx.dot(graph_to_dot(out));
  ctx.emit(graph_to_json(out));
  return kOk;
}

int cmd_check_4pc(const Context& ctx) {
  const DistanceMatrix m = distance_matrix_from_json(read_json(ctx.config.matrix_path, "--matrix"));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m.d[i][i].is_zero()) throw MalformedMetric("distance matrix has a nonzero diagonal");
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m.d[i][j] != m.d[j][i]) throw MalformedMetric("distance matrix is not symmetric");
    }
  }
  const QuartetCensus census = four_point_sweep(m);
  Json j{{"cases", {{"1", census.by_case[1]}, {"2", census.by_case[2]}, {"3", census.by_case[3]},
                    {"4", census.by_case[4]}, {"violation", census.by_case[0]}}}};
  if (census.first_violation) {
    Json quad = Json::array();
    for (std::size_t i : *census.first_violation) quad.push_back(m.labels[i]);
    j["result"] = "FAIL";
    j["violation"] = quad;
    ctx.emit(j);
    return kNegative;
  }
  j["result"] = "PASS";
  ctx.emit(j);
  return kOk;
}

int cmd_toc_realize(const Context& ctx) {
  const TocInstance toc = parse_toc(read_text(ctx.config.toc_path, "--toc"));
  TocSearchOptions o;
  o.threads = std::max<std::size_t>(1, ctx.config.threads);
  if (ctx.config.cap) o.cap = *ctx.config.cap;
  const auto tree = toc_realizability_small(toc, o);
  if (!tree) return ctx.none();
  ctx.dot(tree_to_dot(*tree));
  ctx.emit(tree_to_json(*tree));
  return kOk;
}

// Seeded sweeps over the cheap invariants; every failure is reported with the
// round that produced it so the seed replays it.
int cmd_fuzz(const Context& ctx) {
  Rng rng(ctx.config.seed);
  std::map<std::string, std::uint64_t> checks;
  std::optional<std::string> failure;
  auto expect = [&](bool ok, const std::string& name, std::size_t round) {
    ++checks[name];
    if (!ok && !failure) failure = name + " failed in round " + std::to_string(round);
  };
  for (std::size_t round = 0; round < ctx.config.rounds && !failure; ++round) {
    const std::size_t n = 2 + rng.below(7);
    const WeightedTree tree = random_tree(rng, n);
    const QuartetCensus census = four_point_sweep(leaf_distance_matrix(tree));
    expect(census.by_case[0] == 0, "four-point", round);
    expect(tree_from_json(tree_to_json(tree)).labels() == tree.labels(), "tree-json", round);

    const GlpCertificate cert = random_certificate(rng, n, 1 + rng.below(3));
    const SimpleGraph g = graph_from_certificate(cert);
    expect(verify_certificate(g, cert).passed(), "verify", round);
    const GlpCertificate integral = integerize_certificate(cert);
    bool integer = true;
    for (const TreeEdge& e : integral.tree.edges()) integer = integer && e.weight.is_integer();
    for (const Rational& t : integral.thresholds.values()) integer = integer && t.is_integer();
    expect(integer && graph_from_certificate(integral) == g, "integerize", round);
    expect(verify_certificate(g, cert_lift(cert)).passed(), "lift", round);
    expect(verify_certificate(complement(g), cert_complement(cert)).passed(), "complement", round);
    const GlpCertificate back = certificate_from_json(parse_json(certificate_to_json(cert).dump()));
    expect(graph_from_certificate(back) == g, "certificate-json", round);
  }
  Json j{{"seed", ctx.config.seed}, {"rounds", ctx.config.rounds}, {"checks", checks}};
  j["result"] = failure ? "FAIL" : "PASS";
  if (failure) {
    j["failure"] = *failure;
    ctx.err << "FAIL: " << *failure << "\n";
  }
  ctx.emit(j);
  return failure ? kNegative : kOk;
}

int dispatch(const Context& ctx) {
  const std::string& c = ctx.config.command;
  if (ctx.config.q == 0) throw UsageError("q must be at least 1");
  if (ctx.config.k < 1) throw UsageError("k must be at least 1");
  if (c == "verify") return cmd_verify(ctx);
  if (c == "recognize") return cmd_recognize(ctx);
  if (c == "leaf-rank") return cmd_leaf_rank(ctx);
  if (c == "k-leaf-power") return cmd_k_leaf_power(ctx);
  if (c == "gen-gs") return cmd_gen_gs(ctx);
  if (c == "make-leafroot") return cmd_make_leafroot(ctx);
  if (c == "extract-toc") return cmd_extract_toc(ctx);
  if (c == "lift") return cmd_cert_transform(ctx, &cert_lift);
  if (c == "complement-cert") return cmd_cert_transform(ctx, &cert_complement);
  if (c == "glp-step") return cmd_glp_step(ctx);
  if (c == "non-glp") return cmd_non_glp(ctx);
  if (c == "check-4pc") return cmd_check_4pc(ctx);
  if (c == "toc-realize") return cmd_toc_realize(ctx);
  if (c == "fuzz") return cmd_fuzz(ctx);
  throw UsageError("unknown command '" + c + "'");
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  const Context ctx{config, out, err};
  try {
    return dispatch(ctx);
  } catch (const RealizationMismatch& e) {
    err << "realization mismatch: " << e.what() << "\n";
    ctx.emit(Json{{"result", "FAIL"}, {"message", e.what()}});
    return kNegative;
  } catch (const InvalidWitness& e) {
    err << "invalid witness: " << e.what() << "\n";
    ctx.emit(Json{{"result", "FAIL"}, {"message", e.what()}});
    return kNegative;
  } catch (const CapacityExceeded& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return kCapacity;
  } catch (const CeilingExceeded& e) {
    err << "ceiling exceeded: " << e.what() << "\n";
    return kCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leaf powers, pairwise compatibility graphs and GLP(q) toolkit", "leafpow"};
  app.require_subcommand(1);
  CommandConfig config;

  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--output,-o", config.output_path, "Also write the JSON result to this file");
    sub->add_option("--emit-dot", config.dot_path, "Write a DOT rendering of the result");
    return sub;
  };
  auto graph_in = [&](CLI::App* s) { s->add_option("--graph,-g", config.graph_path, "Graph JSON")->required(); };
  auto cert_in = [&](CLI::App* s) { s->add_option("--cert,-c", config.cert_path, "Certificate JSON")->required(); };
  auto toc_in = [&](CLI::App* s) { s->add_option("--toc,-t", config.toc_path, "Triangle order text")->required(); };
  auto search = [&](CLI::App* s) {
    s->add_option("--threads", config.threads, "Worker threads for the topology scan");
    s->add_option("--cap", config.cap, "Vertex cap for the exhaustive search");
  };

  CLI::App* verify = add("verify", "Check a certificate against a graph");
  graph_in(verify);
  cert_in(verify);
  CLI::App* recognize = add("recognize", "Search for a GLP(q) certificate");
  graph_in(recognize);
  recognize->add_option("--q,-q", config.q, "Order q");
  search(recognize);
  CLI::App* rank = add("leaf-rank", "Smallest threshold of a leaf root");
  graph_in(rank);
  rank->add_option("--ceiling", config.ceiling, "Largest threshold tried");
  search(rank);
  CLI::App* kleaf = add("k-leaf-power", "Search for a leaf root with threshold k");
  graph_in(kleaf);
  kleaf->add_option("--k,-k", config.k, "Threshold")->required();
  search(kleaf);
  CLI::App* gs = add("gen-gs", "Gadget graph of a triangle order");
  toc_in(gs);
  gs->add_option("--graph-out", config.graph_out, "Write the graph JSON here");
  gs->add_option("--roles-out", config.roles_out, "Write the role map JSON here");
  CLI::App* mk = add("make-leafroot", "Leaf root of the gadget from a realizing tree");
  toc_in(mk);
  mk->add_option("--tree", config.tree_path, "Realizing tree JSON")->required();
  CLI::App* ex = add("extract-toc", "Realizing tree from a leaf root of a gadget");
  cert_in(ex);
  ex->add_option("--roles,-r", config.roles_path, "Role map JSON")->required();
  cert_in(add("lift", "Same graph, one more threshold"));
  cert_in(add("complement-cert", "Certificate of the complement graph"));
  graph_in(add("glp-step", "Complement of two disjoint copies"));
  add("non-glp", "Graph on 2^(q+1) vertices outside GLP(q)")
      ->add_option("q", config.q, "Order q")
      ->required();
  add("check-4pc", "Four-point census of a distance matrix")
      ->add_option("--matrix,-m", config.matrix_path, "Distance matrix JSON")
      ->required();
  CLI::App* realize = add("toc-realize", "Exhaustive realizability check of a triangle order");
  toc_in(realize);
  search(realize);
  CLI::App* fuzz = add("fuzz", "Seeded property sweeps");
  fuzz->add_option("--seed", config.seed, "Random seed");
  fuzz->add_option("--rounds", config.rounds, "Number of rounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  for (CLI::App* sub : app.get_subcommands()) config.command = sub->get_name();
  return run(config, out, err);
}

}  // namespace leafpow::cli
