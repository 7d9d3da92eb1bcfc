// Copyright 2026 The BOLT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "bolt/analysis.hpp"
#include "bolt/errors.hpp"
#include "bolt/estimator.hpp"
#include "bolt/generators.hpp"
#include "bolt/metrics.hpp"
#include "bolt/ordering.hpp"
#include "bolt/parallel.hpp"
#include "bolt/sampling.hpp"
#include "bolt/shortest_paths.hpp"
#include "json.hpp"

namespace bolt::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  1  internal error\n"
    "  2  malformed edge-list input\n"
    "  3  invalid arguments, node labels or generator spec\n"
    "  4  graph has no edge after preprocessing\n"
    "  5  metric or estimate undefined on this input\n"
    "  6  input or output file cannot be opened\n";

struct Options {
  std::string file;
  std::string gen;
  std::string mapping;
  std::string output;
  std::string format;
  std::string instance;
  std::string model = "eddbm";
  std::vector<std::string> models;
  std::string node;
  std::vector<std::string> nodes;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::uint32_t samples = kDefaultSamples;
  std::uint32_t repetitions = 5;
  std::uint64_t pair_budget = 0;
  std::vector<std::uint64_t> relax{2, 3, 5, 10};
  std::size_t random_k = 0;
  double tie_epsilon = 0.0;
  std::size_t max_levels = 64;
  std::size_t graphs = 50;
  std::size_t sources = 20;
};

struct Context {
  Options opts;
  RngSeed master;
  unsigned threads = 1;
  std::string command;
  std::string summary;
};

// The graph and the estimations draw from separate children of the master
// seed, so `generate --seed S` writes the graph every other subcommand builds
// from the same spec and seed.
RngSeed graph_seed(const Context& ctx) { return derive_seed(ctx.master, 0); }
RngSeed run_seed(const Context& ctx) { return derive_seed(ctx.master, 1); }

template <class T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ConfigError("invalid " + std::string(what) + ": '" +
                      std::string(text) + "'");
  }
  return value;
}

unsigned default_threads() {
  const char* env = std::getenv("BOLT_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  return parse_number<unsigned>(env, "BOLT_THREADS");
}

Model parse_model_or_throw(std::string_view name) {
  const auto m = parse_model(name);
  if (!m) throw ConfigError("unknown model '" + std::string(name) + "'");
  return *m;
}

std::string resolve_format(const Context& ctx, std::string_view fallback,
                           std::initializer_list<std::string_view> allowed) {
  const std::string f = ctx.opts.format.empty() ? std::string(fallback)
                                                : ctx.opts.format;
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
    throw ConfigError("format '" + f + "' not supported by " + ctx.command);
  }
  return f;
}

struct Input {
  Graph graph;
  std::string instance;
};

Input load_input(const Context& ctx) {
  const Options& o = ctx.opts;
  if (o.file.empty() == o.gen.empty()) {
    throw ConfigError("exactly one of --file and --gen is required");
  }
  Input in;
  if (!o.file.empty()) {
    in.graph = build_graph(read_edge_list(o.file));
    in.instance = std::filesystem::path(o.file).stem().string();
  } else {
    const GeneratorSpec spec = parse_generator_spec(o.gen);
    in.graph = generate(spec, graph_seed(ctx));
    in.instance = spec.text;
  }
  if (!o.instance.empty()) in.instance = o.instance;
  if (!o.mapping.empty()) {
    std::ofstream map(o.mapping, std::ios::binary);
    if (!map) throw InputError("cannot write mapping file " + o.mapping);
    write_label_mapping(map, in.graph);
    if (!map.flush()) throw InputError("cannot write mapping file " + o.mapping);
  }
  return in;
}

NodeId resolve_node(const Graph& g, const std::string& label) {
  const auto id = g.find(label);
  if (!id) throw ConfigError("node '" + label + "' is not in the graph");
  return *id;
}

void emit(const Context& ctx, const std::string& body, std::ostream& out) {
  if (ctx.opts.output.empty()) {
    out << body;
    out.flush();
    return;
  }
  std::ofstream file(ctx.opts.output, std::ios::binary);
  if (!file) throw InputError("cannot write " + ctx.opts.output);
  file << body;
  if (!file.flush()) throw InputError("cannot write " + ctx.opts.output);
}

std::string graph_summary(const Input& in) {
  return "instance=" + in.instance + " nodes=" +
         std::to_string(in.graph.node_count()) +
         " edges=" + std::to_string(in.graph.edge_count());
}

std::string distance_text(double d) {
  return std::isinf(d) ? std::string("inf")
                       : std::to_string(static_cast<std::uint64_t>(d));
}

std::string cmd_generate(Context& ctx) {
  resolve_format(ctx, "edgelist", {"edgelist"});
  if (!ctx.opts.file.empty() || ctx.opts.gen.empty()) {
    throw ConfigError("generate needs --gen and no --file");
  }
  const Input in = load_input(ctx);
  const std::vector<std::string> header{
      "generator: " + in.instance,
      "seed: " + std::to_string(ctx.master.value),
      "nodes: " + std::to_string(in.graph.node_count()) +
          " edges: " + std::to_string(in.graph.edge_count())};
  std::ostringstream body;
  write_edge_list(body, in.graph, header);
  ctx.summary = graph_summary(in);
  return body.str();
}

std::string cmd_exact(Context& ctx) {
  const std::string format = resolve_format(ctx, "csv", {"csv", "json"});
  const Input in = load_input(ctx);
  const auto bc = exact_betweenness(in.graph, ctx.threads);
  std::ostringstream body;
  if (format == "csv") {
    body << "node_label,betweenness\n";
    for (NodeId i = 0; i < in.graph.node_count(); ++i) {
      body << in.graph.label(i) << ',' << format_double(bc[i]) << '\n';
    }
  } else {
    Json rows = Json::array();
    for (NodeId i = 0; i < in.graph.node_count(); ++i) {
      rows.push_back({{"label", in.graph.label(i)}, {"betweenness", bc[i]}});
    }
    body << rows.dump(2) << '\n';
  }
  ctx.summary = graph_summary(in);
  return body.str();
}

std::string cmd_probs(Context& ctx) {
  const std::string format = resolve_format(ctx, "csv", {"csv", "json"});
  const Model model = parse_model_or_throw(ctx.opts.model);
  const Input in = load_input(ctx);
  const NodeId v = resolve_node(in.graph, ctx.opts.node);
  const auto dist = make_distribution(model, in.graph, v, ctx.threads);
  const auto levels = level_partition(in.graph, v);
  std::ostringstream body;
  if (format == "csv") {
    body << "node_label,distance,probability,model\n";
    for (NodeId i = 0; i < in.graph.node_count(); ++i) {
      body << in.graph.label(i) << ',' << distance_text(levels.distance[i])
           << ',' << format_double(dist.probability(i)) << ',' << to_string(model)
           << '\n';
    }
  } else {
    Json rows = Json::array();
    for (NodeId i = 0; i < in.graph.node_count(); ++i) {
      const double d = levels.distance[i];
      rows.push_back({{"label", in.graph.label(i)},
                      {"distance", std::isinf(d) ? Json(nullptr) : Json(d)},
                      {"probability", dist.probability(i)},
                      {"model", to_string(model)}});
    }
    body << rows.dump(2) << '\n';
  }
  ctx.summary = graph_summary(in) + " node=" + ctx.opts.node +
                " support=" + std::to_string(dist.support().size());
  return body.str();
}

std::string cmd_estimate(Context& ctx) {
  const std::string format = resolve_format(ctx, "json", {"csv", "json"});
  const Model model = parse_model_or_throw(ctx.opts.model);
  const Input in = load_input(ctx);
  const NodeId v = resolve_node(in.graph, ctx.opts.node);
  const auto dist = make_distribution(model, in.graph, v, ctx.threads);
  const auto r = estimate(in.graph, dist, v, ctx.opts.samples, run_seed(ctx));
  std::ostringstream body;
  if (format == "json") {
    const Json j{{"node", in.graph.label(v)},
                 {"estimate", r.estimate},
                 {"samples", r.samples},
                 {"model", to_string(model)},
                 {"seed", ctx.master.value}};
    body << j.dump(2) << '\n';
  } else {
    body << "node,estimate,samples,model,seed\n"
         << in.graph.label(v) << ',' << format_double(r.estimate) << ','
         << r.samples << ',' << to_string(model) << ',' << ctx.master.value
         << '\n';
  }
  ctx.summary = graph_summary(in) + " node=" + in.graph.label(v) +
                " estimate=" + format_double(r.estimate);
  return body.str();
}

std::string cmd_order(Context& ctx, bool k_way) {
  const std::string format = resolve_format(ctx, "json", {"csv", "json"});
  const Options& o = ctx.opts;
  OrderingOptions opts;
  opts.samples = o.samples;
  opts.seed = run_seed(ctx);
  opts.model = parse_model_or_throw(o.model);
  opts.tie_epsilon = o.tie_epsilon;
  opts.threads = ctx.threads;
  if (!(opts.tie_epsilon >= 0.0)) throw ConfigError("--tie-epsilon must be >= 0");

  const Input in = load_input(ctx);
  std::vector<NodeId> nodes;
  if (k_way && o.random_k > 0) {
    if (!o.nodes.empty()) throw ConfigError("--nodes and --random-k conflict");
    if (o.random_k < 2 || o.random_k > in.graph.node_count()) {
      throw ConfigError("--random-k must lie in [2, node count]");
    }
    nodes.resize(in.graph.node_count());
    std::iota(nodes.begin(), nodes.end(), 0);
    auto engine = make_engine(derive_seed(ctx.master, 2));
    std::shuffle(nodes.begin(), nodes.end(), engine);
    nodes.resize(o.random_k);
  } else {
    for (const auto& label : o.nodes) nodes.push_back(resolve_node(in.graph, label));
  }
  if (!k_way && nodes.size() != 2) {
    throw ConfigError("order takes exactly two node labels");
  }
  if (nodes.size() < 2) throw ConfigError("need at least two nodes to order");
  if (std::set<NodeId>(nodes.begin(), nodes.end()).size() != nodes.size()) {
    throw ConfigError("duplicate node in --nodes");
  }

  const auto result = k_betweenness_ordering(in.graph, nodes, opts);
  std::ostringstream body;
  if (format == "json") {
    Json ranking = Json::array();
    for (std::size_t i = 0; i < result.nodes.size(); ++i) {
      ranking.push_back({{"label", in.graph.label(result.nodes[i])},
                         {"estimate", result.estimates[i]}});
    }
    Json j{{"ranking", ranking}};
    j["verdict"] = result.verdict ? Json(to_string(*result.verdict)) : Json(nullptr);
    body << j.dump(2) << '\n';
  } else {
    body << "rank,label,estimate\n";
    for (std::size_t i = 0; i < result.nodes.size(); ++i) {
      body << i + 1 << ',' << in.graph.label(result.nodes[i]) << ','
           << format_double(result.estimates[i]) << '\n';
    }
  }
  ctx.summary = graph_summary(in) + " k=" + std::to_string(nodes.size());
  if (result.verdict) ctx.summary += " verdict=" + std::string(to_string(*result.verdict));
  return body.str();
}

std::string optional_cell(const std::optional<double>& x) {
  return x ? format_double(*x) : std::string();
}

std::string cmd_evaluate(Context& ctx) {
  const std::string format = resolve_format(ctx, "csv", {"csv", "json"});
  const Options& o = ctx.opts;
  std::vector<Model> models;
  if (o.models.empty()) models.push_back(parse_model_or_throw(o.model));
  for (const auto& name : o.models) models.push_back(parse_model_or_throw(name));
  if (o.repetitions == 0) throw ConfigError("--repetitions must be >= 1");

  const Input in = load_input(ctx);
  const auto exact = exact_betweenness(in.graph, ctx.threads);

  std::vector<EvaluationReport> reports;
  for (Model m : models) {
    EvaluationConfig cfg;
    cfg.model = m;
    cfg.samples = o.samples;
    cfg.seed = run_seed(ctx);
    cfg.repetitions = o.repetitions;
    cfg.pair_budget = o.pair_budget;
    cfg.relax_thresholds = o.relax;
    cfg.threads = ctx.threads;
    reports.push_back(evaluate(in.graph, exact, cfg, in.instance));
    if (!reports.back().avg_error_pct) {
      throw UndefinedMetricError("average error undefined: no node has positive betweenness");
    }
  }

  std::ostringstream body;
  if (format == "csv") {
    body << "instance,model,T,avg_error,efficiency";
    for (auto t : o.relax) body << ",relaxed_t" << t;
    body << ",spearman\n";
    for (const auto& r : reports) {
      body << r.graph_id << ',' << to_string(r.model) << ',' << r.samples << ','
           << optional_cell(r.avg_error_pct) << ','
           << optional_cell(r.efficiency_pct);
      for (auto t : o.relax) body << ',' << optional_cell(r.relaxed_pct.at(t));
      body << ',' << optional_cell(r.spearman) << '\n';
    }
  } else {
    auto value = [](const std::optional<double>& x) {
      return x ? Json(*x) : Json(nullptr);
    };
    Json rows = Json::array();
    for (const auto& r : reports) {
      Json relaxed = Json::object();
      for (auto t : o.relax) relaxed[std::to_string(t)] = value(r.relaxed_pct.at(t));
      Json seeds = Json::array();
      for (auto s : r.seeds) seeds.push_back(s.value);
      rows.push_back({{"instance", r.graph_id},
                      {"model", to_string(r.model)},
                      {"T", r.samples},
                      {"avg_error", value(r.avg_error_pct)},
                      {"efficiency", value(r.efficiency_pct)},
                      {"relaxed", relaxed},
                      {"spearman", value(r.spearman)},
                      {"pairs_evaluated", r.pairs_evaluated},
                      {"nodes_with_positive_bc", r.nodes_with_positive_bc},
                      {"seed", ctx.master.value},
                      {"repetition_seeds", seeds}});
    }
    body << rows.dump(2) << '\n';
  }
  ctx.summary = graph_summary(in) + " models=" + std::to_string(models.size()) +
                " pairs=" + std::to_string(reports.front().pairs_evaluated);
  return body.str();
}

std::string cmd_analyze_levels(Context& ctx) {
  resolve_format(ctx, "csv", {"csv"});
  const Options& o = ctx.opts;
  if (!o.file.empty() || o.gen.empty()) {
    throw ConfigError("analyze-levels needs --gen er:<n>:<p> and no --file");
  }
  const GeneratorSpec spec = parse_generator_spec(o.gen);
  if (spec.kind != GeneratorSpec::Kind::kEr || !(spec.p < 1.0)) {
    throw ConfigError("analyze-levels models G(n, p) with p < 1");
  }
  if (o.graphs == 0 || o.sources == 0) {
    throw ConfigError("--graphs and --sources must be >= 1");
  }
  const LevelProfile profile = predict_levels(spec.n, spec.p, o.max_levels);
  const EmpiricalLevels empirical =
      empirical_levels(spec.n, spec.p, o.graphs, o.sources, run_seed(ctx));

  auto cell = [](const std::vector<double>& xs, std::size_t i) {
    return i < xs.size() ? format_double(xs[i]) : std::string();
  };
  const std::size_t depth =
      std::max({profile.alpha.size(), profile.alpha_exact.size(),
                empirical.mean.size()});
  std::ostringstream body;
  body << "level,alpha_predicted,alpha_exact_form,alpha_empirical_mean,"
          "alpha_empirical_std\n";
  for (std::size_t m = 0; m < depth; ++m) {
    body << m << ',' << cell(profile.alpha, m) << ','
         << cell(profile.alpha_exact, m) << ',' << cell(empirical.mean, m) << ','
         << cell(empirical.stddev, m) << '\n';
  }
  ctx.summary = "instance=" + spec.text + " levels=" + std::to_string(depth) +
                " traversals=" + std::to_string(empirical.traversals);
  return body.str();
}

void add_input_options(CLI::App* sub, Options& o, bool with_file = true) {
  if (with_file) sub->add_option("--file", o.file, "SNAP-style edge list");
  sub->add_option("--gen", o.gen,
                  "generator spec: er:<n>:<p>, ba:<n>:<k>, er-x:<n>:<x>, ba-x:<n>:<x>");
  sub->add_option("--seed", o.seed,
                  "master seed; drawn from entropy and reported when omitted");
  sub->add_option("--threads", o.threads,
                  "worker threads, 0 = all cores (default: BOLT_THREADS or 1)");
  sub->add_option("-o,--output", o.output, "write to this file instead of stdout");
  sub->add_option("--format", o.format, "output format");
  if (with_file) {
    sub->add_option("--mapping", o.mapping,
                    "write original_label,internal_index CSV here");
    sub->add_option("--instance", o.instance, "instance name in reports");
  }
}

void add_estimation_options(CLI::App* sub, Options& o) {
  sub->add_option("--model", o.model, "uniform | dbm | eddbm | optimal")
      ->capture_default_str();
  sub->add_option("-T,--samples", o.samples, "pivots per estimate")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 3) {
    throw ConfigError("generator spec must look like er:<n>:<p> or ba:<n>:<k>");
  }
  GeneratorSpec spec;
  spec.text = std::string(text);
  spec.n = parse_number<std::uint64_t>(parts[1], "node count");
  const std::string_view kind = parts[0];
  if (kind == "er") {
    spec.p = parse_number<double>(parts[2], "edge probability");
  } else if (kind == "ba") {
    spec.kind = GeneratorSpec::Kind::kBa;
    spec.k = parse_number<std::uint64_t>(parts[2], "attachment count");
  } else if (kind == "er-x" || kind == "ba-x") {
    const double x = parse_number<double>(parts[2], "exponent");
    if (!(x > 0.0) || spec.n < 2) throw ConfigError("exponent spec needs x > 0, n >= 2");
    if (kind == "er-x") {
      spec.p = er_probability_for_exponent(spec.n, x);
    } else {
      spec.kind = GeneratorSpec::Kind::kBa;
      spec.k = ba_attachment_for_exponent(spec.n, x);
    }
  } else {
    throw ConfigError("unknown generator '" + std::string(kind) + "'");
  }
  if (spec.kind == GeneratorSpec::Kind::kEr) {
    if (spec.n < 2 || !(spec.p > 0.0 && spec.p <= 1.0)) {
      throw ConfigError("er needs n >= 2 and 0 < p <= 1");
    }
  } else if (spec.k < 1 || spec.k >= spec.n) {
    throw ConfigError("ba needs 1 <= k < n");
  }
  return spec;
}

Graph generate(const GeneratorSpec& spec, RngSeed seed) {
  return spec.kind == GeneratorSpec::Kind::kEr ? generate_er(spec.n, spec.p, seed)
                                               : generate_ba(spec.n, spec.k, seed);
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Context ctx;
  Options& o = ctx.opts;

  CLI::App app{"Betweenness ordering by non-uniform pivot sampling", "bolt"};
  app.footer(std::string(kExitCodes));
  app.require_subcommand(1);
  app.set_version_flag("--version", "bolt 1.0.0");

  auto* generate_cmd = app.add_subcommand("generate", "write a random graph as an edge list");
  add_input_options(generate_cmd, o, false);

  auto* exact_cmd = app.add_subcommand("exact", "exact betweenness of every node (csv|json)");
  add_input_options(exact_cmd, o);

  auto* probs_cmd = app.add_subcommand("probs", "pivot probabilities for one target (csv|json)");
  add_input_options(probs_cmd, o);
  probs_cmd->add_option("--model", o.model, "uniform | dbm | eddbm | optimal")
      ->capture_default_str();
  probs_cmd->add_option("--node", o.node, "target node label")->required();

  auto* estimate_cmd = app.add_subcommand("estimate", "estimate one node's betweenness (json|csv)");
  add_input_options(estimate_cmd, o);
  add_estimation_options(estimate_cmd, o);
  estimate_cmd->add_option("--node", o.node, "target node label")->required();

  auto* order_cmd = app.add_subcommand("order", "order two nodes by estimated betweenness (json|csv)");
  add_input_options(order_cmd, o);
  add_estimation_options(order_cmd, o);
  order_cmd->add_option("--nodes", o.nodes, "two node labels, comma separated")
      ->delimiter(',')
      ->required();
  order_cmd->add_option("--tie-epsilon", o.tie_epsilon,
                        "estimates this close compare as a tie");

  auto* korder_cmd = app.add_subcommand("korder", "rank k nodes by estimated betweenness (json|csv)");
  add_input_options(korder_cmd, o);
  add_estimation_options(korder_cmd, o);
  korder_cmd->add_option("--nodes", o.nodes, "node labels, comma separated")
      ->delimiter(',');
  korder_cmd->add_option("--random-k", o.random_k, "rank this many random nodes");
  korder_cmd->add_option("--tie-epsilon", o.tie_epsilon,
                         "estimates this close compare as a tie");

  auto* evaluate_cmd = app.add_subcommand(
      "evaluate", "error, efficiency, relaxed efficiency and Spearman rho (csv|json)");
  add_input_options(evaluate_cmd, o);
  evaluate_cmd->add_option("--model", o.models, "models, comma separated (default eddbm)")
      ->delimiter(',');
  evaluate_cmd->add_option("-T,--samples", o.samples, "pivots per estimate")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  evaluate_cmd->add_option("--repetitions", o.repetitions, "estimations per node")
      ->capture_default_str();
  evaluate_cmd->add_option("--pair-budget", o.pair_budget,
                           "node pairs for efficiency (0 = all up to n=3000, else 10^6)");
  evaluate_cmd->add_option("--relax", o.relax, "rank-gap thresholds t, comma separated")
      ->delimiter(',');

  auto* levels_cmd = app.add_subcommand(
      "analyze-levels", "predicted vs empirical BFS level sizes of G(n, p) (csv)");
  add_input_options(levels_cmd, o, false);
  levels_cmd->add_option("--max-levels", o.max_levels, "deepest predicted level")
      ->capture_default_str();
  levels_cmd->add_option("--graphs", o.graphs, "sampled graphs")->capture_default_str();
  levels_cmd->add_option("--sources", o.sources, "BFS sources per graph")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "bolt: " << e.what() << '\n';
    return kConfigError;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    ctx.threads = o.threads ? *o.threads : default_threads();
    ctx.threads = ctx.threads == 0 ? resolve_threads(0) : ctx.threads;
    ctx.master = o.seed ? RngSeed{*o.seed} : entropy_seed();

    std::string body;
    if (generate_cmd->parsed()) {
      ctx.command = "generate";
      body = cmd_generate(ctx);
    } else if (exact_cmd->parsed()) {
      ctx.command = "exact";
      body = cmd_exact(ctx);
    } else if (probs_cmd->parsed()) {
      ctx.command = "probs";
      body = cmd_probs(ctx);
    } else if (estimate_cmd->parsed()) {
      ctx.command = "estimate";
      body = cmd_estimate(ctx);
    } else if (order_cmd->parsed()) {
      ctx.command = "order";
      body = cmd_order(ctx, false);
    } else if (korder_cmd->parsed()) {
      ctx.command = "korder";
      body = cmd_order(ctx, true);
    } else if (evaluate_cmd->parsed()) {
      ctx.command = "evaluate";
      body = cmd_evaluate(ctx);
    } else {
      ctx.command = "analyze-levels";
      body = cmd_analyze_levels(ctx);
    }
    emit(ctx, body, out);

    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - started)
                               .count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << ctx.command << ": " << ctx.summary << " seed=" << ctx.master.value
         << " threads=" << ctx.threads << " time=" << seconds << "s\n";
    err << line.str();
    return kOk;
  } catch (const ParseError& e) {
    err << "bolt: parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const InputError& e) {
    err << "bolt: " << e.what() << '\n';
    return kIoError;
  } catch (const EmptyGraphError& e) {
    err << "bolt: empty graph: " << e.what() << '\n';
    return kEmptyGraph;
  } catch (const UndefinedMetricError& e) {
    err << "bolt: undefined: " << e.what() << '\n';
    return kUndefinedMetric;
  } catch (const EmptySupportError& e) {
    err << "bolt: undefined: " << e.what() << '\n';
    return kUndefinedMetric;
  } catch (const ConfigError& e) {
    err << "bolt: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "bolt: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::out_of_range& e) {
    err << "bolt: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "bolt: internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace bolt::cli
