#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dircent/dircent.hpp"

using nlohmann::json;
namespace dc = dircent;

namespace {

struct Globals {
  std::string graph;
  std::uint64_t seed = 1;
  bool json_out = true;
  int workers = 1;
};

// "--graph gen:<spec>" builds a synthetic graph instead of reading a file.
dc::LabeledGraph load_graph(const std::string& source) {
  if (source.empty()) throw dc::ParseError("--graph is required", 0);
  if (source.rfind("gen:", 0) == 0) return dc::with_index_labels(dc::generate_from_spec(source.substr(4)));
  return dc::load_edge_list_file(source);
}

std::string fraction_string(const dc::Fraction& f) {
  std::ostringstream s;
  s << f;
  return s.str();
}

json estimate_json(const dc::Estimate& e, const std::string& vertex) {
  return json{{"vertex", vertex},
              {"value", e.value},
              {"samples", e.samples},
              {"omega", e.omega},
              {"alpha", e.alpha},
              {"stop_reason", dc::to_string(e.stop_reason)},
              {"lower_conf", e.lower_conf},
              {"upper_conf", e.upper_conf},
              {"seed", e.seed},
              {"wall_time", e.wall_time},
              {"mode", dc::to_string(e.mode)},
              {"rf_size", e.rf_size},
              {"rt_size", e.rt_size},
              {"vd_upper_bound", e.vd_upper_bound},
              {"hits", e.hits}};
}

void emit(const json& j, bool as_json) {
  if (as_json) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, _] : j.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : j.items()) {
    std::cout << key << std::string(width - key.size() + 2, ' ')
              << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

dc::WeightDefinition parse_wdef(const std::string& s) {
  if (s == "original") return dc::WeightDefinition::original;
  if (s == "restricted") return dc::WeightDefinition::domain_restricted;
  throw dc::ParseError("--w-def must be 'original' or 'restricted'", 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-vertex centrality in directed graphs: exact oracles and sampling estimators"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--graph", g.graph, "Edge-list file, or gen:<generator spec>");
  app.add_option("--seed", g.seed, "Random seed");
  app.add_flag("--json,!--table", g.json_out, "Output as JSON (default) or as a text table");
  app.add_option("--workers", g.workers, "Concurrent benchmark cells")->check(CLI::PositiveNumber);

  std::string vertex;
  double lambda = 0.05, delta = 0.1, C = 0.5;
  bool baseline = false;
  std::uint64_t fixed_samples = 0, max_samples = 0;
  std::string vd_bound = "domain";

  auto add_estimate_flags = [&](CLI::App* sub) {
    sub->add_option("--vertex", vertex, "Vertex label")->required();
    sub->add_option("--lambda", lambda, "Absolute error bound");
    sub->add_option("--delta", delta, "Failure probability");
    sub->add_flag("--baseline", baseline, "Sample from all of V instead of the reachability sets");
    sub->add_option("--fixed-samples", fixed_samples, "Draw exactly N samples (no adaptive stop)");
  };

  auto* bc_exact = app.add_subcommand("bc-exact", "Exact betweenness of one vertex");
  bc_exact->add_option("--vertex", vertex, "Vertex label")->required();
  auto* cc_exact = app.add_subcommand("coverage-exact", "Exact coverage centrality of one vertex");
  cc_exact->add_option("--vertex", vertex, "Vertex label")->required();
  int k = 3;
  std::string wdef = "original";
  auto* kp_exact = app.add_subcommand("kpath-exact", "Exact k-path centrality of one vertex");
  kp_exact->add_option("--vertex", vertex, "Vertex label")->required();
  kp_exact->add_option("--k", k, "Maximum path length in edges");
  kp_exact->add_option("--w-def", wdef, "Path weight normalizer: original | restricted");

  auto* bc_est = app.add_subcommand("bc-estimate", "Adaptive betweenness estimate");
  add_estimate_flags(bc_est);
  auto* cc_est = app.add_subcommand("coverage-estimate", "Adaptive coverage-centrality estimate");
  add_estimate_flags(cc_est);
  for (auto* sub : {bc_est, cc_est}) {
    sub->add_option("--C", C, "Universal constant of the fallback budget");
    sub->add_option("--vd-bound", vd_bound, "Vertex-diameter bound: domain | whole");
    sub->add_option("--max-samples", max_samples, "Replace the fallback budget");
  }

  std::string stopping = "adaptive";
  bool skip_shortcut = false, conservative = false, verbatim_terms = false;
  auto* kp_est = app.add_subcommand("kpath-estimate", "k-path centrality estimate");
  add_estimate_flags(kp_est);
  kp_est->add_option("--k", k, "Maximum path length in edges");
  kp_est->add_option("--stopping", stopping, "fixed:N | hoeffding | adaptive");
  kp_est->add_option("--w-def", wdef, "Path weight normalizer: original | restricted");
  kp_est->add_flag("--skip-out-degree-shortcut", skip_shortcut, "Sample even when r has no out-edges");
  kp_est->add_flag("--conservative-budget", conservative, "Use the budget for alpha' = 1 as a floor");
  kp_est->add_flag("--verbatim-adaptive-terms", verbatim_terms, "Use the first-published adaptive terms");

  auto* reach_cmd = app.add_subcommand("reach", "Reachability sets of one vertex");
  reach_cmd->add_option("--vertex", vertex, "Vertex label")->required();

  std::string config_path;
  bool omit_timing = false;
  auto* bench = app.add_subcommand("bench", "Run a benchmark described by a JSON config");
  bench->add_option("--config", config_path, "Benchmark config file")->required()->check(CLI::ExistingFile);
  bench->add_flag("--omit-timing", omit_timing, "Leave wall-clock fields out of the report");

  std::string spec, out_path;
  auto* gen = app.add_subcommand("gen", "Write a synthetic graph as an edge list");
  gen->add_option("spec", spec, "er:n=..,m=..,seed=.. | pa:n=..,m=..,toward_old=..,seed=.. | dag:layers=..,width=..,p=..,seed=..")
      ->required();
  gen->add_option("--out", out_path, "Output file (default stdout)");

  std::string source, target;
  std::uint64_t draws = 1;
  auto* sample_path = app.add_subcommand("sample-path", "");
  sample_path->group("");
  sample_path->add_option("--source", source)->required();
  sample_path->add_option("--target", target)->required();
  sample_path->add_option("--draws", draws);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      const auto lg = dc::with_index_labels(dc::generate_from_spec(spec));
      if (out_path.empty()) {
        dc::write_edge_list(std::cout, lg);
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        dc::write_edge_list(out, lg);
      }
      return 0;
    }
    if (*bench) {
      std::ifstream in(config_path);
      json raw;
      try {
        raw = json::parse(in);
      } catch (const json::parse_error& e) {
        throw dc::ParseError(std::string("bench config: ") + e.what(), 0);
      }
      auto cfg = dc::BenchConfig::from_json(raw);
      if (app.get_option("--workers")->count() > 0) cfg.workers = g.workers;
      if (app.get_option("--seed")->count() > 0) cfg.seed = g.seed;
      cfg.omit_timing = cfg.omit_timing || omit_timing;
      const auto rows = dc::run_benchmark(cfg);
      if (g.json_out) {
        std::cout << dc::report_json(rows, cfg).dump(2) << '\n';
      } else {
        dc::write_table(std::cout, rows);
      }
      return 0;
    }

    const auto lg = load_graph(g.graph);
    const auto& graph = lg.graph;
    const dc::VertexId r = lg.vertex(vertex.empty() ? source : vertex);

    if (*bc_exact || *cc_exact || *kp_exact) {
      dc::OracleValue v;
      if (*bc_exact) {
        v = dc::brandes_bc(graph, r);
      } else if (*cc_exact) {
        v = dc::exact_coverage(graph, r);
      } else {
        v = dc::exact_kpath(graph, r, k, parse_wdef(wdef));
      }
      json j{{"vertex", vertex}, {"value", v.value}, {"method", v.method}};
      if (v.exact) j["exact"] = dc::to_string(*v.exact);
      emit(j, g.json_out);
      return 0;
    }

    if (*reach_cmd) {
      const auto reach = dc::compute_reachability(graph, r);
      emit(json{{"vertex", vertex},
                {"rf_size", reach.rf.size()},
                {"rt_size", reach.rt.size()},
                {"alpha", reach.alpha().value()},
                {"alpha_exact", fraction_string(reach.alpha())},
                {"alpha_prime", reach.alpha_prime().value()},
                {"alpha_prime_exact", fraction_string(reach.alpha_prime())},
                {"vd_upper_bound", reach.vd_upper_bound}},
           g.json_out);
      return 0;
    }

    if (*bc_est || *cc_est) {
      dc::EstimatorConfig cfg;
      cfg.lambda = lambda;
      cfg.delta = delta;
      cfg.C = C;
      cfg.seed = g.seed;
      cfg.mode = baseline ? dc::SamplingMode::baseline : dc::SamplingMode::restricted;
      if (vd_bound == "whole") {
        cfg.vd_bound = dc::VdBound::whole_graph;
      } else if (vd_bound != "domain") {
        throw dc::ParseError("--vd-bound must be 'domain' or 'whole'", 0);
      }
      if (fixed_samples > 0) cfg.fixed_samples = fixed_samples;
      if (max_samples > 0) cfg.max_samples_override = max_samples;
      const auto est = *bc_est ? dc::estimate_bc(graph, r, cfg) : dc::estimate_coverage(graph, r, cfg);
      emit(estimate_json(est, vertex), g.json_out);
      return 0;
    }

    if (*kp_est) {
      dc::KPathConfig cfg;
      cfg.k = k;
      cfg.lambda = lambda;
      cfg.delta = delta;
      cfg.seed = g.seed;
      cfg.w_definition = parse_wdef(wdef);
      cfg.mode = baseline ? dc::SamplingMode::baseline : dc::SamplingMode::restricted;
      cfg.skip_out_degree_shortcut = skip_shortcut;
      cfg.conservative_budget = conservative;
      cfg.verbatim_adaptive_terms = verbatim_terms;
      if (stopping == "adaptive") {
        cfg.stopping = dc::KPathStopping::adaptive;
      } else if (stopping == "hoeffding") {
        cfg.stopping = dc::KPathStopping::hoeffding;
      } else if (stopping.rfind("fixed:", 0) == 0) {
        cfg.stopping = dc::KPathStopping::fixed;
        try {
          cfg.fixed_samples = std::stoull(stopping.substr(6));
        } catch (const std::exception&) {
          throw dc::ParseError("bad sample count in --stopping " + stopping, 0);
        }
      } else {
        throw dc::ParseError("--stopping must be fixed:N, hoeffding or adaptive", 0);
      }
      if (fixed_samples > 0) {
        cfg.stopping = dc::KPathStopping::fixed;
        cfg.fixed_samples = fixed_samples;
      }
      const auto est = dc::estimate_kpath(graph, r, cfg);
      auto j = estimate_json(est, vertex);
      j["alpha_prime"] = est.alpha_prime;
      j["k"] = est.k;
      emit(j, g.json_out);
      return 0;
    }

    if (*sample_path) {
      const dc::VertexId t = lg.vertex(target);
      dc::BidirectionalBfs search(graph);
      dc::ShortestPathDag dag;
      json j{{"source", source}, {"target", target}, {"seed", g.seed}};
      if (!search.build_dag(r, t, dag)) {
        j["reachable"] = false;
        emit(j, g.json_out);
        return 0;
      }
      dc::Rng rng(g.seed);
      json paths = json::array();
      for (std::uint64_t i = 0; i < draws; ++i) {
        json p = json::array();
        for (dc::VertexId v : dc::sample_uniform_path(dag, rng).vertices) p.push_back(lg.label(v));
        paths.push_back(std::move(p));
      }
      j["reachable"] = true;
      j["distance"] = dag.distance;
      j["sigma"] = dag.sigma_st();
      j["paths"] = std::move(paths);
      std::cout << j.dump(2) << '\n';
      return 0;
    }
  } catch (const dc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const dc::GuardError& e) {
    std::cerr << "guard violation: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
