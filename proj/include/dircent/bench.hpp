#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "dircent/abad.hpp"
#include "dircent/apad.hpp"
#include "dircent/errors.hpp"
#include "dircent/exact.hpp"
#include "dircent/generators.hpp"
#include "dircent/graph.hpp"
#include "dircent/rng.hpp"

namespace dircent {

// Top-k vertices by exact betweenness; ties go to the smaller id.
inline std::vector<VertexId> select_top_vertices(const DirectedGraph& g, std::size_t k,
                                                 const OracleOptions& opts = {}) {
  const AllScores scores = brandes_all(g, opts);
  std::vector<VertexId> order(g.vertex_count());
  std::iota(order.begin(), order.end(), VertexId{0});
  auto less = [&](VertexId a, VertexId b) {
    if (!scores.exact.empty()) {
      if (scores.exact[a] != scores.exact[b]) return scores.exact[a] > scores.exact[b];
    } else if (scores.value[a] != scores.value[b]) {
      return scores.value[a] > scores.value[b];
    }
    return a < b;
  };
  std::stable_sort(order.begin(), order.end(), less);
  order.resize(std::min(k, order.size()));
  return order;
}

// Benchmark description. JSON schema (all keys optional except "datasets"):
//   datasets       array of strings; "gen:<generator spec>" or a path to an edge list
//   vertices       array of vertex labels (explicit list; an empty list gives an empty report)
//   select         "top-bc:<k>" or "random:<k>" when "vertices" is absent
//   methods        subset of abad, abad-baseline, coverage, coverage-baseline, apad, apad-baseline
//   lambdas        array of λ values                      (default [0.05])
//   delta          δ                                      (default 0.1)
//   k              path length bound for apad             (default 3)
//   kpath_samples  array of fixed sample counts for apad; adaptive over lambdas when absent
//   w_definition   "original" or "restricted"             (default "original")
//   reps           repetitions per cell                   (default 3)
//   seed           master seed                            (default 1)
//   workers        concurrent cells                       (default 1)
//   omit_timing    drop wall-clock fields from the report (default false)
struct BenchConfig {
  std::vector<std::string> datasets;
  std::optional<std::vector<std::string>> vertices;  // present (even empty) overrides select
  std::string select = "top-bc:5";
  std::vector<std::string> methods{"abad"};
  std::vector<double> lambdas{0.05};
  double delta = 0.1;
  int k = 3;
  std::vector<std::uint64_t> kpath_samples;
  WeightDefinition w_definition = WeightDefinition::original;
  int reps = 3;
  std::uint64_t seed = 1;
  int workers = 1;
  bool omit_timing = false;

  static BenchConfig from_json(const nlohmann::json& j) {
    BenchConfig c;
    try {
      c.datasets = j.at("datasets").get<std::vector<std::string>>();
      if (j.contains("vertices")) c.vertices = j["vertices"].get<std::vector<std::string>>();
      c.select = j.value("select", c.select);
      c.methods = j.value("methods", c.methods);
      c.lambdas = j.value("lambdas", c.lambdas);
      c.delta = j.value("delta", c.delta);
      c.k = j.value("k", c.k);
      c.kpath_samples = j.value("kpath_samples", c.kpath_samples);
      const std::string wdef = j.value("w_definition", std::string("original"));
      if (wdef == "original") {
        c.w_definition = WeightDefinition::original;
      } else if (wdef == "restricted") {
        c.w_definition = WeightDefinition::domain_restricted;
      } else {
        throw ParseError("w_definition must be 'original' or 'restricted'", 0);
      }
      c.reps = j.value("reps", c.reps);
      c.seed = j.value("seed", c.seed);
      c.workers = j.value("workers", c.workers);
      c.omit_timing = j.value("omit_timing", c.omit_timing);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bench config: ") + e.what(), 0);
    }
    static const std::vector<std::string> known{"abad", "abad-baseline", "coverage", "coverage-baseline",
                                                "apad", "apad-baseline"};
    for (const auto& m : c.methods) {
      if (std::find(known.begin(), known.end(), m) == known.end()) {
        throw ParseError("unknown method '" + m + "'", 0);
      }
    }
    if (c.reps < 1) throw ParseError("reps must be positive", 0);
    if (c.workers < 1) throw ParseError("workers must be positive", 0);
    return c;
  }
};

struct BenchRun {
  std::uint64_t seed = 0;
  double value = 0.0;
  std::uint64_t samples = 0;
  std::string stop_reason;
  double wall_time = 0.0;
};

// One (dataset, vertex, method, parameter) cell aggregated over its repetitions.
struct BenchRow {
  std::string dataset;
  std::uint64_t graph_hash = 0;
  std::string vertex;
  std::string method;
  std::optional<double> lambda;
  double delta = 0.0;
  std::optional<std::uint64_t> fixed_samples;
  std::optional<int> k;
  double alpha = 0.0;
  double alpha_prime = 0.0;
  std::optional<double> exact;
  std::string oracle_error;  // why `exact` is missing
  double estimate_avg = 0.0;
  std::optional<double> error_avg;  // percent, |app - ext| / ext * 100
  std::optional<double> error_max;
  double samples_avg = 0.0;
  std::uint64_t samples_max = 0;
  double time_avg = 0.0;
  double time_max = 0.0;
  std::uint64_t cell_seed = 0;
  std::vector<BenchRun> runs;
};

struct BenchDataset {
  std::string name;
  LabeledGraph graph;
};

inline BenchDataset load_bench_dataset(const std::string& name) {
  BenchDataset d;
  d.name = name;
  if (name.rfind("gen:", 0) == 0) {
    d.graph = with_index_labels(generate_from_spec(name.substr(4)));
  } else {
    d.graph = load_edge_list_file(name);
  }
  return d;
}

namespace detail {

inline std::vector<VertexId> bench_vertices(const BenchConfig& cfg, const BenchDataset& d, std::uint64_t seed) {
  const auto& g = d.graph.graph;
  if (cfg.vertices) {
    std::vector<VertexId> out;
    for (const auto& label : *cfg.vertices) out.push_back(d.graph.vertex(label));
    return out;
  }
  const auto colon = cfg.select.find(':');
  const std::string policy = cfg.select.substr(0, colon);
  std::size_t count = 5;
  if (colon != std::string::npos) {
    try {
      count = static_cast<std::size_t>(std::stoul(cfg.select.substr(colon + 1)));
    } catch (const std::exception&) {
      throw ParseError("bad select count in '" + cfg.select + "'", 0);
    }
  }
  if (policy == "top-bc") return select_top_vertices(g, count);
  if (policy == "random") {
    std::vector<VertexId> all(g.vertex_count());
    std::iota(all.begin(), all.end(), VertexId{0});
    Rng rng(seed);
    count = std::min(count, all.size());
    for (std::size_t i = 0; i < count; ++i) std::swap(all[i], all[i + rng.uniform(all.size() - i)]);
    all.resize(count);
    std::sort(all.begin(), all.end());
    return all;
  }
  throw ParseError("unknown vertex selection policy '" + policy + "'", 0);
}

inline std::string method_family(const std::string& method) {
  return method.substr(0, method.find('-'));
}

struct Cell {
  std::size_t dataset;
  VertexId vertex;
  std::string method;
  std::optional<double> lambda;
  std::optional<std::uint64_t> fixed;
  std::uint64_t seed;
};

}  // namespace detail

// Runs every cell `reps` times. Cell seeds are derive_seed(master, cell index) in
// enumeration order (dataset, vertex, method, parameter); repetition i of a cell
// uses derive_seed(cell seed, i). Rows come back sorted, independent of `workers`.
inline std::vector<BenchRow> run_benchmark(const BenchConfig& cfg) {
  std::vector<BenchDataset> datasets;
  for (const auto& name : cfg.datasets) datasets.push_back(load_bench_dataset(name));

  std::vector<detail::Cell> cells;
  std::vector<std::vector<VertexId>> vertex_sets;
  std::uint64_t index = 0;
  for (std::size_t di = 0; di < datasets.size(); ++di) {
    vertex_sets.push_back(detail::bench_vertices(cfg, datasets[di], derive_seed(cfg.seed, 1ULL << 40 | di)));
    for (VertexId v : vertex_sets.back()) {
      for (const auto& method : cfg.methods) {
        if (detail::method_family(method) == "apad" && !cfg.kpath_samples.empty()) {
          for (std::uint64_t n : cfg.kpath_samples) {
            cells.push_back({di, v, method, std::nullopt, n, derive_seed(cfg.seed, index++)});
          }
        } else {
          for (double lambda : cfg.lambdas) {
            cells.push_back({di, v, method, lambda, std::nullopt, derive_seed(cfg.seed, index++)});
          }
        }
      }
    }
  }

  // Oracle values, one per (dataset, vertex, family).
  std::map<std::tuple<std::size_t, VertexId, std::string>, std::pair<std::optional<double>, std::string>> oracle;
  for (const auto& cell : cells) {
    const auto key = std::make_tuple(cell.dataset, cell.vertex, detail::method_family(cell.method));
    if (oracle.count(key)) continue;
    const auto& g = datasets[cell.dataset].graph.graph;
    try {
      const std::string family = std::get<2>(key);
      if (family == "abad") {
        oracle[key] = {brandes_bc(g, cell.vertex).value, ""};
      } else if (family == "coverage") {
        oracle[key] = {exact_coverage(g, cell.vertex).value, ""};
      } else {
        oracle[key] = {exact_kpath(g, cell.vertex, cfg.k, cfg.w_definition).value, ""};
      }
    } catch (const GuardError& e) {
      oracle[key] = {std::nullopt, e.what()};
    }
  }

  std::vector<BenchRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::string first_error;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        const auto& cell = cells[i];
        const auto& data = datasets[cell.dataset];
        const auto& g = data.graph.graph;
        const std::string family = detail::method_family(cell.method);
        const bool baseline = cell.method.find("-baseline") != std::string::npos;
        BenchRow row;
        row.dataset = data.name;
        row.graph_hash = graph_fingerprint(g);
        row.vertex = data.graph.label(cell.vertex);
        row.method = cell.method;
        row.lambda = cell.lambda;
        row.delta = cfg.delta;
        row.fixed_samples = cell.fixed;
        row.cell_seed = cell.seed;
        const auto& ext = oracle.at(std::make_tuple(cell.dataset, cell.vertex, family));
        row.exact = ext.first;
        row.oracle_error = ext.second;
        if (family == "apad") row.k = cfg.k;
        for (int rep = 0; rep < cfg.reps; ++rep) {
          const std::uint64_t seed = derive_seed(cell.seed, static_cast<std::uint64_t>(rep));
          Estimate est;
          if (family == "apad") {
            KPathConfig kc;
            kc.k = cfg.k;
            kc.delta = cfg.delta;
            kc.lambda = cell.lambda.value_or(0.05);
            kc.seed = seed;
            kc.w_definition = cfg.w_definition;
            kc.mode = baseline ? SamplingMode::baseline : SamplingMode::restricted;
            if (cell.fixed) {
              kc.stopping = KPathStopping::fixed;
              kc.fixed_samples = *cell.fixed;
            }
            const auto kest = estimate_kpath(g, cell.vertex, kc);
            row.alpha_prime = kest.alpha_prime;
            est = kest;
          } else {
            EstimatorConfig ec;
            ec.lambda = *cell.lambda;
            ec.delta = cfg.delta;
            ec.seed = seed;
            ec.mode = baseline ? SamplingMode::baseline : SamplingMode::restricted;
            est = family == "abad" ? estimate_bc(g, cell.vertex, ec) : estimate_coverage(g, cell.vertex, ec);
            row.alpha_prime = static_cast<double>(est.rf_size) / static_cast<double>(g.vertex_count());
          }
          row.alpha = est.alpha;
          row.runs.push_back({seed, est.value, est.samples, to_string(est.stop_reason), est.wall_time});
        }
        double sum_value = 0, sum_samples = 0, sum_time = 0;
        for (const auto& run : row.runs) {
          sum_value += run.value;
          sum_samples += static_cast<double>(run.samples);
          sum_time += run.wall_time;
          row.samples_max = std::max(row.samples_max, run.samples);
          row.time_max = std::max(row.time_max, run.wall_time);
          if (row.exact && *row.exact > 0) {
            const double err = std::fabs(run.value - *row.exact) / *row.exact * 100.0;
            row.error_avg = row.error_avg.value_or(0.0) + err / static_cast<double>(cfg.reps);
            row.error_max = std::max(row.error_max.value_or(0.0), err);
          }
        }
        const auto reps = static_cast<double>(cfg.reps);
        row.estimate_avg = sum_value / reps;
        row.samples_avg = sum_samples / reps;
        row.time_avg = sum_time / reps;
        rows[i] = std::move(row);
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        if (first_error.empty()) first_error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  const int workers = std::max(1, std::min<int>(cfg.workers, static_cast<int>(cells.size())));
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (!first_error.empty()) throw std::runtime_error(first_error);

  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.dataset, a.vertex, a.method, a.lambda, a.fixed_samples) <
           std::tie(b.dataset, b.vertex, b.method, b.lambda, b.fixed_samples);
  });
  return rows;
}

inline nlohmann::json to_json(const BenchRow& row, bool omit_timing) {
  nlohmann::json j;
  j["dataset"] = row.dataset;
  j["graph_hash"] = row.graph_hash;
  j["vertex"] = row.vertex;
  j["method"] = row.method;
  if (row.lambda) j["lambda"] = *row.lambda;
  j["delta"] = row.delta;
  if (row.fixed_samples) j["fixed_samples"] = *row.fixed_samples;
  if (row.k) j["k"] = *row.k;
  j["alpha"] = row.alpha;
  j["alpha_prime"] = row.alpha_prime;
  if (row.exact) j["exact"] = *row.exact;
  if (!row.oracle_error.empty()) j["oracle_error"] = row.oracle_error;
  j["estimate_avg"] = row.estimate_avg;
  if (row.error_avg) j["error_avg"] = *row.error_avg;
  if (row.error_max) j["error_max"] = *row.error_max;
  j["samples_avg"] = row.samples_avg;
  j["samples_max"] = row.samples_max;
  if (!omit_timing) {
    j["time_avg"] = row.time_avg;
    j["time_max"] = row.time_max;
  }
  j["cell_seed"] = row.cell_seed;
  auto& runs = j["runs"] = nlohmann::json::array();
  for (const auto& run : row.runs) {
    nlohmann::json r{{"seed", run.seed}, {"value", run.value}, {"samples", run.samples},
                     {"stop_reason", run.stop_reason}};
    if (!omit_timing) r["wall_time"] = run.wall_time;
    runs.push_back(std::move(r));
  }
  return j;
}

inline nlohmann::json report_json(const std::vector<BenchRow>& rows, const BenchConfig& cfg) {
  nlohmann::json j;
  j["master_seed"] = cfg.seed;
  j["reps"] = cfg.reps;
  auto& out = j["rows"] = nlohmann::json::array();
  for (const auto& row : rows) out.push_back(to_json(row, cfg.omit_timing));
  return j;
}

// Aligned text table in the shape of the published result tables.
inline void write_table(std::ostream& os, const std::vector<BenchRow>& rows) {
  const std::vector<std::string> header{"dataset", "vertex", "method", "param",   "alpha",   "exact",
                                        "estimate", "err_avg%", "err_max%", "time_avg", "time_max", "samples"};
  std::vector<std::vector<std::string>> cells{header};
  auto fmt = [](double x, int precision = 4) {
    std::ostringstream s;
    s << std::setprecision(precision) << x;
    return s.str();
  };
  for (const auto& r : rows) {
    std::string param = r.lambda ? "l=" + fmt(*r.lambda) : "N=" + std::to_string(r.fixed_samples.value_or(0));
    cells.push_back({r.dataset, r.vertex, r.method, param, fmt(r.method.rfind("apad", 0) == 0 ? r.alpha_prime : r.alpha),
                     r.exact ? fmt(*r.exact, 6) : "-", fmt(r.estimate_avg, 6),
                     r.error_avg ? fmt(*r.error_avg, 3) : "-", r.error_max ? fmt(*r.error_max, 3) : "-",
                     fmt(r.time_avg, 3), fmt(r.time_max, 3), fmt(r.samples_avg, 6)});
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << std::left << std::setw(static_cast<int>(width[i])) << line[i] << (i + 1 < line.size() ? "  " : "\n");
    }
  }
}

}  // namespace dircent
