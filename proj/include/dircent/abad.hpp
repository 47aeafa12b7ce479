#pragma once

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "dircent/estimate.hpp"
#include "dircent/graph.hpp"
#include "dircent/reachability.hpp"
#include "dircent/rng.hpp"
#include "dircent/sp_sampler.hpp"

namespace dircent {

// Where the vertex-diameter bound used by the fallback budget comes from.
//   domain:      depth of the reverse BFS + depth of the forward BFS from r, + 1
//   whole_graph: exact vertex diameter of G (all-sources BFS)
enum class VdBound { domain, whole_graph };

struct EstimatorConfig {
  double lambda = 0.05;
  double delta = 0.1;
  double C = 0.5;
  std::uint64_t seed = 0;
  SamplingMode mode = SamplingMode::restricted;
  VdBound vd_bound = VdBound::domain;
  std::optional<std::uint64_t> max_samples_override;  // replaces ω
  std::optional<std::uint64_t> fixed_samples;         // disables adaptive stopping

  // δ/2 goes to the fallback budget, δ/4 to each side of the adaptive bound.
  double delta1() const { return delta / 4.0; }
  double delta2() const { return delta / 4.0; }

  void validate() const {
    if (!(lambda > 0.0 && lambda < 1.0)) throw std::invalid_argument("lambda must lie in (0, 1)");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
    if (!(C > 0.0)) throw std::invalid_argument("C must be positive");
    if (fixed_samples && *fixed_samples == 0) throw std::invalid_argument("fixed sample count must be positive");
    if (max_samples_override && *max_samples_override == 0) {
      throw std::invalid_argument("sample cap must be positive");
    }
  }
};

// ω = ⌈(C/λ²)(⌊log₂(VD − 2)⌋ + 1 + ln(2/δ))⌉. The ⌊log₂(VD − 2)⌋ term is taken
// as 0 when VD < 4.
inline std::uint64_t compute_omega(const EstimatorConfig& cfg, std::uint32_t vd_upper_bound) {
  const double levels = vd_upper_bound >= 4 ? static_cast<double>(std::bit_width(vd_upper_bound - 2u) - 1) : 0.0;
  const double omega = cfg.C / (cfg.lambda * cfg.lambda) * (levels + 1.0 + std::log(2.0 / cfg.delta));
  return static_cast<std::uint64_t>(std::ceil(omega));
}

// A and B for betweenness: ω α(r) bounds the summed per-sample variance.
inline DeviationTerms stopping_terms(double c_running, std::uint64_t tau, double omega, double alpha,
                                     double delta1, double delta2) {
  return deviation_terms(c_running, tau, omega, alpha, delta1, delta2);
}

namespace detail {

// Uniform member of V \ {r}.
inline VertexId uniform_other(Rng& rng, std::size_t n, VertexId r) {
  const auto i = static_cast<VertexId>(rng.uniform(n - 1));
  return i < r ? i : i + 1;
}

}  // namespace detail

// One draw of the betweenness estimator: s uniform in RF, t uniform in RT, a
// uniform shortest s → t path, and α(r) if r is on it (0 otherwise). In baseline
// mode s and t range over V \ {r} and a hit is worth (|V|-1)/|V|.
class BetweennessSampler {
 public:
  BetweennessSampler(const DirectedGraph& g, const ReachabilityResult& reach,
                     SamplingMode mode = SamplingMode::restricted)
      : g_(&g), reach_(&reach), mode_(mode), search_(g) {
    const double n = static_cast<double>(g.vertex_count());
    hit_value_ = mode == SamplingMode::restricted ? reach.alpha().value() : (n - 1.0) / n;
  }

  double hit_value() const { return hit_value_; }

  double draw(Rng& rng) {
    VertexId s, t;
    if (mode_ == SamplingMode::restricted) {
      s = reach_->rf[rng.uniform(reach_->rf.size())];
      t = reach_->rt[rng.uniform(reach_->rt.size())];
    } else {
      s = detail::uniform_other(rng, g_->vertex_count(), reach_->root);
      t = detail::uniform_other(rng, g_->vertex_count(), reach_->root);
    }
    if (s == t) return 0.0;
    if (!search_.build_dag(s, t, dag_)) return 0.0;
    const PathSample path = sample_uniform_path(dag_, rng, reach_->root);
    return path.contains_r ? hit_value_ : 0.0;
  }

 private:
  const DirectedGraph* g_;
  const ReachabilityResult* reach_;
  SamplingMode mode_;
  BidirectionalBfs search_;
  ShortestPathDag dag_;
  double hit_value_ = 0.0;
};

// Coverage variant: a hit when r lies on any shortest s → t path.
class CoverageSampler {
 public:
  CoverageSampler(const DirectedGraph& g, const ReachabilityResult& reach,
                  SamplingMode mode = SamplingMode::restricted)
      : g_(&g), reach_(&reach), mode_(mode), search_(g) {
    const double n = static_cast<double>(g.vertex_count());
    hit_value_ = mode == SamplingMode::restricted ? reach.alpha().value() : (n - 1.0) / n;
  }

  double hit_value() const { return hit_value_; }

  double draw(Rng& rng) {
    VertexId s, t;
    if (mode_ == SamplingMode::restricted) {
      s = reach_->rf[rng.uniform(reach_->rf.size())];
      t = reach_->rt[rng.uniform(reach_->rt.size())];
    } else {
      s = detail::uniform_other(rng, g_->vertex_count(), reach_->root);
      t = detail::uniform_other(rng, g_->vertex_count(), reach_->root);
    }
    if (s == t) return 0.0;
    return on_some_shortest_path(search_, s, t, reach_->root, *reach_) ? hit_value_ : 0.0;
  }

 private:
  const DirectedGraph* g_;
  const ReachabilityResult* reach_;
  SamplingMode mode_;
  BidirectionalBfs search_;
  double hit_value_ = 0.0;
};

namespace detail {

// Draws until the fixed budget is spent, τ reaches ω, or both deviation terms are
// at most λ. The rule is checked before every draw.
template <class Sampler>
void run_sampling_loop(Sampler& sampler, Rng& rng, double lambda, std::optional<std::uint64_t> fixed,
                       std::uint64_t omega, double range, double delta1, double delta2, Estimate& est) {
  RunningMean mean;
  std::uint64_t hits = 0;
  for (;;) {
    const std::uint64_t tau = mean.count();
    if (fixed) {
      if (tau == *fixed) {
        est.stop_reason = StopReason::fixed_budget;
        break;
      }
    } else {
      if (tau >= omega) {
        est.stop_reason = StopReason::omega_reached;
        break;
      }
      if (tau > 0) {
        const auto terms = deviation_terms(mean.mean(), tau, static_cast<double>(omega), range, delta1, delta2);
        if (terms.lower <= lambda && terms.upper <= lambda) {
          est.stop_reason = StopReason::bounds_satisfied;
          break;
        }
      }
    }
    const double x = sampler.draw(rng);
    if (x != 0.0) ++hits;
    mean.add(x);
  }
  est.samples = mean.count();
  est.hits = hits;
  est.value = mean.mean();
  if (est.samples > 0) {
    const auto terms =
        deviation_terms(est.value, est.samples, static_cast<double>(omega), range, delta1, delta2);
    est.lower_conf = est.value - terms.lower;
    est.upper_conf = est.value + terms.upper;
  }
}

enum class PairTest { sampled_path, any_shortest_path };

inline Estimate estimate_pair_centrality(const DirectedGraph& g, VertexId r, const EstimatorConfig& cfg,
                                         PairTest test) {
  cfg.validate();
  if (!g.valid(r)) throw std::out_of_range("vertex out of range");
  const auto start = std::chrono::steady_clock::now();
  Estimate est;
  est.seed = cfg.seed;
  est.mode = cfg.mode;

  const ReachabilityResult reach = compute_reachability(g, r);
  est.rf_size = reach.rf.size();
  est.rt_size = reach.rt.size();
  est.alpha = reach.alpha().value();
  est.vd_upper_bound = cfg.vd_bound == VdBound::domain ? reach.vd_upper_bound : whole_graph_vertex_diameter(g);

  if (g.in_degree(r) == 0 || g.out_degree(r) == 0 || reach.rf.empty() || reach.rt.empty()) {
    est.stop_reason = StopReason::degenerate_zero;
  } else {
    est.omega = cfg.max_samples_override ? *cfg.max_samples_override : compute_omega(cfg, est.vd_upper_bound);
    // Baseline mode uses the unpruned range 1 in the deviation terms.
    const double range = cfg.mode == SamplingMode::restricted ? est.alpha : 1.0;
    Rng rng(cfg.seed);
    if (test == PairTest::sampled_path) {
      BetweennessSampler sampler(g, reach, cfg.mode);
      run_sampling_loop(sampler, rng, cfg.lambda, cfg.fixed_samples, est.omega, range, cfg.delta1(),
                        cfg.delta2(), est);
    } else {
      CoverageSampler sampler(g, reach, cfg.mode);
      run_sampling_loop(sampler, rng, cfg.lambda, cfg.fixed_samples, est.omega, range, cfg.delta1(),
                        cfg.delta2(), est);
    }
  }
  est.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return est;
}

}  // namespace detail

// Adaptive betweenness estimate of r with (λ, δ) guarantee.
inline Estimate estimate_bc(const DirectedGraph& g, VertexId r, const EstimatorConfig& cfg) {
  return detail::estimate_pair_centrality(g, r, cfg, detail::PairTest::sampled_path);
}

// Adaptive coverage-centrality estimate of r.
inline Estimate estimate_coverage(const DirectedGraph& g, VertexId r, const EstimatorConfig& cfg) {
  return detail::estimate_pair_centrality(g, r, cfg, detail::PairTest::any_shortest_path);
}

}  // namespace dircent
