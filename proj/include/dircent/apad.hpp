#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dircent/estimate.hpp"
#include "dircent/exact.hpp"
#include "dircent/graph.hpp"
#include "dircent/reachability.hpp"
#include "dircent/rng.hpp"

namespace dircent {

enum class KPathStopping { fixed, hoeffding, adaptive };

struct KPathConfig {
  int k = 3;
  double lambda = 0.05;
  double delta = 0.1;
  std::uint64_t seed = 0;
  WeightDefinition w_definition = WeightDefinition::original;
  KPathStopping stopping = KPathStopping::adaptive;
  std::uint64_t fixed_samples = 0;  // used when stopping == fixed
  SamplingMode mode = SamplingMode::restricted;
  // Estimate vertices with out-degree 0 instead of returning 0 for them; paths may
  // still end at such a vertex.
  bool skip_out_degree_shortcut = false;
  // Never use a smaller fallback budget than the one for α' = 1.
  bool conservative_budget = false;
  // Use the adaptive deviation terms exactly as first published (both carrying a
  // leading -1/τ, δ1 and the minus inner term). Off by default; see README.
  bool verbatim_adaptive_terms = false;

  double delta1() const { return delta / 4.0; }
  double delta2() const { return delta / 4.0; }

  void validate() const {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (!(lambda > 0.0 && lambda < 1.0)) throw std::invalid_argument("lambda must lie in (0, 1)");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
    if (stopping == KPathStopping::fixed && fixed_samples == 0) {
      throw std::invalid_argument("fixed stopping needs a positive sample count");
    }
  }
};

struct KPathEstimate : Estimate {
  double alpha_prime = 0.0;
  int k = 0;
};

// Sample budget from Hoeffding's inequality with per-sample range [0, α']:
//   hoeffding: ⌈α'² ln(2/δ) / (2λ²)⌉          (full δ)
//   adaptive:  ⌈α'² ln(4/δ) / (2λ²)⌉          (δ/2, the adaptive fallback)
// At least one sample whenever α' > 0.
inline std::uint64_t compute_omega_prime(const KPathConfig& cfg, double alpha_prime) {
  if (alpha_prime <= 0.0) return 0;
  const double log_term = cfg.stopping == KPathStopping::adaptive ? std::log(4.0 / cfg.delta) : std::log(2.0 / cfg.delta);
  auto budget = [&](double a) {
    return static_cast<std::uint64_t>(std::ceil(a * a * log_term / (2.0 * cfg.lambda * cfg.lambda)));
  };
  std::uint64_t omega = std::max<std::uint64_t>(1, budget(alpha_prime));
  if (cfg.conservative_budget) omega = std::max(omega, budget(1.0));
  return omega;
}

// A' and B' for the k-path estimator. By default these are the betweenness terms
// with ω' α'(r) in place of ω α(r). `verbatim` evaluates the first-published
// expression for both, which is never positive.
inline DeviationTerms kpath_stopping_terms(double c_running, std::uint64_t tau, double omega_prime,
                                           double alpha_prime, double delta1, double delta2,
                                           bool verbatim = false) {
  if (!verbatim) return deviation_terms(c_running, tau, omega_prime, alpha_prime, delta1, delta2);
  if (tau == 0) throw std::invalid_argument("stopping terms need at least one sample");
  const double t = static_cast<double>(tau);
  const double log1 = std::log(1.0 / delta1);
  const double a = 1.0 / 3.0 - omega_prime * alpha_prime / t;
  const double term = -1.0 / t * log1 * (a + std::sqrt(a * a + 2.0 * c_running * omega_prime * alpha_prime / log1));
  return {term, term};
}

// A random simple path from s, built one uniform step at a time inside D(r).
// W and P are products of reciprocals of candidate-set sizes, so they are kept as
// their denominators.
struct WalkSample {
  std::vector<VertexId> vertices;
  int l_target = 0;
  double weight_den = 1.0;  // W(p) = 1 / weight_den
  double prob_den = 1.0;    // P[p] = 1 / prob_den
  bool completed = false;   // reached l_target edges
  bool contains_r = false;

  double weight_w() const { return 1.0 / weight_den; }
  double prob_p() const { return 1.0 / prob_den; }
};

// Draws of the k-path estimator for one vertex. Reuses an epoch-stamped visited
// array, so a draw costs O(k · max out-degree) and no allocation after warm-up.
class KPathSampler {
 public:
  KPathSampler(const DirectedGraph& g, const ReachabilityResult& reach, int k, WeightDefinition wdef,
               SamplingMode mode = SamplingMode::restricted)
      : g_(&g), reach_(&reach), k_(k), wdef_(wdef), mode_(mode), stamp_(g.vertex_count(), 0) {
    const double n = static_cast<double>(g.vertex_count());
    scale_ = mode == SamplingMode::restricted ? reach.alpha_prime().value() : (n - 1.0) / n;
    candidates_.reserve(64);
  }

  // α'(r) in restricted mode; every draw lies in [0, scale()].
  double scale() const { return scale_; }

  WalkSample walk(VertexId s, int l, Rng& rng) {
    WalkSample out;
    out.l_target = l;
    out.vertices.reserve(static_cast<std::size_t>(l) + 1);
    next_epoch();
    VertexId u = s;
    out.vertices.push_back(u);
    stamp_[u] = epoch_;
    out.contains_r = (u == reach_->root);
    for (int step = 0; step < l; ++step) {
      candidates_.clear();
      std::size_t unvisited = 0, unvisited_in_domain = 0;
      for (VertexId w : g_->out_neighbors(u)) {
        if (stamp_[w] == epoch_) continue;
        ++unvisited;
        if (reach_->in_domain(w)) ++unvisited_in_domain;
        if (allowed(w)) candidates_.push_back(w);
      }
      if (candidates_.empty()) return out;  // stuck
      out.prob_den *= static_cast<double>(candidates_.size());
      out.weight_den *= static_cast<double>(wdef_ == WeightDefinition::original ? unvisited : unvisited_in_domain);
      u = candidates_[rng.uniform(candidates_.size())];
      stamp_[u] = epoch_;
      out.vertices.push_back(u);
      if (u == reach_->root) out.contains_r = true;
    }
    out.completed = true;
    return out;
  }

  double value_of(const WalkSample& w) const {
    if (!w.completed || !w.contains_r) return 0.0;
    // ratio is at most 1; dividing first keeps the draw within [0, scale]
    return scale_ * (w.prob_den / w.weight_den);
  }

  double draw(Rng& rng) {
    VertexId s;
    if (mode_ == SamplingMode::restricted) {
      s = reach_->rf[rng.uniform(reach_->rf.size())];
    } else {
      const auto i = static_cast<VertexId>(rng.uniform(g_->vertex_count() - 1));
      s = i < reach_->root ? i : i + 1;
    }
    const int l = 1 + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(k_)));
    return value_of(walk(s, l, rng));
  }

 private:
  bool allowed(VertexId w) const { return mode_ == SamplingMode::baseline || reach_->in_domain(w); }

  void next_epoch() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }

  const DirectedGraph* g_;
  const ReachabilityResult* reach_;
  int k_;
  WeightDefinition wdef_;
  SamplingMode mode_;
  double scale_ = 0.0;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<VertexId> candidates_;
};

inline WalkSample sample_walk(const DirectedGraph& g, const ReachabilityResult& reach, VertexId s, int l,
                              WeightDefinition wdef, Rng& rng) {
  if (l < 1) throw std::invalid_argument("walk length must be at least 1");
  KPathSampler sampler(g, reach, l, wdef);
  return sampler.walk(s, l, rng);
}

inline KPathEstimate estimate_kpath(const DirectedGraph& g, VertexId r, const KPathConfig& cfg) {
  cfg.validate();
  if (!g.valid(r)) throw std::out_of_range("vertex out of range");
  const auto start = std::chrono::steady_clock::now();
  KPathEstimate est;
  est.seed = cfg.seed;
  est.mode = cfg.mode;
  est.k = cfg.k;

  const ReachabilityResult reach = compute_reachability(g, r);
  est.rf_size = reach.rf.size();
  est.rt_size = reach.rt.size();
  est.alpha = reach.alpha().value();
  est.vd_upper_bound = reach.vd_upper_bound;

  const bool shortcut = g.in_degree(r) == 0 || (!cfg.skip_out_degree_shortcut && g.out_degree(r) == 0);
  if (shortcut || reach.rf.empty()) {
    est.stop_reason = StopReason::degenerate_zero;
    est.alpha_prime = reach.alpha_prime().value();
  } else {
    KPathSampler sampler(g, reach, cfg.k, cfg.w_definition, cfg.mode);
    est.alpha_prime = sampler.scale();
    est.omega = compute_omega_prime(cfg, est.alpha_prime);
    Rng rng(cfg.seed);
    RunningMean mean;
    const double omega = static_cast<double>(est.omega);
    for (;;) {
      const std::uint64_t tau = mean.count();
      if (cfg.stopping == KPathStopping::fixed) {
        if (tau == cfg.fixed_samples) {
          est.stop_reason = StopReason::fixed_budget;
          break;
        }
      } else if (tau >= est.omega) {
        est.stop_reason = StopReason::omega_reached;
        break;
      } else if (cfg.stopping == KPathStopping::adaptive && tau > 0) {
        const auto terms = kpath_stopping_terms(mean.mean(), tau, omega, est.alpha_prime, cfg.delta1(),
                                                cfg.delta2(), cfg.verbatim_adaptive_terms);
        if (terms.lower <= cfg.lambda && terms.upper <= cfg.lambda) {
          est.stop_reason = StopReason::bounds_satisfied;
          break;
        }
      }
      const double x = sampler.draw(rng);
      if (x != 0.0) ++est.hits;
      mean.add(x);
    }
    est.samples = mean.count();
    est.value = mean.mean();
    if (est.samples > 0 && est.omega > 0) {
      const auto terms = kpath_stopping_terms(est.value, est.samples, omega, est.alpha_prime, cfg.delta1(),
                                              cfg.delta2(), cfg.verbatim_adaptive_terms);
      est.lower_conf = est.value - terms.lower;
      est.upper_conf = est.value + terms.upper;
    } else {
      est.lower_conf = est.upper_conf = est.value;
    }
  }
  est.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return est;
}

}  // namespace dircent
