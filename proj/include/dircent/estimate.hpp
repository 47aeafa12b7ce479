#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dircent {

// restricted: sources/targets drawn from RF(r)/RT(r). baseline: drawn from V \ {r},
// the unpruned sample space, for side-by-side comparison.
enum class SamplingMode { restricted, baseline };

enum class StopReason { bounds_satisfied, omega_reached, degenerate_zero, fixed_budget };

inline std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::bounds_satisfied: return "bounds-satisfied";
    case StopReason::omega_reached: return "omega-reached";
    case StopReason::degenerate_zero: return "degenerate-zero";
    case StopReason::fixed_budget: return "fixed-budget";
  }
  return "unknown";
}

inline std::string to_string(SamplingMode mode) {
  return mode == SamplingMode::restricted ? "restricted" : "baseline";
}

struct Estimate {
  double value = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t omega = 0;  // fallback sample budget
  double alpha = 0.0;       // α(r) of the target vertex
  StopReason stop_reason = StopReason::degenerate_zero;
  double lower_conf = 0.0;  // value - A at stop
  double upper_conf = 0.0;  // value + B at stop
  std::uint64_t seed = 0;
  double wall_time = 0.0;  // seconds
  SamplingMode mode = SamplingMode::restricted;
  std::size_t rf_size = 0;
  std::size_t rt_size = 0;
  std::uint32_t vd_upper_bound = 0;
  std::uint64_t hits = 0;  // samples with a non-zero contribution
};

// Mean of a stream of samples with Neumaier-compensated summation.
class RunningMean {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    ++count_;
  }
  std::uint64_t count() const { return count_; }
  double sum() const { return sum_ + comp_; }
  double mean() const { return count_ == 0 ? 0.0 : sum() / static_cast<double>(count_); }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  std::uint64_t count_ = 0;
};

// Deviation terms of the adaptive stopping rule after `tau` samples with running
// mean `mean`. With probability at least 1 - delta1 the true value exceeds
// mean - lower, and with probability at least 1 - delta2 it is below mean + upper.
// budget_scale is ω times the per-sample range (ω α for betweenness).
struct DeviationTerms {
  double lower = 0.0;  // A
  double upper = 0.0;  // B
};

inline DeviationTerms deviation_terms(double mean, std::uint64_t tau, double omega, double range,
                                      double delta1, double delta2) {
  if (tau == 0) throw std::invalid_argument("stopping terms need at least one sample");
  const double t = static_cast<double>(tau);
  const double scaled = omega * range / t;
  const double log1 = std::log(1.0 / delta1);
  const double log2 = std::log(1.0 / delta2);
  const double a = 1.0 / 3.0 - scaled;
  const double b = 1.0 / 3.0 + scaled;
  DeviationTerms out;
  out.lower = log1 / t * (a + std::sqrt(a * a + 2.0 * mean * omega * range / log1));
  out.upper = log2 / t * (b + std::sqrt(b * b + 2.0 * mean * omega * range / log2));
  return out;
}

}  // namespace dircent
