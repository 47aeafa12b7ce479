#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dircent/errors.hpp"
#include "dircent/graph.hpp"
#include "dircent/rational.hpp"
#include "dircent/reachability.hpp"

namespace dircent {

// Which normalizer W(p) uses for a simple path p = (s, u1, ..., ul).
//   original:          Π 1 / |N(u_{i-1}) \ {s, u1, ..., u_{i-2}}|
//   domain_restricted: Π 1 / |(N(u_{i-1}) ∩ D(r)) \ {s, u1, ..., u_{i-2}}|
enum class WeightDefinition { original, domain_restricted };

struct OracleOptions {
  // At or below this many vertices, betweenness is accumulated in exact rationals.
  std::size_t rational_threshold = 1000;
  std::size_t brandes_max_vertices = 200000;
  std::size_t coverage_max_vertices = 2000;
  std::size_t kpath_max_vertices = 15;
  std::size_t kpath_max_k = 5;
};

struct OracleValue {
  double value = 0.0;
  std::optional<Rational> exact;  // present when computed in exact arithmetic
  std::string method;
};

// Shortest-path distances and counts from one source, plus the BFS visiting order.
template <class Count>
struct PathCounts {
  std::vector<std::uint32_t> dist;
  std::vector<Count> sigma;
  std::vector<VertexId> order;
};

template <class Count>
PathCounts<Count> count_shortest_paths(const DirectedGraph& g, VertexId source,
                                       Direction dir = Direction::forward) {
  PathCounts<Count> pc;
  pc.dist.assign(g.vertex_count(), kUnreachable);
  pc.sigma.assign(g.vertex_count(), Count(0));
  pc.order.reserve(g.vertex_count());
  pc.dist[source] = 0;
  pc.sigma[source] = Count(1);
  pc.order.push_back(source);
  for (std::size_t head = 0; head < pc.order.size(); ++head) {
    const VertexId u = pc.order[head];
    for (VertexId w : g.neighbors(u, dir)) {
      if (pc.dist[w] == kUnreachable) {
        pc.dist[w] = pc.dist[u] + 1;
        pc.order.push_back(w);
      }
      if (pc.dist[w] == pc.dist[u] + 1) pc.sigma[w] += pc.sigma[u];
    }
  }
  return pc;
}

namespace detail {

inline bool use_rationals(const DirectedGraph& g, const OracleOptions& opts) {
  return g.vertex_count() <= opts.rational_threshold;
}

inline void require_size(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw GuardError(std::string(what) + " limited to " + std::to_string(limit) + " vertices, got " +
                     std::to_string(n));
  }
}

// Accumulates Σ num_i / den_i exactly by first summing numerators that share a
// denominator; shortest-path counts take few distinct values, so this avoids most
// big-rational normalizations.
class GroupedSum {
 public:
  void add(const BigInt& num, const BigInt& den) { groups_[den] += num; }
  Rational total() const {
    Rational sum = 0;
    for (const auto& [den, num] : groups_) sum += Rational(num, den);
    return sum;
  }

 private:
  std::map<BigInt, BigInt> groups_;
};

// Dependency δ_s(r) of source s on r by Brandes back-propagation, restricted to the
// part of the shortest-path DAG below r (no other vertex feeds δ_s(r)).
template <class Count, class Value>
Value single_source_dependency(const DirectedGraph& g, VertexId s, VertexId r,
                               std::vector<char>& below, std::vector<Value>& delta) {
  const auto pc = count_shortest_paths<Count>(g, s);
  if (pc.dist[r] == kUnreachable) return Value(0);
  std::fill(below.begin(), below.end(), 0);
  below[r] = 1;
  for (VertexId v : pc.order) {
    if (!below[v]) continue;
    for (VertexId w : g.out_neighbors(v)) {
      if (pc.dist[w] == pc.dist[v] + 1) below[w] = 1;
    }
  }
  for (auto it = pc.order.rbegin(); it != pc.order.rend(); ++it) {
    const VertexId v = *it;
    if (!below[v]) continue;
    Value acc = 0;
    for (VertexId w : g.out_neighbors(v)) {
      if (pc.dist[w] == pc.dist[v] + 1) acc += (Value(1) + delta[w]) / Value(pc.sigma[w]);
    }
    delta[v] = Value(pc.sigma[v]) * acc;
    if (v == r) break;
  }
  return delta[r];
}

}  // namespace detail

// bc(r) = 1/(|V|(|V|-1)) Σ_{s,t ≠ r} σ_st(r)/σ_st, summed as Σ_s δ_s(r) over every source.
inline OracleValue brandes_bc(const DirectedGraph& g, VertexId r, const OracleOptions& opts = {}) {
  if (!g.valid(r)) throw std::out_of_range("vertex out of range");
  detail::require_size(g.vertex_count(), opts.brandes_max_vertices, "Brandes betweenness");
  const std::size_t n = g.vertex_count();
  OracleValue out;
  out.method = "brandes";
  if (n < 2) {
    out.exact = Rational(0);
    return out;
  }
  std::vector<char> below(n);
  if (detail::use_rationals(g, opts)) {
    std::vector<Rational> delta(n);
    Rational sum = 0;
    for (VertexId s = 0; s < n; ++s) {
      if (s == r) continue;
      sum += detail::single_source_dependency<BigInt, Rational>(g, s, r, below, delta);
    }
    sum /= Rational(static_cast<long long>(n) * static_cast<long long>(n - 1));
    out.value = to_double(sum);
    out.exact = std::move(sum);
  } else {
    std::vector<double> delta(n);
    double sum = 0;
    for (VertexId s = 0; s < n; ++s) {
      if (s == r) continue;
      sum += detail::single_source_dependency<double, double>(g, s, r, below, delta);
    }
    out.value = sum / (static_cast<double>(n) * static_cast<double>(n - 1));
  }
  return out;
}

// Betweenness of every vertex in one Brandes pass. `exact` is filled only in
// rational mode.
struct AllScores {
  std::vector<double> value;
  std::vector<Rational> exact;
};

inline AllScores brandes_all(const DirectedGraph& g, const OracleOptions& opts = {}) {
  detail::require_size(g.vertex_count(), opts.brandes_max_vertices, "Brandes betweenness");
  const std::size_t n = g.vertex_count();
  AllScores out;
  out.value.assign(n, 0.0);
  if (n < 2) {
    out.exact.assign(n, Rational(0));
    return out;
  }
  auto run = [&]<class Count, class Value>(std::vector<Value>& total) {
    std::vector<Value> delta(n);
    for (VertexId s = 0; s < n; ++s) {
      const auto pc = count_shortest_paths<Count>(g, s);
      for (VertexId v : pc.order) delta[v] = 0;
      for (auto it = pc.order.rbegin(); it != pc.order.rend(); ++it) {
        const VertexId w = *it;
        for (VertexId v : g.in_neighbors(w)) {
          if (pc.dist[v] != kUnreachable && pc.dist[v] + 1 == pc.dist[w]) {
            delta[v] += Value(pc.sigma[v]) / Value(pc.sigma[w]) * (Value(1) + delta[w]);
          }
        }
        if (w != s) total[w] += delta[w];
      }
    }
  };
  const double norm = static_cast<double>(n) * static_cast<double>(n - 1);
  if (detail::use_rationals(g, opts)) {
    out.exact.assign(n, Rational(0));
    run.template operator()<BigInt, Rational>(out.exact);
    const Rational scale(static_cast<long long>(n) * static_cast<long long>(n - 1));
    for (std::size_t v = 0; v < n; ++v) {
      out.exact[v] /= scale;
      out.value[v] = to_double(out.exact[v]);
    }
  } else {
    run.template operator()<double, double>(out.value);
    for (double& x : out.value) x /= norm;
  }
  return out;
}

// Betweenness of r from source/target pairs in RF(r) × RT(r) only:
// σ_st(r) = σ_sr σ_rt when d(s,r) + d(r,t) = d(s,t), and 0 otherwise.
inline OracleValue restricted_pair_bc(const DirectedGraph& g, VertexId r, const ReachabilityResult& reach,
                                      const OracleOptions& opts = {}) {
  if (reach.root != r || reach.vertex_count != g.vertex_count()) {
    throw std::invalid_argument("reachability result does not belong to this vertex");
  }
  const std::size_t n = g.vertex_count();
  OracleValue out;
  out.method = "restricted-pairs";
  if (n < 2 || reach.rf.empty() || reach.rt.empty()) {
    out.exact = Rational(0);
    return out;
  }
  if (detail::use_rationals(g, opts)) {
    const auto from_r = count_shortest_paths<BigInt>(g, r);
    detail::GroupedSum sum;
    for (VertexId s : reach.rf) {
      const auto from_s = count_shortest_paths<BigInt>(g, s);
      const std::uint32_t dsr = from_s.dist[r];
      for (VertexId t : reach.rt) {
        if (t == s) continue;
        if (dsr + from_r.dist[t] == from_s.dist[t]) {
          sum.add(from_s.sigma[r] * from_r.sigma[t], from_s.sigma[t]);
        }
      }
    }
    Rational total = sum.total() / Rational(static_cast<long long>(n) * static_cast<long long>(n - 1));
    out.value = to_double(total);
    out.exact = std::move(total);
  } else {
    const auto from_r = count_shortest_paths<double>(g, r);
    double total = 0;
    for (VertexId s : reach.rf) {
      const auto from_s = count_shortest_paths<double>(g, s);
      const std::uint32_t dsr = from_s.dist[r];
      for (VertexId t : reach.rt) {
        if (t == s) continue;
        if (dsr + from_r.dist[t] == from_s.dist[t]) total += from_s.sigma[r] * from_r.sigma[t] / from_s.sigma[t];
      }
    }
    out.value = total / (static_cast<double>(n) * static_cast<double>(n - 1));
  }
  return out;
}

// cc(r): fraction of ordered pairs (s, t), s,t ≠ r, for which r lies on at least one
// shortest s → t path.
inline OracleValue exact_coverage(const DirectedGraph& g, VertexId r, const OracleOptions& opts = {}) {
  if (!g.valid(r)) throw std::out_of_range("vertex out of range");
  detail::require_size(g.vertex_count(), opts.coverage_max_vertices, "exact coverage");
  const std::size_t n = g.vertex_count();
  OracleValue out;
  out.method = "all-pairs-bfs";
  if (n < 2) {
    out.exact = Rational(0);
    return out;
  }
  const auto from_r = bfs_distances(g, r);
  std::uint64_t count = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (s == r) continue;
    const auto from_s = bfs_distances(g, s);
    if (from_s[r] == kUnreachable) continue;
    for (VertexId t = 0; t < n; ++t) {
      if (t == r || t == s || from_r[t] == kUnreachable) continue;
      if (from_s[r] + from_r[t] == from_s[t]) ++count;
    }
  }
  out.exact = Rational(BigInt(count), BigInt(static_cast<std::uint64_t>(n) * (n - 1)));
  out.value = to_double(*out.exact);
  return out;
}

// pc(r) = 1/(k|V|) Σ_{s ≠ r} Σ_{1 ≤ l ≤ k} Σ_{simple p_{s,l}} χ[r ∈ p] W(p), by
// enumerating every simple path with at most k edges.
inline OracleValue exact_kpath(const DirectedGraph& g, VertexId r, int k,
                               WeightDefinition wdef = WeightDefinition::original,
                               const OracleOptions& opts = {}) {
  if (!g.valid(r)) throw std::out_of_range("vertex out of range");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  detail::require_size(g.vertex_count(), opts.kpath_max_vertices, "exact k-path");
  if (static_cast<std::size_t>(k) > opts.kpath_max_k) {
    throw GuardError("exact k-path limited to k <= " + std::to_string(opts.kpath_max_k));
  }
  const std::size_t n = g.vertex_count();
  OracleValue out;
  out.method = wdef == WeightDefinition::original ? "path-enumeration" : "path-enumeration-domain-w";

  std::vector<char> in_domain(n, 1);
  if (wdef == WeightDefinition::domain_restricted) {
    const auto reach = compute_reachability(g, r);
    for (VertexId v = 0; v < n; ++v) in_domain[v] = reach.in_domain(v) ? 1 : 0;
  }

  detail::GroupedSum sum;
  std::vector<VertexId> path;
  std::vector<char> on_path(n, 0);
  // Depth-first over simple paths; `den` is the product of normalizer sizes so far.
  auto extend = [&](auto&& self, const BigInt& den, bool has_r) -> void {
    if (path.size() - 1 >= static_cast<std::size_t>(k)) return;
    const VertexId u = path.back();
    std::uint64_t size = 0;
    for (VertexId w : g.out_neighbors(u)) {
      if (!on_path[w] && in_domain[w]) ++size;
    }
    if (size == 0) return;
    const BigInt next_den = den * size;
    for (VertexId w : g.out_neighbors(u)) {
      if (on_path[w] || !in_domain[w]) continue;
      const bool next_has_r = has_r || w == r;
      path.push_back(w);
      on_path[w] = 1;
      if (next_has_r) sum.add(BigInt(1), next_den);
      self(self, next_den, next_has_r);
      on_path[w] = 0;
      path.pop_back();
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    if (s == r) continue;
    path.assign(1, s);
    on_path[s] = 1;
    extend(extend, BigInt(1), false);
    on_path[s] = 0;
  }
  Rational total = sum.total() / Rational(static_cast<long long>(k) * static_cast<long long>(n));
  out.value = to_double(total);
  out.exact = std::move(total);
  return out;
}

}  // namespace dircent
