#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dircent/errors.hpp"
#include "dircent/graph.hpp"
#include "dircent/rational.hpp"

namespace dircent {

// The two BFS trees rooted at r: the reverse one spans RF(r) (vertices that can
// reach r), the forward one spans RT(r) (vertices r can reach). r itself belongs to
// neither set. Distance vectors are indexed by vertex and hold kUnreachable
// outside the respective tree.
struct ReachabilityResult {
  VertexId root = 0;
  std::size_t vertex_count = 0;
  std::vector<VertexId> rf;  // ascending
  std::vector<VertexId> rt;  // ascending
  std::vector<std::uint32_t> dist_to_r;
  std::vector<std::uint32_t> dist_from_r;
  std::uint32_t reverse_depth = 0;
  std::uint32_t forward_depth = 0;
  // Number of vertices on a longest possible shortest path between RF(r) ∪ {r} and
  // RT(r) ∪ {r}: such a path is never longer than d(s,r) + d(r,t).
  std::uint32_t vd_upper_bound = 2;

  bool in_rf(VertexId v) const { return v != root && dist_to_r[v] != kUnreachable; }
  bool in_rt(VertexId v) const { return v != root && dist_from_r[v] != kUnreachable; }
  bool in_domain(VertexId v) const {
    return dist_to_r[v] != kUnreachable || dist_from_r[v] != kUnreachable;
  }

  std::size_t domain_size() const {
    std::size_t count = 0;
    for (std::size_t v = 0; v < vertex_count; ++v) count += in_domain(static_cast<VertexId>(v)) ? 1 : 0;
    return count;
  }

  // α(r) = |RF||RT| / (|V|(|V|-1))
  Fraction alpha() const {
    if (vertex_count < 2) return {0, 1};
    return {static_cast<std::uint64_t>(rf.size()) * rt.size(),
            static_cast<std::uint64_t>(vertex_count) * (vertex_count - 1)};
  }
  // α'(r) = |RF| / |V|
  Fraction alpha_prime() const {
    if (vertex_count == 0) return {0, 1};
    return {rf.size(), vertex_count};
  }
};

inline ReachabilityResult compute_reachability(const DirectedGraph& g, VertexId r) {
  ReachabilityResult out;
  out.root = r;
  out.vertex_count = g.vertex_count();
  out.dist_to_r = bfs_distances(g, r, Direction::reverse);
  out.dist_from_r = bfs_distances(g, r, Direction::forward);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v == r) continue;
    if (out.dist_to_r[v] != kUnreachable) {
      out.rf.push_back(static_cast<VertexId>(v));
      out.reverse_depth = std::max(out.reverse_depth, out.dist_to_r[v]);
    }
    if (out.dist_from_r[v] != kUnreachable) {
      out.rt.push_back(static_cast<VertexId>(v));
      out.forward_depth = std::max(out.forward_depth, out.dist_from_r[v]);
    }
  }
  out.vd_upper_bound = std::max<std::uint32_t>(2, out.reverse_depth + out.forward_depth + 1);
  return out;
}

// Exact vertex diameter of the whole graph: 1 + the largest finite BFS depth over
// all sources. O(|V||E|).
inline std::uint32_t whole_graph_vertex_diameter(const DirectedGraph& g) {
  std::uint32_t best = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    for (std::uint32_t d : bfs_distances(g, s)) {
      if (d != kUnreachable) best = std::max(best, d);
    }
  }
  return best + 1;
}

// Dense boolean reachability, reach(u, v) true iff there is a directed path u ⇝ v
// with u != v.
class TransitiveClosure {
 public:
  static constexpr std::size_t kMaxVertices = 2000;

  explicit TransitiveClosure(const DirectedGraph& g) : n_(g.vertex_count()) {
    if (n_ > kMaxVertices) {
      throw GuardError("transitive closure limited to " + std::to_string(kMaxVertices) + " vertices");
    }
    bits_.assign(n_ * n_, false);
    std::vector<VertexId> stack;
    std::vector<char> seen(n_);
    for (VertexId u = 0; u < n_; ++u) {
      std::fill(seen.begin(), seen.end(), 0);
      stack.assign(1, u);
      seen[u] = 1;
      while (!stack.empty()) {
        const VertexId x = stack.back();
        stack.pop_back();
        for (VertexId y : g.out_neighbors(x)) {
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
        }
      }
      for (VertexId v = 0; v < n_; ++v) bits_[u * n_ + v] = (v != u) && seen[v];
    }
  }

  bool operator()(VertexId u, VertexId v) const { return bits_[static_cast<std::size_t>(u) * n_ + v]; }
  std::size_t vertex_count() const { return n_; }

 private:
  std::size_t n_;
  std::vector<bool> bits_;
};

inline TransitiveClosure transitive_closure_oracle(const DirectedGraph& g) { return TransitiveClosure(g); }

}  // namespace dircent
