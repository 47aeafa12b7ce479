#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dircent/graph.hpp"
#include "dircent/reachability.hpp"
#include "dircent/rng.hpp"

namespace dircent {

// Every shortest s → t path, as a DAG over the vertices that lie on at least one of
// them. sigma is the number of shortest s → v paths (an integer held in a double:
// exact below 2^53, relative error 1e-16 above). preds lists shortest-path
// predecessors by node index.
struct ShortestPathDag {
  struct Node {
    VertexId vertex;
    std::uint32_t dist;  // d(s, vertex)
    double sigma;
    std::vector<std::uint32_t> preds;
  };

  VertexId source = 0;
  VertexId target = 0;
  std::uint32_t distance = 0;  // d(s, t)
  std::vector<Node> nodes;
  std::uint32_t source_node = 0;
  std::uint32_t target_node = 0;

  double sigma_st() const { return nodes[target_node].sigma; }

  bool contains(VertexId v) const {
    return std::any_of(nodes.begin(), nodes.end(), [v](const Node& n) { return n.vertex == v; });
  }
};

struct PathSample {
  std::vector<VertexId> vertices;  // s ... t
  bool contains_r = false;
};

// Balanced bidirectional BFS over one graph. Keeps epoch-stamped scratch arrays so
// repeated queries cost only the part of the graph they touch. Not thread-safe; use
// one instance per thread.
class BidirectionalBfs {
 public:
  explicit BidirectionalBfs(const DirectedGraph& g)
      : g_(&g),
        fwd_stamp_(g.vertex_count(), 0),
        bwd_stamp_(g.vertex_count(), 0),
        fdist_(g.vertex_count()),
        bdist_(g.vertex_count()),
        fsig_(g.vertex_count()),
        bsig_(g.vertex_count()),
        node_stamp_(g.vertex_count(), 0),
        node_of_(g.vertex_count()) {}

  // d(s, t), or nullopt when t is unreachable from s.
  std::optional<std::uint32_t> distance(VertexId s, VertexId t) {
    if (s == t) return 0;
    return search(s, t, /*count_paths=*/false);
  }

  // Shortest-path DAG from s to t, or nullopt when t is unreachable. s != t.
  std::optional<ShortestPathDag> build_dag(VertexId s, VertexId t) {
    ShortestPathDag dag;
    if (!build_dag(s, t, dag)) return std::nullopt;
    return dag;
  }

  bool build_dag(VertexId s, VertexId t, ShortestPathDag& dag) {
    if (s == t) throw std::invalid_argument("shortest-path DAG needs distinct endpoints");
    const auto d = search(s, t, /*count_paths=*/true);
    if (!d) return false;
    stitch(s, t, *d, dag);
    return true;
  }

 private:
  bool fwd_seen(VertexId v) const { return fwd_stamp_[v] == epoch_; }
  bool bwd_seen(VertexId v) const { return bwd_stamp_[v] == epoch_; }

  double frontier_cost(const std::vector<VertexId>& frontier, Direction dir) const {
    double cost = 0;
    for (VertexId v : frontier) cost += static_cast<double>(g_->neighbors(v, dir).size());
    return cost;
  }

  // Level-synchronous search from both ends, expanding whichever frontier has the
  // smaller edge volume. A whole level is always finished before checking for
  // contact, so every meeting vertex and its full path count is known. On return
  // `meeting_` holds the vertices at forward depth fwd_level_ and backward depth
  // bwd_level_ that lie on shortest paths.
  std::optional<std::uint32_t> search(VertexId s, VertexId t, bool count_paths) {
    if (!g_->valid(s) || !g_->valid(t)) throw std::out_of_range("vertex out of range");
    next_epoch();
    fwd_frontier_.assign(1, s);
    bwd_frontier_.assign(1, t);
    fwd_stamp_[s] = epoch_;
    fdist_[s] = 0;
    fsig_[s] = 1;
    bwd_stamp_[t] = epoch_;
    bdist_[t] = 0;
    bsig_[t] = 1;
    fwd_level_ = 0;
    bwd_level_ = 0;
    meeting_.clear();
    while (!fwd_frontier_.empty() && !bwd_frontier_.empty()) {
      const bool forward =
          frontier_cost(fwd_frontier_, Direction::forward) <= frontier_cost(bwd_frontier_, Direction::reverse);
      if (forward) {
        expand(fwd_frontier_, Direction::forward, fwd_stamp_, fdist_, fsig_, fwd_level_, count_paths);
        for (VertexId v : fwd_frontier_) {
          if (bwd_seen(v)) meeting_.push_back(v);
        }
      } else {
        expand(bwd_frontier_, Direction::reverse, bwd_stamp_, bdist_, bsig_, bwd_level_, count_paths);
        for (VertexId v : bwd_frontier_) {
          if (fwd_seen(v)) meeting_.push_back(v);
        }
      }
      if (!meeting_.empty()) return fwd_level_ + bwd_level_;
    }
    return std::nullopt;
  }

  void expand(std::vector<VertexId>& frontier, Direction dir, std::vector<std::uint32_t>& stamp,
              std::vector<std::uint32_t>& dist, std::vector<double>& sigma, std::uint32_t& level,
              bool count_paths) {
    next_.clear();
    for (VertexId u : frontier) {
      for (VertexId w : g_->neighbors(u, dir)) {
        if (stamp[w] != epoch_) {
          stamp[w] = epoch_;
          dist[w] = level + 1;
          sigma[w] = 0;
          next_.push_back(w);
        }
        if (count_paths && dist[w] == level + 1) sigma[w] += sigma[u];
      }
    }
    ++level;
    frontier.swap(next_);
  }

  std::uint32_t node_index(VertexId v, std::uint32_t dist, double sigma, ShortestPathDag& dag) {
    if (node_stamp_[v] == epoch_) return node_of_[v];
    node_stamp_[v] = epoch_;
    node_of_[v] = static_cast<std::uint32_t>(dag.nodes.size());
    dag.nodes.push_back({v, dist, sigma, {}});
    return node_of_[v];
  }

  // Joins the two half-searches into one DAG with forward path counts throughout.
  // Meeting vertices keep their forward counts. On the s side every in-neighbor one
  // level closer to s is a shortest-path predecessor. On the t side, counts flow
  // outward from the meeting level along edges that step one level closer to t.
  void stitch(VertexId s, VertexId t, std::uint32_t d, ShortestPathDag& dag) {
    dag.source = s;
    dag.target = t;
    dag.distance = d;
    dag.nodes.clear();

    std::vector<std::uint32_t> level;
    for (VertexId v : meeting_) level.push_back(node_index(v, fwd_level_, fsig_[v], dag));

    // s side: walk back from the meeting level toward s.
    std::vector<std::uint32_t> current = level;
    while (!current.empty() && dag.nodes[current.front()].dist > 0) {
      std::vector<std::uint32_t> previous;
      for (std::uint32_t idx : current) {
        const VertexId v = dag.nodes[idx].vertex;
        const std::uint32_t dv = dag.nodes[idx].dist;
        for (VertexId u : g_->in_neighbors(v)) {
          if (!fwd_seen(u) || fdist_[u] + 1 != dv) continue;
          const bool fresh = node_stamp_[u] != epoch_;
          const std::uint32_t ui = node_index(u, fdist_[u], fsig_[u], dag);
          dag.nodes[idx].preds.push_back(ui);
          if (fresh) previous.push_back(ui);
        }
      }
      current.swap(previous);
    }

    // t side: push counts from the meeting level toward t.
    current = level;
    for (std::uint32_t remaining = bwd_level_; remaining > 0; --remaining) {
      std::vector<std::uint32_t> following;
      for (std::uint32_t idx : current) {
        const VertexId v = dag.nodes[idx].vertex;
        for (VertexId x : g_->out_neighbors(v)) {
          if (!bwd_seen(x) || bdist_[x] + 1 != remaining) continue;
          const bool fresh = node_stamp_[x] != epoch_;
          const std::uint32_t xi = node_index(x, d - bdist_[x], 0.0, dag);
          dag.nodes[xi].sigma += dag.nodes[idx].sigma;
          dag.nodes[xi].preds.push_back(idx);
          if (fresh) following.push_back(xi);
        }
      }
      current.swap(following);
    }
    dag.source_node = node_of_[s];
    dag.target_node = node_of_[t];
  }

  void next_epoch() {
    if (++epoch_ == 0) {
      std::fill(fwd_stamp_.begin(), fwd_stamp_.end(), 0);
      std::fill(bwd_stamp_.begin(), bwd_stamp_.end(), 0);
      std::fill(node_stamp_.begin(), node_stamp_.end(), 0);
      epoch_ = 1;
    }
  }

  const DirectedGraph* g_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> fwd_stamp_, bwd_stamp_;
  std::vector<std::uint32_t> fdist_, bdist_;
  std::vector<double> fsig_, bsig_;
  std::vector<std::uint32_t> node_stamp_, node_of_;
  std::vector<VertexId> fwd_frontier_, bwd_frontier_, next_, meeting_;
  std::uint32_t fwd_level_ = 0, bwd_level_ = 0;
};

inline std::optional<ShortestPathDag> build_sp_dag(const DirectedGraph& g, VertexId s, VertexId t) {
  BidirectionalBfs search(g);
  return search.build_dag(s, t);
}

namespace detail {

// Position in `preds` chosen with probability sigma(preds[i]) / total.
inline std::size_t pick_weighted(Rng& rng, const std::vector<std::uint32_t>& preds,
                                 const std::vector<ShortestPathDag::Node>& nodes, double total) {
  if (preds.size() == 1) return 0;
  constexpr double kExactLimit = 9007199254740992.0;  // 2^53
  if (total <= kExactLimit) {
    auto x = static_cast<double>(rng.uniform(static_cast<std::uint64_t>(total)));
    for (std::size_t i = 0; i < preds.size(); ++i) {
      x -= nodes[preds[i]].sigma;
      if (x < 0) return i;
    }
  } else {
    double x = rng.uniform01() * total;
    for (std::size_t i = 0; i < preds.size(); ++i) {
      x -= nodes[preds[i]].sigma;
      if (x < 0) return i;
    }
  }
  return preds.size() - 1;
}

}  // namespace detail

// One shortest s → t path, each with probability exactly 1/σ_st: starting at t,
// step to predecessor u with probability σ_u / σ_v.
inline PathSample sample_uniform_path(const ShortestPathDag& dag, Rng& rng,
                                      std::optional<VertexId> r = std::nullopt) {
  PathSample out;
  out.vertices.resize(dag.distance + 1);
  std::uint32_t idx = dag.target_node;
  for (std::size_t pos = dag.distance;; --pos) {
    const auto& node = dag.nodes[idx];
    out.vertices[pos] = node.vertex;
    if (r && node.vertex == *r) out.contains_r = true;
    if (pos == 0) break;
    idx = node.preds[detail::pick_weighted(rng, node.preds, dag.nodes, node.sigma)];
  }
  return out;
}

// r lies on some shortest s → t path iff d(s,r) + d(r,t) = d(s,t).
inline bool on_some_shortest_path(BidirectionalBfs& search, VertexId s, VertexId t, VertexId /*r*/,
                                  const ReachabilityResult& reach) {
  if (reach.dist_to_r[s] == kUnreachable || reach.dist_from_r[t] == kUnreachable) return false;
  const auto d = search.distance(s, t);
  return d && reach.dist_to_r[s] + reach.dist_from_r[t] == *d;
}

inline bool on_some_shortest_path(const DirectedGraph& g, VertexId s, VertexId t, VertexId r,
                                  const ReachabilityResult& reach) {
  BidirectionalBfs search(g);
  return on_some_shortest_path(search, s, t, r, reach);
}

}  // namespace dircent
