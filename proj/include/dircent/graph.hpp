#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dircent/errors.hpp"

namespace dircent {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

enum class Direction { forward, reverse };

// Distance value for vertices a traversal never reached.
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

struct BuildStats {
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

// Immutable directed graph in compressed sparse row form, with both the forward
// (out-neighbor) and the reverse (in-neighbor) adjacency. Neighbor lists are sorted
// ascending, self-loops and parallel edges never appear.
class DirectedGraph {
 public:
  DirectedGraph() : out_offsets_(1, 0), in_offsets_(1, 0) {}

  static DirectedGraph from_edges(std::size_t vertex_count, std::vector<Edge> edges,
                                  BuildStats* stats = nullptr) {
    if (vertex_count > std::numeric_limits<VertexId>::max()) {
      throw std::length_error("too many vertices");
    }
    BuildStats local;
    std::erase_if(edges, [&](const Edge& e) {
      if (e.first >= vertex_count || e.second >= vertex_count) {
        throw std::out_of_range("edge endpoint out of range");
      }
      if (e.first == e.second) {
        ++local.self_loops;
        return true;
      }
      return false;
    });
    std::sort(edges.begin(), edges.end());
    const auto unique_end = std::unique(edges.begin(), edges.end());
    local.duplicate_edges = static_cast<std::size_t>(edges.end() - unique_end);
    edges.erase(unique_end, edges.end());
    if (stats != nullptr) *stats = local;

    DirectedGraph g;
    g.n_ = vertex_count;
    g.out_offsets_.assign(vertex_count + 1, 0);
    g.in_offsets_.assign(vertex_count + 1, 0);
    for (const auto& [u, v] : edges) {
      ++g.out_offsets_[u + 1];
      ++g.in_offsets_[v + 1];
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
      g.out_offsets_[v + 1] += g.out_offsets_[v];
      g.in_offsets_[v + 1] += g.in_offsets_[v];
    }
    // edges are sorted by (u, v), so each out-list comes out sorted; in-lists are
    // filled in increasing u for fixed v, so they are sorted too.
    g.out_targets_.resize(edges.size());
    g.in_targets_.resize(edges.size());
    std::vector<std::size_t> out_fill(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
    std::vector<std::size_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
      g.out_targets_[out_fill[u]++] = v;
      g.in_targets_[in_fill[v]++] = u;
    }
    return g;
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return out_targets_.size(); }

  bool valid(VertexId v) const noexcept { return v < n_; }

  std::span<const VertexId> out_neighbors(VertexId v) const {
    check(v);
    return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const VertexId> in_neighbors(VertexId v) const {
    check(v);
    return {in_targets_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
  }
  std::span<const VertexId> neighbors(VertexId v, Direction dir) const {
    return dir == Direction::forward ? out_neighbors(v) : in_neighbors(v);
  }

  std::size_t out_degree(VertexId v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(VertexId v) const { return in_neighbors(v).size(); }

  bool has_edge(VertexId u, VertexId v) const {
    const auto nb = out_neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Edges in lexicographic (tail, head) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < n_; ++u) {
      for (VertexId v : out_neighbors(u)) out.emplace_back(u, v);
    }
    return out;
  }

  // R(G): same vertices, every edge flipped.
  DirectedGraph reversed() const {
    DirectedGraph g;
    g.n_ = n_;
    g.out_offsets_ = in_offsets_;
    g.out_targets_ = in_targets_;
    g.in_offsets_ = out_offsets_;
    g.in_targets_ = out_targets_;
    return g;
  }

 private:
  void check(VertexId v) const {
    if (v >= n_) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
  }

  std::size_t n_ = 0;
  std::vector<std::size_t> out_offsets_;
  std::vector<VertexId> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<VertexId> in_targets_;
};

// Graph plus the mapping between dense ids and the labels used in the input file.
struct LabeledGraph {
  DirectedGraph graph;
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  BuildStats stats;

  VertexId vertex(const std::string& label) const {
    const auto it = ids.find(label);
    if (it == ids.end()) throw std::out_of_range("unknown vertex label '" + label + "'");
    return it->second;
  }
  const std::string& label(VertexId v) const { return labels.at(v); }
};

// Labels are densely numbered in order of first appearance. A label that only
// occurs in a dropped self-loop does not become a vertex.
inline LabeledGraph load_edge_list(std::istream& in) {
  LabeledGraph out;
  std::vector<std::pair<std::string, std::string>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b)) throw ParseError("expected two vertex labels", line_no);
    if (fields >> extra) throw ParseError("unexpected trailing field '" + extra + "'", line_no);
    raw.emplace_back(std::move(a), std::move(b));
  }
  if (raw.empty()) throw ParseError("edge list contains no edges", 0);

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = out.ids.emplace(label, static_cast<VertexId>(out.labels.size()));
    if (inserted) out.labels.push_back(label);
    return it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  std::size_t loops = 0;
  for (const auto& [a, b] : raw) {
    if (a == b) {
      ++loops;
      continue;
    }
    const VertexId u = intern(a);
    const VertexId v = intern(b);
    edges.emplace_back(u, v);
  }
  if (out.labels.empty()) throw ParseError("edge list contains only self-loops", 0);
  out.graph = DirectedGraph::from_edges(out.labels.size(), std::move(edges), &out.stats);
  out.stats.self_loops = loops;
  return out;
}

inline LabeledGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

inline LabeledGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return load_edge_list(in);
}

// Same text format the loader reads: one "u v" line per edge, in lexicographic
// order of dense ids, written with the original labels.
inline void write_edge_list(std::ostream& out, const LabeledGraph& lg) {
  for (const auto& [u, v] : lg.graph.edges()) out << lg.labels[u] << ' ' << lg.labels[v] << '\n';
}

// Labels "0".."n-1" for a graph built in memory.
inline LabeledGraph with_index_labels(DirectedGraph g) {
  LabeledGraph out;
  out.labels.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out.labels.push_back(std::to_string(v));
    out.ids.emplace(out.labels.back(), static_cast<VertexId>(v));
  }
  out.graph = std::move(g);
  return out;
}

// Hop distances from `source` along `dir`; unreached vertices hold kUnreachable.
inline std::vector<std::uint32_t> bfs_distances(const DirectedGraph& g, VertexId source,
                                                Direction dir = Direction::forward) {
  if (!g.valid(source)) throw std::out_of_range("source vertex out of range");
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (VertexId w : g.neighbors(u, dir)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// 64-bit FNV-1a over the dense edge list; identifies a graph in reports.
inline std::uint64_t graph_fingerprint(const DirectedGraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xFF;
      h *= 0x100000001b3ULL;
    }
  };
  mix(g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    mix(u);
    mix(v);
  }
  return h;
}

}  // namespace dircent
