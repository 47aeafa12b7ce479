#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dircent/errors.hpp"
#include "dircent/graph.hpp"
#include "dircent/rng.hpp"

namespace dircent {

// Directed G(n, m): `edges` distinct ordered pairs, uniformly at random.
inline DirectedGraph erdos_renyi(std::size_t n, std::size_t edges, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  const std::size_t max_edges = n * (n - 1);
  edges = std::min(edges, max_edges);
  Rng rng(seed);
  std::set<Edge> chosen;
  while (chosen.size() < edges) {
    const auto u = static_cast<VertexId>(rng.uniform(n));
    const auto v = static_cast<VertexId>(rng.uniform(n));
    if (u != v) chosen.emplace(u, v);
  }
  return DirectedGraph::from_edges(n, {chosen.begin(), chosen.end()});
}

// Growth with preferential attachment: vertex i links to up to m earlier vertices
// picked with probability proportional to (degree + 1). Each link points toward
// the older vertex with probability `toward_old`, otherwise away from it.
inline DirectedGraph preferential_attachment(std::size_t n, std::size_t m, double toward_old,
                                             std::uint64_t seed) {
  if (n < 2 || m < 1) throw std::invalid_argument("need n >= 2 and m >= 1");
  Rng rng(seed);
  std::vector<VertexId> urn;  // vertex repeated (degree + 1) times
  std::vector<Edge> edges;
  urn.push_back(0);
  for (VertexId i = 1; i < n; ++i) {
    std::set<VertexId> targets;
    const std::size_t want = std::min<std::size_t>(m, i);
    while (targets.size() < want) targets.insert(urn[rng.uniform(urn.size())]);
    for (VertexId t : targets) {
      if (rng.uniform01() < toward_old) {
        edges.emplace_back(i, t);
      } else {
        edges.emplace_back(t, i);
      }
      urn.push_back(t);
      urn.push_back(i);
    }
    urn.push_back(i);
  }
  return DirectedGraph::from_edges(n, std::move(edges));
}

// `layers` layers of `width` vertices; each vertex links to every vertex of the
// next layer independently with probability p.
inline DirectedGraph layered_dag(std::size_t layers, std::size_t width, double p, std::uint64_t seed) {
  if (layers < 1 || width < 1) throw std::invalid_argument("need at least one layer and one vertex per layer");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t l = 0; l + 1 < layers; ++l) {
    for (std::size_t a = 0; a < width; ++a) {
      for (std::size_t b = 0; b < width; ++b) {
        if (rng.uniform01() < p) {
          edges.emplace_back(static_cast<VertexId>(l * width + a), static_cast<VertexId>((l + 1) * width + b));
        }
      }
    }
  }
  return DirectedGraph::from_edges(layers * width, std::move(edges));
}

// Parses "kind:key=value,key=value" generator specs, for example
//   er:n=500,m=2500,seed=3
//   pa:n=2000,m=2,toward_old=0.5,seed=7
//   dag:layers=6,width=10,p=0.3,seed=1
inline DirectedGraph generate_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  std::map<std::string, std::string> params;
  if (colon != std::string::npos) {
    std::istringstream fields(spec.substr(colon + 1));
    std::string item;
    while (std::getline(fields, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw ParseError("generator parameter '" + item + "' lacks '='", 0);
      params[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  auto number = [&](const std::string& key, double fallback) {
    const auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
      std::size_t used = 0;
      const double x = std::stod(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument(key);
      return x;
    } catch (const std::exception&) {
      throw ParseError("generator parameter '" + key + "' is not a number", 0);
    }
  };
  auto count = [&](const std::string& key, double fallback) { return static_cast<std::size_t>(number(key, fallback)); };
  const auto seed = static_cast<std::uint64_t>(number("seed", 1));
  if (kind == "er") {
    const std::size_t n = count("n", 100);
    return erdos_renyi(n, count("m", 3.0 * static_cast<double>(n)), seed);
  }
  if (kind == "pa") return preferential_attachment(count("n", 100), count("m", 2), number("toward_old", 0.5), seed);
  if (kind == "dag") return layered_dag(count("layers", 5), count("width", 10), number("p", 0.3), seed);
  throw ParseError("unknown generator '" + kind + "'", 0);
}

}  // namespace dircent
