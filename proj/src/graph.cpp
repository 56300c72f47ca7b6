#include "sierpack/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace sierpack {

Graph::Graph(std::size_t num_vertices, std::span<const Edge> edges) {
  std::vector<Edge> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= num_vertices || v >= num_vertices) {
      throw std::out_of_range("edge endpoint outside vertex range");
    }
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  offsets_.assign(num_vertices + 1, 0);
  for (auto [u, v] : arcs) ++offsets_[u + 1];
  for (std::size_t i = 0; i < num_vertices; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.reserve(arcs.size());
  for (auto [u, v] : arcs) adjacency_.push_back(v);
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const VertexId> vertices) const {
  std::unordered_map<VertexId, VertexId> index;
  for (VertexId t = 0; t < vertices.size(); ++t) index.emplace(vertices[t], t);
  std::vector<Edge> edges;
  for (VertexId t = 0; t < vertices.size(); ++t) {
    for (VertexId w : neighbors(vertices[t])) {
      auto it = index.find(w);
      if (it != index.end() && t < it->second) edges.emplace_back(t, it->second);
    }
  }
  return Graph(vertices.size(), edges);
}

}  // namespace sierpack
