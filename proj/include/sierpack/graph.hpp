#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sierpack {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Neighbor lists are sorted ascending. Parallel edges and self-loops in the
/// input are dropped, so the stored graph is always simple.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t num_vertices, std::span<const Edge> edges);

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(VertexId u, VertexId v) const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edge_list() const;

  /// Subgraph induced by `vertices`; vertex `vertices[t]` becomes t.
  Graph induced(std::span<const VertexId> vertices) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
};

}  // namespace sierpack
