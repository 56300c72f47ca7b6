#include "sierpack/distance.hpp"

#include <algorithm>
#include <limits>

#include "sierpack/errors.hpp"

namespace sierpack {

std::optional<int> DistanceTable::distance_to(VertexId v) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), std::make_pair(v, std::numeric_limits<int>::min()));
  if (it == entries.end() || it->first != v) return std::nullopt;
  return it->second;
}

TruncatedBfs::TruncatedBfs(const Graph& g)
    : g_(&g), stamp_(g.num_vertices(), 0u), dist_(g.num_vertices(), 0) {
  queue_.reserve(g.num_vertices());
}

std::vector<std::pair<VertexId, int>> TruncatedBfs::ball(VertexId source, int radius) {
  std::vector<std::pair<VertexId, int>> out;
  VertexId src[] = {source};
  run(src, radius, [&](VertexId v, int d) {
    out.emplace_back(v, d);
    return true;
  });
  return out;
}

DistanceTable distances_from(const Graph& g, VertexId source, int radius) {
  if (source >= g.num_vertices()) throw PreconditionError("unknown source vertex " + std::to_string(source));
  if (radius < 1) throw PreconditionError("radius must be at least 1");
  TruncatedBfs bfs(g);
  DistanceTable table{source, radius, bfs.ball(source, radius)};
  std::sort(table.entries.begin(), table.entries.end());
  return table;
}

std::vector<int> all_pairs_distances(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> dist(n * n, -1);
  TruncatedBfs bfs(g);
  for (VertexId s = 0; s < n; ++s) {
    VertexId src[] = {s};
    bfs.run(src, -1, [&](VertexId v, int d) {
      dist[s * n + v] = d;
      return true;
    });
  }
  return dist;
}

int copy_distance(const SierpGraph& s, int i, int j) {
  if (i == j) throw PreconditionError("copy distance needs two distinct copies");
  if (s.variant() == Variant::triangle) throw PreconditionError("copy distance is defined for S^n_G only");
  const int k = s.base().order();
  if (i < 0 || j < 0 || i >= k || j >= k) throw PreconditionError("copy index outside the base vertex set");
  if (s.dimension() < 2) throw PreconditionError("copy distance needs dimension at least 2");
  const auto block = static_cast<VertexId>(checked_power(k, s.dimension() - 1));
  std::vector<VertexId> sources(block);
  for (VertexId t = 0; t < block; ++t) sources[t] = static_cast<VertexId>(i) * block + t;
  TruncatedBfs bfs(s);
  int found = -1;
  bfs.run(sources, -1, [&](VertexId v, int d) {
    if (v / block == static_cast<VertexId>(j)) {
      found = d;
      return false;
    }
    return true;
  });
  if (found < 0) throw PreconditionError("copies are disconnected");
  return found;
}

}  // namespace sierpack
