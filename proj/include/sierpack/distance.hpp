#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sierpack/graph.hpp"
#include "sierpack/sierp_graph.hpp"

namespace sierpack {

/// Distances from one source, truncated at `radius`.
struct DistanceTable {
  VertexId source = 0;
  int radius = 0;
  /// (vertex, distance) sorted by vertex; only distances <= radius.
  std::vector<std::pair<VertexId, int>> entries;

  std::optional<int> distance_to(VertexId v) const;
};

/// Reusable breadth-first search scratch space.
///
/// Visit marks are epoch-stamped, so repeated runs on the same graph cost
/// only the size of the explored ball, not O(|V|).
class TruncatedBfs {
 public:
  explicit TruncatedBfs(const Graph& g);

  /// Explores from `sources` up to `radius` (negative: unbounded). Calls
  /// visit(vertex, distance) in BFS order, sources first; if it returns
  /// false the search stops.
  template <class Visit>
  void run(std::span<const VertexId> sources, int radius, Visit&& visit);

  /// Convenience: vertices within `radius` of `source` with their distances.
  std::vector<std::pair<VertexId, int>> ball(VertexId source, int radius);

 private:
  const Graph* g_;
  std::vector<unsigned> stamp_;
  std::vector<int> dist_;
  std::vector<VertexId> queue_;
  unsigned epoch_ = 0;
};

DistanceTable distances_from(const Graph& g, VertexId source, int radius);

/// All-pairs distance matrix by repeated BFS (unreachable: -1). Row-major.
std::vector<int> all_pairs_distances(const Graph& g);

/// min d(u, v) over u in copy i S^l and v in copy j S^l of an S^{l+1}_G.
int copy_distance(const SierpGraph& s, int i, int j);

// ---------------------------------------------------------------------------

template <class Visit>
void TruncatedBfs::run(std::span<const VertexId> sources, int radius, Visit&& visit) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0u);
    epoch_ = 1;
  }
  queue_.clear();
  for (VertexId s : sources) {
    if (stamp_[s] == epoch_) continue;
    stamp_[s] = epoch_;
    dist_[s] = 0;
    queue_.push_back(s);
  }
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    VertexId u = queue_[head];
    int du = dist_[u];
    if (!visit(u, du)) return;
    if (radius >= 0 && du >= radius) continue;
    for (VertexId w : g_->neighbors(u)) {
      if (stamp_[w] == epoch_) continue;
      stamp_[w] = epoch_;
      dist_[w] = du + 1;
      queue_.push_back(w);
    }
  }
}

}  // namespace sierpack
