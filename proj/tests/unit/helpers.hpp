#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "sierpack/graph.hpp"
#include "sierpack/sierp_graph.hpp"

namespace testing {

inline std::vector<std::pair<int, int>> int_edges(const sierpack::Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : g.edge_list()) out.push_back({static_cast<int>(u), static_cast<int>(v)});
  return out;
}

inline std::vector<std::vector<int>> oracle_distances(const sierpack::Graph& g) {
  return oracle::distances(oracle::adjacency(static_cast<int>(g.num_vertices()), int_edges(g)));
}

inline sierpack::SierpGraph make(const std::string& descriptor) {
  return sierpack::materialize(sierpack::GraphSpec::parse(descriptor));
}

}  // namespace testing
