#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sierpack/graph.hpp"
#include "sierpack/packing.hpp"
#include "sierpack/sat/solver.hpp"

namespace sierpack::sat {

struct ClassSearchResult {
  SolveStatus status = SolveStatus::unknown;
  std::optional<Coloring> coloring;  ///< set for sat
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

constexpr std::size_t class_search_max_vertices = 64;

/// Decides packing c-colorability by choosing the color classes X_1, X_2, ...
/// in turn, each a maximal i-packing of the still uncolored vertices.
///
/// Any packing coloring can be normalized so that this holds (move a vertex
/// down to the least class it fits in), so the search is complete. Branches
/// are cut when the uncolored vertices exceed the summed i-packing numbers of
/// the remaining colors. `automorphisms` (vertex maps) are used to keep only
/// lexicographically least first classes; pass none if unknown.
///
/// `budget.max_conflicts` bounds search nodes. Throws PreconditionError above
/// class_search_max_vertices vertices.
ClassSearchResult class_search(const Graph& g, int colors,
                               std::span<const std::vector<VertexId>> automorphisms = {},
                               const SolveBudget& budget = {});

}  // namespace sierpack::sat
