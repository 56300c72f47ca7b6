#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sierpack/base_graph.hpp"
#include "sierpack/graph.hpp"
#include "sierpack/sierp_graph.hpp"

namespace sierpack {

/// A total map from vertices to colors {1..c}.
struct Coloring {
  std::string graph;        ///< graph descriptor the coloring belongs to
  int c = 0;                ///< declared number of colors
  std::vector<int> colors;  ///< colors[v] for every vertex id v

  /// Number of distinct colors actually used.
  int colors_used() const;
};

/// Two distinct vertices of the same color `color` at distance <= color.
struct Violation {
  VertexId u = 0;
  VertexId v = 0;
  int color = 0;
  int distance = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks every color class X_i is an i-packing. Returns the first violation
/// in vertex order (source u ascending, then BFS order from u), or nullopt.
/// Throws PreconditionError on a partial coloring or a color outside {1..c}.
std::optional<Violation> verify_packing(const Graph& g, const Coloring& f);

/// Every violating pair (u < v), sorted.
std::vector<Violation> list_violations(const Graph& g, const Coloring& f);

/// First-fit packing coloring: each vertex in turn takes the least color i
/// with no vertex of color i within distance i. Always valid.
Coloring greedy_packing(const Graph& g, std::string graph = {});

struct ExtendableVerdict {
  bool valid = true;
  /// Set when the failure only appears after adding the edge {i^l, j^l}.
  std::optional<std::pair<int, int>> augmented_edge;
  std::optional<Violation> violation;
};

/// Checks `f` is a packing coloring of ^{ij}S^l_G for every edge ij of the base.
ExtendableVerdict verify_extendable(const SierpGraph& plain, const Coloring& f);
ExtendableVerdict verify_extendable(const BaseGraph& base, int level, const Coloring& f);

/// A vertex u of color t whose two images iu and ju in adjacent copies of
/// S^{l+1}_G are within distance t: d(u, i^l) + 1 + d(j^l, u) <= t.
struct SelfCopyClash {
  VertexId vertex = 0;
  int i = 0;
  int j = 0;
  int color = 0;
  int distance = 0;
};

/// First self-copy clash of `f` over the edges ij of the base, or nullopt.
/// Extendability does not rule these out, and lifting needs their absence.
std::optional<SelfCopyClash> find_self_copy_clash(const SierpGraph& plain, const Coloring& f);

struct CopyPairDistance {
  int i = 0;
  int j = 0;
  int distance = 0;
};

struct LiftPrecondition {
  bool checkable = true;  ///< false when S^{l+1} exceeds the vertex budget
  bool holds = false;
  std::vector<CopyPairDistance> pairs;  ///< every non-adjacent i < j
};

/// Copy distance in S^{l+1}_G for each non-adjacent base pair, and whether
/// all of them exceed c.
LiftPrecondition check_lift_precondition(const BaseGraph& base, int level, int c,
                                         const BuildLimits& limits = {});

/// Colors wu (w in [k]^{n-l}, u in [k]^l) with f(u).
///
/// Verifies both preconditions and the absence of self-copy clashes first and throws PreconditionError naming the
/// failing pair or violation. The result is re-verified on S^n when it fits
/// in the vertex budget.
Coloring lift(const BaseGraph& base, int level, const Coloring& f, int n, const BuildLimits& limits = {});

}  // namespace sierpack
