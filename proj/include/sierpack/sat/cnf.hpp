#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sierpack/base_graph.hpp"
#include "sierpack/graph.hpp"
#include "sierpack/packing.hpp"
#include "sierpack/sierp_graph.hpp"

namespace sierpack::sat {

/// Flat clause storage: literals are DIMACS-style signed variable indices.
class ClauseList {
 public:
  void add(std::span<const int> lits);
  void add(std::initializer_list<int> lits) { add(std::span<const int>(lits.begin(), lits.size())); }

  std::size_t size() const { return starts_.size(); }
  bool empty() const { return starts_.empty(); }
  std::span<const int> operator[](std::size_t i) const {
    std::size_t end = i + 1 < starts_.size() ? starts_[i + 1] : lits_.size();
    return {lits_.data() + starts_[i], lits_.data() + end};
  }
  std::size_t num_literals() const { return lits_.size(); }

  friend bool operator==(const ClauseList&, const ClauseList&) = default;

 private:
  std::vector<int> lits_;
  std::vector<std::size_t> starts_;
};

/// A packing-coloring CNF over variables x_{v,i}: vertex v has color i.
///
/// Variable numbering is fixed: x_{v,i} = v * colors + i (1-based, i in
/// 1..colors), so the map is a bijection onto 1..|V|*colors.
struct CnfInstance {
  int num_vars = 0;
  ClauseList clauses;
  int colors = 0;
  std::size_t num_vertices = 0;
  std::vector<std::string> labels;  ///< vertex labels for the DIMACS var map
  std::string graph;                ///< graph descriptor
  std::string kind = "packing";     ///< packing | extendable

  int var(VertexId v, int color) const { return static_cast<int>(v) * colors + color; }
  /// (vertex, color) of a 1-based variable.
  std::pair<VertexId, int> key(int var) const {
    return {static_cast<VertexId>((var - 1) / colors), (var - 1) % colors + 1};
  }
};

/// Distance-tagged vertex pair u < v, produced once per pair.
struct ConflictPair {
  VertexId u;
  VertexId v;
  int distance;
};

/// All pairs u < v with d(u, v) <= radius, sorted by (u, v).
std::vector<ConflictPair> close_pairs(const Graph& g, int radius);

/// At-least-one-color clause per vertex, plus (-x_{u,i} | -x_{v,i}) for every
/// color i and pair with d(u,v) <= i. No at-most-one clauses.
CnfInstance encode_packing(const Graph& g, int colors, std::vector<std::string> labels = {},
                           std::string graph = {});
CnfInstance encode_packing(const SierpGraph& s, int colors);

/// Same variables over S^l_G; a pair conflicts at color i when its distance
/// in some augmented graph ^{ij}S^l_G is <= i. Models are exactly the
/// extendable packing colorings.
CnfInstance encode_extendable(const BaseGraph& base, int level, int colors, const BuildLimits& limits = {});

/// encode_extendable plus unit clauses forbidding self-copy clashes (see
/// find_self_copy_clash): the seeds that lift.
CnfInstance encode_liftable(const BaseGraph& base, int level, int colors, const BuildLimits& limits = {});

/// Pairs u < v with min over base edges ij of d_{^{ij}S^l}(u, v) <= radius.
std::vector<ConflictPair> extendable_close_pairs(const SierpGraph& plain, int radius);

struct Fix {
  VertexId vertex;
  int color;
  bool value;
};

/// Appends one unit clause per fix. Throws PreconditionError on an unknown
/// vertex or color.
CnfInstance add_assumptions(CnfInstance inst, std::span<const Fix> fixes);

/// Least true color per vertex. Throws PreconditionError if `model` does
/// not satisfy the instance or some vertex has no true color.
/// `model` is indexed by variable (model[0] unused).
Coloring decode_model(const CnfInstance& inst, const std::vector<bool>& model);

/// True iff every clause has a literal made true by `model`.
bool satisfies(const ClauseList& clauses, const std::vector<bool>& model);

}  // namespace sierpack::sat
