#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sierpack/graph.hpp"
#include "sierpack/packing.hpp"
#include "sierpack/sat/cnf.hpp"
#include "sierpack/sat/solver.hpp"
#include "sierpack/sierp_graph.hpp"

namespace sierpack::sat {

/// Who settled a single "is there a packing c-coloring" question.
enum class Method { cdcl, class_search, greedy, external };

const char* to_string(Method m);

struct Attempt {
  int colors = 0;
  SolveStatus status = SolveStatus::unknown;
  Method method = Method::cdcl;
  std::uint64_t work = 0;  ///< conflicts, or search nodes for class_search
  double seconds = 0.0;
};

struct ChiRhoOptions {
  /// Largest c tried; 0 means up to the first-fit bound.
  int c_max = 0;
  /// Per-attempt limits for the CDCL solver.
  SolveBudget budget;
  bool symmetry_breaking = true;
  /// When CDCL runs out of budget on a graph of at most 64 vertices, retry
  /// with class_search under `class_budget`.
  bool class_search = true;
  SolveBudget class_budget;
};

/// Answer to "is there a packing c-coloring", with every attempt made.
struct Decision {
  SolveStatus status = SolveStatus::unknown;
  Method method = Method::cdcl;      ///< the attempt that settled it
  std::optional<Coloring> coloring;  ///< verified, for sat
  std::vector<Attempt> attempts;
};

/// CDCL (with symmetry breaking if enabled), then class search on small
/// graphs if CDCL runs out of budget.
Decision decide_packing(const Graph& g, int colors, const ChiRhoOptions& options,
                        std::span<const std::vector<VertexId>> automorphisms = {},
                        const std::vector<std::string>& labels = {}, const std::string& descriptor = {});
Decision decide_packing(const SierpGraph& s, int colors, const ChiRhoOptions& options);

/// Outcome of the search for the packing chromatic number.
///
/// `lower` is proven (no packing (lower-1)-coloring exists, by an internal
/// refutation). `upper` is 0 when no coloring within c_max was found,
/// otherwise `witness` is a verified packing `upper`-coloring.
struct ChiRhoResult {
  int lower = 1;
  int upper = 0;
  /// Largest c refuted only by an imported external claim, plus one.
  std::optional<int> claimed_lower;
  std::optional<Coloring> witness;
  std::vector<Attempt> attempts;

  bool exact() const { return upper != 0 && lower == upper; }
  std::optional<int> value() const { return exact() ? std::optional<int>(upper) : std::nullopt; }
};

/// Symmetry-breaking clauses that keep at least one model of every
/// satisfiable instance.
///
/// Colors >= the diameter D hold at most one vertex and are interchangeable.
/// Color D may only sit on an orbit representative of `automorphisms`, and
/// color j + 1 > D + 1 only on a vertex after some vertex of color j.
void add_symmetry_breaking(CnfInstance& inst, const Graph& g,
                           std::span<const std::vector<VertexId>> automorphisms);

/// Vertex maps of `s` induced by the automorphisms of its base (the
/// augmented edge, if any, must be preserved).
std::vector<std::vector<VertexId>> sierpinski_automorphisms(const SierpGraph& s);

/// Ascending search over c = 1, 2, ... with a first-fit coloring as the
/// initial upper bound. If some c is left unknown, the search continues
/// downward from the upper bound to tighten it, leaving a proven bracket.
ChiRhoResult chi_rho_exact(const Graph& g, const ChiRhoOptions& options,
                           std::span<const std::vector<VertexId>> automorphisms = {},
                           const std::vector<std::string>& labels = {}, const std::string& descriptor = {});
ChiRhoResult chi_rho_exact(const SierpGraph& s, const ChiRhoOptions& options);

/// Folds an externally obtained verdict for c colors into `result`. A claimed
/// unsat only raises `claimed_lower`; a sat claim must come with a model
/// that decodes to a valid coloring of `g`, or PreconditionError is thrown.
void record_external(ChiRhoResult& result, const Graph& g, int colors, SolveStatus claimed,
                     const std::optional<Coloring>& coloring = std::nullopt);

}  // namespace sierpack::sat
