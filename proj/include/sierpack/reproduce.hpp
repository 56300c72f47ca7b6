#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sierpack/sat/chirho.hpp"
#include "sierpack/sat/solver.hpp"
#include "sierpack/sierp_graph.hpp"

namespace sierpack {

/// Closed interval of possible packing chromatic numbers.
struct Bracket {
  int lo = 0;
  int hi = 0;
  bool exact() const { return lo == hi; }
  friend bool operator==(const Bracket&, const Bracket&) = default;
};

/// Known value of chi_rho for a family member, or nullopt when none is
/// stated. `family` is path, cycle, k4e, paw or triangle; `k` is ignored
/// except for paths and cycles.
std::optional<Bracket> theorem_value(const std::string& family, int k, int n);

/// Graph descriptor of a family member, e.g. ("cycle", 5, 2) -> cycle:5/2.
std::string family_descriptor(const std::string& family, int k, int n);

struct ReproduceOptions {
  /// Per-leg CDCL limits (class search retries small graphs on unknown).
  sat::SolveBudget budget = {-1, 120.0};
  sat::SolveBudget class_budget = {-1, 300.0};
  BuildLimits limits;
};

/// Outcome of one (graph, value) cell.
///
/// status: proven (both legs internal), bracket (some leg left unknown),
/// claimed (rests on an external refutation), mismatch (a leg contradicts
/// the expected value), skipped (not attempted, e.g. over budget).
struct CellOutcome {
  std::string cell;
  std::string graph;
  Bracket expected;
  int lower = 0;  ///< proven lower bound (0 if none)
  int upper = 0;  ///< verified coloring size (0 if none)
  std::string status;
  std::string lower_by;  ///< how the lower bound was obtained
  std::string upper_by;  ///< how the upper bound was obtained
  double seconds = 0.0;
  std::vector<std::string> notes;
};

struct TheoremReport {
  std::string selector;
  std::vector<CellOutcome> cells;

  /// No mismatches and every exact expected value proven.
  bool all_proven() const;
  bool any_mismatch() const;
};

/// Known selectors: paths, cycles, cycles3, k4e, k4e-large, paw, paw-small,
/// triangle-small, p6p8, prop1, desk-limits.
std::vector<std::string> theorem_selectors();

/// Runs the lower (UNSAT at expected-1) and upper (construction or SAT,
/// always verified) legs of every cell of `selector`. Throws
/// PreconditionError for an unknown selector.
TheoremReport reproduce_theorem(const std::string& selector, const ReproduceOptions& options = {});

/// Compares chi_rho_exact against theorem_value for k in [kmin, kmax] (or the
/// single family member when k does not apply).
TheoremReport family_report(const std::string& family, int n, int kmin, int kmax,
                            const ReproduceOptions& options = {});

}  // namespace sierpack
