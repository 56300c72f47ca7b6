#pragma once

#include <cstdint>
#include <vector>

#include "sierpack/sat/cnf.hpp"

namespace sierpack::sat {

enum class SolveStatus { sat, unsat, unknown };

const char* to_string(SolveStatus s);

/// Resource limits; negative means unlimited.
struct SolveBudget {
  std::int64_t max_conflicts = -1;
  double max_seconds = -1.0;

  /// Reads SIERPACK_CONFLICT_BUDGET / SIERPACK_TIME_BUDGET when set.
  static SolveBudget from_env(SolveBudget fallback);
  static SolveBudget from_env() { return from_env(SolveBudget{}); }
};

struct SolveStats {
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t propagations = 0;
  std::uint64_t restarts = 0;
  double seconds = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::unknown;
  /// Indexed by variable, entry 0 unused. Filled only for sat.
  std::vector<bool> model;
  SolveStats stats;
};

/// Conflict-driven clause-learning search. Complete and deterministic: the
/// same clauses and budget always give the same answer and statistics
/// (except when the wall-clock limit is what stops the run).
///
/// A sat answer is returned only after the model has been re-checked against
/// the input clauses.
SolveResult solve(int num_vars, const ClauseList& clauses, const SolveBudget& budget = {});
inline SolveResult solve(const CnfInstance& inst, const SolveBudget& budget = {}) {
  return solve(inst.num_vars, inst.clauses, budget);
}

}  // namespace sierpack::sat
