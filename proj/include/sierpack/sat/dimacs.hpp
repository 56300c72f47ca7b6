#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "sierpack/sat/cnf.hpp"
#include "sierpack/sat/solver.hpp"

namespace sierpack::sat {

// DIMACS CNF with the variable map carried in comments:
//   c sierpack <kind> graph <descriptor> colors <c> vertices <n>
//   c map <word> <color> <var>        one line per variable
//   p cnf <vars> <clauses>
//   <lit> ... 0                       one line per clause
// Files without the sierpack comments load as plain CNF (colors = 0).

void write_dimacs(std::ostream& out, const CnfInstance& inst);
CnfInstance read_dimacs(std::istream& in);

/// Result claimed by an external solver: `s SATISFIABLE` / `s UNSATISFIABLE`
/// status line plus `v` lines of signed literals (a bare literal list is also
/// accepted and read as a model).
struct ExternalResult {
  SolveStatus claimed = SolveStatus::unknown;
  std::vector<bool> model;  ///< indexed by variable; empty unless a model was given
};

ExternalResult read_model(std::istream& in, int num_vars);

}  // namespace sierpack::sat
