#include "sierpack/reproduce.hpp"

#include <chrono>
#include <functional>

#include "sierpack/constructions.hpp"
#include "sierpack/errors.hpp"
#include "sierpack/sat/cnf.hpp"

namespace sierpack {

namespace {

std::string canonical_family(const std::string& family) {
  if (family == "path" || family == "paths") return "path";
  if (family == "cycle" || family == "cycles") return "cycle";
  if (family == "k4e" || family == "k4_minus_e") return "k4e";
  if (family == "paw") return "paw";
  if (family == "triangle" || family == "triangles") return "triangle";
  throw PreconditionError("unknown family '" + family + "'");
}

}  // namespace

std::optional<Bracket> theorem_value(const std::string& family_name, int k, int n) {
  const std::string family = canonical_family(family_name);
  if (family == "path") {
    if (n < 2 || k < 3) return std::nullopt;
    if (k == 3) return Bracket{3, 3};
    return n == 2 ? Bracket{4, 4} : Bracket{5, 5};
  }
  if (family == "cycle") {
    if (n < 2 || k < 4) return std::nullopt;
    if (n == 2) {
      if (k == 5) return Bracket{6, 6};
      if (k % 2 == 0 && k != 6) return Bracket{4, 4};
      return Bracket{5, 5};
    }
    if (k == 6 || k == 7) return Bracket{6, 6};
    if (k == 5) return n <= 6 ? Bracket{6, 6} : Bracket{6, 7};
    return Bracket{5, 5};
  }
  if (family == "k4e") {
    static const int v[] = {0, 3, 6, 8, 9};
    if (n < 1) return std::nullopt;
    return n <= 4 ? Bracket{v[n], v[n]} : Bracket{10, 10};
  }
  if (family == "paw") {
    static const int v[] = {0, 3, 5, 7};
    if (n < 1) return std::nullopt;
    return n <= 3 ? Bracket{v[n], v[n]} : Bracket{8, 8};
  }
  static const int v[] = {3, 4, 8, 12};
  if (n < 0) return std::nullopt;
  if (n <= 3) return Bracket{v[n], v[n]};
  if (n == 4) return Bracket{12, 15};
  if (n == 5) return Bracket{12, 19};
  return Bracket{12, 20};
}

std::string family_descriptor(const std::string& family_name, int k, int n) {
  const std::string family = canonical_family(family_name);
  if (family == "triangle") return "triangle/" + std::to_string(n);
  std::string base = family == "path"    ? "path:" + std::to_string(k)
                     : family == "cycle" ? "cycle:" + std::to_string(k)
                     : family == "k4e"   ? "k4_minus_e"
                                         : "paw";
  return base + "/" + std::to_string(n);
}

bool TheoremReport::all_proven() const {
  for (const auto& c : cells) {
    if (c.status != "proven") return false;
  }
  return !cells.empty();
}

bool TheoremReport::any_mismatch() const {
  for (const auto& c : cells) {
    if (c.status == "mismatch") return true;
  }
  return false;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

sat::ChiRhoOptions chi_options(const ReproduceOptions& o) {
  sat::ChiRhoOptions c;
  c.budget = o.budget;
  c.class_budget = o.class_budget;
  return c;
}

std::string describe(const sat::Decision& d) {
  std::string out = std::string(sat::to_string(d.status)) + " by " + sat::to_string(d.method);
  for (const auto& a : d.attempts) {
    if (a.method != d.method) out += " (" + std::string(sat::to_string(a.method)) + ": " + sat::to_string(a.status) + ")";
  }
  return out;
}

/// Upper-leg source: a verified coloring with at most `colors` colors and a
/// description, or nullopt to fall back to SAT.
using UpperSource = std::function<std::optional<std::pair<Coloring, std::string>>()>;

struct CellSpec {
  std::string cell;
  std::string graph;
  Bracket expected;
  UpperSource upper;
  /// Lower bound to report when the lower leg is left unknown, and why.
  std::optional<std::pair<int, std::string>> inherited_lower;
  /// Skip the lower leg (only the SAT leg is run).
  bool upper_only = false;
};

CellOutcome run_cell(const CellSpec& spec, const ReproduceOptions& options) {
  auto start = Clock::now();
  CellOutcome out{spec.cell, spec.graph, spec.expected, 0, 0, "", "", "", 0.0, {}};
  SierpGraph g = materialize(GraphSpec::parse(spec.graph), options.limits);
  const sat::ChiRhoOptions chi = chi_options(options);
  bool mismatch = false;

  // Lower leg: no packing (lo-1)-coloring.
  if (spec.expected.lo <= 1) {
    out.lower = spec.expected.lo;
    out.lower_by = "trivial";
  } else if (!spec.upper_only) {
    sat::Decision d = sat::decide_packing(g, spec.expected.lo - 1, chi);
    out.lower_by = "c=" + std::to_string(spec.expected.lo - 1) + ": " + describe(d);
    if (d.status == sat::SolveStatus::unsat) {
      out.lower = spec.expected.lo;
    } else if (d.status == sat::SolveStatus::sat) {
      mismatch = true;
      out.notes.push_back("found a packing " + std::to_string(spec.expected.lo - 1) + "-coloring");
    }
  }
  if (out.lower == 0 && spec.inherited_lower) {
    out.lower = spec.inherited_lower->first;
    out.lower_by += (out.lower_by.empty() ? "" : "; ") + spec.inherited_lower->second;
  }

  // Upper leg: construction, else SAT at hi.
  if (spec.upper) {
    try {
      if (auto made = spec.upper()) {
        if (verify_packing(g, made->first)) throw VerificationError("construction fails verification");
        if (made->first.colors_used() <= spec.expected.hi) {
          out.upper = made->first.colors_used();
          out.upper_by = made->second;
        } else {
          out.notes.push_back(made->second + " uses " + std::to_string(made->first.colors_used()) + " colors");
        }
      }
    } catch (const Error& e) {
      out.notes.push_back(std::string("construction rejected: ") + e.what());
    }
  }
  if (out.upper == 0) {
    sat::Decision d = sat::decide_packing(g, spec.expected.hi, chi);
    std::string how = "c=" + std::to_string(spec.expected.hi) + ": " + describe(d);
    out.upper_by += (out.upper_by.empty() ? "" : "; ") + how;
    if (d.status == sat::SolveStatus::sat) {
      out.upper = d.coloring->colors_used();
    } else if (d.status == sat::SolveStatus::unsat) {
      mismatch = true;
      out.notes.push_back("no packing " + std::to_string(spec.expected.hi) + "-coloring exists");
    } else {
      Coloring first_fit = greedy_packing(g);
      out.upper = first_fit.colors_used();
      out.upper_by += "; first-fit uses " + std::to_string(out.upper);
    }
  }

  if (mismatch) {
    out.status = "mismatch";
  } else if (spec.expected.exact() && out.lower == spec.expected.lo && out.upper != 0 && out.upper <= spec.expected.hi &&
             out.lower_by.find("subgraph") == std::string::npos) {
    out.status = "proven";
  } else if (out.lower == 0 && out.upper == 0) {
    out.status = "skipped";
  } else {
    out.status = "bracket";
  }
  out.seconds = since(start);
  return out;
}

// A structural fact proven by UNSAT of its negation.
CellOutcome run_fact(const std::string& cell, const std::string& graph, int colors,
                     const std::vector<std::pair<std::string, int>>& fixes, const ReproduceOptions& options) {
  auto start = Clock::now();
  // Without fixes the fact is a lower bound colors + 1.
  const Bracket implied = fixes.empty() ? Bracket{colors + 1, 0} : Bracket{0, 0};
  CellOutcome out{cell, graph, implied, 0, 0, "", "", "", 0.0, {}};
  SierpGraph g = materialize(GraphSpec::parse(graph), options.limits);
  auto inst = sat::encode_packing(g, colors);
  std::vector<sat::Fix> fx;
  for (const auto& [word, color] : fixes) fx.push_back({*g.find(word), color, true});
  inst = sat::add_assumptions(std::move(inst), fx);
  auto r = sat::solve(inst, options.budget);
  out.lower_by = std::string(sat::to_string(r.status)) + " by cdcl (" + std::to_string(r.stats.conflicts) + " conflicts)";
  out.status = r.status == sat::SolveStatus::unsat ? "proven" : r.status == sat::SolveStatus::sat ? "mismatch" : "bracket";
  if (r.status == sat::SolveStatus::unsat) out.lower = implied.lo;
  out.seconds = since(start);
  return out;
}

// Extendable c-coloring of S^l_G lifted to S^{l+2}_G.
CellOutcome run_lift(const std::string& base_text, int level, int colors, const ReproduceOptions& options) {
  auto start = Clock::now();
  BaseGraph base = BaseGraph::parse(base_text);
  const int n = level + 2;
  CellOutcome out{"lift " + base_text + " l=" + std::to_string(level) + " c=" + std::to_string(colors),
                  GraphSpec{base_text, n, Variant::plain, {0, 0}}.str(), {colors, colors}, 0, 0, "", "", "", 0.0, {}};
  auto pre = check_lift_precondition(base, level, colors, options.limits);
  out.lower_by = pre.holds ? "copy distances exceed c" : "copy distance precondition fails";
  if (!pre.holds) {
    out.status = "mismatch";
    out.seconds = since(start);
    return out;
  }
  std::optional<Coloring> seed;
  if (base_text == "path:3" && level == 2 && colors == 3) {
    seed = color_path_dim2(3);
    out.upper_by = "explicit 3-coloring";
  } else {
    auto inst = sat::encode_liftable(base, level, colors, options.limits);
    auto r = sat::solve(inst, options.budget);
    out.upper_by = std::string("liftable seed: ") + sat::to_string(r.status);
    if (r.status == sat::SolveStatus::sat) {
      seed = sat::decode_model(inst, r.model);
    } else if (r.status == sat::SolveStatus::unsat) {
      out.status = "mismatch";
      out.notes.push_back("every extendable " + std::to_string(colors) + "-coloring has a self-copy clash");
      auto ext = sat::encode_extendable(base, level, colors, options.limits);
      auto e = sat::solve(ext, options.budget);
      if (e.status == sat::SolveStatus::sat) {
        try {
          lift(base, level, sat::decode_model(ext, e.model), n, options.limits);
        } catch (const Error& err) {
          out.notes.push_back(std::string("extendable seed from SAT: ") + err.what());
        }
      }
    }
  }
  if (seed) {
    try {
      Coloring lifted = lift(base, level, *seed, n, options.limits);
      out.upper = lifted.colors_used();
      out.upper_by += "; lifted to n=" + std::to_string(n) + " and verified";
      out.status = "proven";
    } catch (const Error& e) {
      out.status = "mismatch";
      out.notes.push_back(e.what());
    }
  } else if (out.status.empty()) {
    out.status = "bracket";
  }
  out.seconds = since(start);
  return out;
}

CellSpec family_cell(const std::string& family, int k, int n, UpperSource upper = {}) {
  auto value = theorem_value(family, k, n);
  if (!value) throw PreconditionError("no known value for this family member");
  std::string graph = family_descriptor(family, k, n);
  return {graph, graph, *value, std::move(upper), std::nullopt, false};
}

UpperSource constructed(std::function<Coloring()> make, std::string what) {
  return [make = std::move(make), what = std::move(what)]() -> std::optional<std::pair<Coloring, std::string>> {
    return std::pair{make(), what};
  };
}

// SAT-seeded extendable c-coloring of S^2_{C_k}, lifted to dimension n.
UpperSource lifted_cycle_seed(int k, int colors, int n, const ReproduceOptions& options) {
  return [=]() -> std::optional<std::pair<Coloring, std::string>> {
    BaseGraph base = BaseGraph::cycle(k);
    auto inst = sat::encode_liftable(base, 2, colors, options.limits);
    auto r = sat::solve(inst, options.budget);
    if (r.status == sat::SolveStatus::unsat) {
      throw PreconditionError("no extendable " + std::to_string(colors) +
                              "-coloring of S^2 lifts (every one has a self-copy clash)");
    }
    if (r.status != sat::SolveStatus::sat) return std::nullopt;
    Coloring seed = sat::decode_model(inst, r.model);
    return std::pair{lift(base, 2, seed, n, options.limits),
                     "liftable " + std::to_string(colors) + "-coloring of S^2 (SAT) lifted"};
  };
}

std::vector<CellSpec> cells_for(const std::string& selector, const ReproduceOptions& options) {
  std::vector<CellSpec> cells;
  if (selector == "paths") {
    for (int k = 3; k <= 8; ++k) {
      cells.push_back(family_cell("path", k, 2, constructed([k] { return color_path_dim2(k); }, "path formula")));
    }
    cells.push_back(family_cell("path", 4, 3, constructed([] { return color_path(4, 3); }, "path formula")));
  } else if (selector == "cycles") {
    for (int k = 4; k <= 13; ++k) {
      UpperSource up;
      if (k % 4 == 0) {
        up = constructed([k] { return color_cycle_dim2_div4(k); }, "cycle formula");
      } else if (k % 4 == 2 && k >= 10) {
        up = constructed([k] { return color_cycle_dim2_mod2(k); }, "cycle sequences");
      } else if (k > 7) {
        up = constructed([k] { return color_cycle(k, 2).coloring; }, "cycle construction");
      }
      cells.push_back(family_cell("cycle", k, 2, std::move(up)));
    }
  } else if (selector == "cycles3") {
    cells.push_back(family_cell("cycle", 4, 3, constructed([] { return color_cycle(4, 3).coloring; }, "cycle formula")));
    cells.push_back(family_cell("cycle", 6, 3, lifted_cycle_seed(6, 6, 3, options)));
    cells.push_back(family_cell("cycle", 7, 3, lifted_cycle_seed(7, 6, 3, options)));
  } else if (selector == "k4e") {
    for (int n = 1; n <= 3; ++n) cells.push_back(family_cell("k4e", 0, n));
  } else if (selector == "k4e-large") {
    auto cell = family_cell("k4e", 0, 4);
    cell.inherited_lower = {8, "8 from subgraph S^3 (chi 8)"};
    cells.push_back(std::move(cell));
  } else if (selector == "paw-small") {
    for (int n = 1; n <= 3; ++n) cells.push_back(family_cell("paw", 0, n));
  } else if (selector == "triangle-small") {
    for (int n = 0; n <= 3; ++n) cells.push_back(family_cell("triangle", 0, n));
  } else if (selector == "desk-limits") {
    auto k4e = family_cell("k4e", 0, 5);
    k4e.upper_only = true;
    k4e.inherited_lower = {9, "9 from subgraph S^4 (chi 9)"};
    cells.push_back(std::move(k4e));
    auto paw = family_cell("paw", 0, 4);
    paw.upper_only = true;
    paw.inherited_lower = {7, "7 from subgraph S^3 (chi 7)"};
    cells.push_back(std::move(paw));
    for (int n = 4; n <= 6; ++n) {
      auto t = family_cell("triangle", 0, n);
      t.upper_only = true;
      t.inherited_lower = {12, "12 from subgraph ST_3^3 (chi 12)"};
      cells.push_back(std::move(t));
    }
  } else {
    throw PreconditionError("unknown selector '" + selector + "'");
  }
  return cells;
}

}  // namespace

std::vector<std::string> theorem_selectors() {
  return {"paths", "cycles", "cycles3", "k4e", "k4e-large", "paw-small", "triangle-small", "p6p8", "prop1", "desk-limits"};
}

TheoremReport reproduce_theorem(const std::string& selector, const ReproduceOptions& options) {
  TheoremReport report{selector, {}};
  if (selector == "p6p8") {
    report.cells.push_back(run_fact("P6 f(22)=2", "path:6/2", 4, {{"22", 2}}, options));
    report.cells.push_back(run_fact("P6 f(22)=3", "path:6/2", 4, {{"22", 3}}, options));
    report.cells.push_back(run_fact("P8 f(33)=f(44)=1", "path:8/2", 4, {{"33", 1}, {"44", 1}}, options));
    report.cells.push_back(run_fact("C9 4-coloring", "cycle:9/2", 4, {}, options));
    return report;
  }
  if (selector == "prop1") {
    report.cells.push_back(run_lift("path:3", 2, 3, options));
    report.cells.push_back(run_lift("path:5", 3, 5, options));
    report.cells.push_back(run_lift("cycle:8", 2, 5, options));
    report.cells.push_back(run_lift("cycle:8", 3, 5, options));
    return report;
  }
  for (const auto& spec : cells_for(selector, options)) report.cells.push_back(run_cell(spec, options));
  return report;
}

TheoremReport family_report(const std::string& family_name, int n, int kmin, int kmax, const ReproduceOptions& options) {
  const std::string family = canonical_family(family_name);
  const bool indexed = family == "path" || family == "cycle";
  if (!indexed) kmin = kmax = 0;
  if (kmin > kmax) throw PreconditionError("kmin exceeds kmax");
  TheoremReport report{family + " n=" + std::to_string(n), {}};
  for (int k = kmin; k <= kmax; ++k) {
    auto start = Clock::now();
    std::string graph = family_descriptor(family, k, n);
    SierpGraph g = materialize(GraphSpec::parse(graph), options.limits);
    auto expected = theorem_value(family, k, n);
    auto r = sat::chi_rho_exact(g, chi_options(options));
    CellOutcome out{graph, graph, expected.value_or(Bracket{0, 0}), r.lower, r.upper, "", "", "", 0.0, {}};
    out.lower_by = "ascending search";
    out.upper_by = r.witness ? "verified witness" : "none";
    bool contradicts = expected && ((r.upper != 0 && r.upper < expected->lo) || r.lower > expected->hi);
    if (contradicts) {
      out.status = "mismatch";
    } else if (r.exact()) {
      out.status = expected ? "proven" : "computed";
    } else {
      out.status = "bracket";
    }
    out.seconds = since(start);
    report.cells.push_back(std::move(out));
  }
  return report;
}

}  // namespace sierpack
