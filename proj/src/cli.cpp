#include "sierpack/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "sierpack/constructions.hpp"
#include "sierpack/distance.hpp"
#include "sierpack/errors.hpp"
#include "sierpack/io.hpp"
#include "sierpack/packing.hpp"
#include "sierpack/reproduce.hpp"
#include "sierpack/sat/chirho.hpp"
#include "sierpack/sat/cnf.hpp"
#include "sierpack/sat/dimacs.hpp"

namespace sierpack {

namespace {

using json = nlohmann::ordered_json;

class Reporter {
 public:
  Reporter(std::ostream& out, bool machine) : out_(out), machine_(machine) {}
  bool machine() const { return machine_; }
  std::ostream& text() { return out_; }
  void record(const json& j) { out_ << j.dump() << '\n'; }

 private:
  std::ostream& out_;
  bool machine_;
};

struct GraphArgs {
  std::string graph;
  std::string base;
  int k = 0;
  int dim = 0;
  std::string aug;

  void add_to(CLI::App* app) {
    app->add_option("-g,--graph", graph, "graph descriptor (e.g. paw/3, cycle:8/2/aug:0-1) or edge-list file");
    app->add_option("--base", base, "base graph: path, cycle, complete, k4e, paw, triangle");
    app->add_option("--k", k, "order of a path, cycle or complete base");
    app->add_option("--dim", dim, "dimension n");
    app->add_option("--aug", aug, "augmented edge i-j");
  }

  std::string descriptor() const {
    if (!graph.empty()) return graph;
    if (base.empty()) throw ParseError("give --graph or --base with --dim");
    if (dim < 0 || (dim == 0 && base != "triangle")) throw ParseError("--dim must be positive");
    if (base == "triangle") {
      if (!aug.empty()) throw ParseError("triangle graphs take no --aug");
      return "triangle/" + std::to_string(dim);
    }
    std::string head = base;
    if (base == "path" || base == "cycle" || base == "complete") {
      if (k <= 0) throw ParseError("--base " + base + " needs --k");
      head += ":" + std::to_string(k);
    } else if (base == "k4e") {
      head = "k4_minus_e";
    }
    std::string out = head + "/" + std::to_string(dim);
    if (!aug.empty()) out += "/aug:" + aug;
    return out;
  }
};

struct BudgetArgs {
  std::int64_t conflicts = -2;
  double seconds = -2.0;
  double class_seconds = -2.0;

  void add_to(CLI::App* app) {
    app->add_option("--conflicts", conflicts, "CDCL conflict limit per solver call (-1: none)");
    app->add_option("--seconds", seconds, "CDCL time limit per solver call (-1: none)");
    app->add_option("--class-seconds", class_seconds, "class-search time limit per call (-1: none)");
  }

  sat::SolveBudget solver(sat::SolveBudget fallback) const {
    sat::SolveBudget b = sat::SolveBudget::from_env(fallback);
    if (conflicts != -2) b.max_conflicts = conflicts;
    if (seconds != -2.0) b.max_seconds = seconds;
    return b;
  }
  sat::SolveBudget search(sat::SolveBudget fallback) const {
    sat::SolveBudget b = fallback;
    if (class_seconds != -2.0) b.max_seconds = class_seconds;
    return b;
  }
};

std::optional<GraphSpec> as_spec(const std::string& descriptor) {
  if (std::ifstream(descriptor)) return std::nullopt;
  return GraphSpec::parse(descriptor);
}

void write_output(const std::string& path, const std::function<void(std::ostream&)>& body, std::ostream& fallback) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot write '" + path + "'");
  body(file);
}

json violation_json(const LabeledGraph& g, const Violation& v) {
  return {{"u", g.labels[v.u]}, {"v", g.labels[v.v]}, {"color", v.color}, {"distance", v.distance}};
}

std::string violation_text(const LabeledGraph& g, const Violation& v) {
  return g.labels[v.u] + " and " + g.labels[v.v] + " share color " + std::to_string(v.color) + " at distance " +
         std::to_string(v.distance);
}

json attempts_json(const std::vector<sat::Attempt>& attempts) {
  json a = json::array();
  for (const auto& t : attempts) {
    a.push_back({{"colors", t.colors}, {"status", sat::to_string(t.status)}, {"method", sat::to_string(t.method)},
                 {"work", t.work}});
  }
  return a;
}

json coloring_json(const LabeledGraph& g, const Coloring& f) {
  json m = json::object();
  for (VertexId v = 0; v < g.labels.size(); ++v) m[g.labels[v]] = f.colors[v];
  return m;
}

// ---------------------------------------------------------------------------

struct BuildCmd {
  GraphArgs graph;
  std::string out;
};

int cmd_build(const BuildCmd& a, Reporter& r, const BuildLimits& limits) {
  SierpGraph s = materialize(GraphSpec::parse(a.graph.descriptor()), limits);
  if (r.machine()) {
    json j{{"type", "graph"}, {"graph", s.descriptor()}, {"vertices", s.num_vertices()}, {"edges", s.num_edges()}};
    if (!a.out.empty()) {
      write_output(a.out, [&](std::ostream& o) { write_edge_list(o, s); }, r.text());
      j["file"] = a.out;
    }
    r.record(j);
    return exit_ok;
  }
  write_output(a.out, [&](std::ostream& o) { write_edge_list(o, s); }, r.text());
  return exit_ok;
}

struct DistCmd {
  GraphArgs graph;
  std::string from;
  std::vector<std::string> to;
  int radius = -1;
};

int cmd_dist(const DistCmd& a, Reporter& r, const BuildLimits& limits) {
  LabeledGraph g = load_graph(a.graph.descriptor(), limits);
  auto src = g.find(a.from);
  if (!src) throw PreconditionError("unknown vertex '" + a.from + "'");
  const int radius = a.radius < 0 ? static_cast<int>(std::max<std::size_t>(g.graph.num_vertices(), 1)) : a.radius;
  DistanceTable table = distances_from(g.graph, *src, radius);
  auto emit = [&](VertexId v, std::optional<int> d) {
    if (r.machine()) {
      r.record({{"type", "distance"}, {"from", a.from}, {"to", g.labels[v]}, {"distance", d ? json(*d) : json(nullptr)}});
    } else {
      r.text() << a.from << ' ' << g.labels[v] << ' ' << (d ? std::to_string(*d) : std::string("-")) << '\n';
    }
  };
  if (a.to.empty()) {
    for (const auto& [v, d] : table.entries) emit(v, d);
  } else {
    for (const auto& w : a.to) {
      auto v = g.find(w);
      if (!v) throw PreconditionError("unknown vertex '" + w + "'");
      emit(*v, table.distance_to(*v));
    }
  }
  return exit_ok;
}

struct VerifyCmd {
  GraphArgs graph;
  std::string coloring;
  bool extendable = false;
  bool all = false;
};

int cmd_verify(const VerifyCmd& a, Reporter& r, const BuildLimits& limits) {
  std::ifstream in(a.coloring);
  if (!in) throw ParseError("cannot open coloring file '" + a.coloring + "'");
  ColoringFile file = read_coloring(in);
  std::string descriptor = a.graph.graph.empty() && a.graph.base.empty() ? file.graph : a.graph.descriptor();
  LabeledGraph g = load_graph(descriptor, limits);
  Coloring f = resolve_coloring(file, g);
  json j{{"type", "verify"}, {"graph", descriptor}, {"colors", f.c}, {"used", f.colors_used()}};

  std::vector<Violation> violations;
  std::optional<std::pair<int, int>> aug;
  if (a.extendable) {
    auto spec = as_spec(descriptor);
    if (!spec || spec->variant != Variant::plain) throw PreconditionError("--extendable needs a plain Sierpinski descriptor");
    SierpGraph s = materialize(*spec, limits);
    auto verdict = verify_extendable(s, f);
    if (!verdict.valid) {
      violations.push_back(*verdict.violation);
      aug = verdict.augmented_edge;
    }
  } else if (a.all) {
    violations = list_violations(g.graph, f);
  } else if (auto v = verify_packing(g.graph, f)) {
    violations.push_back(*v);
  }

  j["valid"] = violations.empty();
  if (a.extendable) j["extendable"] = violations.empty();
  if (!violations.empty()) {
    json list = json::array();
    for (const auto& v : violations) list.push_back(violation_json(g, v));
    j["violations"] = list;
    if (aug) j["augmented_edge"] = {aug->first, aug->second};
  }
  if (r.machine()) {
    r.record(j);
  } else if (violations.empty()) {
    r.text() << "valid " << (a.extendable ? "extendable " : "") << "packing " << f.c << "-coloring of " << descriptor
             << " (" << f.colors_used() << " colors used)\n";
  } else {
    r.text() << "invalid: ";
    if (aug) r.text() << "in the graph augmented by " << aug->first << '-' << aug->second << ", ";
    r.text() << violation_text(g, violations.front()) << '\n';
    for (std::size_t i = 1; i < violations.size(); ++i) r.text() << "invalid: " << violation_text(g, violations[i]) << '\n';
  }
  return violations.empty() ? exit_ok : exit_verification;
}

struct ConstructCmd {
  std::string family;
  int k = 0;
  int dim = 2;
  std::string convention;
  std::string seed_file;
  bool no_sat = false;
  std::string out;
};

int cmd_construct(const ConstructCmd& a, Reporter& r, const BuildLimits& limits, const sat::SolveBudget& budget) {
  std::optional<Convention> convention;
  if (!a.convention.empty()) convention = parse_convention(a.convention);
  Coloring f;
  std::string method = "formula";
  std::vector<std::string> notes;
  if (a.family == "path") {
    if (convention || !a.seed_file.empty()) throw PreconditionError("--convention and --seed-file apply to cycles only");
    f = a.dim == 2 ? color_path_dim2(a.k) : color_path(a.k, a.dim, limits);
  } else if (a.family == "cycle") {
    CycleOptions opts;
    opts.convention = convention;
    if (!a.seed_file.empty()) opts.seed_file = a.seed_file;
    opts.sat_fallback = !a.no_sat;
    opts.budget = budget;
    opts.limits = limits;
    Construction c = color_cycle(a.k, a.dim, opts);
    f = std::move(c.coloring);
    method = c.method;
    if (c.convention) method += std::string(" (") + to_string(*c.convention) + ")";
    notes = std::move(c.notes);
  } else {
    throw ParseError("--family must be path or cycle");
  }

  SierpGraph s = materialize(GraphSpec::parse(f.graph), limits);
  if (auto v = verify_packing(s, f)) {
    LabeledGraph lg = LabeledGraph::from(s);
    throw VerificationError("construction fails verification: " + violation_text(lg, *v));
  }
  LabeledGraph g = LabeledGraph::from(s);
  if (r.machine()) {
    json j{{"type", "construct"}, {"graph", f.graph}, {"colors", f.c}, {"used", f.colors_used()}, {"method", method},
           {"verified", true}};
    j["notes"] = notes;
    if (a.out.empty()) {
      j["coloring"] = coloring_json(g, f);
    } else {
      save_coloring_file(a.out, g, f);
      j["file"] = a.out;
    }
    r.record(j);
    return exit_ok;
  }
  write_output(
      a.out,
      [&](std::ostream& o) {
        o << "# method: " << method << '\n';
        for (const auto& n : notes) o << "# " << n << '\n';
        write_coloring(o, g, f);
      },
      r.text());
  return exit_ok;
}

struct LiftCmd {
  std::string base;
  int level = 0;
  int dim = 0;
  int colors = 0;
  std::string coloring;
  std::string out;
};

int cmd_lift(const LiftCmd& a, Reporter& r, const BuildLimits& limits) {
  BaseGraph base = BaseGraph::parse(a.base == "k4e" ? "k4_minus_e" : a.base);
  if (a.level < 1) throw PreconditionError("--level must be positive");
  if (a.dim <= a.level) throw PreconditionError("--dim must exceed --level");
  SierpGraph small = build_sierpinski(base, a.level, limits);
  LabeledGraph lg = LabeledGraph::from(small);
  Coloring f = load_coloring_file(a.coloring, lg);
  f.graph = small.descriptor();
  const int c = a.colors > 0 ? a.colors : f.c;
  auto pre = check_lift_precondition(base, a.level, c, limits);
  Coloring lifted = lift(base, a.level, f, a.dim, limits);
  json pairs = json::array();
  for (const auto& p : pre.pairs) pairs.push_back({{"i", p.i}, {"j", p.j}, {"distance", p.distance}});
  SierpGraph big = materialize(GraphSpec::parse(lifted.graph), limits);
  LabeledGraph bg = LabeledGraph::from(big);
  if (r.machine()) {
    json j{{"type", "lift"}, {"graph", lifted.graph}, {"from", f.graph}, {"colors", lifted.c}, {"copy_distances", pairs},
           {"verified", true}};
    if (a.out.empty()) {
      j["coloring"] = coloring_json(bg, lifted);
    } else {
      save_coloring_file(a.out, bg, lifted);
      j["file"] = a.out;
    }
    r.record(j);
    return exit_ok;
  }
  write_output(
      a.out,
      [&](std::ostream& o) {
        o << "# lifted from " << f.graph << "; copy distances";
        for (const auto& p : pre.pairs) o << ' ' << p.i << p.j << '=' << p.distance;
        o << '\n';
        write_coloring(o, bg, lifted);
      },
      r.text());
  return exit_ok;
}

struct ChiRhoCmd {
  GraphArgs graph;
  BudgetArgs budget;
  int cmax = 0;
  bool no_symmetry = false;
  bool no_class_search = false;
  std::vector<std::string> external;
  std::string witness_out;
  bool verbose = false;
};

sat::ChiRhoOptions chirho_options(const BudgetArgs& b, int cmax, bool no_symmetry, bool no_class) {
  sat::ChiRhoOptions o;
  o.c_max = cmax;
  o.budget = b.solver({-1, 600.0});
  o.class_budget = b.search({-1, 600.0});
  o.symmetry_breaking = !no_symmetry;
  o.class_search = !no_class;
  return o;
}

void import_external(sat::ChiRhoResult& result, const Graph& g, const std::string& arg) {
  auto eq = arg.find('=');
  if (eq == std::string::npos) throw ParseError("--external expects <colors>=<model file>");
  int colors = 0;
  try {
    colors = std::stoi(arg.substr(0, eq));
  } catch (const std::exception&) {
    throw ParseError("bad color count in --external '" + arg + "'");
  }
  std::ifstream in(arg.substr(eq + 1));
  if (!in) throw ParseError("cannot open model file '" + arg.substr(eq + 1) + "'");
  auto inst = sat::encode_packing(g, colors);
  auto ext = sat::read_model(in, inst.num_vars);
  std::optional<Coloring> f;
  if (ext.claimed == sat::SolveStatus::sat) f = sat::decode_model(inst, ext.model);
  sat::record_external(result, g, colors, ext.claimed, f);
}

int report_chirho(const sat::ChiRhoResult& res, const LabeledGraph& g, const ChiRhoCmd& a, Reporter& r) {
  if (!a.witness_out.empty() && res.witness) save_coloring_file(a.witness_out, g, *res.witness);
  if (r.machine()) {
    json j{{"type", "chirho"}, {"graph", g.descriptor}, {"vertices", g.graph.num_vertices()}, {"lower", res.lower},
           {"upper", res.upper}, {"exact", res.exact()}};
    j["value"] = res.exact() ? json(res.upper) : json(nullptr);
    j["claimed_lower"] = res.claimed_lower ? json(*res.claimed_lower) : json(nullptr);
    j["attempts"] = attempts_json(res.attempts);
    r.record(j);
  } else {
    if (res.exact()) {
      r.text() << res.upper << '\n';
    } else {
      r.text() << "bracket [" << res.lower << ".." << (res.upper ? std::to_string(res.upper) : std::string("?")) << "]\n";
    }
    if (res.claimed_lower) r.text() << "externally claimed lower bound " << *res.claimed_lower << '\n';
    if (a.verbose) {
      for (const auto& t : res.attempts) {
        r.text() << "  c=" << t.colors << ' ' << sat::to_string(t.status) << " by " << sat::to_string(t.method) << " ("
                 << t.work << ", " << std::fixed << std::setprecision(2) << t.seconds << " s)\n";
      }
    }
  }
  return res.exact() ? exit_ok : exit_budget;
}

int cmd_chirho(const ChiRhoCmd& a, Reporter& r, const BuildLimits& limits) {
  const std::string descriptor = a.graph.descriptor();
  auto opts = chirho_options(a.budget, a.cmax, a.no_symmetry, a.no_class_search);
  if (auto spec = as_spec(descriptor)) {
    SierpGraph s = materialize(*spec, limits);
    auto res = sat::chi_rho_exact(s, opts);
    for (const auto& e : a.external) import_external(res, s, e);
    return report_chirho(res, LabeledGraph::from(s), a, r);
  }
  LabeledGraph g = load_graph(descriptor, limits);
  auto res = sat::chi_rho_exact(g.graph, opts, {}, g.labels, g.descriptor);
  for (const auto& e : a.external) import_external(res, g.graph, e);
  return report_chirho(res, g, a, r);
}

struct EncodeCmd {
  GraphArgs graph;
  int colors = 0;
  bool extendable = false;
  bool liftable = false;
  std::string out;
};

int cmd_encode(const EncodeCmd& a, Reporter& r, const BuildLimits& limits) {
  if (a.colors < 1) throw PreconditionError("--colors must be positive");
  const std::string descriptor = a.graph.descriptor();
  sat::CnfInstance inst;
  if (a.extendable || a.liftable) {
    auto spec = as_spec(descriptor);
    if (!spec || spec->variant != Variant::plain) throw PreconditionError("--extendable needs a plain Sierpinski descriptor");
    BaseGraph base = BaseGraph::parse(spec->base);
    inst = a.liftable ? sat::encode_liftable(base, spec->n, a.colors, limits)
                      : sat::encode_extendable(base, spec->n, a.colors, limits);
  } else if (auto spec = as_spec(descriptor)) {
    inst = sat::encode_packing(materialize(*spec, limits), a.colors);
  } else {
    LabeledGraph g = load_graph(descriptor, limits);
    inst = sat::encode_packing(g.graph, a.colors, g.labels, g.descriptor);
  }
  if (r.machine()) {
    json j{{"type", "cnf"}, {"kind", inst.kind}, {"graph", inst.graph}, {"colors", inst.colors},
           {"variables", inst.num_vars}, {"clauses", inst.clauses.size()}};
    if (!a.out.empty()) {
      write_output(a.out, [&](std::ostream& o) { sat::write_dimacs(o, inst); }, r.text());
      j["file"] = a.out;
    }
    r.record(j);
    return exit_ok;
  }
  write_output(a.out, [&](std::ostream& o) { sat::write_dimacs(o, inst); }, r.text());
  return exit_ok;
}

struct DecodeCmd {
  std::string cnf;
  std::string model;
  std::string out;
};

int cmd_decode(const DecodeCmd& a, Reporter& r, const BuildLimits& limits) {
  std::ifstream cin_(a.cnf);
  if (!cin_) throw ParseError("cannot open CNF file '" + a.cnf + "'");
  sat::CnfInstance inst = sat::read_dimacs(cin_);
  if (inst.colors == 0) throw PreconditionError("CNF file carries no variable map");
  std::ifstream min_(a.model);
  if (!min_) throw ParseError("cannot open model file '" + a.model + "'");
  sat::ExternalResult ext = sat::read_model(min_, inst.num_vars);

  json j{{"type", "decode"}, {"graph", inst.graph}, {"kind", inst.kind}, {"colors", inst.colors},
         {"claimed", sat::to_string(ext.claimed)}};
  if (ext.claimed == sat::SolveStatus::unsat) {
    j["provenance"] = "externally claimed";
    if (r.machine()) {
      r.record(j);
    } else {
      r.text() << "unsat (externally claimed): no " << inst.kind << ' ' << inst.colors << "-coloring of " << inst.graph
               << "; lower bound " << inst.colors + 1 << " is not internally proven\n";
    }
    return exit_ok;
  }
  if (ext.claimed != sat::SolveStatus::sat) throw PreconditionError("model file states no result");

  Coloring f;
  try {
    f = sat::decode_model(inst, ext.model);
  } catch (const PreconditionError& e) {
    throw VerificationError(std::string("external model rejected: ") + e.what());
  }
  LabeledGraph g = load_graph(inst.graph, limits);
  if (inst.kind == "extendable" || inst.kind == "liftable") {
    SierpGraph s = materialize(GraphSpec::parse(inst.graph), limits);
    auto verdict = verify_extendable(s, f);
    if (!verdict.valid) throw VerificationError("decoded coloring is not extendable: " + violation_text(g, *verdict.violation));
    if (inst.kind == "liftable" && find_self_copy_clash(s, f)) throw VerificationError("decoded coloring does not lift");
  } else if (auto v = verify_packing(g.graph, f)) {
    throw VerificationError("decoded coloring fails verification: " + violation_text(g, *v));
  }
  j["provenance"] = "external model, verified";
  if (r.machine()) {
    if (a.out.empty()) {
      j["coloring"] = coloring_json(g, f);
    } else {
      save_coloring_file(a.out, g, f);
      j["file"] = a.out;
    }
    r.record(j);
    return exit_ok;
  }
  write_output(
      a.out,
      [&](std::ostream& o) {
        o << "# external model, verified\n";
        write_coloring(o, g, f);
      },
      r.text());
  return exit_ok;
}

struct WitnessCmd {
  std::string which = "h";
  int k = 5;
  BudgetArgs budget;
};

int cmd_witness(const WitnessCmd& a, Reporter& r) {
  Witness which;
  if (a.which == "h") {
    which = Witness::h;
  } else if (a.which == "h-prime" || a.which == "h'") {
    which = Witness::h_prime;
  } else {
    throw ParseError("--which must be h or h-prime");
  }
  WitnessSubgraph w = witness_subgraph(which, a.k);
  std::vector<std::string> labels;
  for (const auto& word : w.words) labels.push_back(word.str());
  auto res = sat::chi_rho_exact(w.induced, chirho_options(a.budget, 0, false, false), {}, labels, w.host.descriptor());
  if (r.machine()) {
    json j{{"type", "witness"}, {"which", a.which}, {"host", w.host.descriptor()}, {"words", labels},
           {"edges", w.induced.num_edges()}, {"lower", res.lower}, {"upper", res.upper}, {"exact", res.exact()}};
    r.record(j);
  } else {
    r.text() << "host " << w.host.descriptor() << ", " << labels.size() << " vertices, " << w.induced.num_edges()
             << " edges\n";
    for (std::size_t i = 0; i < labels.size(); ++i) r.text() << (i ? " " : "") << labels[i];
    r.text() << '\n';
    if (res.exact()) {
      r.text() << "chi_rho " << res.upper << '\n';
    } else {
      r.text() << "chi_rho in [" << res.lower << ".." << res.upper << "]\n";
    }
  }
  return res.exact() ? exit_ok : exit_budget;
}

void print_cell(Reporter& r, const std::string& selector, const CellOutcome& c) {
  if (r.machine()) {
    json j{{"type", "cell"}, {"selector", selector}, {"cell", c.cell}, {"graph", c.graph},
           {"expected", {c.expected.lo, c.expected.hi}}, {"lower", c.lower}, {"upper", c.upper}, {"status", c.status},
           {"lower_by", c.lower_by}, {"upper_by", c.upper_by}};
    j["notes"] = c.notes;
    r.record(j);
    return;
  }
  auto range = [](int lo, int hi) -> std::string {
    if (lo == 0 && hi == 0) return "-";
    if (hi == 0) return ">=" + std::to_string(lo);
    if (lo == 0) return "<=" + std::to_string(hi);
    return lo == hi ? std::to_string(lo) : "[" + std::to_string(lo) + ".." + std::to_string(hi) + "]";
  };
  r.text() << std::left << std::setw(22) << c.cell << " expected " << std::setw(8) << range(c.expected.lo, c.expected.hi)
           << " found " << std::setw(8) << range(c.lower, c.upper) << ' ' << std::setw(8) << c.status << std::right
           << std::fixed << std::setprecision(1) << std::setw(7) << c.seconds << " s\n";
  if (!c.lower_by.empty()) r.text() << "    lower: " << c.lower_by << '\n';
  if (!c.upper_by.empty()) r.text() << "    upper: " << c.upper_by << '\n';
  for (const auto& n : c.notes) r.text() << "    note: " << n << '\n';
}

int summarize(const std::vector<TheoremReport>& reports) {
  bool mismatch = false, open = false;
  for (const auto& rep : reports) {
    mismatch = mismatch || rep.any_mismatch();
    for (const auto& c : rep.cells) open = open || (c.status != "proven" && c.status != "computed");
  }
  return mismatch ? exit_verification : open ? exit_budget : exit_ok;
}

struct ReportCmd {
  std::string family;
  int dim = 2;
  int kmin = 0;
  int kmax = 0;
  BudgetArgs budget;
};

int cmd_report(const ReportCmd& a, Reporter& r, const BuildLimits& limits) {
  ReproduceOptions opts;
  opts.budget = a.budget.solver(opts.budget);
  opts.class_budget = a.budget.search(opts.class_budget);
  opts.limits = limits;
  int kmin = a.kmin;
  if (kmin == 0) kmin = a.family.rfind("cycle", 0) == 0 ? 4 : 3;
  int kmax = a.kmax == 0 ? kmin : a.kmax;
  TheoremReport rep = family_report(a.family, a.dim, kmin, kmax, opts);
  for (const auto& c : rep.cells) print_cell(r, rep.selector, c);
  return summarize({rep});
}

struct ReproduceCmd {
  std::vector<std::string> selectors;
  bool list = false;
  BudgetArgs budget;
};

int cmd_reproduce(const ReproduceCmd& a, Reporter& r, const BuildLimits& limits) {
  if (a.list) {
    for (const auto& s : theorem_selectors()) {
      if (r.machine()) {
        r.record({{"type", "selector"}, {"name", s}});
      } else {
        r.text() << s << '\n';
      }
    }
    return exit_ok;
  }
  ReproduceOptions opts;
  opts.budget = a.budget.solver(opts.budget);
  opts.class_budget = a.budget.search(opts.class_budget);
  opts.limits = limits;
  std::vector<std::string> selectors = a.selectors.empty() ? theorem_selectors() : a.selectors;
  auto known = theorem_selectors();
  for (const auto& s : selectors) {
    if (std::find(known.begin(), known.end(), s) == known.end()) throw PreconditionError("unknown selector '" + s + "'");
  }
  std::vector<TheoremReport> reports;
  for (const auto& s : selectors) {
    if (!r.machine()) r.text() << "== " << s << '\n';
    reports.push_back(reproduce_theorem(s, opts));
    for (const auto& c : reports.back().cells) print_cell(r, s, c);
  }
  return summarize(reports);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Sierpinski graphs and their packing colorings", "sierpack"};
  app.require_subcommand(1);
  bool machine = false;
  std::uint64_t vertex_budget = 0;
  app.add_flag("--json", machine, "machine-readable output, one JSON record per line");
  app.add_option("--vertex-budget", vertex_budget, "largest graph to materialize (default from SIERPACK_VERTEX_BUDGET)");

  BuildCmd build;
  auto* build_app = app.add_subcommand("build", "write the edge list of a graph");
  build.graph.add_to(build_app);
  build_app->add_option("-o,--out", build.out, "output file");

  DistCmd dist;
  auto* dist_app = app.add_subcommand("dist", "distances from a vertex");
  dist.graph.add_to(dist_app);
  dist_app->add_option("--from", dist.from, "source word")->required();
  dist_app->add_option("--to", dist.to, "target words (default: every vertex within --radius)");
  dist_app->add_option("--radius", dist.radius, "search radius (-1: unbounded)");

  VerifyCmd verify;
  auto* verify_app = app.add_subcommand("verify", "check a coloring file");
  verify.graph.add_to(verify_app);
  verify_app->add_option("-c,--coloring", verify.coloring, "coloring file")->required();
  verify_app->add_flag("--extendable", verify.extendable, "check every augmented graph too");
  verify_app->add_flag("--all", verify.all, "list every violating pair");

  ConstructCmd construct;
  auto* construct_app = app.add_subcommand("construct", "emit an explicit packing coloring");
  construct_app->add_option("--family", construct.family, "path or cycle")->required();
  construct_app->add_option("--k", construct.k, "order of the base path or cycle")->required();
  construct_app->add_option("--dim", construct.dim, "dimension n (default 2)");
  construct_app->add_option("--convention", construct.convention,
                            "first expansion convention: exact-fit-drop-suffix, exact-fit, truncate-tail, truncate-head");
  construct_app->add_option("--seed-file", construct.seed_file, "seed coloring replacing the stored one");
  construct_app->add_flag("--no-sat-fallback", construct.no_sat, "fail instead of searching with the solver");
  construct_app->add_option("-o,--out", construct.out, "output file");
  BudgetArgs construct_budget;
  construct_budget.add_to(construct_app);

  LiftCmd lift_cmd;
  auto* lift_app = app.add_subcommand("lift", "lift an extendable coloring of S^l to S^n");
  lift_app->add_option("--base", lift_cmd.base, "base graph descriptor, e.g. path:3")->required();
  lift_app->add_option("--level", lift_cmd.level, "dimension l of the input coloring")->required();
  lift_app->add_option("--dim", lift_cmd.dim, "target dimension n > l")->required();
  lift_app->add_option("--colors", lift_cmd.colors, "c for the copy-distance check (default: the file's c)");
  lift_app->add_option("-c,--coloring", lift_cmd.coloring, "coloring file of S^l")->required();
  lift_app->add_option("-o,--out", lift_cmd.out, "output file");

  ChiRhoCmd chirho;
  auto* chirho_app = app.add_subcommand("chirho", "packing chromatic number (exact or proven bracket)");
  chirho.graph.add_to(chirho_app);
  chirho.budget.add_to(chirho_app);
  chirho_app->add_option("--cmax", chirho.cmax, "largest number of colors tried");
  chirho_app->add_flag("--no-symmetry", chirho.no_symmetry, "disable symmetry-breaking clauses");
  chirho_app->add_flag("--no-class-search", chirho.no_class_search, "never retry with class search");
  chirho_app->add_option("--external", chirho.external, "import an external solver result: <colors>=<model file>");
  chirho_app->add_option("--witness-out", chirho.witness_out, "write the optimal coloring here");
  chirho_app->add_flag("-v,--verbose", chirho.verbose, "list every solver call");

  EncodeCmd encode;
  auto* encode_app = app.add_subcommand("encode", "write the packing (or extendable) CNF in DIMACS form");
  encode.graph.add_to(encode_app);
  encode_app->add_option("--colors", encode.colors, "number of colors")->required();
  encode_app->add_flag("--extendable", encode.extendable, "encode extendable colorings of a plain S^l");
  encode_app->add_flag("--liftable", encode.liftable, "extendable colorings without self-copy clashes");
  encode_app->add_option("-o,--out", encode.out, "output file");

  DecodeCmd decode;
  auto* decode_app = app.add_subcommand("decode", "import an external solver result for a CNF file");
  decode_app->add_option("--cnf", decode.cnf, "CNF written by encode")->required();
  decode_app->add_option("--model", decode.model, "solver output (s line and v lines)")->required();
  decode_app->add_option("-o,--out", decode.out, "coloring output file");

  WitnessCmd witness;
  auto* witness_app = app.add_subcommand("witness", "extract H or H' and compute its packing chromatic number");
  witness_app->add_option("--which", witness.which, "h or h-prime");
  witness_app->add_option("--k", witness.k, "order of the host path (>= 5 for h-prime, >= 4 for h)");
  witness.budget.add_to(witness_app);

  ReportCmd report;
  auto* report_app = app.add_subcommand("report", "compare computed values with the known value table");
  report_app->add_option("--family", report.family, "paths, cycles, k4e, paw or triangle")->required();
  report_app->add_option("--dim", report.dim, "dimension n");
  report_app->add_option("--kmin", report.kmin, "smallest k (paths and cycles)");
  report_app->add_option("--kmax", report.kmax, "largest k (paths and cycles)");
  report.budget.add_to(report_app);

  ReproduceCmd reproduce;
  auto* reproduce_app = app.add_subcommand("reproduce", "run the lower and upper legs of the known values");
  reproduce_app->add_option("-s,--selector", reproduce.selectors, "selector (default: all)");
  reproduce_app->add_flag("--list", reproduce.list, "list the selectors");
  reproduce.budget.add_to(reproduce_app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_parse;
  }

  Reporter r(out, machine);
  BuildLimits limits;
  if (vertex_budget > 0) limits.vertex_budget = vertex_budget;
  try {
    if (build_app->parsed()) return cmd_build(build, r, limits);
    if (dist_app->parsed()) return cmd_dist(dist, r, limits);
    if (verify_app->parsed()) return cmd_verify(verify, r, limits);
    if (construct_app->parsed()) return cmd_construct(construct, r, limits, construct_budget.solver({-1, 600.0}));
    if (lift_app->parsed()) return cmd_lift(lift_cmd, r, limits);
    if (chirho_app->parsed()) return cmd_chirho(chirho, r, limits);
    if (encode_app->parsed()) return cmd_encode(encode, r, limits);
    if (decode_app->parsed()) return cmd_decode(decode, r, limits);
    if (witness_app->parsed()) return cmd_witness(witness, r);
    if (report_app->parsed()) return cmd_report(report, r, limits);
    if (reproduce_app->parsed()) return cmd_reproduce(reproduce, r, limits);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_parse;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return exit_precondition;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << '\n';
    return exit_verification;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return exit_budget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_other;
  }
  return exit_other;
}

}  // namespace sierpack
