#include "sierpack/sat/dimacs.hpp"

#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "sierpack/errors.hpp"

namespace sierpack::sat {

namespace {

long to_long(const std::string& tok, const char* what) {
  char* end = nullptr;
  long value = std::strtol(tok.c_str(), &end, 10);
  if (tok.empty() || *end != '\0') throw ParseError(std::string("invalid ") + what + ": '" + tok + "'");
  return value;
}

}  // namespace

void write_dimacs(std::ostream& out, const CnfInstance& inst) {
  if (inst.colors > 0) {
    out << "c sierpack " << inst.kind << " graph " << (inst.graph.empty() ? "-" : inst.graph) << " colors "
        << inst.colors << " vertices " << inst.num_vertices << '\n';
    for (VertexId v = 0; v < inst.num_vertices; ++v) {
      const std::string& label = v < inst.labels.size() ? inst.labels[v] : std::to_string(v);
      for (int i = 1; i <= inst.colors; ++i) out << "c map " << label << ' ' << i << ' ' << inst.var(v, i) << '\n';
    }
  }
  out << "p cnf " << inst.num_vars << ' ' << inst.clauses.size() << '\n';
  std::string line;
  for (std::size_t c = 0; c < inst.clauses.size(); ++c) {
    line.clear();
    for (int lit : inst.clauses[c]) {
      line += std::to_string(lit);
      line += ' ';
    }
    line += "0\n";
    out << line;
  }
}

CnfInstance read_dimacs(std::istream& in) {
  CnfInstance inst;
  inst.kind.clear();
  std::string line;
  long declared_clauses = -1;
  std::vector<int> clause;
  bool header_seen = false;
  std::size_t map_lines = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    if (line[0] == 'c') {
      std::string tag, word;
      ss >> tag >> word;
      if (word == "sierpack") {
        std::string kind, g, graph, col, colors, vert, vertices;
        ss >> kind >> g >> graph >> col >> colors >> vert >> vertices;
        if (g != "graph" || col != "colors" || vert != "vertices") throw ParseError("malformed sierpack comment");
        inst.kind = kind;
        inst.graph = graph == "-" ? std::string() : graph;
        inst.colors = static_cast<int>(to_long(colors, "color count"));
        inst.num_vertices = static_cast<std::size_t>(to_long(vertices, "vertex count"));
      } else if (word == "map") {
        std::string label, color, var;
        ss >> label >> color >> var;
        if (inst.colors <= 0) throw ParseError("map comment before sierpack header");
        long expected = static_cast<long>(map_lines / static_cast<std::size_t>(inst.colors)) * inst.colors +
                        static_cast<long>(map_lines % static_cast<std::size_t>(inst.colors)) + 1;
        if (to_long(var, "variable") != expected ||
            to_long(color, "color") != static_cast<long>(map_lines % static_cast<std::size_t>(inst.colors)) + 1) {
          throw ParseError("variable map out of canonical order at '" + line + "'");
        }
        if (map_lines % static_cast<std::size_t>(inst.colors) == 0) inst.labels.push_back(label);
        ++map_lines;
      }
      continue;
    }
    if (line[0] == 'p') {
      std::string p, fmt, vars, clauses;
      ss >> p >> fmt >> vars >> clauses;
      if (fmt != "cnf") throw ParseError("expected 'p cnf' header");
      inst.num_vars = static_cast<int>(to_long(vars, "variable count"));
      declared_clauses = to_long(clauses, "clause count");
      header_seen = true;
      continue;
    }
    if (!header_seen) throw ParseError("clause before 'p cnf' header");
    for (std::string tok; ss >> tok;) {
      long lit = to_long(tok, "literal");
      if (lit == 0) {
        if (clause.empty()) throw ParseError("empty clause");
        inst.clauses.add(clause);
        clause.clear();
        continue;
      }
      if (std::labs(lit) > inst.num_vars) throw ParseError("literal " + tok + " exceeds variable count");
      clause.push_back(static_cast<int>(lit));
    }
  }
  if (!clause.empty()) throw ParseError("last clause is not terminated by 0");
  if (!header_seen) throw ParseError("missing 'p cnf' header");
  if (declared_clauses != static_cast<long>(inst.clauses.size())) {
    throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(inst.clauses.size()));
  }
  if (inst.colors > 0 && inst.labels.size() != inst.num_vertices) throw ParseError("variable map incomplete");
  return inst;
}

ExternalResult read_model(std::istream& in, int num_vars) {
  ExternalResult result;
  std::vector<bool> model(static_cast<std::size_t>(num_vars) + 1, false);
  bool any_literal = false;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    if (first == "c") continue;
    if (first == "s") {
      std::string status;
      ss >> status;
      if (status == "SATISFIABLE") {
        result.claimed = SolveStatus::sat;
      } else if (status == "UNSATISFIABLE") {
        result.claimed = SolveStatus::unsat;
      } else {
        result.claimed = SolveStatus::unknown;
      }
      continue;
    }
    std::vector<std::string> toks;
    if (first != "v") toks.push_back(first);
    for (std::string tok; ss >> tok;) toks.push_back(tok);
    for (const auto& tok : toks) {
      long lit = to_long(tok, "model literal");
      if (lit == 0) continue;
      if (std::labs(lit) > num_vars) throw ParseError("model literal " + tok + " exceeds variable count");
      model[static_cast<std::size_t>(std::labs(lit))] = lit > 0;
      any_literal = true;
    }
  }
  if (any_literal) {
    result.model = std::move(model);
    if (result.claimed == SolveStatus::unknown) result.claimed = SolveStatus::sat;
  }
  return result;
}

}  // namespace sierpack::sat
