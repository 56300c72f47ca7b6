#include "sierpack/sat/chirho.hpp"

#include <algorithm>
#include <limits>

#include "sierpack/distance.hpp"
#include "sierpack/errors.hpp"
#include "sierpack/sat/class_search.hpp"

namespace sierpack::sat {

const char* to_string(Method m) {
  switch (m) {
    case Method::cdcl: return "cdcl";
    case Method::class_search: return "class-search";
    case Method::greedy: return "greedy";
    case Method::external: return "external";
  }
  return "?";
}

namespace {

// Largest eccentricity, or max int if disconnected.
int diameter(const Graph& g) {
  TruncatedBfs bfs(g);
  int diam = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::size_t reached = 0;
    const VertexId src[] = {v};
    bfs.run(src, -1, [&](VertexId, int d) {
      ++reached;
      diam = std::max(diam, d);
      return true;
    });
    if (reached != g.num_vertices()) return std::numeric_limits<int>::max();
  }
  return diam;
}

}  // namespace

void add_symmetry_breaking(CnfInstance& inst, const Graph& g, std::span<const std::vector<VertexId>> automorphisms) {
  const int d = diameter(g);
  if (d > inst.colors || g.num_vertices() == 0) return;
  const VertexId n = g.num_vertices();
  const int first = std::max(d, 1);
  for (VertexId v = 0; v < n; ++v) {
    bool representative = true;
    for (const auto& perm : automorphisms) representative = representative && perm[v] >= v;
    if (!representative) inst.clauses.add({-inst.var(v, first)});
  }
  std::vector<int> lits;
  for (int j = first + 1; j < inst.colors; ++j) {
    for (VertexId v = 0; v < n; ++v) {
      lits.assign(1, -inst.var(v, j + 1));
      for (VertexId u = 0; u < v; ++u) lits.push_back(inst.var(u, j));
      inst.clauses.add(lits);
    }
  }
}

std::vector<std::vector<VertexId>> sierpinski_automorphisms(const SierpGraph& s) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& perm : base_automorphisms(s.base())) {
    if (auto e = s.augmented_edge()) {
      auto [i, j] = *e;
      auto a = perm[static_cast<std::size_t>(i)];
      auto b = perm[static_cast<std::size_t>(j)];
      if (!((a == i && b == j) || (a == j && b == i))) continue;
    }
    out.push_back(induced_permutation(s, perm));
  }
  return out;
}

Decision decide_packing(const Graph& g, int colors, const ChiRhoOptions& options,
                        std::span<const std::vector<VertexId>> autos, const std::vector<std::string>& labels,
                        const std::string& descriptor) {
  Decision out;
  CnfInstance inst = encode_packing(g, colors, labels, descriptor);
  if (options.symmetry_breaking) add_symmetry_breaking(inst, g, autos);
  SolveResult r = solve(inst, options.budget);
  out.attempts.push_back({colors, r.status, Method::cdcl, r.stats.conflicts, r.stats.seconds});
  out.status = r.status;
  if (r.status == SolveStatus::sat) {
    Coloring f = decode_model(inst, r.model);
    f.graph = descriptor;
    if (verify_packing(g, f)) throw VerificationError("decoded model is not a packing coloring");
    out.coloring = std::move(f);
  }
  if (r.status == SolveStatus::unknown && options.class_search && g.num_vertices() <= class_search_max_vertices) {
    ClassSearchResult cs = class_search(g, colors, autos, options.class_budget);
    out.attempts.push_back({colors, cs.status, Method::class_search, cs.nodes, cs.seconds});
    out.status = cs.status;
    out.method = Method::class_search;
    if (cs.coloring) {
      cs.coloring->graph = descriptor;
      out.coloring = std::move(cs.coloring);
    }
  }
  return out;
}

namespace {

std::vector<std::string> labels_of(const SierpGraph& s) {
  std::vector<std::string> labels;
  labels.reserve(s.num_vertices());
  for (VertexId v = 0; v < s.num_vertices(); ++v) labels.push_back(s.label(v));
  return labels;
}

}  // namespace

Decision decide_packing(const SierpGraph& s, int colors, const ChiRhoOptions& options) {
  auto autos = sierpinski_automorphisms(s);
  return decide_packing(s, colors, options, autos, labels_of(s), s.descriptor());
}

ChiRhoResult chi_rho_exact(const Graph& g, const ChiRhoOptions& options,
                           std::span<const std::vector<VertexId>> automorphisms,
                           const std::vector<std::string>& labels, const std::string& descriptor) {
  if (options.c_max < 0) throw PreconditionError("c_max must be non-negative");
  ChiRhoResult result;
  if (g.num_vertices() == 0) {
    result.lower = result.upper = 0;
    return result;
  }
  Coloring greedy = greedy_packing(g, descriptor);
  int top = options.c_max == 0 ? greedy.c : std::min(options.c_max, greedy.c);
  if (options.c_max == 0 || greedy.c <= options.c_max) {
    result.upper = greedy.c;
    result.witness = greedy;
    result.attempts.push_back({greedy.c, SolveStatus::sat, Method::greedy, 0, 0.0});
    top = greedy.c - 1;
  }

  auto settle = [&](int c) {
    Decision d = decide_packing(g, c, options, automorphisms, labels, descriptor);
    result.attempts.insert(result.attempts.end(), d.attempts.begin(), d.attempts.end());
    if (d.coloring) result.witness = std::move(d.coloring);
    return d.status;
  };

  int stuck = 0;
  for (int c = 1; c <= top; ++c) {
    SolveStatus s = settle(c);
    if (s == SolveStatus::unsat) {
      result.lower = c + 1;
    } else if (s == SolveStatus::sat) {
      result.upper = c;
      return result;
    } else {
      stuck = c;
      break;
    }
  }
  if (stuck == 0) return result;
  for (int c = (result.upper != 0 ? result.upper - 1 : top); c > stuck; --c) {
    SolveStatus s = settle(c);
    if (s != SolveStatus::sat) break;
    result.upper = c;
  }
  return result;
}

ChiRhoResult chi_rho_exact(const SierpGraph& s, const ChiRhoOptions& options) {
  auto autos = sierpinski_automorphisms(s);
  return chi_rho_exact(s, options, autos, labels_of(s), s.descriptor());
}

void record_external(ChiRhoResult& result, const Graph& g, int colors, SolveStatus claimed,
                     const std::optional<Coloring>& coloring) {
  if (claimed == SolveStatus::unknown) return;
  if (claimed == SolveStatus::sat) {
    if (!coloring || coloring->c > colors || verify_packing(g, *coloring)) {
      throw PreconditionError("external sat claim without a valid coloring");
    }
    result.attempts.push_back({colors, SolveStatus::sat, Method::external, 0, 0.0});
    if (result.upper == 0 || colors < result.upper) {
      result.upper = colors;
      result.witness = coloring;
      result.witness->c = colors;
    }
    return;
  }
  result.attempts.push_back({colors, SolveStatus::unsat, Method::external, 0, 0.0});
  if (colors + 1 > result.lower) {
    result.claimed_lower = std::max(result.claimed_lower.value_or(0), colors + 1);
  }
}

}  // namespace sierpack::sat
