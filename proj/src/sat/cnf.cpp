#include "sierpack/sat/cnf.hpp"

#include <algorithm>
#include <cstdlib>

#include "sierpack/distance.hpp"
#include "sierpack/errors.hpp"

namespace sierpack::sat {

void ClauseList::add(std::span<const int> lits) {
  starts_.push_back(lits_.size());
  lits_.insert(lits_.end(), lits.begin(), lits.end());
}

std::vector<ConflictPair> close_pairs(const Graph& g, int radius) {
  std::vector<ConflictPair> pairs;
  TruncatedBfs bfs(g);
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    VertexId src[] = {u};
    std::size_t first = pairs.size();
    bfs.run(src, radius, [&](VertexId v, int d) {
      if (u < v) pairs.push_back({u, v, d});
      return true;
    });
    std::sort(pairs.begin() + static_cast<std::ptrdiff_t>(first), pairs.end(),
              [](const ConflictPair& a, const ConflictPair& b) { return a.v < b.v; });
  }
  return pairs;
}

namespace {

CnfInstance build(std::size_t num_vertices, int colors, const std::vector<ConflictPair>& pairs) {
  if (colors < 1) throw PreconditionError("at least one color is needed");
  CnfInstance inst;
  inst.colors = colors;
  inst.num_vertices = num_vertices;
  inst.num_vars = static_cast<int>(num_vertices) * colors;
  std::vector<int> clause(static_cast<std::size_t>(colors));
  for (VertexId v = 0; v < num_vertices; ++v) {
    for (int i = 1; i <= colors; ++i) clause[static_cast<std::size_t>(i - 1)] = inst.var(v, i);
    inst.clauses.add(clause);
  }
  for (const auto& p : pairs) {
    for (int i = std::max(p.distance, 1); i <= colors; ++i) inst.clauses.add({-inst.var(p.u, i), -inst.var(p.v, i)});
  }
  return inst;
}

std::vector<std::string> sierp_labels(const SierpGraph& s) {
  std::vector<std::string> labels;
  labels.reserve(s.num_vertices());
  for (VertexId v = 0; v < s.num_vertices(); ++v) labels.push_back(s.label(v));
  return labels;
}

}  // namespace

CnfInstance encode_packing(const Graph& g, int colors, std::vector<std::string> labels, std::string graph) {
  if (colors < 1) throw PreconditionError("at least one color is needed");
  CnfInstance inst = build(g.num_vertices(), colors, close_pairs(g, colors));
  if (labels.empty()) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) labels.push_back(std::to_string(v));
  }
  inst.labels = std::move(labels);
  inst.graph = std::move(graph);
  return inst;
}

CnfInstance encode_packing(const SierpGraph& s, int colors) {
  return encode_packing(s, colors, sierp_labels(s), s.descriptor());
}

std::vector<ConflictPair> extendable_close_pairs(const SierpGraph& plain, int radius) {
  std::vector<ConflictPair> pairs = close_pairs(plain, radius);
  TruncatedBfs bfs(plain);
  std::vector<ConflictPair> extra;
  for (auto [i, j] : plain.base().edges()) {
    auto near_i = bfs.ball(plain.extreme(i), radius - 1);
    auto near_j = bfs.ball(plain.extreme(j), radius - 1);
    for (auto [a, da] : near_i) {
      for (auto [b, db] : near_j) {
        int d = da + 1 + db;
        if (a == b || d > radius) continue;
        extra.push_back({std::min(a, b), std::max(a, b), d});
      }
    }
  }
  pairs.insert(pairs.end(), extra.begin(), extra.end());
  std::sort(pairs.begin(), pairs.end(), [](const ConflictPair& x, const ConflictPair& y) {
    return std::tie(x.u, x.v, x.distance) < std::tie(y.u, y.v, y.distance);
  });
  // keep the shortest distance per pair
  auto last = std::unique(pairs.begin(), pairs.end(),
                          [](const ConflictPair& x, const ConflictPair& y) { return x.u == y.u && x.v == y.v; });
  pairs.erase(last, pairs.end());
  return pairs;
}

CnfInstance encode_extendable(const BaseGraph& base, int level, int colors, const BuildLimits& limits) {
  if (colors < 1) throw PreconditionError("at least one color is needed");
  SierpGraph plain = build_sierpinski(base, level, limits);
  CnfInstance inst = build(plain.num_vertices(), colors, extendable_close_pairs(plain, colors));
  inst.labels = sierp_labels(plain);
  inst.graph = plain.descriptor();
  inst.kind = "extendable";
  return inst;
}

CnfInstance encode_liftable(const BaseGraph& base, int level, int colors, const BuildLimits& limits) {
  CnfInstance inst = encode_extendable(base, level, colors, limits);
  SierpGraph plain = build_sierpinski(base, level, limits);
  const int k = base.order();
  std::vector<int> bound(plain.num_vertices(), colors + 1);
  std::vector<std::vector<int>> from_extreme;
  TruncatedBfs bfs(plain);
  for (int i = 0; i < k; ++i) {
    std::vector<int> d(plain.num_vertices(), 0);
    VertexId src = plain.extreme(i);
    bfs.run(std::span<const VertexId>(&src, 1), -1, [&](VertexId v, int dist) {
      d[v] = dist;
      return true;
    });
    from_extreme.push_back(std::move(d));
  }
  for (VertexId u = 0; u < plain.num_vertices(); ++u) {
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (base.adjacent(i, j)) bound[u] = std::min(bound[u], from_extreme[i][u] + 1 + from_extreme[j][u]);
      }
    }
    for (int t = bound[u]; t <= colors; ++t) inst.clauses.add({-inst.var(u, t)});
  }
  inst.kind = "liftable";
  return inst;
}

CnfInstance add_assumptions(CnfInstance inst, std::span<const Fix> fixes) {
  for (const Fix& fix : fixes) {
    if (fix.vertex >= inst.num_vertices) throw PreconditionError("fix names unknown vertex " + std::to_string(fix.vertex));
    if (fix.color < 1 || fix.color > inst.colors) {
      throw PreconditionError("fix names color " + std::to_string(fix.color) + " outside {1.." +
                              std::to_string(inst.colors) + "}");
    }
    int var = inst.var(fix.vertex, fix.color);
    inst.clauses.add({fix.value ? var : -var});
  }
  return inst;
}

bool satisfies(const ClauseList& clauses, const std::vector<bool>& model) {
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    bool sat = false;
    for (int lit : clauses[c]) {
      auto var = static_cast<std::size_t>(std::abs(lit));
      if (var < model.size() && model[var] == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

Coloring decode_model(const CnfInstance& inst, const std::vector<bool>& model) {
  if (model.size() < static_cast<std::size_t>(inst.num_vars) + 1) throw PreconditionError("model is shorter than the variable count");
  if (!satisfies(inst.clauses, model)) throw PreconditionError("assignment does not satisfy the instance");
  Coloring f{inst.graph, inst.colors, std::vector<int>(inst.num_vertices, 0)};
  for (VertexId v = 0; v < inst.num_vertices; ++v) {
    for (int i = 1; i <= inst.colors; ++i) {
      if (model[static_cast<std::size_t>(inst.var(v, i))]) {
        f.colors[v] = i;
        break;
      }
    }
    if (f.colors[v] == 0) throw PreconditionError("vertex " + std::to_string(v) + " has no true color");
  }
  return f;
}

}  // namespace sierpack::sat
