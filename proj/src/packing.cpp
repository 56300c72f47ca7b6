#include "sierpack/packing.hpp"

#include <algorithm>
#include <set>

#include "sierpack/distance.hpp"
#include "sierpack/errors.hpp"

namespace sierpack {

int Coloring::colors_used() const {
  std::set<int> used(colors.begin(), colors.end());
  return static_cast<int>(used.size());
}

namespace {

void check_total(const Graph& g, const Coloring& f) {
  if (f.colors.size() != g.num_vertices()) {
    throw PreconditionError("coloring covers " + std::to_string(f.colors.size()) + " of " +
                            std::to_string(g.num_vertices()) + " vertices");
  }
  for (std::size_t v = 0; v < f.colors.size(); ++v) {
    if (f.colors[v] < 1 || f.colors[v] > f.c) {
      throw PreconditionError("vertex " + std::to_string(v) + " has color " + std::to_string(f.colors[v]) +
                              " outside {1.." + std::to_string(f.c) + "}");
    }
  }
}

int exact_distance(const Graph& g, VertexId u, VertexId v) {
  TruncatedBfs bfs(g);
  VertexId src[] = {u};
  int found = -1;
  bfs.run(src, -1, [&](VertexId w, int d) {
    if (w != v) return true;
    found = d;
    return false;
  });
  return found;
}

}  // namespace

std::optional<Violation> verify_packing(const Graph& g, const Coloring& f) {
  check_total(g, f);
  TruncatedBfs bfs(g);
  std::optional<Violation> found;
  for (VertexId u = 0; u < g.num_vertices() && !found; ++u) {
    const int color = f.colors[u];
    VertexId src[] = {u};
    bfs.run(src, color, [&](VertexId v, int d) {
      if (v != u && f.colors[v] == color) {
        found = Violation{u, v, color, d};
        return false;
      }
      return true;
    });
  }
  return found;
}

std::vector<Violation> list_violations(const Graph& g, const Coloring& f) {
  check_total(g, f);
  TruncatedBfs bfs(g);
  std::vector<Violation> out;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    const int color = f.colors[u];
    VertexId src[] = {u};
    bfs.run(src, color, [&](VertexId v, int d) {
      if (u < v && f.colors[v] == color) out.push_back(Violation{u, v, color, d});
      return true;
    });
  }
  std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return out;
}

Coloring greedy_packing(const Graph& g, std::string graph) {
  Coloring f{std::move(graph), 0, std::vector<int>(g.num_vertices(), 0)};
  TruncatedBfs bfs(g);
  std::vector<char> blocked;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    blocked.assign(static_cast<std::size_t>(f.c) + 2, 0);
    const VertexId src[] = {v};
    bfs.run(src, f.c, [&](VertexId u, int d) {
      int cu = f.colors[u];
      if (u != v && cu >= d) blocked[static_cast<std::size_t>(cu)] = 1;
      return true;
    });
    int color = 1;
    while (blocked[static_cast<std::size_t>(color)]) ++color;
    f.colors[v] = color;
    f.c = std::max(f.c, color);
  }
  return f;
}

ExtendableVerdict verify_extendable(const SierpGraph& plain, const Coloring& f) {
  if (plain.variant() != Variant::plain) throw PreconditionError("extendability is checked on a plain S^l_G");
  ExtendableVerdict verdict;
  if (auto v = verify_packing(plain, f)) {
    verdict.valid = false;
    verdict.violation = v;
    return verdict;
  }
  // A new violation in ^{ij}S^l must use the added edge, so one endpoint is
  // within c-1 of i^l and the other within c-1 of j^l.
  TruncatedBfs bfs(plain);
  const int reach = f.c - 1;
  for (auto [i, j] : plain.base().edges()) {
    auto near_i = bfs.ball(plain.extreme(i), reach);
    auto near_j = bfs.ball(plain.extreme(j), reach);
    for (auto [u, du] : near_i) {
      const int color = f.colors[u];
      if (du + 1 > color) continue;
      for (auto [v, dv] : near_j) {
        if (v == u || f.colors[v] != color || du + 1 + dv > color) continue;
        SierpGraph aug = build_augmented(plain, i, j);
        VertexId a = std::min(u, v), b = std::max(u, v);
        verdict.valid = false;
        verdict.augmented_edge = std::make_pair(i, j);
        verdict.violation = Violation{a, b, color, exact_distance(aug, a, b)};
        return verdict;
      }
    }
  }
  return verdict;
}

ExtendableVerdict verify_extendable(const BaseGraph& base, int level, const Coloring& f) {
  return verify_extendable(build_sierpinski(base, level), f);
}

std::optional<SelfCopyClash> find_self_copy_clash(const SierpGraph& plain, const Coloring& f) {
  if (f.colors.size() != plain.num_vertices()) throw PreconditionError("coloring does not cover the graph");
  const BaseGraph& base = plain.base();
  const int k = base.order();
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
        if (!base.adjacent(i, j)) continue;
        int d = from_extreme[i][u] + 1 + from_extreme[j][u];
        if (d <= f.colors[u]) return SelfCopyClash{u, i, j, f.colors[u], d};
      }
    }
  }
  return std::nullopt;
}

LiftPrecondition check_lift_precondition(const BaseGraph& base, int level, int c, const BuildLimits& limits) {
  if (level < 1) throw PreconditionError("lift level must be at least 1");
  LiftPrecondition result;
  std::optional<SierpGraph> host;
  try {
    host.emplace(build_sierpinski(base, level + 1, limits));
  } catch (const BudgetError&) {
    result.checkable = false;
    return result;
  }
  result.holds = true;
  const int k = base.order();
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (base.adjacent(i, j)) continue;
      int d = copy_distance(*host, i, j);
      result.pairs.push_back({i, j, d});
      if (d <= c) result.holds = false;
    }
  }
  return result;
}

Coloring lift(const BaseGraph& base, int level, const Coloring& f, int n, const BuildLimits& limits) {
  if (n <= level) {
    throw PreconditionError("target dimension " + std::to_string(n) + " must exceed seed dimension " +
                            std::to_string(level));
  }
  SierpGraph seed = build_sierpinski(base, level, limits);
  auto verdict = verify_extendable(seed, f);
  if (!verdict.valid) {
    const Violation& v = *verdict.violation;
    std::string where = verdict.augmented_edge
                            ? " in augmented graph with edge " + std::to_string(verdict.augmented_edge->first) + "-" +
                                  std::to_string(verdict.augmented_edge->second)
                            : std::string();
    throw PreconditionError("seed coloring is not extendable: vertices " + seed.label(v.u) + " and " +
                            seed.label(v.v) + " share color " + std::to_string(v.color) + " at distance " +
                            std::to_string(v.distance) + where);
  }
  if (auto clash = find_self_copy_clash(seed, f)) {
    throw PreconditionError("vertex " + seed.label(clash->vertex) + " has color " + std::to_string(clash->color) +
                            " but its images in copies " + std::to_string(clash->i) + " and " +
                            std::to_string(clash->j) + " are at distance " + std::to_string(clash->distance));
  }
  auto pre = check_lift_precondition(base, level, f.c, limits);
  if (!pre.checkable) throw BudgetError("lift precondition not checkable at the vertex budget");
  if (!pre.holds) {
    for (const auto& p : pre.pairs) {
      if (p.distance <= f.c) {
        throw PreconditionError("copies " + std::to_string(p.i) + " and " + std::to_string(p.j) +
                                " are at distance " + std::to_string(p.distance) + " <= " + std::to_string(f.c));
      }
    }
  }
  std::uint64_t total = checked_power(base.order(), n);
  if (total == 0 || total > limits.vertex_budget) throw BudgetError("lifted coloring exceeds the vertex budget");
  const std::size_t period = f.colors.size();
  Coloring out;
  out.c = f.c;
  out.graph = GraphSpec{base.descriptor(), n, Variant::plain, {0, 0}}.str();
  out.colors.resize(total);
  for (std::size_t v = 0; v < total; ++v) out.colors[v] = f.colors[v % period];

  SierpGraph target = build_sierpinski(base, n, limits);
  if (auto bad = verify_packing(target, out)) {
    throw VerificationError("lifted coloring failed verification at " + target.label(bad->u) + ", " +
                            target.label(bad->v));
  }
  return out;
}

}  // namespace sierpack
