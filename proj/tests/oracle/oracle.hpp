#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls the library's distance, verification or encoding code.

#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using AdjList = std::vector<std::vector<int>>;

inline AdjList adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
  AdjList adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

/// All-pairs distances by BFS; -1 for unreachable.
inline std::vector<std::vector<int>> distances(const AdjList& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::deque<int> q{s};
    d[s][s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : adj[u]) {
        if (d[s][v] < 0) {
          d[s][v] = d[s][u] + 1;
          q.push_back(v);
        }
      }
    }
  }
  return d;
}

/// Every same-colored pair checked against the distance matrix.
inline bool is_packing(const std::vector<std::vector<int>>& d, const std::vector<int>& colors) {
  const int n = static_cast<int>(colors.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (colors[u] == colors[v] && d[u][v] >= 0 && d[u][v] <= colors[u]) return false;
    }
  }
  return true;
}

/// Whether a packing c-coloring exists: plain backtracking in vertex order.
inline bool colorable(const std::vector<std::vector<int>>& d, int c) {
  const int n = static_cast<int>(d.size());
  std::vector<int> colors(n, 0);
  int v = 0;
  while (v >= 0 && v < n) {
    bool placed = false;
    for (int col = colors[v] + 1; col <= c && !placed; ++col) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = !(colors[u] == col && d[u][v] >= 0 && d[u][v] <= col);
      if (ok) {
        colors[v] = col;
        placed = true;
      }
    }
    if (placed) {
      ++v;
    } else {
      colors[v] = 0;
      --v;
    }
  }
  return v == n;
}

inline int chi_rho(const std::vector<std::vector<int>>& d) {
  int c = 1;
  while (!colorable(d, c)) ++c;
  return c;
}

/// Vertices of S^n_G as base-k digit vectors, in base-k index order.
inline std::vector<std::vector<int>> words(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(n, 0);
  while (true) {
    out.push_back(w);
    int i = n - 1;
    while (i >= 0 && w[i] == k - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

/// Edges of S^n_G from the pairwise rule: u ~ v iff for some h, u and v agree
/// on the first h symbols, u_h v_h is an edge of G, and u = w x y..y,
/// v = w y x..x. Quadratic in the number of vertices.
inline std::vector<std::pair<int, int>> sierpinski_edges(int k, const std::vector<std::pair<int, int>>& base, int n) {
  std::set<std::pair<int, int>> e;
  for (auto [x, y] : base) e.insert({std::min(x, y), std::max(x, y)});
  auto ws = words(k, n);
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < ws.size(); ++a) {
    for (std::size_t b = a + 1; b < ws.size(); ++b) {
      const auto& u = ws[a];
      const auto& v = ws[b];
      int h = 0;
      while (h < n && u[h] == v[h]) ++h;
      if (h == n) continue;
      int x = u[h], y = v[h];
      if (!e.count({std::min(x, y), std::max(x, y)})) continue;
      bool ok = true;
      for (int t = h + 1; t < n && ok; ++t) ok = u[t] == y && v[t] == x;
      if (ok) out.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
  }
  return out;
}

inline std::string label(const std::vector<int>& w) {
  std::string s;
  for (int x : w) s += static_cast<char>(x < 10 ? '0' + x : 'a' + x - 10);
  return s;
}

/// ST_3^n: S^{n+1}_{K_3} with every edge outside a triangle contracted.
/// Returns the vertex count and the quotient edges (classes numbered by
/// smallest member).
inline std::pair<int, std::vector<std::pair<int, int>>> triangle_graph(int n) {
  const int m = n + 1;
  auto edges = sierpinski_edges(3, {{0, 1}, {1, 2}, {0, 2}}, m);
  const int total = static_cast<int>(words(3, m).size());
  AdjList adj = adjacency(total, edges);
  std::vector<int> parent(total);
  for (int i = 0; i < total; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) {
    bool in_triangle = false;
    for (int w : adj[u]) {
      for (int z : adj[v]) in_triangle = in_triangle || w == z;
    }
    if (!in_triangle) {
      int a = find(u), b = find(v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int> id(total, -1);
  int count = 0;
  for (int i = 0; i < total; ++i) {
    if (find(i) == i) id[i] = count++;
  }
  std::set<std::pair<int, int>> q;
  for (auto [u, v] : edges) {
    int a = id[find(u)], b = id[find(v)];
    if (a != b) q.insert({std::min(a, b), std::max(a, b)});
  }
  return {count, {q.begin(), q.end()}};
}

/// Simple deterministic generator for random test graphs.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed * 2862933555777941757ULL + 3037000493ULL) {}
  std::uint32_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(state_ >> 33);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint32_t>(n)); }

 private:
  std::uint64_t state_;
};

/// Random connected graph: a random spanning tree plus extra edges.
inline std::vector<std::pair<int, int>> random_connected(Lcg& rng, int n, int extra) {
  std::set<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) {
    int u = rng.below(v);
    e.insert({u, v});
  }
  for (int t = 0; t < extra; ++t) {
    int u = rng.below(n), v = rng.below(n);
    if (u != v) e.insert({std::min(u, v), std::max(u, v)});
  }
  return {e.begin(), e.end()};
}

}  // namespace oracle
