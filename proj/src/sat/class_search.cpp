#include "sierpack/sat/class_search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>

#include "sierpack/distance.hpp"
#include "sierpack/errors.hpp"

namespace sierpack::sat {
namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

Mask bit(int v) { return Mask{1} << v; }

class ClassSearch {
 public:
  ClassSearch(const Graph& g, int colors, std::span<const std::vector<VertexId>> autos,
              const SolveBudget& budget)
      : n_(static_cast<int>(g.num_vertices())), c_(colors), autos_(autos), budget_(budget) {
    auto dist = all_pairs_distances(g);
    diameter_ = 0;
    for (int d : dist) diameter_ = d < 0 ? std::numeric_limits<int>::max() : std::max(diameter_, d);
    conflict_.assign(static_cast<std::size_t>(c_) + 1, std::vector<Mask>(static_cast<std::size_t>(n_), 0));
    for (int i = 1; i <= c_; ++i) {
      for (int u = 0; u < n_; ++u) {
        for (int v = 0; v < n_; ++v) {
          int d = dist[static_cast<std::size_t>(u * n_ + v)];
          if (u != v && d >= 0 && d <= i) conflict_[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)] |= bit(v);
        }
      }
    }
    chosen_.assign(static_cast<std::size_t>(c_) + 1, 0);
    start_ = Clock::now();
  }

  SolveStatus run() {
    Mask all = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    bool found = false;
    try {
      found = color_from(1, all);
    } catch (const OutOfBudget&) {
      return SolveStatus::unknown;
    }
    return found ? SolveStatus::sat : SolveStatus::unsat;
  }

  Coloring coloring() const {
    Coloring f{{}, c_, std::vector<int>(static_cast<std::size_t>(n_), 0)};
    for (int i = 1; i <= c_; ++i) {
      for (Mask t = chosen_[static_cast<std::size_t>(i)]; t; t &= t - 1) {
        f.colors[static_cast<std::size_t>(std::countr_zero(t))] = i;
      }
    }
    return f;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct OutOfBudget {};

  Mask conflicts(int i, int v) const {
    return conflict_[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
  }

  // Largest i-packing inside `rest`.
  int packing_number(int i, Mask rest, int size, int best) const {
    if (!rest) return std::max(size, best);
    if (size + std::popcount(rest) <= best) return best;
    int v = std::countr_zero(rest);
    best = packing_number(i, rest & ~conflicts(i, v) & ~bit(v), size + 1, best);
    return packing_number(i, rest & ~bit(v), size, best);
  }

  bool color_from(int i, Mask uncolored) {
    int r = std::popcount(uncolored);
    if (r == 0) {
      for (int j = i; j <= c_; ++j) chosen_[static_cast<std::size_t>(j)] = 0;
      return true;
    }
    if (i > c_) return false;
    if (i >= diameter_) {
      // Every remaining class holds at most one vertex.
      if (r > c_ - i + 1) return false;
      int j = i;
      for (Mask t = uncolored; t; t &= t - 1) chosen_[static_cast<std::size_t>(j++)] = bit(std::countr_zero(t));
      for (; j <= c_; ++j) chosen_[static_cast<std::size_t>(j)] = 0;
      return true;
    }
    int later = 0;
    for (int j = c_; j > i && later < r; --j) later += j >= diameter_ ? 1 : packing_number(j, uncolored, 0, 0);
    int need = std::max(r - later, 0);
    if (need > 0 && packing_number(i, uncolored, 0, 0) < need) return false;
    return maximal_packings(i, uncolored, 0, uncolored, 0, need);
  }

  // Bron-Kerbosch with pivoting over the compatibility relation "not in
  // conflict at color i": enumerates the maximal i-packings of `uncolored`.
  bool maximal_packings(int i, Mask uncolored, Mask picked, Mask candidates, Mask excluded, int need) {
    tick();
    if (!candidates && !excluded) {
      if (i == 1 && !canonical(picked)) return false;
      chosen_[static_cast<std::size_t>(i)] = picked;
      return color_from(i + 1, uncolored & ~picked);
    }
    if (!candidates || std::popcount(picked) + std::popcount(candidates) < need) return false;
    int pivot = -1;
    int fewest = std::numeric_limits<int>::max();
    for (Mask t = candidates | excluded; t; t &= t - 1) {
      int u = std::countr_zero(t);
      int branches = std::popcount(candidates & (conflicts(i, u) | bit(u)));
      if (branches < fewest) {
        fewest = branches;
        pivot = u;
      }
    }
    Mask branch = candidates & (conflicts(i, pivot) | bit(pivot));
    for (Mask t = branch; t; t &= t - 1) {
      int v = std::countr_zero(t);
      Mask keep = ~conflicts(i, v) & ~bit(v);
      if (maximal_packings(i, uncolored, picked | bit(v), candidates & keep, excluded & keep, need)) return true;
      candidates &= ~bit(v);
      excluded |= bit(v);
    }
    return false;
  }

  bool canonical(Mask first) const {
    for (const auto& perm : autos_) {
      Mask image = 0;
      for (Mask t = first; t; t &= t - 1) image |= bit(static_cast<int>(perm[static_cast<std::size_t>(std::countr_zero(t))]));
      if (image < first) return false;
    }
    return true;
  }

  void tick() {
    ++nodes_;
    if (budget_.max_conflicts >= 0 && nodes_ > static_cast<std::uint64_t>(budget_.max_conflicts)) throw OutOfBudget{};
    if (budget_.max_seconds >= 0 && (nodes_ & 0xfff) == 0 &&
        std::chrono::duration<double>(Clock::now() - start_).count() > budget_.max_seconds) {
      throw OutOfBudget{};
    }
  }

  int n_;
  int c_;
  int diameter_ = 0;
  std::span<const std::vector<VertexId>> autos_;
  SolveBudget budget_;
  std::vector<std::vector<Mask>> conflict_;
  std::vector<Mask> chosen_;
  std::uint64_t nodes_ = 0;
  Clock::time_point start_;
};

}  // namespace

ClassSearchResult class_search(const Graph& g, int colors, std::span<const std::vector<VertexId>> automorphisms,
                               const SolveBudget& budget) {
  if (g.num_vertices() > class_search_max_vertices) {
    throw PreconditionError("class search handles at most 64 vertices");
  }
  if (colors < 1) throw PreconditionError("number of colors must be at least 1");
  for (const auto& perm : automorphisms) {
    if (perm.size() != g.num_vertices()) throw PreconditionError("automorphism has the wrong size");
  }
  auto start = Clock::now();
  ClassSearch search(g, colors, automorphisms, budget);
  ClassSearchResult out;
  out.status = search.run();
  out.nodes = search.nodes();
  if (out.status == SolveStatus::sat) {
    out.coloring = search.coloring();
    if (verify_packing(g, *out.coloring)) throw VerificationError("class search produced an invalid coloring");
  }
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

}  // namespace sierpack::sat
