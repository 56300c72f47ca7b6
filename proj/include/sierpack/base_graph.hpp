#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sierpack {

/// The seed graph G on vertex set [k] = {0, ..., k-1}.
///
/// Always simple and connected; the constructor rejects anything else. The
/// descriptor is the canonical textual name (`path:4`, `paw`, `custom:3:0-1,1-2`)
/// and round-trips through `BaseGraph::parse`.
class BaseGraph {
 public:
  BaseGraph(int k, std::vector<std::pair<int, int>> edges, std::string descriptor = {});

  static BaseGraph path(int k);
  static BaseGraph cycle(int k);
  static BaseGraph complete(int k);
  static BaseGraph k4_minus_e();
  static BaseGraph paw();
  static BaseGraph custom(int k, std::vector<std::pair<int, int>> edges);
  static BaseGraph parse(std::string_view descriptor);

  int order() const { return k_; }
  /// Edges as (x, y) with x < y, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int x, int y) const { return adj_[static_cast<std::size_t>(x * k_ + y)]; }
  const std::string& descriptor() const { return descriptor_; }
  std::vector<int> degrees() const;

  /// Copy with every vertex x renamed to perm[x].
  BaseGraph relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const BaseGraph& a, const BaseGraph& b) {
    return a.k_ == b.k_ && a.edges_ == b.edges_;
  }

 private:
  int k_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<bool> adj_;
  std::string descriptor_;
};

}  // namespace sierpack
