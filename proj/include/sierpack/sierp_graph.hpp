#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sierpack/base_graph.hpp"
#include "sierpack/graph.hpp"
#include "sierpack/word.hpp"

namespace sierpack {

enum class Variant { plain, augmented, triangle };

/// Vertex budget for materialized graphs. Default 200,000, overridable with
/// the SIERPACK_VERTEX_BUDGET environment variable.
struct BuildLimits {
  std::uint64_t vertex_budget = default_budget();
  static std::uint64_t default_budget();
};

/// Textual graph descriptor: `<base>/<n>`, `<base>/<n>/aug:<i>-<j>` or
/// `triangle/<n>`. Examples: `path:3/2`, `cycle:8/3/aug:0-1`, `triangle/3`.
struct GraphSpec {
  std::string base = "complete:3";
  int n = 1;
  Variant variant = Variant::plain;
  std::pair<int, int> aug{0, 0};

  static GraphSpec parse(std::string_view text);
  std::string str() const;
};

/// A materialized generalized Sierpinski graph S^n_G, its augmented form
/// ^{ij}S^n_G, or a Sierpinski triangle graph ST_3^n.
///
/// For the plain and augmented variants vertex ids are the base-k indices of
/// the words. Triangle vertices are contraction classes of S^{n+1}_{K_3},
/// numbered by ascending representative (the smallest word in the class).
class SierpGraph : public Graph {
 public:
  const BaseGraph& base() const { return base_; }
  int dimension() const { return n_; }
  Variant variant() const { return variant_; }
  std::optional<std::pair<int, int>> augmented_edge() const {
    if (variant_ != Variant::augmented) return std::nullopt;
    return aug_;
  }
  /// Length of vertex words: n, or n + 1 for triangle graphs.
  int word_length() const { return variant_ == Variant::triangle ? n_ + 1 : n_; }

  Word word(VertexId v) const;
  std::string label(VertexId v) const { return word(v).str(); }
  /// Vertex carrying `w` (for triangle graphs: the class containing w).
  std::optional<VertexId> find(const Word& w) const;
  std::optional<VertexId> find(std::string_view label) const;

  GraphSpec spec() const;
  std::string descriptor() const { return spec().str(); }

  /// Id of the extreme vertex i^n (plain and augmented variants).
  VertexId extreme(int i) const;

 private:
  friend SierpGraph build_sierpinski(const BaseGraph&, int, const BuildLimits&);
  friend SierpGraph build_augmented(const SierpGraph&, int, int);
  friend SierpGraph build_triangle(int, const BuildLimits&);

  SierpGraph(Graph g, BaseGraph base, int n, Variant variant)
      : Graph(std::move(g)), base_(std::move(base)), n_(n), variant_(variant) {}

  BaseGraph base_;
  int n_;
  Variant variant_;
  std::pair<int, int> aug_{0, 0};
  std::vector<std::uint64_t> representatives_;  // triangle only
};

SierpGraph build_sierpinski(const BaseGraph& base, int n, const BuildLimits& limits = {});
SierpGraph build_augmented(const SierpGraph& plain, int i, int j);
SierpGraph build_triangle(int n, const BuildLimits& limits = {});
SierpGraph materialize(const GraphSpec& spec, const BuildLimits& limits = {});

/// Every permutation p of [k] with p(E) = E (brute force; k <= 8).
std::vector<std::vector<int>> base_automorphisms(const BaseGraph& base);

/// Vertex map of `s` induced by applying the base permutation `perm`
/// symbol-wise to every word. An automorphism whenever `perm` is one of the
/// base (and, for augmented graphs, fixes the added edge).
std::vector<VertexId> induced_permutation(const SierpGraph& s, const std::vector<int>& perm);

/// Edges {w x y^m, w y x^m} of S^n_G as word indices, in generation order
/// (prefix length, prefix, base edge).
std::vector<Edge> sierpinski_edges(const BaseGraph& base, int n);

}  // namespace sierpack
