#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sierpack/graph.hpp"
#include "sierpack/packing.hpp"
#include "sierpack/sierp_graph.hpp"

namespace sierpack {

/// A graph together with the text label of every vertex.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
  std::string descriptor;

  std::optional<VertexId> find(std::string_view label) const;

  static LabeledGraph from(const SierpGraph& s);
};

// Edge-list format:
//   k n variant            variant is plain, aug:<i>-<j> or triangle
//   <word> <word>          one edge per line, vertex ids ascending (u < v)
//   <word>                 isolated vertex (only for edgeless graphs)

void write_edge_list(std::ostream& out, const SierpGraph& s);

struct EdgeListHeader {
  int k = 0;
  int n = 0;
  std::string variant;
};

/// Reads an edge-list file into a labeled graph. Vertices are numbered by
/// first appearance.
LabeledGraph read_edge_list(std::istream& in, EdgeListHeader* header = nullptr);

// Coloring format:
//   graph: <descriptor or edge-list path> c: <int>
//   <word> <color>         one line per vertex in vertex-id order
// Lines starting with '#' are comments.

struct ColoringFile {
  std::string graph;
  int c = 0;
  std::vector<std::pair<std::string, int>> entries;
};

void write_coloring(std::ostream& out, const ColoringFile& file);
void write_coloring(std::ostream& out, const LabeledGraph& g, const Coloring& f);
ColoringFile read_coloring(std::istream& in);

/// Maps a parsed coloring file onto `g`. Throws ParseError on unknown or
/// repeated words and PreconditionError when a vertex is left uncolored.
Coloring resolve_coloring(const ColoringFile& file, const LabeledGraph& g);

/// Graph argument accepted by the CLI: a descriptor such as `paw/3` or the
/// path of an edge-list file.
LabeledGraph load_graph(const std::string& descriptor_or_path, const BuildLimits& limits = {});

Coloring load_coloring_file(const std::string& path, const LabeledGraph& g);
void save_coloring_file(const std::string& path, const LabeledGraph& g, const Coloring& f);

}  // namespace sierpack
