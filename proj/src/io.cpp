#include "sierpack/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sierpack/errors.hpp"

namespace sierpack {

namespace {

std::string variant_token(const SierpGraph& s) {
  switch (s.variant()) {
    case Variant::triangle:
      return "triangle";
    case Variant::augmented:
      return "aug:" + std::to_string(s.augmented_edge()->first) + "-" + std::to_string(s.augmented_edge()->second);
    case Variant::plain:
      break;
  }
  return "plain";
}

int to_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

std::optional<VertexId> LabeledGraph::find(std::string_view label) const {
  // Linear lookups are fine for the file sizes handled here; callers that
  // resolve many labels build their own index.
  for (VertexId v = 0; v < labels.size(); ++v)
    if (labels[v] == label) return v;
  return std::nullopt;
}

LabeledGraph LabeledGraph::from(const SierpGraph& s) {
  LabeledGraph out{s, {}, s.descriptor()};
  out.labels.reserve(s.num_vertices());
  for (VertexId v = 0; v < s.num_vertices(); ++v) out.labels.push_back(s.label(v));
  return out;
}

void write_edge_list(std::ostream& out, const SierpGraph& s) {
  out << s.base().order() << ' ' << s.dimension() << ' ' << variant_token(s) << '\n';
  if (s.num_edges() == 0) {
    for (VertexId v = 0; v < s.num_vertices(); ++v) out << s.label(v) << '\n';
    return;
  }
  for (auto [u, v] : s.edge_list()) out << s.label(u) << ' ' << s.label(v) << '\n';
}

LabeledGraph read_edge_list(std::istream& in, EdgeListHeader* header) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty edge-list file");
  auto head = split(line);
  if (head.size() != 3) throw ParseError("edge-list header must be 'k n variant'");
  EdgeListHeader h{to_int(head[0], "k"), to_int(head[1], "n"), head[2]};
  if (header) *header = h;

  LabeledGraph g;
  std::unordered_map<std::string, VertexId> index;
  auto intern = [&](const std::string& label) {
    Word::parse(label, h.k);  // validates symbols
    auto [it, fresh] = index.emplace(label, static_cast<VertexId>(g.labels.size()));
    if (fresh) g.labels.push_back(label);
    return it->second;
  };
  std::vector<Edge> edges;
  for (std::size_t lineno = 2; std::getline(in, line); ++lineno) {
    if (!line.empty() && line[0] == '#') continue;
    auto tok = split(line);
    if (tok.empty()) continue;
    if (tok.size() == 1) {
      intern(tok[0]);
    } else if (tok.size() == 2) {
      edges.emplace_back(intern(tok[0]), intern(tok[1]));
    } else {
      throw ParseError("edge-list line " + std::to_string(lineno) + " has " + std::to_string(tok.size()) + " fields");
    }
  }
  g.graph = Graph(g.labels.size(), edges);
  g.descriptor = h.variant == "triangle" ? "triangle/" + std::to_string(h.n) : std::string();
  return g;
}

void write_coloring(std::ostream& out, const ColoringFile& file) {
  out << "graph: " << file.graph << " c: " << file.c << '\n';
  for (const auto& [word, color] : file.entries) out << word << ' ' << color << '\n';
}

void write_coloring(std::ostream& out, const LabeledGraph& g, const Coloring& f) {
  ColoringFile file{f.graph.empty() ? g.descriptor : f.graph, f.c, {}};
  file.entries.reserve(f.colors.size());
  for (VertexId v = 0; v < f.colors.size(); ++v) file.entries.emplace_back(g.labels.at(v), f.colors[v]);
  write_coloring(out, file);
}

ColoringFile read_coloring(std::istream& in) {
  std::string line;
  auto next = [&] {
    while (std::getline(in, line)) {
      if (line.empty() || line[0] != '#') return true;
    }
    return false;
  };
  if (!next()) throw ParseError("empty coloring file");
  auto head = split(line);
  if (head.size() != 4 || head[0] != "graph:" || head[2] != "c:") {
    throw ParseError("coloring header must be 'graph: <graph> c: <int>'");
  }
  ColoringFile file{head[1], to_int(head[3], "color count"), {}};
  for (std::size_t lineno = 2; std::getline(in, line); ++lineno) {
    if (!line.empty() && line[0] == '#') continue;
    auto tok = split(line);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw ParseError("coloring line " + std::to_string(lineno) + " must be '<word> <color>'");
    file.entries.emplace_back(tok[0], to_int(tok[1], "color"));
  }
  return file;
}

Coloring resolve_coloring(const ColoringFile& file, const LabeledGraph& g) {
  std::unordered_map<std::string_view, VertexId> index;
  for (VertexId v = 0; v < g.labels.size(); ++v) index.emplace(g.labels[v], v);
  Coloring f{file.graph, file.c, std::vector<int>(g.labels.size(), 0)};
  for (const auto& [word, color] : file.entries) {
    auto it = index.find(word);
    if (it == index.end()) throw ParseError("coloring names unknown vertex '" + word + "'");
    if (f.colors[it->second] != 0) throw ParseError("vertex '" + word + "' colored twice");
    if (color < 1 || color > file.c) {
      throw PreconditionError("vertex '" + word + "' has color " + std::to_string(color) + " outside {1.." +
                              std::to_string(file.c) + "}");
    }
    f.colors[it->second] = color;
  }
  for (VertexId v = 0; v < f.colors.size(); ++v) {
    if (f.colors[v] == 0) throw PreconditionError("vertex '" + g.labels[v] + "' is uncolored");
  }
  return f;
}

LabeledGraph load_graph(const std::string& descriptor_or_path, const BuildLimits& limits) {
  std::ifstream file(descriptor_or_path);
  if (file) {
    LabeledGraph g = read_edge_list(file);
    g.descriptor = descriptor_or_path;
    return g;
  }
  return LabeledGraph::from(materialize(GraphSpec::parse(descriptor_or_path), limits));
}

Coloring load_coloring_file(const std::string& path, const LabeledGraph& g) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open coloring file '" + path + "'");
  return resolve_coloring(read_coloring(in), g);
}

void save_coloring_file(const std::string& path, const LabeledGraph& g, const Coloring& f) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_coloring(out, g, f);
}

}  // namespace sierpack
