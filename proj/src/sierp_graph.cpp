#include "sierpack/sierp_graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "sierpack/errors.hpp"

namespace sierpack {

std::uint64_t BuildLimits::default_budget() {
  if (const char* env = std::getenv("SIERPACK_VERTEX_BUDGET")) {
    std::uint64_t value = 0;
    std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
  }
  return 200'000;
}

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t vertex_count_or_throw(int k, int n, const BuildLimits& limits) {
  std::uint64_t count = checked_power(k, n);
  if (count == 0 || count > limits.vertex_budget) {
    throw BudgetError("graph with " + std::to_string(k) + "^" + std::to_string(n) +
                      " vertices exceeds vertex budget " + std::to_string(limits.vertex_budget));
  }
  return count;
}

}  // namespace

GraphSpec GraphSpec::parse(std::string_view text) {
  GraphSpec spec;
  auto first = text.find('/');
  if (first == std::string_view::npos) throw ParseError("graph descriptor needs '<base>/<n>': '" + std::string(text) + "'");
  std::string_view head = text.substr(0, first);
  std::string_view rest = text.substr(first + 1);
  auto second = rest.find('/');
  spec.n = parse_int(rest.substr(0, second), "dimension");
  if (head == "triangle") {
    if (second != std::string_view::npos) throw ParseError("triangle graphs take no variant suffix");
    spec.variant = Variant::triangle;
    spec.base = "complete:3";
    return spec;
  }
  spec.base = std::string(head);
  BaseGraph::parse(spec.base);  // validate
  if (second != std::string_view::npos) {
    std::string_view var = rest.substr(second + 1);
    if (var.substr(0, 4) != "aug:") throw ParseError("unknown variant '" + std::string(var) + "'");
    var.remove_prefix(4);
    auto dash = var.find('-');
    if (dash == std::string_view::npos) throw ParseError("augmented variant needs 'aug:<i>-<j>'");
    spec.variant = Variant::augmented;
    spec.aug = {parse_int(var.substr(0, dash), "vertex"), parse_int(var.substr(dash + 1), "vertex")};
  }
  return spec;
}

std::string GraphSpec::str() const {
  switch (variant) {
    case Variant::triangle:
      return "triangle/" + std::to_string(n);
    case Variant::augmented:
      return base + "/" + std::to_string(n) + "/aug:" + std::to_string(aug.first) + "-" +
             std::to_string(aug.second);
    case Variant::plain:
      break;
  }
  return base + "/" + std::to_string(n);
}

Word SierpGraph::word(VertexId v) const {
  if (v >= num_vertices()) throw PreconditionError("vertex id " + std::to_string(v) + " out of range");
  if (variant_ == Variant::triangle) return Word::from_index(representatives_[v], 3, n_ + 1);
  return Word::from_index(v, base_.order(), n_);
}

std::optional<VertexId> SierpGraph::find(const Word& w) const {
  if (w.length() != word_length()) return std::nullopt;
  for (int s : w.symbols())
    if (s < 0 || s >= base_.order()) return std::nullopt;
  std::uint64_t index = w.index(base_.order());
  if (variant_ != Variant::triangle) return static_cast<VertexId>(index);
  // A class is identified by its smallest member; non-representatives are
  // merged with exactly one neighbor across a non-clique edge.
  auto it = std::lower_bound(representatives_.begin(), representatives_.end(), index);
  if (it != representatives_.end() && *it == index) return static_cast<VertexId>(it - representatives_.begin());
  // The contracted partner of ij^m is ji^m, the only non-clique neighbor.
  int m = w.length() - 1;
  int last = w[m];
  int pos = m;
  while (pos > 0 && w[pos - 1] == last) --pos;
  if (pos == 0) return std::nullopt;
  std::vector<int> partner = w.symbols();
  int x = partner[static_cast<std::size_t>(pos - 1)];
  partner[static_cast<std::size_t>(pos - 1)] = last;
  for (int t = pos; t <= m; ++t) partner[static_cast<std::size_t>(t)] = x;
  std::uint64_t pidx = Word(partner).index(3);
  it = std::lower_bound(representatives_.begin(), representatives_.end(), pidx);
  if (it != representatives_.end() && *it == pidx) return static_cast<VertexId>(it - representatives_.begin());
  return std::nullopt;
}

std::optional<VertexId> SierpGraph::find(std::string_view label) const {
  try {
    return find(Word::parse(label, base_.order()));
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

GraphSpec SierpGraph::spec() const {
  GraphSpec s;
  s.base = base_.descriptor();
  s.n = n_;
  s.variant = variant_;
  s.aug = aug_;
  return s;
}

VertexId SierpGraph::extreme(int i) const {
  if (variant_ == Variant::triangle) throw PreconditionError("extreme() is defined for S^n_G only");
  return static_cast<VertexId>(Word::extreme(i, n_).index(base_.order()));
}

std::vector<Edge> sierpinski_edges(const BaseGraph& base, int n) {
  const auto k = static_cast<std::uint64_t>(base.order());
  std::vector<Edge> edges;
  for (int level = 0; level < n; ++level) {
    int tail = n - level - 1;
    std::uint64_t block = checked_power(base.order(), n - level);
    std::uint64_t low = checked_power(base.order(), tail);
    std::uint64_t repunit = 0;
    for (int t = 0; t < tail; ++t) repunit = repunit * k + 1;
    std::uint64_t prefixes = checked_power(base.order(), level);
    for (std::uint64_t w = 0; w < prefixes; ++w) {
      for (auto [x, y] : base.edges()) {
        auto ux = static_cast<std::uint64_t>(x), uy = static_cast<std::uint64_t>(y);
        std::uint64_t u = w * block + ux * low + uy * repunit;
        std::uint64_t v = w * block + uy * low + ux * repunit;
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
      }
    }
  }
  return edges;
}

SierpGraph build_sierpinski(const BaseGraph& base, int n, const BuildLimits& limits) {
  if (n < 1) throw PreconditionError("dimension must be at least 1");
  std::uint64_t count = vertex_count_or_throw(base.order(), n, limits);
  auto edges = sierpinski_edges(base, n);
  return SierpGraph(Graph(count, edges), base, n, Variant::plain);
}

SierpGraph build_augmented(const SierpGraph& plain, int i, int j) {
  if (plain.variant() != Variant::plain) throw PreconditionError("augmentation needs a plain S^n_G");
  const BaseGraph& base = plain.base();
  if (i < 0 || j < 0 || i >= base.order() || j >= base.order() || !base.adjacent(i, j)) {
    throw PreconditionError("augmented graph is defined only for edges of the base; " + std::to_string(i) +
                            "-" + std::to_string(j) + " is not an edge of " + base.descriptor());
  }
  auto edges = plain.edge_list();
  edges.emplace_back(plain.extreme(i), plain.extreme(j));
  SierpGraph out(Graph(plain.num_vertices(), edges), base, plain.dimension(), Variant::augmented);
  out.aug_ = {i, j};
  return out;
}

SierpGraph build_triangle(int n, const BuildLimits& limits) {
  if (n < 0) throw PreconditionError("triangle dimension must be non-negative");
  BaseGraph k3 = BaseGraph::complete(3);
  SierpGraph s = build_sierpinski(k3, n + 1, limits);
  const std::size_t count = s.num_vertices();

  std::vector<VertexId> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto edges = s.edge_list();
  for (auto [u, v] : edges) {
    auto nu = s.neighbors(u), nv = s.neighbors(v);
    std::vector<VertexId> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
    if (!common.empty()) continue;  // lies in a triangle
    VertexId a = find(u), b = find(v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<VertexId> class_of(count);
  std::vector<std::uint64_t> reps;
  for (VertexId v = 0; v < count; ++v) {
    VertexId root = find(v);
    if (root == v) {
      class_of[v] = static_cast<VertexId>(reps.size());
      reps.push_back(v);
    } else {
      class_of[v] = class_of[root];  // root < v, already numbered
    }
  }
  std::vector<Edge> quotient;
  quotient.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (class_of[u] != class_of[v]) quotient.emplace_back(class_of[u], class_of[v]);
  }
  SierpGraph out(Graph(reps.size(), quotient), k3, n, Variant::triangle);
  out.representatives_ = std::move(reps);
  return out;
}

std::vector<std::vector<int>> base_automorphisms(const BaseGraph& base) {
  const int k = base.order();
  if (k > 8) return {[&] {
      std::vector<int> id(static_cast<std::size_t>(k));
      std::iota(id.begin(), id.end(), 0);
      return id;
    }()};
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (auto [x, y] : base.edges()) {
      if (!base.adjacent(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)])) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<VertexId> induced_permutation(const SierpGraph& s, const std::vector<int>& perm) {
  std::vector<VertexId> out(s.num_vertices());
  for (VertexId v = 0; v < s.num_vertices(); ++v) {
    std::vector<int> symbols = s.word(v).symbols();
    for (int& x : symbols) x = perm.at(static_cast<std::size_t>(x));
    auto image = s.find(Word(std::move(symbols)));
    if (!image) throw PreconditionError("permutation does not map the vertex set onto itself");
    out[v] = *image;
  }
  return out;
}

SierpGraph materialize(const GraphSpec& spec, const BuildLimits& limits) {
  switch (spec.variant) {
    case Variant::triangle:
      return build_triangle(spec.n, limits);
    case Variant::augmented:
      return build_augmented(build_sierpinski(BaseGraph::parse(spec.base), spec.n, limits), spec.aug.first,
                             spec.aug.second);
    case Variant::plain:
      break;
  }
  return build_sierpinski(BaseGraph::parse(spec.base), spec.n, limits);
}

}  // namespace sierpack
