#include "sierpack/base_graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "sierpack/errors.hpp"

namespace sierpack {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::string custom_descriptor(int k, const std::vector<std::pair<int, int>>& edges) {
  std::string out = "custom:" + std::to_string(k) + ":";
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (e) out += ',';
    out += std::to_string(edges[e].first) + "-" + std::to_string(edges[e].second);
  }
  return out;
}

bool is_connected(int k, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(k));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = k;
  for (auto [x, y] : edges) {
    int a = find(x), b = find(y);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

BaseGraph::BaseGraph(int k, std::vector<std::pair<int, int>> edges, std::string descriptor)
    : k_(k), descriptor_(std::move(descriptor)) {
  if (k < 1) throw PreconditionError("base graph order must be positive, got " + std::to_string(k));
  if (k > 36) throw PreconditionError("base graph order above 36 has no digit-string labels");
  std::set<std::pair<int, int>> seen;
  for (auto [x, y] : edges) {
    if (x < 0 || y < 0 || x >= k || y >= k) {
      throw PreconditionError("edge " + std::to_string(x) + "-" + std::to_string(y) +
                              " has an endpoint outside [" + std::to_string(k) + "]");
    }
    if (x == y) throw PreconditionError("self-loop at vertex " + std::to_string(x));
    auto key = std::minmax(x, y);
    if (!seen.insert(key).second) {
      throw PreconditionError("duplicate edge " + std::to_string(key.first) + "-" +
                              std::to_string(key.second));
    }
  }
  edges_.assign(seen.begin(), seen.end());
  if (!is_connected(k, edges_)) throw PreconditionError("base graph must be connected");
  adj_.assign(static_cast<std::size_t>(k * k), false);
  for (auto [x, y] : edges_) {
    adj_[static_cast<std::size_t>(x * k + y)] = true;
    adj_[static_cast<std::size_t>(y * k + x)] = true;
  }
  if (descriptor_.empty()) descriptor_ = custom_descriptor(k, edges_);
}

BaseGraph BaseGraph::path(int k) {
  if (k < 2) throw PreconditionError("path needs k >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return BaseGraph(k, std::move(edges), "path:" + std::to_string(k));
}

BaseGraph BaseGraph::cycle(int k) {
  if (k < 3) throw PreconditionError("cycle needs k >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, k - 1);
  return BaseGraph(k, std::move(edges), "cycle:" + std::to_string(k));
}

BaseGraph BaseGraph::complete(int k) {
  if (k < 1) throw PreconditionError("complete graph needs k >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  return BaseGraph(k, std::move(edges), "complete:" + std::to_string(k));
}

BaseGraph BaseGraph::k4_minus_e() {
  return BaseGraph(4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, "k4_minus_e");
}

BaseGraph BaseGraph::paw() { return BaseGraph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}, "paw"); }

BaseGraph BaseGraph::custom(int k, std::vector<std::pair<int, int>> edges) {
  return BaseGraph(k, std::move(edges));
}

BaseGraph BaseGraph::parse(std::string_view text) {
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (head == "k4_minus_e" && rest.empty()) return k4_minus_e();
  if (head == "paw" && rest.empty()) return paw();
  if (head == "path") return path(parse_int(rest, "path order"));
  if (head == "cycle") return cycle(parse_int(rest, "cycle order"));
  if (head == "complete") return complete(parse_int(rest, "complete order"));
  if (head == "custom") {
    auto sep = rest.find(':');
    if (sep == std::string_view::npos) throw ParseError("custom base needs 'custom:<k>:<edges>'");
    int k = parse_int(rest.substr(0, sep), "custom order");
    std::vector<std::pair<int, int>> edges;
    std::string_view list = rest.substr(sep + 1);
    while (!list.empty()) {
      auto comma = list.find(',');
      std::string_view item = list.substr(0, comma);
      auto dash = item.find('-');
      if (dash == std::string_view::npos) throw ParseError("edge needs 'x-y': '" + std::string(item) + "'");
      edges.emplace_back(parse_int(item.substr(0, dash), "edge endpoint"),
                         parse_int(item.substr(dash + 1), "edge endpoint"));
      list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    }
    return custom(k, std::move(edges));
  }
  throw ParseError("unknown base graph '" + std::string(text) + "'");
}

std::vector<int> BaseGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(k_), 0);
  for (auto [x, y] : edges_) {
    ++deg[x];
    ++deg[y];
  }
  return deg;
}

BaseGraph BaseGraph::relabeled(const std::vector<int>& perm) const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edges_.size());
  for (auto [x, y] : edges_) edges.emplace_back(perm.at(x), perm.at(y));
  return BaseGraph(k_, std::move(edges));
}

}  // namespace sierpack
