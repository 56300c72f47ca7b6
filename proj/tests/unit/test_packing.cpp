#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "sierpack/constructions.hpp"
#include "sierpack/distance.hpp"
#include "sierpack/errors.hpp"
#include "sierpack/packing.hpp"
#include "sierpack/sat/cnf.hpp"
#include "sierpack/sat/solver.hpp"

using namespace sierpack;
using testing::make;

namespace {

Coloring from_labels(const SierpGraph& s, int c, std::initializer_list<std::pair<const char*, int>> values) {
  Coloring f{s.descriptor(), c, std::vector<int>(s.num_vertices(), 0)};
  for (auto [label, color] : values) f.colors[*s.find(label)] = color;
  return f;
}

Coloring p3_three_coloring(const SierpGraph& s) {
  return from_labels(s, 3, {{"00", 1}, {"02", 1}, {"10", 1}, {"12", 1}, {"20", 1}, {"22", 1},
                            {"01", 2}, {"21", 2}, {"11", 3}});
}

// A packing 4-coloring with color 1 on both 00 and 11.
Coloring extremes_share_one(const SierpGraph& s) {
  return from_labels(s, 4, {{"00", 1}, {"01", 2}, {"02", 1}, {"10", 3}, {"11", 1}, {"12", 2},
                            {"20", 4}, {"21", 1}, {"22", 3}});
}

Coloring random_coloring(oracle::Lcg& rng, std::size_t n, int c) {
  Coloring f{"", c, std::vector<int>(n)};
  for (auto& x : f.colors) x = 1 + rng.below(c);
  return f;
}

// Extendable by definition: valid on every augmented graph.
bool oracle_extendable(const SierpGraph& plain, const Coloring& f) {
  for (auto [i, j] : plain.base().edges()) {
    SierpGraph aug = build_augmented(plain, i, j);
    if (!oracle::is_packing(testing::oracle_distances(aug), f.colors)) return false;
  }
  return true;
}

Coloring solve_extendable(const BaseGraph& base, int level, int c) {
  auto inst = sat::encode_extendable(base, level, c);
  auto r = sat::solve(inst);
  REQUIRE(r.status == sat::SolveStatus::sat);
  return sat::decode_model(inst, r.model);
}

}  // namespace

TEST_CASE("verify_packing on the explicit 3-coloring of S^2 of P_3") {
  SierpGraph s = build_sierpinski(BaseGraph::path(3), 2);
  Coloring f = p3_three_coloring(s);
  CHECK_FALSE(verify_packing(s, f).has_value());
  CHECK(f.colors_used() == 3);

  f.colors[*s.find("22")] = 2;  // 21 and 22 both 2 at distance 1
  auto v = verify_packing(s, f);
  REQUIRE(v.has_value());
  CHECK(v->color == 2);
  CHECK(v->distance == 1);
}

TEST_CASE("verify_packing on K_2") {
  const Edge e[] = {{0, 1}};
  Graph k2(2, e);
  Coloring f{"", 1, {1, 1}};
  CHECK(verify_packing(k2, f) == Violation{0, 1, 1, 1});
  CHECK(list_violations(k2, f).size() == 1);
  CHECK_FALSE(verify_packing(k2, Coloring{"", 2, {1, 2}}).has_value());
}

TEST_CASE("verify_packing rejects malformed colorings") {
  const Edge e[] = {{0, 1}};
  Graph k2(2, e);
  CHECK_THROWS_AS(verify_packing(k2, Coloring{"", 2, {1}}), PreconditionError);
  CHECK_THROWS_AS(verify_packing(k2, Coloring{"", 2, {1, 3}}), PreconditionError);
  CHECK_THROWS_AS(verify_packing(k2, Coloring{"", 2, {0, 1}}), PreconditionError);
}

TEST_CASE("the four-color formula on S^2 of P_4 is a packing") {
  SierpGraph s = build_sierpinski(BaseGraph::path(4), 2);
  Coloring f{s.descriptor(), 4, std::vector<int>(16)};
  for (VertexId v = 0; v < 16; ++v) {
    int i = static_cast<int>(v / 4), j = static_cast<int>(v % 4);
    f.colors[v] = j % 2 == 0 ? 1 : i == j ? 4 : j % 4 == 1 ? 2 : 3;
  }
  CHECK_FALSE(verify_packing(s, f).has_value());
}

TEST_CASE("verify_packing agrees with the oracle on random colorings") {
  oracle::Lcg rng(11);
  for (const char* d : {"path:3/2", "cycle:5/2", "paw/2", "k4_minus_e/2", "path:4/3", "cycle:4/2/aug:0-1"}) {
    SierpGraph s = make(d);
    auto dist = testing::oracle_distances(s);
    for (int t = 0; t < 60; ++t) {
      int c = 2 + rng.below(6);
      Coloring f = random_coloring(rng, s.num_vertices(), c);
      bool valid = !verify_packing(s, f).has_value();
      CAPTURE(d);
      CHECK(valid == oracle::is_packing(dist, f.colors));
      auto all = list_violations(s, f);
      CHECK(all.empty() == valid);
      for (const auto& v : all) {
        CHECK(v.u < v.v);
        CHECK(f.colors[v.u] == v.color);
        CHECK(f.colors[v.v] == v.color);
        CHECK(dist[v.u][v.v] == v.distance);
        CHECK(v.distance <= v.color);
      }
    }
  }
}

TEST_CASE("first-fit colorings are valid") {
  oracle::Lcg rng(3);
  for (int t = 0; t < 30; ++t) {
    int n = 3 + rng.below(20);
    auto edges = oracle::random_connected(rng, n, rng.below(n));
    std::vector<Edge> e;
    for (auto [u, v] : edges) e.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    Graph g(static_cast<std::size_t>(n), e);
    Coloring f = greedy_packing(g);
    CHECK(oracle::is_packing(testing::oracle_distances(g), f.colors));
  }
  CHECK_FALSE(verify_packing(build_triangle(3), greedy_packing(build_triangle(3))).has_value());
}

TEST_CASE("verify_extendable") {
  SierpGraph s = build_sierpinski(BaseGraph::path(3), 2);
  Coloring f = p3_three_coloring(s);
  auto ok = verify_extendable(s, f);
  CHECK(ok.valid);
  CHECK(oracle_extendable(s, f));

  // Color 1 on both 0^l and 1^l: adjacent after augmenting along 01.
  Coloring g = extremes_share_one(s);
  REQUIRE_FALSE(verify_packing(s, g).has_value());
  auto bad = verify_extendable(s, g);
  CHECK_FALSE(bad.valid);
  REQUIRE(bad.augmented_edge.has_value());
  CHECK(bad.violation->color == 1);
  CHECK(bad.violation->distance == 1);

  CHECK_THROWS_AS(verify_extendable(make("path:3/2/aug:0-1"), f), PreconditionError);
}

TEST_CASE("a SAT-derived extendable 5-coloring of S^2 of C_9 verifies") {
  SierpGraph s = build_sierpinski(BaseGraph::cycle(9), 2);
  Coloring f = solve_extendable(BaseGraph::cycle(9), 2, 5);
  CHECK(verify_extendable(s, f).valid);
  CHECK(oracle_extendable(s, f));
}

TEST_CASE("verify_extendable agrees with the augmented-graph oracle") {
  oracle::Lcg rng(5);
  for (const char* b : {"path:3", "cycle:4", "paw", "k4_minus_e"}) {
    BaseGraph base = BaseGraph::parse(b);
    SierpGraph s = build_sierpinski(base, 2);
    for (int t = 0; t < 40; ++t) {
      // Start from a valid coloring and perturb it, so both outcomes occur.
      Coloring f = greedy_packing(s);
      f.c = std::max(f.c, 6);
      for (int m = rng.below(3); m > 0; --m) f.colors[rng.below(static_cast<int>(s.num_vertices()))] = 1 + rng.below(f.c);
      if (verify_packing(s, f)) continue;
      CAPTURE(b);
      CHECK(verify_extendable(s, f).valid == oracle_extendable(s, f));
    }
  }
}

TEST_CASE("lift preconditions") {
  auto p3 = check_lift_precondition(BaseGraph::path(3), 2, 3);
  CHECK(p3.holds);
  REQUIRE(p3.pairs.size() == 1);
  CHECK(p3.pairs[0].i == 0);
  CHECK(p3.pairs[0].j == 2);
  CHECK(p3.pairs[0].distance == 8);

  for (int level = 1; level <= 3; ++level) {
    auto k3 = check_lift_precondition(BaseGraph::complete(3), level, 9);
    CHECK(k3.holds);
    CHECK(k3.pairs.empty());
  }

  auto p4 = check_lift_precondition(BaseGraph::path(4), 2, 5);
  CHECK(p4.holds);
  CHECK(p4.pairs.size() == 3);
  for (const auto& pr : p4.pairs) CHECK(pr.distance > 5);

  // The same distances from the oracle on S^{l+1}.
  SierpGraph s3 = build_sierpinski(BaseGraph::path(4), 3);
  auto d = testing::oracle_distances(s3);
  for (const auto& pr : p4.pairs) {
    int best = 1 << 30;
    for (int u = 0; u < 16; ++u) {
      for (int v = 0; v < 16; ++v) best = std::min(best, d[pr.i * 16 + u][pr.j * 16 + v]);
    }
    CHECK(pr.distance == best);
  }

  CHECK_FALSE(check_lift_precondition(BaseGraph::path(4), 1, 5).holds);
}

TEST_CASE("lifting the 3-coloring of S^2 of P_3") {
  SierpGraph s = build_sierpinski(BaseGraph::path(3), 2);
  Coloring f = p3_three_coloring(s);
  for (int n = 3; n <= 5; ++n) {
    Coloring big = lift(BaseGraph::path(3), 2, f, n);
    SierpGraph sn = build_sierpinski(BaseGraph::path(3), n);
    CHECK(big.colors.size() == sn.num_vertices());
    CHECK(oracle::is_packing(testing::oracle_distances(sn), big.colors));
    CHECK(verify_extendable(sn, big).valid);
    // wu gets f(u).
    for (VertexId v = 0; v < sn.num_vertices(); ++v) CHECK(big.colors[v] == f.colors[v % 9]);
  }
  CHECK_THROWS_AS(lift(BaseGraph::path(3), 2, f, 2), PreconditionError);
}

TEST_CASE("lift refuses colorings that are not extendable") {
  SierpGraph s = build_sierpinski(BaseGraph::path(3), 2);
  Coloring bad = p3_three_coloring(s);
  bad.colors[*s.find("00")] = 2;  // next to 01
  CHECK_THROWS_AS(lift(BaseGraph::path(3), 2, bad, 3), PreconditionError);

  // A packing that fails only after augmentation: 1 on both 0^l and 1^l.
  Coloring g = extremes_share_one(s);
  REQUIRE_FALSE(verify_packing(s, g).has_value());
  CHECK_THROWS_AS(lift(BaseGraph::path(3), 2, g, 3), PreconditionError);
}

TEST_CASE("self-copy clashes are exactly the lift failures inside adjacent copies") {
  // For any extendable coloring f of S^l, the two images iu, ju of a vertex u
  // in S^{l+1} are at distance d(u, i^l) + 1 + d(j^l, u); find_self_copy_clash
  // reports a clash iff that distance is at most f(u) for some edge ij.
  for (auto [base, c] : std::vector<std::pair<BaseGraph, int>>{{BaseGraph::cycle(8), 5},
                                                               {BaseGraph::cycle(6), 6},
                                                               {BaseGraph::path(4), 5},
                                                               {BaseGraph::path(3), 3}}) {
    const int k = base.order();
    SierpGraph s2 = build_sierpinski(base, 2);
    SierpGraph s3 = build_sierpinski(base, 3);
    auto d3 = testing::oracle_distances(s3);
    Coloring f = solve_extendable(base, 2, c);
    bool clash_by_oracle = false;
    for (auto [i, j] : base.edges()) {
      for (int u = 0; u < k * k; ++u) {
        if (d3[i * k * k + u][j * k * k + u] <= f.colors[u]) clash_by_oracle = true;
      }
    }
    auto clash = find_self_copy_clash(s2, f);
    CHECK(clash.has_value() == clash_by_oracle);
    if (clash) {
      CHECK(clash->color == f.colors[clash->vertex]);
      CHECK(clash->distance == d3[clash->i * k * k + clash->vertex][clash->j * k * k + clash->vertex]);
      CHECK_THROWS_AS(lift(base, 2, f, 3), PreconditionError);
    } else {
      CHECK(oracle::is_packing(d3, lift(base, 2, f, 3).colors));
    }
  }
}

TEST_CASE("liftable seeds lift to valid colorings") {
  for (auto [base, level, c] : std::vector<std::tuple<BaseGraph, int, int>>{
           {BaseGraph::cycle(8), 3, 5}, {BaseGraph::path(5), 3, 5}, {BaseGraph::cycle(5), 3, 7}}) {
    auto inst = sat::encode_liftable(base, level, c);
    auto r = sat::solve(inst);
    REQUIRE(r.status == sat::SolveStatus::sat);
    Coloring f = sat::decode_model(inst, r.model);
    SierpGraph s = build_sierpinski(base, level);
    CHECK(verify_extendable(s, f).valid);
    CHECK_FALSE(find_self_copy_clash(s, f).has_value());
    Coloring big = lift(base, level, f, level + 1);
    CHECK_FALSE(verify_packing(build_sierpinski(base, level + 1), big).has_value());
  }
}

// Known gap: every extendable 6-coloring of S^2 of C_7 has a self-copy clash
// (the liftable encoding is unsatisfiable), so this lift cannot succeed.
TEST_CASE("lifting an extendable 6-coloring of S^2 of C_7" * doctest::should_fail()) {
  Coloring f = solve_extendable(BaseGraph::cycle(7), 2, 6);
  Coloring big = lift(BaseGraph::cycle(7), 2, f, 3);
  CHECK_FALSE(verify_packing(build_sierpinski(BaseGraph::cycle(7), 3), big).has_value());
}

TEST_CASE("a packing coloring is also a packing of every distance-power subgraph") {
  // Removing edges only increases distances.
  oracle::Lcg rng(9);
  SierpGraph s = make("paw/3");
  Coloring f = greedy_packing(s);
  auto edges = s.edge_list();
  std::vector<Edge> kept;
  for (auto e : edges) {
    if (rng.below(4) != 0) kept.push_back(e);
  }
  Graph sub(s.num_vertices(), kept);
  CHECK_FALSE(verify_packing(sub, f).has_value());
}
