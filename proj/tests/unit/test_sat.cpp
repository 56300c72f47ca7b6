#include <doctest.h>

#include <set>
#include <sstream>

#include "helpers.hpp"
#include "sierpack/errors.hpp"
#include "sierpack/packing.hpp"
#include "sierpack/sat/chirho.hpp"
#include "sierpack/sat/class_search.hpp"
#include "sierpack/sat/cnf.hpp"
#include "sierpack/sat/dimacs.hpp"
#include "sierpack/sat/solver.hpp"

using namespace sierpack;
using namespace sierpack::sat;
using testing::make;

namespace {

Graph small_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> e;
  for (auto [u, v] : edges) e.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  return Graph(static_cast<std::size_t>(n), e);
}

std::vector<bool> model_of(const CnfInstance& inst, const Coloring& f) {
  std::vector<bool> m(static_cast<std::size_t>(inst.num_vars) + 1, false);
  for (VertexId v = 0; v < f.colors.size(); ++v) m[static_cast<std::size_t>(inst.var(v, f.colors[v]))] = true;
  return m;
}

bool oracle_extendable(const SierpGraph& plain, const Coloring& f) {
  for (auto [i, j] : plain.base().edges()) {
    if (!oracle::is_packing(testing::oracle_distances(build_augmented(plain, i, j)), f.colors)) return false;
  }
  return true;
}

ChiRhoOptions quick() {
  ChiRhoOptions o;
  o.budget.max_seconds = 60;
  o.class_budget.max_seconds = 60;
  return o;
}

}  // namespace

TEST_CASE("packing encoding of tiny graphs") {
  Graph k2 = small_graph(2, {{0, 1}});
  CnfInstance inst = encode_packing(k2, 2);
  CHECK(inst.num_vars == 4);
  CHECK(inst.clauses.size() == 4);
  auto r = solve(inst);
  REQUIRE(r.status == SolveStatus::sat);
  Coloring f = decode_model(inst, r.model);
  CHECK(std::set<int>(f.colors.begin(), f.colors.end()) == std::set<int>{1, 2});

  CnfInstance k1 = encode_packing(small_graph(1, {}), 1);
  CHECK(k1.num_vars == 1);
  CHECK(k1.clauses.size() == 1);
  CHECK(solve(k1).status == SolveStatus::sat);
}

TEST_CASE("variable numbering is a bijection") {
  CnfInstance inst = encode_packing(make("paw/2"), 5);
  std::set<int> seen;
  for (VertexId v = 0; v < 16; ++v) {
    for (int i = 1; i <= 5; ++i) {
      int x = inst.var(v, i);
      CHECK(inst.key(x) == std::make_pair(v, i));
      seen.insert(x);
    }
  }
  CHECK(seen.size() == 80);
  CHECK(*seen.begin() == 1);
  CHECK(*seen.rbegin() == inst.num_vars);
}

TEST_CASE("S^2 of P_3") {
  SierpGraph s = make("path:3/2");
  CHECK(solve(encode_packing(s, 2)).status == SolveStatus::unsat);
  CnfInstance three = encode_packing(s, 3);
  auto r = solve(three);
  REQUIRE(r.status == SolveStatus::sat);
  CHECK_FALSE(verify_packing(s, decode_model(three, r.model)).has_value());
}

TEST_CASE("S^2 of C_5 has no packing 5-coloring") {
  CHECK(solve(encode_packing(make("cycle:5/2"), 5)).status == SolveStatus::unsat);
}

TEST_CASE("close pairs match the oracle distances") {
  SierpGraph s = make("k4_minus_e/2");
  auto d = testing::oracle_distances(s);
  auto pairs = close_pairs(s, 3);
  std::size_t expected = 0;
  for (int u = 0; u < 16; ++u) {
    for (int v = u + 1; v < 16; ++v) expected += d[u][v] <= 3;
  }
  CHECK(pairs.size() == expected);
  for (auto p : pairs) CHECK(d[p.u][p.v] == p.distance);
}

TEST_CASE("extendable encodings") {
  SierpGraph p3 = make("path:3/2");
  CnfInstance inst = encode_extendable(BaseGraph::path(3), 2, 3);
  CHECK(inst.kind == "extendable");
  auto r = solve(inst);
  REQUIRE(r.status == SolveStatus::sat);
  CHECK(verify_extendable(p3, decode_model(inst, r.model)).valid);

  CHECK(solve(encode_extendable(BaseGraph::cycle(5), 2, 7)).status == SolveStatus::sat);
  CHECK(solve(encode_extendable(BaseGraph::cycle(9), 2, 4)).status == SolveStatus::unsat);
}

TEST_CASE("a coloring is extendable iff it satisfies the extendable encoding") {
  oracle::Lcg rng(21);
  for (const char* b : {"path:3", "path:4", "cycle:4", "paw", "k4_minus_e"}) {
    BaseGraph base = BaseGraph::parse(b);
    SierpGraph s = build_sierpinski(base, 2);
    CnfInstance inst = encode_extendable(base, 2, 7);
    for (int t = 0; t < 50; ++t) {
      Coloring f = greedy_packing(s);
      f.c = 7;
      for (int m = rng.below(4); m > 0; --m) f.colors[rng.below(static_cast<int>(s.num_vertices()))] = 1 + rng.below(7);
      CAPTURE(b);
      CHECK(satisfies(inst.clauses, model_of(inst, f)) == oracle_extendable(s, f));
    }
  }
}

TEST_CASE("liftable encoding strengthens the extendable one") {
  // At level 2 some vertex is close to two extreme vertices, so units are
  // added; at level 3 every clash distance exceeds 5 and nothing is.
  CHECK(encode_liftable(BaseGraph::cycle(8), 2, 5).clauses.size() >
        encode_extendable(BaseGraph::cycle(8), 2, 5).clauses.size());
  CnfInstance ext = encode_extendable(BaseGraph::cycle(8), 3, 5);
  CnfInstance lift = encode_liftable(BaseGraph::cycle(8), 3, 5);
  CHECK(lift.kind == "liftable");
  CHECK(lift.clauses == ext.clauses);
  auto r = solve(lift);
  REQUIRE(r.status == SolveStatus::sat);
  Coloring f = decode_model(lift, r.model);
  CHECK_FALSE(find_self_copy_clash(build_sierpinski(BaseGraph::cycle(8), 3), f).has_value());
  CHECK(solve(encode_liftable(BaseGraph::cycle(8), 2, 5)).status == SolveStatus::unsat);
}

TEST_CASE("assumptions") {
  SierpGraph p6 = make("path:6/2");
  CnfInstance base6 = encode_packing(p6, 4);
  CHECK(solve(base6).status == SolveStatus::sat);
  Fix f22[] = {{*p6.find("22"), 2, true}};
  CHECK(solve(add_assumptions(base6, f22)).status == SolveStatus::unsat);

  SierpGraph p8 = make("path:8/2");
  Fix f3344[] = {{*p8.find("33"), 1, true}, {*p8.find("44"), 1, true}};
  CHECK(solve(add_assumptions(encode_packing(p8, 4), f3344)).status == SolveStatus::unsat);

  Fix contradiction[] = {{0, 1, true}, {0, 1, false}};
  CHECK(solve(add_assumptions(encode_packing(make("path:3/2"), 3), contradiction)).status == SolveStatus::unsat);

  Fix bad_color[] = {{0, 4, true}};
  CHECK_THROWS_AS(add_assumptions(encode_packing(make("path:3/2"), 3), bad_color), PreconditionError);
  Fix bad_vertex[] = {{99, 1, true}};
  CHECK_THROWS_AS(add_assumptions(encode_packing(make("path:3/2"), 3), bad_vertex), PreconditionError);
}

TEST_CASE("the solver on edge cases") {
  ClauseList empty;
  auto r = solve(0, empty);
  CHECK(r.status == SolveStatus::sat);
  CHECK(r.model.size() == 1);

  ClauseList unit;
  unit.add({1});
  unit.add({-1});
  CHECK(solve(1, unit).status == SolveStatus::unsat);

  ClauseList empty_clause;
  empty_clause.add(std::span<const int>{});
  CHECK(solve(3, empty_clause).status == SolveStatus::unsat);
}

TEST_CASE("the solver agrees with exhaustive enumeration on random 3-CNF") {
  oracle::Lcg rng(77);
  for (int t = 0; t < 200; ++t) {
    const int vars = 3 + rng.below(9);
    const int count = rng.below(vars * 6);
    ClauseList cl;
    std::vector<std::vector<int>> raw;
    for (int c = 0; c < count; ++c) {
      std::vector<int> lits;
      for (int l = 0; l < 3; ++l) lits.push_back((1 + rng.below(vars)) * (rng.below(2) ? 1 : -1));
      cl.add(lits);
      raw.push_back(lits);
    }
    bool any = false;
    for (int mask = 0; mask < (1 << vars) && !any; ++mask) {
      bool all = true;
      for (const auto& c : raw) {
        bool sat = false;
        for (int l : c) sat = sat || (((mask >> (std::abs(l) - 1)) & 1) == (l > 0));
        all = all && sat;
      }
      any = all;
    }
    auto r = solve(vars, cl);
    CHECK((r.status == SolveStatus::sat) == any);
    if (r.status == SolveStatus::sat) CHECK(satisfies(cl, r.model));
  }
}

TEST_CASE("budgets stop the search") {
  SolveBudget b;
  b.max_conflicts = 1;
  auto r = solve(encode_packing(make("cycle:5/2"), 5), b);
  CHECK(r.status == SolveStatus::unknown);
  CHECK(r.stats.conflicts <= 2);
}

TEST_CASE("decoding") {
  Graph k2 = small_graph(2, {{0, 1}});
  CnfInstance inst = encode_packing(k2, 2);
  std::vector<bool> m(5, false);
  m[inst.var(0, 2)] = true;
  m[inst.var(1, 1)] = true;
  CHECK(decode_model(inst, m).colors == std::vector<int>{2, 1});

  std::vector<bool> clash(5, false);
  clash[inst.var(0, 1)] = true;
  clash[inst.var(1, 1)] = true;
  CHECK_THROWS_AS(decode_model(inst, clash), PreconditionError);
  CHECK_THROWS_AS(decode_model(inst, std::vector<bool>(5, false)), PreconditionError);
  CHECK_THROWS_AS(decode_model(inst, std::vector<bool>(2, true)), PreconditionError);
}

TEST_CASE("DIMACS round trip is bit-exact") {
  for (CnfInstance inst : {encode_packing(make("paw/2"), 4), encode_extendable(BaseGraph::path(3), 2, 3)}) {
    std::ostringstream first;
    write_dimacs(first, inst);
    std::istringstream in(first.str());
    CnfInstance back = read_dimacs(in);
    CHECK(back.num_vars == inst.num_vars);
    CHECK(back.colors == inst.colors);
    CHECK(back.kind == inst.kind);
    CHECK(back.graph == inst.graph);
    CHECK(back.labels == inst.labels);
    CHECK(back.clauses == inst.clauses);
    std::ostringstream second;
    write_dimacs(second, back);
    CHECK(second.str() == first.str());
  }

  std::istringstream plain("p cnf 2 2\n1 -2 0\n2 0\n");
  CnfInstance raw = read_dimacs(plain);
  CHECK(raw.colors == 0);
  CHECK(raw.clauses.size() == 2);
  std::istringstream broken("p cnf 2 1\n1 3 0\n");
  CHECK_THROWS_AS(read_dimacs(broken), ParseError);
}

TEST_CASE("external results") {
  std::istringstream sat_text("s SATISFIABLE\nv 1 -2 3\nv -4 0\n");
  auto r = read_model(sat_text, 4);
  CHECK(r.claimed == SolveStatus::sat);
  CHECK(r.model == std::vector<bool>{false, true, false, true, false});

  std::istringstream unsat_text("c comment\ns UNSATISFIABLE\n");
  CHECK(read_model(unsat_text, 4).claimed == SolveStatus::unsat);

  std::istringstream bare("-1 2 0\n");
  auto b = read_model(bare, 2);
  CHECK(b.claimed == SolveStatus::sat);
  CHECK(b.model[2]);
}

TEST_CASE("padding with unused colors keeps a coloring valid") {
  // SAT at c implies SAT at c + 1.
  for (const char* d : {"path:4/2", "paw/2", "cycle:5/2"}) {
    SierpGraph s = make(d);
    int c = 1;
    while (solve(encode_packing(s, c)).status != SolveStatus::sat) ++c;
    for (int more = c; more <= c + 2; ++more) {
      CnfInstance inst = encode_packing(s, more);
      auto r = solve(inst);
      REQUIRE(r.status == SolveStatus::sat);
      Coloring f = decode_model(inst, r.model);
      CHECK_FALSE(verify_packing(s, f).has_value());
      f.c = more + 3;
      CHECK_FALSE(verify_packing(s, f).has_value());
    }
  }
}

TEST_CASE("class search, CDCL and the oracle agree") {
  oracle::Lcg rng(41);
  for (int t = 0; t < 25; ++t) {
    int n = 4 + rng.below(9);
    auto edges = oracle::random_connected(rng, n, rng.below(n));
    Graph g = small_graph(n, edges);
    auto d = oracle::distances(oracle::adjacency(n, edges));
    for (int c = 2; c <= 5; ++c) {
      bool expected = oracle::colorable(d, c);
      auto cdcl = solve(encode_packing(g, c));
      auto cs = class_search(g, c);
      CHECK((cdcl.status == SolveStatus::sat) == expected);
      CHECK((cs.status == SolveStatus::sat) == expected);
      if (cs.coloring) CHECK(oracle::is_packing(d, cs.coloring->colors));
    }
  }
  CHECK_THROWS_AS(class_search(make("path:3/4"), 3), PreconditionError);
}

TEST_CASE("symmetry breaking keeps satisfiability") {
  for (const char* d : {"paw/2", "k4_minus_e/2", "cycle:5/2", "path:4/2"}) {
    SierpGraph s = make(d);
    auto autos = sierpinski_automorphisms(s);
    CHECK_FALSE(autos.empty());
    for (int c = 3; c <= 7; ++c) {
      CnfInstance plain = encode_packing(s, c);
      CnfInstance broken = plain;
      add_symmetry_breaking(broken, s, autos);
      CAPTURE(d);
      CAPTURE(c);
      CHECK(solve(plain).status == solve(broken).status);
    }
  }
}

TEST_CASE("exact packing chromatic numbers") {
  CHECK(chi_rho_exact(make("k4_minus_e/2"), quick()).value() == 6);
  CHECK(chi_rho_exact(make("paw/3"), quick()).value() == 7);
  CHECK(chi_rho_exact(build_triangle(2), quick()).value() == 8);
  CHECK(chi_rho_exact(make("path:3/2"), quick()).value() == 3);

  auto r = chi_rho_exact(make("cycle:5/2"), quick());
  REQUIRE(r.exact());
  CHECK(*r.value() == 6);
  REQUIRE(r.witness.has_value());
  CHECK_FALSE(verify_packing(make("cycle:5/2"), *r.witness).has_value());
}

TEST_CASE("chi_rho_exact matches the oracle on small graphs") {
  oracle::Lcg rng(1234);
  for (int t = 0; t < 25; ++t) {
    int n = 2 + rng.below(12);
    auto edges = oracle::random_connected(rng, n, rng.below(2 * n));
    Graph g = small_graph(n, edges);
    auto d = oracle::distances(oracle::adjacency(n, edges));
    CHECK(chi_rho_exact(g, quick()).value() == oracle::chi_rho(d));
  }
}

TEST_CASE("decide_packing reports its attempts") {
  ChiRhoOptions o = quick();
  Decision yes = decide_packing(make("paw/2"), 5, o);
  CHECK(yes.status == SolveStatus::sat);
  REQUIRE(yes.coloring.has_value());
  CHECK_FALSE(yes.attempts.empty());
  Decision no = decide_packing(make("paw/2"), 4, o);
  CHECK(no.status == SolveStatus::unsat);
  CHECK_FALSE(no.coloring.has_value());

  // Starving CDCL hands the question to class search on small graphs.
  o.budget.max_conflicts = 1;
  Decision fallback = decide_packing(make("paw/2"), 4, o);
  CHECK(fallback.status == SolveStatus::unsat);
  CHECK(fallback.method == Method::class_search);
}

TEST_CASE("external verdicts") {
  SierpGraph s = make("paw/2");
  ChiRhoOptions o = quick();
  o.c_max = 3;
  o.class_search = false;
  ChiRhoResult r = chi_rho_exact(s, o);
  CHECK_FALSE(r.exact());
  record_external(r, s, 4, SolveStatus::unsat);
  CHECK(r.claimed_lower == 5);
  CHECK(r.lower <= 4);
  CHECK_FALSE(r.exact());

  Coloring good = greedy_packing(s);
  record_external(r, s, good.c, SolveStatus::sat, good);
  CHECK(r.upper == good.c);

  Coloring bad = good;
  bad.colors.assign(bad.colors.size(), 1);
  CHECK_THROWS_AS(record_external(r, s, good.c, SolveStatus::sat, bad), PreconditionError);
}
