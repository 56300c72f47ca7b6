#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "sierpack/constructions.hpp"
#include "sierpack/errors.hpp"
#include "sierpack/packing.hpp"

using namespace sierpack;

namespace {

std::string digits(const std::vector<int>& seq) {
  std::string s;
  for (int x : seq) s += static_cast<char>('0' + x);
  return s;
}

int color_at(const Coloring& f, const SierpGraph& s, const char* label) { return f.colors[*s.find(label)]; }

bool oracle_valid(const SierpGraph& s, const Coloring& f) {
  return oracle::is_packing(testing::oracle_distances(s), f.colors);
}

}  // namespace

TEST_CASE("pattern parsing") {
  ColorPattern p = ColorPattern::parse("52142[1312]1");
  CHECK(p.prefix == std::vector<int>{5, 2, 1, 4, 2});
  CHECK(p.block == std::vector<int>{1, 3, 1, 2});
  CHECK(p.suffix == std::vector<int>{1});
  CHECK(p.str() == "52142[1312]1");
  CHECK_THROWS_AS(ColorPattern::parse("12[3"), ParseError);
  for (Convention c : all_conventions) CHECK(parse_convention(to_string(c)) == c);
  CHECK_THROWS_AS(parse_convention("sideways"), ParseError);
}

TEST_CASE("pattern expansion") {
  CHECK(digits(expand_pattern(ColorPattern::parse("52142[1312]1"), 10, Convention::exact_fit)) == "5214213121");
  CHECK(digits(expand_pattern(ColorPattern::parse("[1213]"), 8, Convention::exact_fit)) == "12131213");

  ColorPattern odd = ColorPattern::parse("1213124[1213]1");
  CHECK_FALSE(try_expand(odd, 11, Convention::exact_fit).has_value());
  CHECK_THROWS_AS(expand_pattern(odd, 11, Convention::exact_fit), PreconditionError);
  auto tail = try_expand(odd, 11, Convention::truncate_tail);
  REQUIRE(tail.has_value());
  CHECK(tail->size() == 11);
  CHECK(digits(*tail).substr(0, 7) == "1213124");

  for (Convention c : all_conventions) {
    for (int length = 0; length < 30; ++length) {
      if (auto seq = try_expand(odd, length, c)) CHECK(static_cast<int>(seq->size()) == length);
    }
  }
}

TEST_CASE("S^2 of P_k colorings") {
  SierpGraph s4 = build_sierpinski(BaseGraph::path(4), 2);
  Coloring f4 = color_path_dim2(4);
  CHECK(color_at(f4, s4, "11") == 4);
  CHECK(color_at(f4, s4, "01") == 2);
  CHECK(color_at(f4, s4, "03") == 3);
  CHECK(color_at(f4, s4, "22") == 1);

  SierpGraph s3 = build_sierpinski(BaseGraph::path(3), 2);
  Coloring f3 = color_path_dim2(3);
  CHECK(f3.c == 3);
  for (const char* one : {"00", "02", "10", "12", "20", "22"}) CHECK(color_at(f3, s3, one) == 1);
  CHECK(color_at(f3, s3, "01") == 2);
  CHECK(color_at(f3, s3, "21") == 2);
  CHECK(color_at(f3, s3, "11") == 3);

  Coloring f8 = color_path_dim2(8);
  CHECK(std::vector<int>(f8.colors.begin(), f8.colors.begin() + 8) == std::vector<int>{1, 2, 1, 3, 1, 2, 1, 3});

  for (int k = 3; k <= 9; ++k) {
    CAPTURE(k);
    CHECK(oracle_valid(build_sierpinski(BaseGraph::path(k), 2), color_path_dim2(k)));
  }
  CHECK_THROWS_AS(color_path_dim2(2), PreconditionError);
}

TEST_CASE("S^n of P_k colorings") {
  SierpGraph s = build_sierpinski(BaseGraph::path(4), 3);
  Coloring f = color_path(4, 3);
  CHECK(color_at(f, s, "012") == 1);
  CHECK(color_at(f, s, "011") == 4);
  CHECK(color_at(f, s, "111") == 5);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 3}, {4, 4}, {5, 3}, {6, 3}, {7, 3}}) {
    CAPTURE(k);
    CAPTURE(n);
    Coloring g = color_path(k, n);
    CHECK(g.colors_used() <= (k == 3 ? 3 : 5));
    CHECK(oracle_valid(build_sierpinski(BaseGraph::path(k), n), g));
  }
}

TEST_CASE("cycles with k = 0 (mod 4) in dimension 2") {
  SierpGraph s4 = build_sierpinski(BaseGraph::cycle(4), 2);
  Coloring f4 = color_cycle_dim2_div4(4);
  CHECK(color_at(f4, s4, "00") == 1);
  CHECK(color_at(f4, s4, "11") == 4);
  CHECK(color_at(f4, s4, "01") == 2);
  CHECK(color_at(f4, s4, "03") == 3);

  Coloring f8 = color_cycle_dim2_div4(8);
  CHECK(std::vector<int>(f8.colors.begin(), f8.colors.begin() + 8) == std::vector<int>{1, 2, 1, 3, 1, 2, 1, 3});

  Coloring f12 = color_cycle_dim2_div4(12);
  CHECK(std::count(f12.colors.begin(), f12.colors.end(), 4) == 6);
  for (int k : {4, 8, 12, 16}) CHECK(oracle_valid(build_sierpinski(BaseGraph::cycle(k), 2), color_cycle_dim2_div4(k)));
  CHECK_THROWS_AS(color_cycle_dim2_div4(6), PreconditionError);
}

TEST_CASE("cycles with k = 2 (mod 4) in dimension 2") {
  const ColorPattern even = ColorPattern::parse("121314[1213]");
  const ColorPattern odd = ColorPattern::parse("4121314213[1213]");
  CHECK(digits(expand_pattern(even, 10, Convention::exact_fit)) == "1213141213");
  CHECK(digits(expand_pattern(odd, 10, Convention::exact_fit)) == "4121314213");
  CHECK(digits(expand_pattern(even, 14, Convention::exact_fit)) == "12131412131213");

  // The assembled colorings are not packings (03 and 10 both get 3 at
  // distance 3), and the self-check says so.
  for (int k : {10, 14, 18}) {
    std::vector<std::vector<int>> seqs;
    for (int i = 0; i < k; ++i) seqs.push_back(expand_pattern(i % 2 == 0 ? even : odd, k, Convention::exact_fit));
    Coloring f = coloring_from_sequences(k, seqs);
    f.c = 4;
    SierpGraph s = build_sierpinski(BaseGraph::cycle(k), 2);
    CHECK_FALSE(oracle_valid(s, f));
    CHECK(color_at(f, s, "03") == 3);
    CHECK(color_at(f, s, "10") == 3);
    CHECK_THROWS_AS(color_cycle_dim2_mod2(k), VerificationError);
  }
  CHECK_THROWS_AS(color_cycle_dim2_mod2(6), PreconditionError);
  CHECK_THROWS_AS(color_cycle_dim2_mod2(12), PreconditionError);
}

// Known gap: see above; the stated 4-coloring does not verify.
TEST_CASE("the k = 2 (mod 4) four-coloring is a packing" * doctest::should_fail()) {
  Coloring f = color_cycle_dim2_mod2(10);
  CHECK(oracle_valid(build_sierpinski(BaseGraph::cycle(10), 2), f));
}

TEST_CASE("sequence round trip") {
  Coloring f = color_cycle_dim2_div4(8);
  CHECK(coloring_from_sequences(8, sequences_from_coloring(8, f)).colors == f.colors);
}

TEST_CASE("cycle colorings with at most five colors") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{4, 2}, {8, 3}, {9, 2}, {10, 2}, {10, 3}, {11, 2},
                                                      {12, 2}, {13, 2}, {14, 2}, {15, 2}, {17, 2}, {9, 3}}) {
    CAPTURE(k);
    CAPTURE(n);
    Construction c = color_cycle(k, n);
    CHECK(c.coloring.colors_used() <= 5);
    SierpGraph s = build_sierpinski(BaseGraph::cycle(k), n);
    CHECK(oracle_valid(s, c.coloring));
    if (c.seed) {
      const int level = c.seed->colors.size() == static_cast<std::size_t>(k * k) ? 2 : 3;
      CHECK(verify_extendable(BaseGraph::cycle(k), level, *c.seed).valid);
    }
  }
  CHECK(color_cycle(8, 3).method == "formula");
  Construction c10 = color_cycle(10, 2);
  CHECK(verify_extendable(build_sierpinski(BaseGraph::cycle(10), 2), c10.coloring).valid);
  CHECK_THROWS_AS(color_cycle(6, 2), PreconditionError);
  CHECK_THROWS_AS(color_cycle(8, 1), PreconditionError);
}

TEST_CASE("stored seeds are extendable") {
  for (int k : {9, 13}) {
    Coloring f = load_cycle_seed(k);
    CHECK(f.colors_used() <= 5);
    CHECK(verify_extendable(BaseGraph::cycle(k), 2, f).valid);
  }
  CycleOptions missing;
  missing.seed_file = "/nonexistent/seed.col";
  CHECK_THROWS(load_cycle_seed(9, missing));
}

TEST_CASE("block repetition from the C_13 seed") {
  Coloring seed = load_cycle_seed(13);
  for (int k : {17, 21}) {
    Coloring f = block_repetition(seed, k);
    SierpGraph s = build_sierpinski(BaseGraph::cycle(k), 2);
    CHECK(f.colors.size() == s.num_vertices());
    CHECK(oracle_valid(s, f));
  }
  CHECK_THROWS_AS(block_repetition(seed, 15), PreconditionError);
}

TEST_CASE("lower-bound witness subgraphs") {
  WitnessSubgraph hp = witness_subgraph(Witness::h_prime, 5);
  CHECK(hp.induced.num_vertices() == 8);
  CHECK(oracle::chi_rho(testing::oracle_distances(hp.induced)) == 4);

  WitnessSubgraph h = witness_subgraph(Witness::h, 4);
  CHECK(h.induced.num_vertices() == 21);
  CHECK(h.induced.num_edges() == 20);
  CHECK(oracle::chi_rho(testing::oracle_distances(h.induced)) == 5);
  CHECK(oracle::chi_rho(testing::oracle_distances(witness_subgraph(Witness::h, 6).induced)) == 5);

  // Induced edges are exactly the host edges inside the set.
  for (std::size_t a = 0; a < h.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < h.vertices.size(); ++b) {
      CHECK(h.induced.adjacent(static_cast<VertexId>(a), static_cast<VertexId>(b)) ==
            h.host.adjacent(h.vertices[a], h.vertices[b]));
    }
  }
  CHECK_THROWS_AS(witness_subgraph(Witness::h_prime, 4), PreconditionError);
  CHECK_THROWS_AS(witness_subgraph(Witness::h, 3), PreconditionError);
}
