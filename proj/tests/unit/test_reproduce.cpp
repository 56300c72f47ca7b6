#include <doctest.h>

#include <algorithm>

#include "sierpack/errors.hpp"
#include "sierpack/reproduce.hpp"

using namespace sierpack;

TEST_CASE("known values") {
  CHECK(theorem_value("path", 3, 2) == Bracket{3, 3});
  CHECK(theorem_value("path", 7, 2) == Bracket{4, 4});
  CHECK(theorem_value("path", 3, 5) == Bracket{3, 3});
  CHECK(theorem_value("path", 4, 3) == Bracket{5, 5});
  CHECK(theorem_value("cycle", 5, 2) == Bracket{6, 6});
  for (int k : {4, 8, 10, 12, 14}) CHECK(theorem_value("cycle", k, 2) == Bracket{4, 4});
  for (int k : {6, 7, 9, 11, 13}) CHECK(theorem_value("cycle", k, 2) == Bracket{5, 5});
  CHECK(theorem_value("cycle", 6, 3) == Bracket{6, 6});
  CHECK(theorem_value("cycle", 7, 4) == Bracket{6, 6});
  CHECK(theorem_value("cycle", 4, 3) == Bracket{5, 5});
  CHECK(theorem_value("k4e", 0, 1) == Bracket{3, 3});
  CHECK(theorem_value("k4e", 0, 2) == Bracket{6, 6});
  CHECK(theorem_value("k4e", 0, 3) == Bracket{8, 8});
  CHECK(theorem_value("k4e", 0, 4) == Bracket{9, 9});
  CHECK(theorem_value("paw", 0, 1) == Bracket{3, 3});
  CHECK(theorem_value("paw", 0, 2) == Bracket{5, 5});
  CHECK(theorem_value("paw", 0, 3) == Bracket{7, 7});
  CHECK(theorem_value("triangle", 0, 0) == Bracket{3, 3});
  CHECK(theorem_value("triangle", 0, 1) == Bracket{4, 4});
  CHECK(theorem_value("triangle", 0, 2) == Bracket{8, 8});
  CHECK(theorem_value("triangle", 0, 3) == Bracket{12, 12});
  CHECK_FALSE(theorem_value("cycle", 3, 2).has_value());
  CHECK_THROWS_AS(theorem_value("star", 4, 2), PreconditionError);
}

TEST_CASE("family descriptors") {
  CHECK(family_descriptor("cycle", 5, 2) == "cycle:5/2");
  CHECK(family_descriptor("path", 4, 3) == "path:4/3");
  CHECK(family_descriptor("k4e", 0, 3) == "k4_minus_e/3");
  CHECK(family_descriptor("paw", 0, 2) == "paw/2");
  CHECK(family_descriptor("triangle", 0, 3) == "triangle/3");
}

TEST_CASE("selectors") {
  auto all = theorem_selectors();
  for (const char* s : {"paths", "cycles", "cycles3", "k4e", "k4e-large", "paw-small", "triangle-small", "p6p8",
                        "prop1", "desk-limits"}) {
    CHECK(std::find(all.begin(), all.end(), s) != all.end());
  }
  CHECK_THROWS_AS(reproduce_theorem("nonsense"), PreconditionError);
}

TEST_CASE("paw-small is proven") {
  TheoremReport r = reproduce_theorem("paw-small");
  REQUIRE(r.cells.size() == 3);
  CHECK(r.all_proven());
  const int expected[] = {3, 5, 7};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(r.cells[i].status == "proven");
    CHECK(r.cells[i].lower == expected[i]);
    CHECK(r.cells[i].upper == expected[i]);
  }
}

TEST_CASE("p6p8 facts are proven") {
  TheoremReport r = reproduce_theorem("p6p8");
  CHECK_FALSE(r.cells.empty());
  CHECK(r.all_proven());
  for (const auto& c : r.cells) CHECK(c.status == "proven");
}
