#include <stdexcept>

#include "braid/cabling.hpp"
#include "braid/garside.hpp"
#include "doctest.h"

using namespace braid;

TEST_CASE("single crossings become block transpositions") {
  CHECK(cable(BraidWord::parse("4: 2"), {2, 2, 1, 1}).str() == "6: 4 3");
  CHECK(cable(BraidWord::parse("4: 2"), {1, 2, 1, 2}).str() == "6: 3 2");
  CHECK(cable(BraidWord::parse("4: 2"), {1, 1, 2, 2}).str() == "6: 2 3");
  CHECK(cable(BraidWord::parse("4: 2"), {2, 1, 2, 1}).str() == "6: 3 4");
  CHECK(cable(BraidWord::parse("4: -2"), {2, 2, 1, 1}).str() == "6: -4 -3");
  CHECK(cable(BraidWord::parse("2: 1"), {3, 2}).str() == "5: 3 4 2 3 1 2");
}

TEST_CASE("widths travel with the ribbons") {
  CHECK(cable(BraidWord::parse("2: 1 1"), {1, 2}).str() == "3: 1 2 2 1");
  CHECK(cable(BraidWord::parse("2: 1 1"), {2, 1}).str() == "3: 2 1 1 2");
}

TEST_CASE("degenerate cablings") {
  CHECK(cable(BraidWord::parse("4: 2 -1"), {1, 1, 1, 1}).str() == "4: 2 -1");
  CHECK(cable(BraidWord::parse("4: "), {2, 2, 1, 1}).str() == "6: ");
  CHECK(is_trivial(cable(concat(BraidWord::parse("3: 1 -2 1"),
                                inverse(BraidWord::parse("3: 1 -2 1"))),
                         {2, 1, 2})));
  CHECK_THROWS_AS(cable(BraidWord::parse("4: 1"), {2, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cable(BraidWord::parse("4: 1"), {2, 0, 1, 1}), std::invalid_argument);
}

TEST_CASE("derived six-strand braids of a triple crossing") {
  const BraidWord b = BraidWord::parse("4: 2 2 2");
  CHECK(derive_L(b).str() == "6: 2 2 2 4 3 3 4 4 3");
  CHECK(derive_R(b).str() == "6: 4 4 4 2 3 3 2 2 3");
  CHECK(derive_Lp(b).str() == "6: 3 2 2 3 3 2 4 4 4");
  CHECK(derive_Rp(b).str() == "6: 3 4 4 3 3 4 2 2 2");
  // The internal and external equalities both fail for it.
  CHECK_FALSE(equals(derive_L(b), derive_R(b)));
  CHECK_FALSE(equals(derive_Lp(b), derive_Rp(b)));
}

TEST_CASE("derived braids of the bare middle crossing agree") {
  const BraidWord b = BraidWord::parse("4: 2");
  CHECK(derive_L(b).str() == "6: 2 4 3");
  CHECK(derive_R(b).str() == "6: 4 2 3");
  CHECK(derive_Lp(b).str() == "6: 3 2 4");
  CHECK(derive_Rp(b).str() == "6: 3 4 2");
  CHECK(equals(derive_L(b), derive_R(b)));
  CHECK(equals(derive_Lp(b), derive_Rp(b)));
}

TEST_CASE("derivations require four strands") {
  CHECK_THROWS_AS(derive_L(BraidWord::parse("3: 1")), std::invalid_argument);
  CHECK_THROWS_AS(derive_R(BraidWord::parse("6: 1")), std::invalid_argument);
  CHECK_THROWS_AS(derive_Lp(BraidWord::parse("5: 1")), std::invalid_argument);
  CHECK_THROWS_AS(derive_Rp(BraidWord::parse("2: 1")), std::invalid_argument);
}
