#include <doctest.h>

#include "helpers.hpp"

using namespace lfuzz;
using namespace lfuzz::test;

TEST_CASE("two-element chain is the Boolean lattice") {
  auto lat = l2();
  REQUIRE(lat->size() == 2);
  for (Elem a = 0; a < 2; ++a) {
    for (Elem b = 0; b < 2; ++b) {
      CHECK(lat->star(a, b) == lat->meet(a, b));
      CHECK(lat->hash(a, b) == lat->join(a, b));
    }
    CHECK(lat->neg(a) == (a == 0 ? 1 : 0));
  }
}

TEST_CASE("five-element chain evaluates the bounded-sum formulas") {
  auto lat = l5();
  CHECK(lat->labels() == std::vector<std::string>{"0", "1/4", "1/2", "3/4", "1"});
  CHECK(lat->star(el(lat, "1/2"), el(lat, "1/2")) == el(lat, "0"));
  CHECK(lat->hash(el(lat, "1/2"), el(lat, "1/2")) == el(lat, "1"));
  CHECK(lat->star(el(lat, "3/4"), el(lat, "1/2")) == el(lat, "1/4"));
  CHECK(lat->hash(el(lat, "1/4"), el(lat, "1/2")) == el(lat, "3/4"));
  // duality instance: neg(3/4 # 1/2) = neg(1) = 0 = neg(3/4) * neg(1/2)
  const Elem a = el(lat, "3/4"), b = el(lat, "1/2");
  CHECK(lat->neg(lat->hash(a, b)) == el(lat, "0"));
  CHECK(lat->star(lat->neg(a), lat->neg(b)) == el(lat, "0"));
}

TEST_CASE("chain construction rejects n = 0") {
  CHECK_THROWS_AS(Lattice::lukasiewicz_chain(0), std::invalid_argument);
}

TEST_CASE("monoid identities hold for every element") {
  auto lat = l5();
  for (Elem a = 0; a < lat->size(); ++a) {
    CHECK(lat->star(lat->top(), a) == a);
    CHECK(lat->hash(lat->bottom(), a) == a);
  }
}

TEST_CASE("folds over the chain") {
  auto lat = l5();
  CHECK(lat->fold_meet({}) == lat->top());
  CHECK(lat->fold_join({}) == lat->bottom());
  const std::vector<Elem> single = {el(lat, "1/2")};
  CHECK(lat->fold_join(single) == el(lat, "1/2"));
  const std::vector<Elem> three = els(lat, {"3/4", "1/4", "1/2"});
  CHECK(lat->fold_meet(three) == el(lat, "1/4"));
}

TEST_CASE("foreign element indices are rejected") {
  auto lat = l3();
  CHECK_THROWS_AS(lat->meet(0, 7), std::invalid_argument);
  CHECK_THROWS_AS(lat->neg(-1), std::invalid_argument);
}

TEST_CASE("validator passes the shipped chains") {
  for (auto lat : {l2(), l3(), l5()}) {
    const ValidationReport report = validate_lattice(*lat);
    CHECK(report.passed());
  }
}

TEST_CASE("corrupting one star cell is flagged as a commutativity failure") {
  auto lat = l5();
  auto star = lat->star_table();
  star[0 * lat->size() + 3] = lat->top();  // star(0, 3/4) := 1, star(3/4, 0) stays 0
  auto broken = Lattice::from_tables(lat->labels(), lat->leq_table(), std::move(star),
                                     lat->hash_table(), lat->neg_table());
  const ValidationReport report = validate_lattice(*broken);
  CHECK_FALSE(report.passed());
  const CheckResult* law = report.find("star commutative");
  REQUIRE(law != nullptr);
  CHECK_FALSE(law->passed);
  CHECK(law->witness == "a=0, b=3/4");
}

TEST_CASE("derived inequalities: star below meet, hash above join") {
  auto lat = l5();
  for (Elem a = 0; a < lat->size(); ++a) {
    for (Elem b = 0; b < lat->size(); ++b) {
      CHECK(lat->leq(lat->star(a, b), lat->meet(a, b)));
      CHECK(lat->leq(lat->join(a, b), lat->hash(a, b)));
    }
  }
}

TEST_CASE("De Morgan laws for the involutive negator over all subsets") {
  auto lat = l5();
  const int n = lat->size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Elem> elems, negs;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        elems.push_back(i);
        negs.push_back(lat->neg(i));
      }
    }
    CHECK(lat->fold_meet(negs) == lat->neg(lat->fold_join(elems)));
    CHECK(lat->fold_join(negs) == lat->neg(lat->fold_meet(elems)));
  }
}

TEST_CASE("non-chain table: the 2x2 Boolean square passes every law") {
  // 0 < a, b < 1 with a, b incomparable; star = meet, hash = join, neg swaps
  // a and b. Any user table that survives the validator is acceptable, chains
  // are not privileged.
  const std::vector<std::string> labels = {"0", "a", "b", "1"};
  auto le = [](int x, int y) { return x == y || x == 0 || y == 3; };
  std::vector<std::uint8_t> leq(16);
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) leq[x * 4 + y] = le(x, y);
  }
  std::vector<Elem> meet_table(16), join_table(16);
  auto pair_meet = [&](int x, int y) { return le(x, y) ? x : (le(y, x) ? y : 0); };
  auto pair_join = [&](int x, int y) { return le(x, y) ? y : (le(y, x) ? x : 3); };
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      meet_table[x * 4 + y] = pair_meet(x, y);
      join_table[x * 4 + y] = pair_join(x, y);
    }
  }
  auto square = Lattice::from_tables(labels, leq, meet_table, join_table, {3, 2, 1, 0});
  CHECK(square->meet(1, 2) == 0);
  CHECK(square->join(1, 2) == 3);
  CHECK(validate_lattice(*square).passed());
}
