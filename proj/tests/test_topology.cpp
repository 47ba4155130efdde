#include <doctest.h>

#include "helpers.hpp"
#include "lfuzz/fixtures.hpp"

using namespace lfuzz;
using namespace lfuzz::test;

TEST_CASE("identity and indiscrete interiors validate") {
  auto lat = l3();
  const FiniteSet x = enumerated_set("X", "x", 2);
  CHECK(validate_interior(identity_interior(x, lat)).passed());
  CHECK(validate_interior(indiscrete_interior(x, lat)).passed());
}

TEST_CASE("a raised table cell fails contractivity with a witness") {
  auto lat = l3();
  const FiniteSet x = enumerated_set("X", "x", 2);
  const CechInterior base = identity_interior(x, lat);
  auto table = base.table();
  const FuzzySet f = coatom(x, 0, lat);  // f(x1) = 0
  table[function_index(f)][0] = lat->top();
  const ValidationReport report = validate_interior(CechInterior(x, lat, std::move(table)));
  CHECK_FALSE(report.passed());
  const CheckResult* law = report.find("contractive");
  REQUIRE(law != nullptr);
  CHECK_FALSE(law->passed);
  CHECK(law->witness.find("x1") != std::string::npos);
}

TEST_CASE("conversions transpose the presentation and round-trip exactly") {
  auto lat = l3();
  const FiniteSet x = enumerated_set("X", "x", 2);
  const CechInterior i = identity_interior(x, lat);
  const Pretopology s = pretopology_from_interior(i);
  CHECK(interior_from_pretopology(s) == i);
  CHECK(pretopology_from_interior(interior_from_pretopology(s)) == s);
  // and pointwise agreement
  const FunctionSpace space = FunctionSpace::build(x, lat);
  for (const FuzzySet& f : space.functions()) {
    CHECK(s.apply(f) == i.apply(f));
  }
}

TEST_CASE("partition-induced operators agree with the lower transform") {
  auto lat = l5();
  const FuzzyPartition p = fixture_partition_l5(lat);
  const Pretopology s = pretopology_from_partition(p);
  const CechInterior i = interior_from_partition(p);
  CHECK(validate_pretopology(s).passed());
  CHECK(validate_interior(i).passed());
  CHECK(interior_from_pretopology(s) == i);

  const FuzzySet f = fs(lat, p.space(), {"1/2", "3/4", "1/4"});
  const FuzzySet image = s.apply(f);
  CHECK(image == fs(lat, p.space(), {"1/2", "1/2", "1/4"}));
  for (Elem a = 0; a < lat->size(); ++a) {
    CHECK(s.apply(constant_set(p.space(), a, lat)) == constant_set(p.space(), a, lat));
  }
}

TEST_CASE("singleton-core crisp partition induces the discrete pretopology") {
  auto lat = l3();
  const FiniteSet x = enumerated_set("X", "x", 2);
  const FiniteSet j = enumerated_set("J", "j", 2);
  const FuzzyPartition p(x, j, rel(lat, j, x, {{"1", "0"}, {"0", "1"}}), {0, 1});
  const Pretopology s = pretopology_from_partition(p);
  const FunctionSpace space = FunctionSpace::build(x, lat);
  for (const FuzzySet& f : space.functions()) {
    CHECK(s.apply(f) == f);
  }
  CHECK(qua_relation_from_pretopology(s) == identity_relation(x, lat));
}

TEST_CASE("qua relation of a partition-induced pretopology is the membership at xi") {
  auto lat = l5();
  const FuzzyPartition p = fixture_partition_l5(lat);
  const FuzzyRelation m = qua_relation_from_pretopology(pretopology_from_partition(p));
  for (std::size_t x = 0; x < p.space().size(); ++x) {
    for (std::size_t xp = 0; xp < p.space().size(); ++xp) {
      CHECK(m.at(x, xp) == p.member(p.xi()[x], xp));
    }
  }
}

TEST_CASE("monotonicity follows from the meet axiom") {
  auto lat = l3();
  Rng rng(31);
  const FuzzyPartition p = random_partition(rng, lat, 2, 2, "m");
  const Pretopology s = pretopology_from_partition(p);
  const FunctionSpace space = FunctionSpace::build(p.space(), lat);
  for (const FuzzySet& f : space.functions()) {
    for (const FuzzySet& g : space.functions()) {
      if (pointwise_leq(f, g)) CHECK(pointwise_leq(s.apply(f), s.apply(g)));
    }
  }
}

TEST_CASE("construction is budget-guarded") {
  auto lat = l5();
  const FuzzyPartition p = fixture_partition_l5(lat);
  QuantifierConfig tight;
  tight.budget = 10;  // |L|^|X| = 125
  CHECK_THROWS_AS(pretopology_from_partition(p, tight), QuantifierBudgetError);
  CHECK_THROWS_AS(interior_from_partition(p, tight), QuantifierBudgetError);
}

TEST_CASE("partial tables are rejected") {
  auto lat = l3();
  const FiniteSet x = enumerated_set("X", "x", 2);
  std::vector<std::vector<Elem>> table(8, std::vector<Elem>(2, 0));  // needs 9 rows
  CHECK_THROWS_AS(Pretopology(x, lat, table), std::invalid_argument);
}
