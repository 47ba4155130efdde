#include <doctest.h>

#include "helpers.hpp"
#include "lfuzz/fixtures.hpp"
#include "lfuzz/json_io.hpp"

using namespace lfuzz;
using namespace lfuzz::test;
using lfuzz::io::json;

TEST_CASE("lattice files: chain shorthand and explicit tables") {
  const json chain = json::parse(R"({"kind":"lukasiewicz","levels":4})");
  auto lat = io::load_lattice(chain);
  CHECK(lat->size() == 5);
  CHECK(lat->same_algebra(*l5()));

  auto round = io::load_lattice(io::save_lattice(*lat));
  CHECK(round->same_algebra(*lat));
  CHECK(round->labels() == lat->labels());

  CHECK(io::lattice_from_spec("luk:5")->same_algebra(*l5()));
  CHECK(io::lattice_from_spec("luk:2")->same_algebra(*l2()));
  CHECK_THROWS_AS(io::lattice_from_spec("luk:1"), std::invalid_argument);
}

TEST_CASE("fuzzy sets and relations round trip with label values") {
  auto lat = l5();
  const json j = json::parse(R"({
    "fuzzyset": {"domain": {"name": "X", "elements": ["x1", "x2"]},
                  "values": ["1/2", "1"]}})");
  const FuzzySet f = io::load_fuzzyset(j, lat);
  CHECK(f == fs(lat, enumerated_set("X", "x", 2), {"1/2", "1"}));
  CHECK(io::load_fuzzyset(io::save_fuzzyset(f), lat) == f);

  const json bad = json::parse(R"({
    "fuzzyset": {"domain": {"name": "X", "elements": ["x1", "x2"]},
                  "values": ["1/2", "2/3"]}})");
  CHECK_THROWS_AS(io::load_fuzzyset(bad, lat), std::invalid_argument);
}

TEST_CASE("partition and system round trips") {
  auto lat = l5();
  const FuzzyPartition p = fixture_partition_l5(lat);
  CHECK(io::load_partition(io::save_partition(p), lat) == p);
  const LowerTransformationSystem h = lts_from_partition(p);
  CHECK(io::load_lts(io::save_lts(h), lat) == h);
}

TEST_CASE("operator tables round trip and accept the generator form") {
  auto lat = l3();
  Rng rng(71);
  const FuzzyPartition p = random_partition(rng, lat, 2, 2, "io");
  const Pretopology s = pretopology_from_partition(p);
  CHECK(io::load_pretopology(io::save_pretopology(s), nullptr) == s);

  json generator;
  generator["pretopology"]["lattice"] = io::save_lattice(*lat).at("lattice");
  generator["pretopology"]["from_partition"] = io::save_partition(p).at("partition");
  CHECK(io::load_pretopology(generator, nullptr) == s);

  const CechInterior i = interior_from_partition(p);
  CHECK(io::load_interior(io::save_interior(i), nullptr) == i);
}

TEST_CASE("morphism files load and validate") {
  auto lat = l3();
  Rng rng(73);
  const FuzzyPartition p1 = random_partition(rng, lat, 2, 2, "m1");
  const FuzzyPartition p2 = random_partition(rng, lat, 2, 1, "m2");
  const MorphismPair pair = random_fpmap(rng, p1, p2);

  json j;
  j["morphism"]["category"] = "LSpaceFP";
  j["morphism"]["source"] = io::save_partition(p1).at("partition");
  j["morphism"]["target"] = io::save_partition(p2).at("partition");
  j["morphism"]["forward"] = io::save_relation(pair.forward).at("relation");
  j["morphism"]["backward"] = io::save_relation(pair.backward).at("relation");

  const io::LoadedMorphism loaded = io::load_morphism(j, lat);
  CHECK(io::validate_loaded_morphism(loaded).passed());
  const Morphism& m = std::get<Morphism>(loaded);
  CHECK(m.pair() == pair);
}

TEST_CASE("system-morphism files load against the right checker") {
  auto lat = l3();
  Rng rng(79);
  const FuzzyPartition p1 = random_partition(rng, lat, 2, 2, "n1");
  const FuzzyPartition p2 = random_partition(rng, lat, 2, 1, "n2");
  const auto h1 = lts_from_partition(p1);
  const auto h2 = lts_from_partition(p2);
  const MorphismPair pair = random_lts_morphism(rng, h1, h2);

  json j;
  j["morphism"]["category"] = "LFtrans";
  j["morphism"]["source"] = io::save_lts(h1).at("lts");
  j["morphism"]["target"] = io::save_lts(h2).at("lts");
  j["morphism"]["forward"] = io::save_relation(pair.forward).at("relation");
  j["morphism"]["backward"] = io::save_relation(pair.backward).at("relation");
  CHECK(io::validate_loaded_morphism(io::load_morphism(j, lat)).passed());

  // swapping the components must be caught by the axis checks
  json swapped = j;
  swapped["morphism"]["forward"] = j["morphism"]["backward"];
  swapped["morphism"]["backward"] = j["morphism"]["forward"];
  CHECK_THROWS_AS(io::validate_loaded_morphism(io::load_morphism(swapped, lat)),
                  std::invalid_argument);
}

TEST_CASE("continuity-morphism files expand generator-form objects") {
  auto lat = l3();
  Rng rng(83);
  const FuzzyPartition p1 = random_partition(rng, lat, 2, 2, "o1");
  const FuzzyPartition p2 = random_partition(rng, lat, 2, 1, "o2");
  const Pretopology s1 = pretopology_from_partition(p1);
  const Pretopology s2 = pretopology_from_partition(p2);
  const MorphismPair pair = random_pretop_morphism(rng, s1, s2);

  json j;
  j["morphism"]["category"] = "LFPrTop";
  j["morphism"]["source"]["from_partition"] = io::save_partition(p1).at("partition");
  j["morphism"]["target"]["from_partition"] = io::save_partition(p2).at("partition");
  j["morphism"]["forward"] = io::save_relation(pair.forward).at("relation");
  j["morphism"]["backward"] = io::save_relation(pair.backward).at("relation");
  const io::LoadedMorphism loaded = io::load_morphism(j, lat);
  CHECK(io::validate_loaded_morphism(loaded).passed());
  CHECK(std::get<Pretopology>(std::get<Morphism>(loaded).source) == s1);
}

TEST_CASE("value lists parse and print") {
  auto lat = l5();
  const FiniteSet x = enumerated_set("X", "x", 3);
  const FuzzySet f = io::parse_value_list("1/2, 3/4, 1/4", x, lat);
  CHECK(f == fs(lat, x, {"1/2", "3/4", "1/4"}));
  CHECK(io::format_fuzzyset(f) == "[1/2, 3/4, 1/4]");
  CHECK_THROWS_AS(io::parse_value_list("1/2", x, lat), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_value_list("1/2, 3/4, 7/9", x, lat), std::invalid_argument);
}

TEST_CASE("report serialization carries witnesses") {
  ValidationReport report("demo");
  report.record("alpha", true);
  report.record("beta", false, "a=1, b=0", false);
  const json j = io::report_to_json(report);
  CHECK(j.at("passed") == false);
  CHECK(j.at("checks").size() == 2);
  CHECK(j.at("checks")[1].at("witness") == "a=1, b=0");
  CHECK(j.at("checks")[1].at("exhaustive") == false);
}
