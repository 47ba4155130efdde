#pragma once

#include <variant>

#include <json.hpp>

#include "lfuzz/functors.hpp"

namespace lfuzz::io {

using json = nlohmann::json;

// Lattice files: {"kind":"lukasiewicz","levels":n} for the (n+1)-element
// chain, or {"kind":"table","labels":[...],"leq":[[0/1]],"star":[[idx]],
// "hash":[[idx]],"neg":[idx]}. Labels are display-only.
LatticePtr load_lattice(const json& j);
json save_lattice(const Lattice& lat);

/// Parses "luk:k" (the k-element chain, k >= 2) or reads a lattice JSON file.
LatticePtr lattice_from_spec(const std::string& spec);

FiniteSet load_set(const json& j);
json save_set(const FiniteSet& s);

// Fuzzy values are written as carrier labels throughout.
FuzzySet load_fuzzyset(const json& j, const LatticePtr& lattice);
json save_fuzzyset(const FuzzySet& f);

FuzzyRelation load_relation(const json& j, const LatticePtr& lattice);
json save_relation(const FuzzyRelation& r);

FuzzyPartition load_partition(const json& j, const LatticePtr& lattice);
json save_partition(const FuzzyPartition& p);

LowerTransformationSystem load_lts(const json& j, const LatticePtr& lattice);
json save_lts(const LowerTransformationSystem& h);

// Operator tables list one row of values per function of L^X in
// lexicographic order. A generator form {"from_partition": <partition>} is
// accepted and expanded on load. The embedded "lattice" field wins over the
// supplied one; one of the two must be present.
Pretopology load_pretopology(const json& j, LatticePtr lattice, const QuantifierConfig& config = {});
json save_pretopology(const Pretopology& s);
CechInterior load_interior(const json& j, LatticePtr lattice, const QuantifierConfig& config = {});
json save_interior(const CechInterior& i);

QuaObject load_qua_object(const json& j, const LatticePtr& lattice);
json save_qua_object(const QuaObject& m);

/// A Qua morphism bundles its endpoint objects explicitly.
struct QuaMorphism {
  QuaObject source;
  QuaObject target;
  MorphismPair pair;
};
using LoadedMorphism = std::variant<Morphism, QuaMorphism>;

LoadedMorphism load_morphism(const json& j, const LatticePtr& lattice,
                             const QuantifierConfig& config = {});
ValidationReport validate_loaded_morphism(const LoadedMorphism& m,
                                          const QuantifierConfig& config = {});

json report_to_json(const ValidationReport& report);

/// Parses a comma-separated list of carrier labels into a fuzzy set on
/// `domain` (e.g. "1/2,3/4,0").
FuzzySet parse_value_list(const std::string& text, const FiniteSet& domain,
                          const LatticePtr& lattice);
/// "[1/2, 1/4]" rendering used by the command line.
std::string format_fuzzyset(const FuzzySet& f);

}  // namespace lfuzz::io
