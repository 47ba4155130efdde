#pragma once

#include <optional>
#include <random>

#include "lfuzz/functors.hpp"

namespace lfuzz {

/// All fixture generation is driven by std::mt19937_64 so runs are
/// reproducible across platforms for a given seed. Raw engine output is
/// reduced by modulo; the bias is irrelevant at desk scale.
using Rng = std::mt19937_64;

std::size_t pick_index(Rng& rng, std::size_t n);
Elem pick_elem(Rng& rng, const Lattice& lat);
/// Any element except the top one.
Elem pick_non_top(Rng& rng, const Lattice& lat);

FuzzyRelation random_relation(Rng& rng, const FiniteSet& source, const FiniteSet& target,
                              const LatticePtr& lattice);

/// A random valid partition: a random surjection xi fixes the cores, core
/// positions get the top element and everything else stays strictly below it.
FuzzyPartition random_partition(Rng& rng, const LatticePtr& lattice, std::size_t x_size,
                                std::size_t j_size, const std::string& name_suffix);

// Random valid morphisms. The forward component is drawn uniformly; the
// backward component is completed to the least relation satisfying the
// morphism condition (the satisfying set of each entry is a meet-closed
// up-set, so the least solution exists), then optionally bumped upward,
// which preserves validity.
MorphismPair random_fpmap(Rng& rng, const FuzzyPartition& p1, const FuzzyPartition& p2,
                          bool bump = true);
MorphismPair random_lts_morphism(Rng& rng, const LowerTransformationSystem& h1,
                                 const LowerTransformationSystem& h2,
                                 const QuantifierConfig& config = {}, bool bump = true);
MorphismPair random_pretop_morphism(Rng& rng, const Pretopology& s1, const Pretopology& s2,
                                    const QuantifierConfig& config = {}, bool bump = true);
MorphismPair random_interior_morphism(Rng& rng, const CechInterior& i1, const CechInterior& i2,
                                      const QuantifierConfig& config = {}, bool bump = true);
MorphismPair random_qua_morphism(Rng& rng, const QuaObject& m1, const QuaObject& m2,
                                 bool bump = true);

/// Plain rejection sampling of a fully random pair against a validator;
/// empty when no valid pair shows up within `tries`.
std::optional<MorphismPair> rejection_sample_fpmap(Rng& rng, const FuzzyPartition& p1,
                                                   const FuzzyPartition& p2, std::size_t tries);

/// A crisp morphism whose relation pair satisfies the category's condition,
/// found by rejection; empty when none shows up within `tries`.
std::optional<CrispMorphism> random_crisp_morphism(Rng& rng, const AnyObject& source,
                                                   const AnyObject& target,
                                                   const QuantifierConfig& config,
                                                   std::size_t tries = 64);

}  // namespace lfuzz
