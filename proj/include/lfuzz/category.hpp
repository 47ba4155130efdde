#pragma once

#include <string_view>
#include <vector>

#include "lfuzz/systems.hpp"
#include "lfuzz/topology.hpp"

namespace lfuzz {

/// The five categories whose morphisms are pairs of fuzzy relations. In each
/// of them the forward component runs covariantly between the first
/// underlying sets and the backward component contravariantly between the
/// second ones; composition is (sup-star, inf-hash).
enum class CategoryTag { Qua, LSpaceFP, LFtransDown, LFPrTop, LFCInt };

std::string_view to_string(CategoryTag tag);
CategoryTag category_tag_from_string(std::string_view name);

/// A question/answer system: success(q, a) measures how well answer `a`
/// responds to question `q`.
struct QuaObject {
  FiniteSet questions;
  FiniteSet answers;
  FuzzyRelation success;  // questions x answers

  QuaObject(FiniteSet q, FiniteSet a, FuzzyRelation s);
  bool operator==(const QuaObject& other) const = default;
};

/// A morphism candidate: forward between first underlying sets (X1 x X2),
/// backward between second ones in the opposite direction (S2 x S1). Whether
/// it actually is a morphism is decided by the per-category checkers below.
struct MorphismPair {
  CategoryTag tag;
  FuzzyRelation forward;
  FuzzyRelation backward;

  bool operator==(const MorphismPair& other) const = default;
};

/// A morphism of the function-based (crisp) sister categories: a function
/// between the first sets plus one between the second sets. For LFPrTop and
/// LFCInt both sets coincide and so do the two functions.
struct CrispMorphism {
  CategoryTag tag;
  FiniteSet src_first, dst_first;
  FiniteSet src_second, dst_second;
  std::vector<std::size_t> forward_fn;   // src_first -> dst_first
  std::vector<std::size_t> backward_fn;  // src_second -> dst_second

  bool operator==(const CrispMorphism& other) const = default;
};

CrispMorphism make_crisp_morphism(CategoryTag tag, FiniteSet src_first, FiniteSet dst_first,
                                  FiniteSet src_second, FiniteSet dst_second,
                                  std::vector<std::size_t> forward_fn,
                                  std::vector<std::size_t> backward_fn);
/// Single-function form for LFPrTop / LFCInt.
CrispMorphism make_crisp_morphism(CategoryTag tag, FiniteSet src, FiniteSet dst,
                                  std::vector<std::size_t> fn);
CrispMorphism identity_crisp_morphism(CategoryTag tag, const FiniteSet& first,
                                      const FiniteSet& second);

/// (q . p): forward composes by sup-star, backward by inf-hash in the
/// opposite order, so the result's backward runs C2 x A2.
MorphismPair compose(const MorphismPair& p, const MorphismPair& q);
CrispMorphism compose(const CrispMorphism& p, const CrispMorphism& q);

/// The canonical identity: crisp identity forward, dual identity backward
/// (the unique two-sided unit for the inf-hash product).
MorphismPair identity_pair(CategoryTag tag, const FiniteSet& first, const FiniteSet& second,
                           const LatticePtr& lattice);

// Morphism-condition validators. Each quantifies exhaustively over the
// stated index tuples (and over the function space where the condition
// demands it) and reports a witness tuple on failure.
ValidationReport check_qua_morphism(const QuaObject& m, const QuaObject& m2,
                                    const MorphismPair& pair);
ValidationReport check_fpmap(const FuzzyPartition& p1, const FuzzyPartition& p2,
                             const MorphismPair& pair);
ValidationReport check_lts_morphism(const LowerTransformationSystem& h1,
                                    const LowerTransformationSystem& h2, const MorphismPair& pair,
                                    const QuantifierConfig& config = {});
ValidationReport check_pretop_morphism(const Pretopology& s1, const Pretopology& s2,
                                       const MorphismPair& pair,
                                       const QuantifierConfig& config = {});
ValidationReport check_interior_morphism(const CechInterior& i1, const CechInterior& i2,
                                         const MorphismPair& pair,
                                         const QuantifierConfig& config = {});

/// Partitions as question/answer systems: questions J, answers X, success =
/// membership.
QuaObject embed_qua_partition(const FuzzyPartition& p);
/// Pretopologies as question/answer systems over X with the co-atom matrix.
QuaObject embed_qua_pretopology(const Pretopology& s);

/// Builds the relation pair of a crisp morphism: forward is the 1/0 graph of
/// forward_fn, backward the 0/1 co-graph of backward_fn.
MorphismPair crisp_to_pair(const CrispMorphism& c, const LatticePtr& lattice);

/// Reads a crisp morphism back from a relation pair. The forward relation
/// must be a crisp graph (exactly one 1 per row, 0 elsewhere). For LSpaceFP
/// and LFtransDown the backward must be a crisp co-graph (exactly one 0 per
/// column, 1 elsewhere); for LFPrTop and LFCInt it must be {0,1}-valued and
/// the crisp function is read from the forward component. Violations raise
/// CrispnessError naming the row or column.
CrispMorphism pair_to_crisp(const MorphismPair& pair);

}  // namespace lfuzz
