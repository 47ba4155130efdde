#pragma once

#include <vector>

#include "lfuzz/fuzzy.hpp"

namespace lfuzz {

/// An L-valued fuzzy partition of X indexed by J: a J x X membership matrix
/// whose row j is the fuzzy set A_j, together with the index map xi sending
/// each x to the unique j with x in core(A_j).
///
/// The constructor checks shapes only; validate_partition decides the
/// partition axioms (normal rows, cores partitioning X, xi consistent and
/// onto). xi is stored rather than recomputed so that degenerate or
/// ambiguous inputs are flagged instead of silently repaired.
class FuzzyPartition {
 public:
  FuzzyPartition(FiniteSet x, FiniteSet j, FuzzyRelation membership, std::vector<std::size_t> xi);

  const FiniteSet& space() const { return x_; }
  const FiniteSet& index_set() const { return j_; }
  const FuzzyRelation& membership() const { return membership_; }
  const std::vector<std::size_t>& xi() const { return xi_; }
  const LatticePtr& lattice() const { return membership_.lattice(); }

  /// A_j(x).
  Elem member(std::size_t j, std::size_t x) const { return membership_.at(j, x); }
  /// Row j as a fuzzy set on X.
  FuzzySet block(std::size_t j) const;

  bool operator==(const FuzzyPartition& other) const = default;

 private:
  FiniteSet x_;
  FiniteSet j_;
  FuzzyRelation membership_;
  std::vector<std::size_t> xi_;
};

ValidationReport validate_partition(const FuzzyPartition& p);
bool is_valid_partition(const FuzzyPartition& p);

/// Direct lower F-transform: component j is meet_x (neg A_j(x) # f(x)),
/// returned as a fuzzy set on J.
FuzzySet lower_ftransform(const FuzzyPartition& p, const FuzzySet& f);

/// Verifies the four lower-transform properties over the quantified function
/// space: (i) constants are fixed, (ii) the core bound F[f](j) <= f(x_j),
/// (iii) hash-homogeneity F[a#f] = a#F[f], (iv) preservation of meets
/// (all pairs plus the empty meet).
ValidationReport check_ftransform_properties(const FuzzyPartition& p,
                                             const QuantifierConfig& config = {});

}  // namespace lfuzz
