#pragma once

#include <vector>

#include "lfuzz/partition.hpp"

namespace lfuzz {

/// An L-valued fuzzy lower transformation system (X, Y, v, H) represented
/// extensionally by its co-atom kernel: kernel(y, x) = neg H(coatom(x))(y).
/// The kernel determines H via apply_lts thanks to the co-atom decomposition
/// f = meet_x (f(x) # coatom(x)); validate_lts still checks the axioms of H
/// extensionally so that lattices violating a#1=1 cannot slip through.
///
/// Equality is data equality of (X, Y, v, kernel).
class LowerTransformationSystem {
 public:
  LowerTransformationSystem(FiniteSet x, FiniteSet y, std::vector<std::size_t> v,
                            FuzzyRelation kernel);

  const FiniteSet& space() const { return x_; }
  const FiniteSet& target() const { return y_; }
  const std::vector<std::size_t>& v() const { return v_; }
  const FuzzyRelation& kernel() const { return kernel_; }
  const LatticePtr& lattice() const { return kernel_.lattice(); }

  bool operator==(const LowerTransformationSystem& other) const = default;

 private:
  FiniteSet x_;
  FiniteSet y_;
  std::vector<std::size_t> v_;
  FuzzyRelation kernel_;
};

/// H(f)(y) = meet_x (neg kernel(y, x) # f(x)).
FuzzySet apply_lts(const LowerTransformationSystem& h, const FuzzySet& f);

/// (X, J, xi, membership) read as a transformation system; applying it
/// reproduces the lower F-transform.
LowerTransformationSystem lts_from_partition(const FuzzyPartition& p);

/// Reads the kernel back as a partition membership matrix. Throws
/// std::invalid_argument naming the offending element when the kernel's
/// cores fail the partition axioms.
FuzzyPartition partition_from_lts(const LowerTransformationSystem& h);

/// Checks surjectivity of v, the kernel/core axiom in both directions, and
/// meet preservation plus hash-homogeneity of the induced H over the
/// quantified function space.
ValidationReport validate_lts(const LowerTransformationSystem& h,
                              const QuantifierConfig& config = {});

}  // namespace lfuzz
