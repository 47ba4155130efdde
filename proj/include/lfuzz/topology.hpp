#pragma once

#include <vector>

#include "lfuzz/partition.hpp"

namespace lfuzz {

/// An L-valued fuzzy pretopology over X, stored extensionally: one row per
/// function f in L^X (in lexicographic enumeration order), where row(f)(x) is
/// p_x(f). Definitionally a pretopology need not be kernel-determined (only
/// constants and binary meets are axioms), so partition-induced instances are
/// built by evaluating every function rather than through a kernel shortcut.
class Pretopology {
 public:
  Pretopology(FiniteSet x, LatticePtr lattice, std::vector<std::vector<Elem>> table);

  const FiniteSet& space() const { return x_; }
  const LatticePtr& lattice() const { return lattice_; }
  std::size_t function_count() const { return table_.size(); }
  /// p_x(f) by function row index.
  Elem value(std::size_t f_index, std::size_t x) const;
  /// x -> p_x(f) for a concrete f on X.
  FuzzySet apply(const FuzzySet& f) const;
  const std::vector<std::vector<Elem>>& table() const { return table_; }

  bool operator==(const Pretopology& other) const;

 private:
  FiniteSet x_;
  LatticePtr lattice_;
  std::vector<std::vector<Elem>> table_;
};

/// A Cech L-valued fuzzy interior operator over X, stored the same way:
/// row(f)(x) = i(f)(x).
class CechInterior {
 public:
  CechInterior(FiniteSet x, LatticePtr lattice, std::vector<std::vector<Elem>> table);

  const FiniteSet& space() const { return x_; }
  const LatticePtr& lattice() const { return lattice_; }
  std::size_t function_count() const { return table_.size(); }
  Elem value(std::size_t f_index, std::size_t x) const;
  FuzzySet apply(const FuzzySet& f) const;
  const std::vector<std::vector<Elem>>& table() const { return table_; }

  bool operator==(const CechInterior& other) const;

 private:
  FiniteSet x_;
  LatticePtr lattice_;
  std::vector<std::vector<Elem>> table_;
};

/// Axioms (constants fixed, contractivity, binary-meet preservation),
/// exhaustively over the stored table, with witnesses.
ValidationReport validate_pretopology(const Pretopology& s);
ValidationReport validate_interior(const CechInterior& i);

// The two presentations carry the same data; the conversions are exact
// inverses of each other.
CechInterior interior_from_pretopology(const Pretopology& s);
Pretopology pretopology_from_interior(const CechInterior& i);

/// p_x(f) = F[f](xi(x)): the lower F-transform read back at each point's
/// block. Requires |L|^|X| within the quantifier budget.
Pretopology pretopology_from_partition(const FuzzyPartition& p, const QuantifierConfig& config = {});
CechInterior interior_from_partition(const FuzzyPartition& p, const QuantifierConfig& config = {});

/// The co-atom matrix M(x, x') = neg p_x(coatom(x')).
FuzzyRelation qua_relation_from_pretopology(const Pretopology& s);

// Reference instances. The identity interior maps every f to itself; the
// indiscrete interior maps f to the constant meet_x f(x).
CechInterior identity_interior(const FiniteSet& x, const LatticePtr& lattice,
                               const QuantifierConfig& config = {});
CechInterior indiscrete_interior(const FiniteSet& x, const LatticePtr& lattice,
                                 const QuantifierConfig& config = {});

}  // namespace lfuzz
