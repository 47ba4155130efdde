#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lfuzz/lattice.hpp"
#include "lfuzz/report.hpp"

namespace lfuzz {

/// A named finite set; the element order fixes matrix axes. Binary operations
/// compare sets by name and elements, not just by size, so accidentally
/// transposed relations fail loudly.
class FiniteSet {
 public:
  FiniteSet(std::string name, std::vector<std::string> elements);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const std::string& label(std::size_t i) const { return elements_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool operator==(const FiniteSet& other) const = default;

 private:
  std::string name_;
  std::vector<std::string> elements_;
};

/// Convenience factory: elements named `<prefix>1..<prefix>k`.
FiniteSet enumerated_set(std::string name, std::string_view prefix, std::size_t count);

/// An L-valued fuzzy set over a finite domain.
class FuzzySet {
 public:
  FuzzySet(FiniteSet domain, std::vector<Elem> values, LatticePtr lattice);

  const FiniteSet& domain() const { return domain_; }
  const LatticePtr& lattice() const { return lattice_; }
  std::size_t size() const { return values_.size(); }
  Elem value(std::size_t i) const { return values_.at(i); }
  std::span<const Elem> values() const { return values_; }

  bool operator==(const FuzzySet& other) const;

 private:
  FiniteSet domain_;
  std::vector<Elem> values_;
  LatticePtr lattice_;
};

/// An L-valued fuzzy relation source x target, stored row-major.
class FuzzyRelation {
 public:
  FuzzyRelation(FiniteSet source, FiniteSet target, std::vector<Elem> entries, LatticePtr lattice);

  const FiniteSet& source() const { return source_; }
  const FiniteSet& target() const { return target_; }
  const LatticePtr& lattice() const { return lattice_; }
  Elem at(std::size_t row, std::size_t col) const;
  std::span<const Elem> entries() const { return entries_; }

  bool operator==(const FuzzyRelation& other) const;

 private:
  FiniteSet source_;
  FiniteSet target_;
  std::vector<Elem> entries_;
  LatticePtr lattice_;
};

// Pointwise operations on L^X.
FuzzySet pointwise(BinOp op, const FuzzySet& f, const FuzzySet& g);
FuzzySet negate(const FuzzySet& f);
bool pointwise_leq(const FuzzySet& f, const FuzzySet& g);

FuzzySet constant_set(const FiniteSet& domain, Elem a, LatticePtr lattice);
/// Characteristic function of a subset given by element labels (1 on the
/// subset, 0 elsewhere). Unknown labels raise std::invalid_argument.
FuzzySet characteristic(const FiniteSet& domain, std::span<const std::string> subset,
                        LatticePtr lattice);
/// The co-atom neg(1_{x}): 0 at x, 1 elsewhere.
FuzzySet coatom(const FiniteSet& domain, std::size_t x, LatticePtr lattice);
FuzzySet coatom(const FiniteSet& domain, std::string_view x_label, LatticePtr lattice);

/// Indices where f attains the top element.
std::vector<std::size_t> core(const FuzzySet& f);
bool is_normal(const FuzzySet& f);

/// Sup-star product: (x, z) -> join_y r(x, y) * s(y, z).
FuzzyRelation compose_sup_star(const FuzzyRelation& r, const FuzzyRelation& s);
/// Inf-hash product: (u, w) -> meet_v a(u, v) # b(v, w).
FuzzyRelation compose_inf_hash(const FuzzyRelation& a, const FuzzyRelation& b);

/// Backward powerset operator: psi^{<-}(f)(x1) = meet_{x2} neg psi(x1,x2) # f(x2).
FuzzySet backward_powerset(const FuzzyRelation& psi, const FuzzySet& f);

/// Crisp identity relation: 1 on the diagonal, 0 off. Unit for compose_sup_star.
FuzzyRelation identity_relation(const FiniteSet& x, LatticePtr lattice);
/// Dual identity: 0 on the diagonal, 1 off. Unit for compose_inf_hash.
FuzzyRelation co_identity_relation(const FiniteSet& x, LatticePtr lattice);
/// The pair (identity_relation(X), co_identity_relation(J)).
std::pair<FuzzyRelation, FuzzyRelation> make_identity_pair(const FiniteSet& x, const FiniteSet& j,
                                                           LatticePtr lattice);

/// Controls universal quantification over function spaces L^X. Exhaustive
/// enumeration is used while |L|^|X| stays within `budget`; beyond that a
/// seeded sample is drawn when `sampling` is set, otherwise the quantifier
/// raises QuantifierBudgetError.
struct QuantifierConfig {
  std::size_t budget = 10000;
  bool sampling = false;
  std::size_t sample_count = 64;
  std::uint64_t seed = 1;
};

/// |L|^|X|, saturating at a value above any usable budget.
std::size_t function_space_cardinality(std::size_t domain_size, std::size_t lattice_size);

/// Lexicographic enumeration index of f in L^X: the value at the first domain
/// element is the most significant digit.
std::size_t function_index(const FuzzySet& f);

/// A materialized quantifier domain over L^X. In exhaustive mode it yields
/// every function exactly once in lexicographic order; in sampling mode it
/// yields seeded pseudo-random functions, always including every constant and
/// every co-atom, with duplicates removed.
class FunctionSpace {
 public:
  static FunctionSpace build(const FiniteSet& domain, const LatticePtr& lattice,
                             const QuantifierConfig& config = {});

  bool exhaustive() const { return exhaustive_; }
  const std::vector<FuzzySet>& functions() const { return functions_; }
  std::size_t size() const { return functions_.size(); }

 private:
  bool exhaustive_ = true;
  std::vector<FuzzySet> functions_;
};

}  // namespace lfuzz
