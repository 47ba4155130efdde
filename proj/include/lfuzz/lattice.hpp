#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lfuzz/report.hpp"

namespace lfuzz {

/// A lattice element is an index into the carrier of its owning Lattice.
/// Equality is index equality; nothing in the library compares approximately.
using Elem = int;

enum class BinOp { Meet, Join, Star, Hash };

std::string_view to_string(BinOp op);

class Lattice;
using LatticePtr = std::shared_ptr<const Lattice>;

/// A finite complete residuated and co-residuated lattice with an involutive
/// negator, stored extensionally as operation tables over carrier indices.
///
/// Construction only checks table shapes and index ranges; the algebraic laws
/// (partial order, monoid axioms, distributivity, absorption, duality) are
/// decided by validate_lattice, which reports each law with a counterexample
/// on failure. Instances are immutable and safe to share across threads.
class Lattice {
 public:
  /// The (n+1)-element chain {0, 1/n, ..., 1} with
  ///   a * b = max(0, a+b-1),  a # b = min(1, a+b),  neg a = 1-a,
  /// materialized as index tables. n = 1 yields the two-element Boolean
  /// lattice. Throws std::invalid_argument when n < 1.
  static LatticePtr lukasiewicz_chain(int n);

  /// Builds a lattice from explicit tables. `leq`, `star` and `hash` are
  /// row-major n*n; `neg` has length n. Meet/join tables, bottom and top are
  /// derived from `leq` (cells without a proper infimum/supremum fall back to
  /// index 0 and are flagged by validate_lattice). Labels are display-only.
  static LatticePtr from_tables(std::vector<std::string> labels,
                                std::vector<std::uint8_t> leq,
                                std::vector<Elem> star,
                                std::vector<Elem> hash,
                                std::vector<Elem> neg);

  int size() const { return n_; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  bool leq(Elem a, Elem b) const { return leq_[idx(a, b)] != 0; }
  Elem meet(Elem a, Elem b) const { return meet_[idx(a, b)]; }
  Elem join(Elem a, Elem b) const { return join_[idx(a, b)]; }
  Elem star(Elem a, Elem b) const { return star_[idx(a, b)]; }
  Elem hash(Elem a, Elem b) const { return hash_[idx(a, b)]; }
  Elem neg(Elem a) const { return neg_[at(a)]; }

  Elem apply(BinOp op, Elem a, Elem b) const;

  /// Iterated meet; the empty fold is the top element.
  Elem fold_meet(std::span<const Elem> elems) const;
  /// Iterated join; the empty fold is the bottom element.
  Elem fold_join(std::span<const Elem> elems) const;

  const std::string& label(Elem a) const { return labels_[at(a)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find_label(std::string_view label) const;

  /// True when the operation tables coincide (labels are ignored). Binary
  /// operations on fuzzy structures accept operands from lattices that agree
  /// in this sense.
  bool same_algebra(const Lattice& other) const;

  const std::vector<std::uint8_t>& leq_table() const { return leq_; }
  const std::vector<Elem>& star_table() const { return star_; }
  const std::vector<Elem>& hash_table() const { return hash_; }
  const std::vector<Elem>& neg_table() const { return neg_; }

 private:
  Lattice() = default;

  int at(Elem a) const;
  std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(at(a)) * n_ + at(b); }

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> meet_, join_, star_, hash_;
  std::vector<Elem> neg_;
  Elem bottom_ = 0, top_ = 0;
};

/// Exhaustively decides every structural axiom over all pairs/triples of the
/// carrier. Arbitrary-join/meet distributivity is covered by the binary plus
/// nullary instances, which suffices on a finite carrier.
ValidationReport validate_lattice(const Lattice& lat);

}  // namespace lfuzz
