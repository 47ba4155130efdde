#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "lfuzz/partition.hpp"

namespace lfuzz::test {

inline LatticePtr l2() { return Lattice::lukasiewicz_chain(1); }
inline LatticePtr l3() { return Lattice::lukasiewicz_chain(2); }
inline LatticePtr l5() { return Lattice::lukasiewicz_chain(4); }

inline Elem el(const LatticePtr& lat, const std::string& label) {
  auto e = lat->find_label(label);
  if (!e) throw std::invalid_argument("test: no carrier label " + label);
  return *e;
}

inline std::vector<Elem> els(const LatticePtr& lat, std::initializer_list<const char*> labels) {
  std::vector<Elem> out;
  for (const char* l : labels) out.push_back(el(lat, l));
  return out;
}

inline FuzzySet fs(const LatticePtr& lat, const FiniteSet& domain,
                   std::initializer_list<const char*> labels) {
  return FuzzySet(domain, els(lat, labels), lat);
}

inline FuzzyRelation rel(const LatticePtr& lat, const FiniteSet& src, const FiniteSet& tgt,
                         std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<Elem> entries;
  for (const auto& row : rows) {
    for (const char* l : row) entries.push_back(el(lat, l));
  }
  return FuzzyRelation(src, tgt, std::move(entries), lat);
}

/// The worked three-point fixture: X = {x1,x2,x3}, two blocks with
/// memberships [1, 1, 1/4] and [1/4, 0, 1], cores {x1,x2} and {x3}.
inline FuzzyPartition fixture_partition_l5(const LatticePtr& lat) {
  FiniteSet x = enumerated_set("X", "x", 3);
  FiniteSet j = enumerated_set("J", "j", 2);
  return FuzzyPartition(x, j, rel(lat, j, x, {{"1", "1", "1/4"}, {"1/4", "0", "1"}}), {0, 0, 1});
}

}  // namespace lfuzz::test
