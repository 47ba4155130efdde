#include "lfuzz/partition.hpp"

#include <stdexcept>

namespace lfuzz {

FuzzyPartition::FuzzyPartition(FiniteSet x, FiniteSet j, FuzzyRelation membership,
                               std::vector<std::size_t> xi)
    : x_(std::move(x)), j_(std::move(j)), membership_(std::move(membership)), xi_(std::move(xi)) {
  if (membership_.source() != j_ || membership_.target() != x_) {
    throw std::invalid_argument("partition membership matrix must have axes J x X");
  }
  if (xi_.size() != x_.size()) {
    throw std::invalid_argument("partition xi must assign an index to every element of X");
  }
  for (std::size_t v : xi_) {
    if (v >= j_.size()) throw std::invalid_argument("partition xi entry out of range of J");
  }
}

FuzzySet FuzzyPartition::block(std::size_t j) const {
  std::vector<Elem> values(x_.size());
  for (std::size_t x = 0; x < x_.size(); ++x) values[x] = membership_.at(j, x);
  return FuzzySet(x_, std::move(values), membership_.lattice());
}

ValidationReport validate_partition(const FuzzyPartition& p) {
  ValidationReport report("partition");
  const Lattice& lat = *p.lattice();
  const std::size_t nx = p.space().size(), nj = p.index_set().size();

  {
    bool ok = true;
    std::string witness;
    for (std::size_t j = 0; j < nj && ok; ++j) {
      bool normal = false;
      for (std::size_t x = 0; x < nx; ++x) normal = normal || p.member(j, x) == lat.top();
      if (!normal) {
        ok = false;
        witness = "row " + p.index_set().label(j) + " has empty core";
      }
    }
    report.record("rows normal", ok, witness);
  }
  {
    // Every x must lie in the core of exactly one block.
    bool ok = true;
    std::string witness;
    for (std::size_t x = 0; x < nx && ok; ++x) {
      std::size_t count = 0;
      for (std::size_t j = 0; j < nj; ++j) {
        if (p.member(j, x) == lat.top()) ++count;
      }
      if (count != 1) {
        ok = false;
        witness = p.space().label(x) + (count == 0 ? " lies in no core" : " lies in multiple cores");
      }
    }
    report.record("cores partition X", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (std::size_t x = 0; x < nx && ok; ++x) {
      if (p.member(p.xi()[x], x) != lat.top()) {
        ok = false;
        witness = "xi(" + p.space().label(x) + ") does not point to a core containing it";
      }
    }
    report.record("xi consistent with cores", ok, witness);
  }
  {
    std::vector<bool> hit(nj, false);
    for (std::size_t v : p.xi()) hit[v] = true;
    bool ok = true;
    std::string witness;
    for (std::size_t j = 0; j < nj && ok; ++j) {
      if (!hit[j]) {
        ok = false;
        witness = "no x is mapped to " + p.index_set().label(j);
      }
    }
    report.record("xi onto J", ok, witness);
  }
  return report;
}

bool is_valid_partition(const FuzzyPartition& p) { return validate_partition(p).passed(); }

FuzzySet lower_ftransform(const FuzzyPartition& p, const FuzzySet& f) {
  if (f.domain() != p.space()) {
    throw std::invalid_argument("lower_ftransform: f must live on the partitioned set");
  }
  if (f.lattice() != p.lattice() && !f.lattice()->same_algebra(*p.lattice())) {
    throw std::invalid_argument("lower_ftransform: f uses a different lattice");
  }
  const Lattice& lat = *p.lattice();
  std::vector<Elem> out(p.index_set().size());
  for (std::size_t j = 0; j < p.index_set().size(); ++j) {
    Elem acc = lat.top();
    for (std::size_t x = 0; x < p.space().size(); ++x) {
      acc = lat.meet(acc, lat.hash(lat.neg(p.member(j, x)), f.value(x)));
    }
    out[j] = acc;
  }
  return FuzzySet(p.index_set(), std::move(out), p.lattice());
}

ValidationReport check_ftransform_properties(const FuzzyPartition& p,
                                             const QuantifierConfig& config) {
  ValidationReport report("lower F-transform");
  const Lattice& lat = *p.lattice();
  const FunctionSpace space = FunctionSpace::build(p.space(), p.lattice(), config);
  const bool exhaustive = space.exhaustive();

  {
    bool ok = true;
    std::string witness;
    for (Elem a = 0; a < lat.size() && ok; ++a) {
      FuzzySet image = lower_ftransform(p, constant_set(p.space(), a, p.lattice()));
      if (image != constant_set(p.index_set(), a, p.lattice())) {
        ok = false;
        witness = "a=" + lat.label(a);
      }
    }
    report.record("constants fixed", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (const FuzzySet& f : space.functions()) {
      FuzzySet image = lower_ftransform(p, f);
      for (std::size_t x = 0; x < p.space().size() && ok; ++x) {
        const std::size_t j = p.xi()[x];
        if (!lat.leq(image.value(j), f.value(x))) {
          ok = false;
          witness = "f index " + std::to_string(function_index(f)) + ", core point " +
                    p.space().label(x);
        }
      }
      if (!ok) break;
    }
    report.record("core bound", ok, witness, exhaustive);
  }
  {
    bool ok = true;
    std::string witness;
    for (const FuzzySet& f : space.functions()) {
      for (Elem a = 0; a < lat.size() && ok; ++a) {
        FuzzySet lhs = lower_ftransform(p, pointwise(BinOp::Hash, constant_set(p.space(), a, p.lattice()), f));
        FuzzySet rhs = pointwise(BinOp::Hash, constant_set(p.index_set(), a, p.lattice()),
                                 lower_ftransform(p, f));
        if (lhs != rhs) {
          ok = false;
          witness = "a=" + lat.label(a) + ", f index " + std::to_string(function_index(f));
        }
      }
      if (!ok) break;
    }
    report.record("hash homogeneity", ok, witness, exhaustive);
  }
  {
    bool ok = lower_ftransform(p, constant_set(p.space(), lat.top(), p.lattice())) ==
              constant_set(p.index_set(), lat.top(), p.lattice());
    std::string witness = ok ? "" : "empty meet";
    for (std::size_t i = 0; i < space.size() && ok; ++i) {
      FuzzySet image_i = lower_ftransform(p, space.functions()[i]);
      for (std::size_t k = 0; k < space.size() && ok; ++k) {
        const FuzzySet& f = space.functions()[i];
        const FuzzySet& g = space.functions()[k];
        FuzzySet lhs = lower_ftransform(p, pointwise(BinOp::Meet, f, g));
        FuzzySet rhs = pointwise(BinOp::Meet, image_i, lower_ftransform(p, g));
        if (lhs != rhs) {
          ok = false;
          witness = "f index " + std::to_string(function_index(f)) + ", g index " +
                    std::to_string(function_index(g));
        }
      }
    }
    report.record("meet preservation", ok, witness, exhaustive);
  }
  return report;
}

}  // namespace lfuzz
