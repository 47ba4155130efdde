#include "lfuzz/systems.hpp"

#include <stdexcept>

namespace lfuzz {

LowerTransformationSystem::LowerTransformationSystem(FiniteSet x, FiniteSet y,
                                                     std::vector<std::size_t> v,
                                                     FuzzyRelation kernel)
    : x_(std::move(x)), y_(std::move(y)), v_(std::move(v)), kernel_(std::move(kernel)) {
  if (kernel_.source() != y_ || kernel_.target() != x_) {
    throw std::invalid_argument("transformation system kernel must have axes Y x X");
  }
  if (v_.size() != x_.size()) {
    throw std::invalid_argument("transformation system v must be defined on all of X");
  }
  for (std::size_t value : v_) {
    if (value >= y_.size()) throw std::invalid_argument("transformation system v entry out of range");
  }
}

FuzzySet apply_lts(const LowerTransformationSystem& h, const FuzzySet& f) {
  if (f.domain() != h.space()) {
    throw std::invalid_argument("apply_lts: f must live on the system's source set");
  }
  if (f.lattice() != h.lattice() && !f.lattice()->same_algebra(*h.lattice())) {
    throw std::invalid_argument("apply_lts: f uses a different lattice");
  }
  const Lattice& lat = *h.lattice();
  std::vector<Elem> out(h.target().size());
  for (std::size_t y = 0; y < h.target().size(); ++y) {
    Elem acc = lat.top();
    for (std::size_t x = 0; x < h.space().size(); ++x) {
      acc = lat.meet(acc, lat.hash(lat.neg(h.kernel().at(y, x)), f.value(x)));
    }
    out[y] = acc;
  }
  return FuzzySet(h.target(), std::move(out), h.lattice());
}

LowerTransformationSystem lts_from_partition(const FuzzyPartition& p) {
  if (!is_valid_partition(p)) {
    throw std::invalid_argument("lts_from_partition: input is not a valid partition");
  }
  return LowerTransformationSystem(p.space(), p.index_set(), p.xi(), p.membership());
}

FuzzyPartition partition_from_lts(const LowerTransformationSystem& h) {
  const Lattice& lat = *h.lattice();
  // The cores of the kernel rows must partition X before the data can be
  // read back as a partition.
  for (std::size_t x = 0; x < h.space().size(); ++x) {
    std::size_t count = 0;
    for (std::size_t y = 0; y < h.target().size(); ++y) {
      if (h.kernel().at(y, x) == lat.top()) ++count;
    }
    if (count == 0) {
      throw std::invalid_argument("partition_from_lts: " + h.space().label(x) +
                                  " lies in no kernel core");
    }
    if (count > 1) {
      throw std::invalid_argument("partition_from_lts: " + h.space().label(x) +
                                  " lies in multiple kernel cores");
    }
  }
  for (std::size_t y = 0; y < h.target().size(); ++y) {
    bool normal = false;
    for (std::size_t x = 0; x < h.space().size(); ++x) {
      normal = normal || h.kernel().at(y, x) == lat.top();
    }
    if (!normal) {
      throw std::invalid_argument("partition_from_lts: kernel row " + h.target().label(y) +
                                  " has empty core");
    }
  }
  FuzzyPartition p(h.space(), h.target(), h.kernel(), h.v());
  if (!is_valid_partition(p)) {
    throw std::invalid_argument("partition_from_lts: v is inconsistent with the kernel cores");
  }
  return p;
}

ValidationReport validate_lts(const LowerTransformationSystem& h, const QuantifierConfig& config) {
  ValidationReport report("transformation system");
  const Lattice& lat = *h.lattice();
  const std::size_t nx = h.space().size(), ny = h.target().size();

  {
    std::vector<bool> hit(ny, false);
    for (std::size_t value : h.v()) hit[value] = true;
    bool ok = true;
    std::string witness;
    for (std::size_t y = 0; y < ny && ok; ++y) {
      if (!hit[y]) {
        ok = false;
        witness = "v not surjective: nothing maps to " + h.target().label(y);
      }
    }
    report.record("v surjective", ok, witness);
  }
  {
    // Axiom (iii), both directions, evaluated extensionally through H.
    bool ok = true;
    std::string witness;
    for (std::size_t x = 0; x < nx && ok; ++x) {
      FuzzySet image = apply_lts(h, coatom(h.space(), x, h.lattice()));
      for (std::size_t y = 0; y < ny && ok; ++y) {
        const bool attains_top = lat.neg(image.value(y)) == lat.top();
        const bool on_graph = h.v()[x] == y;
        if (attains_top != on_graph) {
          ok = false;
          witness = "(y=" + h.target().label(y) + ", x=" + h.space().label(x) + ")";
        }
      }
    }
    report.record("coatom graph axiom", ok, witness);
  }

  const FunctionSpace space = FunctionSpace::build(h.space(), h.lattice(), config);
  const bool exhaustive = space.exhaustive();
  {
    bool ok = apply_lts(h, constant_set(h.space(), lat.top(), h.lattice())) ==
              constant_set(h.target(), lat.top(), h.lattice());
    std::string witness = ok ? "" : "empty meet";
    for (std::size_t i = 0; i < space.size() && ok; ++i) {
      FuzzySet image_i = apply_lts(h, space.functions()[i]);
      for (std::size_t k = 0; k < space.size() && ok; ++k) {
        const FuzzySet& f = space.functions()[i];
        const FuzzySet& g = space.functions()[k];
        FuzzySet lhs = apply_lts(h, pointwise(BinOp::Meet, f, g));
        FuzzySet rhs = pointwise(BinOp::Meet, image_i, apply_lts(h, g));
        if (lhs != rhs) {
          ok = false;
          witness = "f index " + std::to_string(function_index(f)) + ", g index " +
                    std::to_string(function_index(g));
        }
      }
    }
    report.record("meet preservation", ok, witness, exhaustive);
  }
  {
    bool ok = true;
    std::string witness;
    for (const FuzzySet& f : space.functions()) {
      for (Elem a = 0; a < lat.size() && ok; ++a) {
        FuzzySet lhs = apply_lts(h, pointwise(BinOp::Hash, constant_set(h.space(), a, h.lattice()), f));
        FuzzySet rhs = pointwise(BinOp::Hash, constant_set(h.target(), a, h.lattice()), apply_lts(h, f));
        if (lhs != rhs) {
          ok = false;
          witness = "a=" + lat.label(a) + ", f index " + std::to_string(function_index(f));
        }
      }
      if (!ok) break;
    }
    report.record("hash homogeneity", ok, witness, exhaustive);
  }
  return report;
}

}  // namespace lfuzz
