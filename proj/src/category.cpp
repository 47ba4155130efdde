#include "lfuzz/category.hpp"

#include <stdexcept>

namespace lfuzz {

std::string_view to_string(CategoryTag tag) {
  switch (tag) {
    case CategoryTag::Qua: return "Qua";
    case CategoryTag::LSpaceFP: return "LSpaceFP";
    case CategoryTag::LFtransDown: return "LFtrans";
    case CategoryTag::LFPrTop: return "LFPrTop";
    case CategoryTag::LFCInt: return "LFCInt";
  }
  return "?";
}

CategoryTag category_tag_from_string(std::string_view name) {
  if (name == "Qua") return CategoryTag::Qua;
  if (name == "LSpaceFP") return CategoryTag::LSpaceFP;
  if (name == "LFtrans" || name == "LFtransDown") return CategoryTag::LFtransDown;
  if (name == "LFPrTop") return CategoryTag::LFPrTop;
  if (name == "LFCInt") return CategoryTag::LFCInt;
  throw std::invalid_argument("unknown category tag '" + std::string(name) + "'");
}

QuaObject::QuaObject(FiniteSet q, FiniteSet a, FuzzyRelation s)
    : questions(std::move(q)), answers(std::move(a)), success(std::move(s)) {
  if (success.source() != questions || success.target() != answers) {
    throw std::invalid_argument("Qua object success relation must have axes questions x answers");
  }
}

CrispMorphism make_crisp_morphism(CategoryTag tag, FiniteSet src_first, FiniteSet dst_first,
                                  FiniteSet src_second, FiniteSet dst_second,
                                  std::vector<std::size_t> forward_fn,
                                  std::vector<std::size_t> backward_fn) {
  if (forward_fn.size() != src_first.size() || backward_fn.size() != src_second.size()) {
    throw std::invalid_argument("crisp morphism functions must be total");
  }
  for (std::size_t v : forward_fn) {
    if (v >= dst_first.size()) throw std::invalid_argument("crisp forward function out of range");
  }
  for (std::size_t v : backward_fn) {
    if (v >= dst_second.size()) throw std::invalid_argument("crisp backward function out of range");
  }
  return CrispMorphism{tag,
                       std::move(src_first),
                       std::move(dst_first),
                       std::move(src_second),
                       std::move(dst_second),
                       std::move(forward_fn),
                       std::move(backward_fn)};
}

CrispMorphism make_crisp_morphism(CategoryTag tag, FiniteSet src, FiniteSet dst,
                                  std::vector<std::size_t> fn) {
  if (tag != CategoryTag::LFPrTop && tag != CategoryTag::LFCInt) {
    throw std::invalid_argument("single-function crisp morphisms exist only for LFPrTop/LFCInt");
  }
  auto backward = fn;
  return make_crisp_morphism(tag, src, dst, src, dst, std::move(fn), std::move(backward));
}

CrispMorphism identity_crisp_morphism(CategoryTag tag, const FiniteSet& first,
                                      const FiniteSet& second) {
  std::vector<std::size_t> id_first(first.size()), id_second(second.size());
  for (std::size_t i = 0; i < id_first.size(); ++i) id_first[i] = i;
  for (std::size_t i = 0; i < id_second.size(); ++i) id_second[i] = i;
  return make_crisp_morphism(tag, first, first, second, second, std::move(id_first),
                             std::move(id_second));
}

MorphismPair compose(const MorphismPair& p, const MorphismPair& q) {
  if (p.tag != q.tag) throw std::invalid_argument("compose: category tags differ");
  if (p.forward.target() != q.forward.source() || q.backward.target() != p.backward.source()) {
    throw std::invalid_argument("compose: middle object axes do not match");
  }
  return MorphismPair{p.tag, compose_sup_star(p.forward, q.forward),
                      compose_inf_hash(q.backward, p.backward)};
}

CrispMorphism compose(const CrispMorphism& p, const CrispMorphism& q) {
  if (p.tag != q.tag) throw std::invalid_argument("compose: category tags differ");
  if (p.dst_first != q.src_first || p.dst_second != q.src_second) {
    throw std::invalid_argument("compose: middle object sets do not match");
  }
  std::vector<std::size_t> forward(p.forward_fn.size()), backward(p.backward_fn.size());
  for (std::size_t i = 0; i < forward.size(); ++i) forward[i] = q.forward_fn[p.forward_fn[i]];
  for (std::size_t i = 0; i < backward.size(); ++i) backward[i] = q.backward_fn[p.backward_fn[i]];
  return CrispMorphism{p.tag,          p.src_first,        q.dst_first,        p.src_second,
                       q.dst_second,   std::move(forward), std::move(backward)};
}

MorphismPair identity_pair(CategoryTag tag, const FiniteSet& first, const FiniteSet& second,
                           const LatticePtr& lattice) {
  auto [fwd, bwd] = make_identity_pair(first, second, lattice);
  return MorphismPair{tag, std::move(fwd), std::move(bwd)};
}

namespace {

void require_axes(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string(what) + ": morphism axes do not match objects");
}

}  // namespace

ValidationReport check_qua_morphism(const QuaObject& m, const QuaObject& m2,
                                    const MorphismPair& pair) {
  require_axes(pair.forward.source() == m.answers && pair.forward.target() == m2.answers &&
                   pair.backward.source() == m2.questions && pair.backward.target() == m.questions,
               "check_qua_morphism");
  ValidationReport report("Qua morphism");
  const Lattice& lat = *pair.forward.lattice();
  bool ok = true;
  std::string witness;
  for (std::size_t q1 = 0; q1 < m.questions.size() && ok; ++q1) {
    for (std::size_t a1 = 0; a1 < m.answers.size() && ok; ++a1) {
      for (std::size_t q2 = 0; q2 < m2.questions.size() && ok; ++q2) {
        for (std::size_t a2 = 0; a2 < m2.answers.size() && ok; ++a2) {
          const Elem lhs = lat.star(pair.forward.at(a1, a2), m.success.at(q1, a1));
          const Elem rhs = lat.hash(pair.backward.at(q2, q1), m2.success.at(q2, a2));
          if (!lat.leq(lhs, rhs)) {
            ok = false;
            witness = "(q=" + m.questions.label(q1) + ", a=" + m.answers.label(a1) +
                      ", q'=" + m2.questions.label(q2) + ", a'=" + m2.answers.label(a2) + ")";
          }
        }
      }
    }
  }
  report.record("cooperation below competition", ok, witness);
  return report;
}

ValidationReport check_fpmap(const FuzzyPartition& p1, const FuzzyPartition& p2,
                             const MorphismPair& pair) {
  require_axes(pair.forward.source() == p1.space() && pair.forward.target() == p2.space() &&
                   pair.backward.source() == p2.index_set() &&
                   pair.backward.target() == p1.index_set(),
               "check_fpmap");
  ValidationReport report("FP-map");
  const Lattice& lat = *pair.forward.lattice();
  bool ok = true;
  std::string witness;
  for (std::size_t x1 = 0; x1 < p1.space().size() && ok; ++x1) {
    for (std::size_t x2 = 0; x2 < p2.space().size() && ok; ++x2) {
      for (std::size_t j1 = 0; j1 < p1.index_set().size() && ok; ++j1) {
        for (std::size_t j2 = 0; j2 < p2.index_set().size() && ok; ++j2) {
          const Elem lhs = lat.star(pair.forward.at(x1, x2), p1.member(j1, x1));
          const Elem rhs = lat.hash(pair.backward.at(j2, j1), p2.member(j2, x2));
          if (!lat.leq(lhs, rhs)) {
            ok = false;
            witness = "(x1=" + p1.space().label(x1) + ", x2=" + p2.space().label(x2) +
                      ", j1=" + p1.index_set().label(j1) + ", j2=" + p2.index_set().label(j2) + ")";
          }
        }
      }
    }
  }
  report.record("FP-map inequality", ok, witness);
  return report;
}

ValidationReport check_lts_morphism(const LowerTransformationSystem& h1,
                                    const LowerTransformationSystem& h2, const MorphismPair& pair,
                                    const QuantifierConfig& config) {
  require_axes(pair.forward.source() == h1.space() && pair.forward.target() == h2.space() &&
                   pair.backward.source() == h2.target() && pair.backward.target() == h1.target(),
               "check_lts_morphism");
  ValidationReport report("transformation-system morphism");
  const Lattice& lat = *pair.forward.lattice();
  const FunctionSpace space = FunctionSpace::build(h2.space(), h2.lattice(), config);
  bool ok = true;
  std::string witness;
  for (const FuzzySet& f : space.functions()) {
    const FuzzySet rhs_inner = apply_lts(h1, backward_powerset(pair.forward, f));
    const FuzzySet h2f = apply_lts(h2, f);
    for (std::size_t y1 = 0; y1 < h1.target().size() && ok; ++y1) {
      for (std::size_t y2 = 0; y2 < h2.target().size() && ok; ++y2) {
        const Elem lhs = lat.star(lat.neg(pair.backward.at(y2, y1)), h2f.value(y2));
        if (!lat.leq(lhs, rhs_inner.value(y1))) {
          ok = false;
          witness = "(y1=" + h1.target().label(y1) + ", y2=" + h2.target().label(y2) +
                    ", f index " + std::to_string(function_index(f)) + ")";
        }
      }
    }
    if (!ok) break;
  }
  report.record("homomorphism inequality", ok, witness, space.exhaustive());
  return report;
}

namespace {

template <typename Op1, typename Op2>
ValidationReport check_continuity(const Op1& t1, const Op2& t2, const MorphismPair& pair,
                                  const QuantifierConfig& config, const char* subject) {
  require_axes(pair.forward.source() == t1.space() && pair.forward.target() == t2.space() &&
                   pair.backward.source() == t2.space() && pair.backward.target() == t1.space(),
               subject);
  ValidationReport report(subject);
  const Lattice& lat = *pair.forward.lattice();
  const FunctionSpace space = FunctionSpace::build(t2.space(), t2.lattice(), config);
  bool ok = true;
  std::string witness;
  for (const FuzzySet& f : space.functions()) {
    const FuzzySet pulled = t1.apply(backward_powerset(pair.forward, f));
    const FuzzySet image = t2.apply(f);
    for (std::size_t x1 = 0; x1 < t1.space().size() && ok; ++x1) {
      for (std::size_t x2 = 0; x2 < t2.space().size() && ok; ++x2) {
        const Elem lhs = lat.star(lat.neg(pair.backward.at(x2, x1)), image.value(x2));
        if (!lat.leq(lhs, pulled.value(x1))) {
          ok = false;
          witness = "(x1=" + t1.space().label(x1) + ", x2=" + t2.space().label(x2) + ", f index " +
                    std::to_string(function_index(f)) + ")";
        }
      }
    }
    if (!ok) break;
  }
  report.record("continuity inequality", ok, witness, space.exhaustive());
  return report;
}

}  // namespace

ValidationReport check_pretop_morphism(const Pretopology& s1, const Pretopology& s2,
                                       const MorphismPair& pair, const QuantifierConfig& config) {
  return check_continuity(s1, s2, pair, config, "pretopology morphism");
}

ValidationReport check_interior_morphism(const CechInterior& i1, const CechInterior& i2,
                                         const MorphismPair& pair, const QuantifierConfig& config) {
  return check_continuity(i1, i2, pair, config, "interior morphism");
}

QuaObject embed_qua_partition(const FuzzyPartition& p) {
  return QuaObject(p.index_set(), p.space(), p.membership());
}

QuaObject embed_qua_pretopology(const Pretopology& s) {
  return QuaObject(s.space(), s.space(), qua_relation_from_pretopology(s));
}

MorphismPair crisp_to_pair(const CrispMorphism& c, const LatticePtr& lattice) {
  if (!lattice) throw std::invalid_argument("crisp_to_pair requires a lattice");
  const std::size_t rows = c.src_first.size(), cols = c.dst_first.size();
  std::vector<Elem> forward(rows * cols, lattice->bottom());
  for (std::size_t i = 0; i < rows; ++i) forward[i * cols + c.forward_fn[i]] = lattice->top();

  const std::size_t brows = c.dst_second.size(), bcols = c.src_second.size();
  std::vector<Elem> backward(brows * bcols, lattice->top());
  for (std::size_t j = 0; j < bcols; ++j) backward[c.backward_fn[j] * bcols + j] = lattice->bottom();

  return MorphismPair{c.tag, FuzzyRelation(c.src_first, c.dst_first, std::move(forward), lattice),
                      FuzzyRelation(c.dst_second, c.src_second, std::move(backward), lattice)};
}

CrispMorphism pair_to_crisp(const MorphismPair& pair) {
  const Lattice& lat = *pair.forward.lattice();
  const std::size_t rows = pair.forward.source().size(), cols = pair.forward.target().size();
  std::vector<std::size_t> forward_fn(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::size_t ones = 0, where = 0;
    for (std::size_t k = 0; k < cols; ++k) {
      const Elem v = pair.forward.at(i, k);
      if (v == lat.top()) {
        ++ones;
        where = k;
      } else if (v != lat.bottom()) {
        throw CrispnessError("forward row " + pair.forward.source().label(i) +
                             " contains the non-crisp value " + lat.label(v));
      }
    }
    if (ones != 1) {
      throw CrispnessError("forward row " + pair.forward.source().label(i) + " has " +
                           std::to_string(ones) + " top entries, expected exactly 1");
    }
    forward_fn[i] = where;
  }

  const std::size_t brows = pair.backward.source().size(), bcols = pair.backward.target().size();
  std::vector<std::size_t> backward_fn;
  if (pair.tag == CategoryTag::LFPrTop || pair.tag == CategoryTag::LFCInt) {
    for (std::size_t i = 0; i < brows; ++i) {
      for (std::size_t k = 0; k < bcols; ++k) {
        const Elem v = pair.backward.at(i, k);
        if (v != lat.top() && v != lat.bottom()) {
          throw CrispnessError("backward entry (" + pair.backward.source().label(i) + ", " +
                               pair.backward.target().label(k) + ") is the non-crisp value " +
                               lat.label(v));
        }
      }
    }
    backward_fn = forward_fn;
  } else {
    backward_fn.resize(bcols);
    for (std::size_t k = 0; k < bcols; ++k) {
      std::size_t zeros = 0, where = 0;
      for (std::size_t i = 0; i < brows; ++i) {
        const Elem v = pair.backward.at(i, k);
        if (v == lat.bottom()) {
          ++zeros;
          where = i;
        } else if (v != lat.top()) {
          throw CrispnessError("backward column " + pair.backward.target().label(k) +
                               " contains the non-crisp value " + lat.label(v));
        }
      }
      if (zeros != 1) {
        throw CrispnessError("backward column " + pair.backward.target().label(k) + " has " +
                             std::to_string(zeros) + " bottom entries, expected exactly 1");
      }
      backward_fn[k] = where;
    }
  }

  return CrispMorphism{pair.tag,
                       pair.forward.source(),
                       pair.forward.target(),
                       pair.backward.target(),
                       pair.backward.source(),
                       std::move(forward_fn),
                       std::move(backward_fn)};
}

}  // namespace lfuzz
