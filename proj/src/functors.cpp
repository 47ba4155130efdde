#include "lfuzz/functors.hpp"

#include <stdexcept>

namespace lfuzz {

std::string_view to_string(FunctorId id) {
  switch (id) {
    case FunctorId::F1: return "F1";
    case FunctorId::F1Prime: return "F1'";
    case FunctorId::F2: return "F2";
    case FunctorId::F2Prime: return "F2'";
    case FunctorId::F3: return "F3";
    case FunctorId::F3Prime: return "F3'";
    case FunctorId::F4: return "F4";
    case FunctorId::F4Prime: return "F4'";
    case FunctorId::F5: return "F5";
    case FunctorId::F5Prime: return "F5'";
    case FunctorId::F6: return "F6";
    case FunctorId::F6Prime: return "F6'";
    case FunctorId::F7: return "F7";
    case FunctorId::F8: return "F8";
    case FunctorId::F9: return "F9";
    case FunctorId::F10: return "F10";
  }
  return "?";
}

FunctorSignature functor_signature(FunctorId id) {
  using Tag = CategoryTag;
  switch (id) {
    case FunctorId::F1: return {Tag::LSpaceFP, Tag::LSpaceFP, true, false};
    case FunctorId::F1Prime: return {Tag::LSpaceFP, Tag::LSpaceFP, false, true};
    case FunctorId::F2: return {Tag::LFtransDown, Tag::LFtransDown, true, false};
    case FunctorId::F2Prime: return {Tag::LFtransDown, Tag::LFtransDown, false, true};
    case FunctorId::F3: return {Tag::LSpaceFP, Tag::LFtransDown};
    case FunctorId::F3Prime: return {Tag::LFtransDown, Tag::LSpaceFP};
    case FunctorId::F4: return {Tag::LFPrTop, Tag::LFPrTop, true, false};
    case FunctorId::F4Prime: return {Tag::LFPrTop, Tag::LFPrTop, false, true};
    case FunctorId::F5: return {Tag::LFCInt, Tag::LFCInt, true, false};
    case FunctorId::F5Prime: return {Tag::LFCInt, Tag::LFCInt, false, true};
    case FunctorId::F6: return {Tag::LFPrTop, Tag::LFCInt};
    case FunctorId::F6Prime: return {Tag::LFCInt, Tag::LFPrTop};
    case FunctorId::F7: return {Tag::LSpaceFP, Tag::LFPrTop};
    case FunctorId::F8: return {Tag::LFtransDown, Tag::LFPrTop};
    case FunctorId::F9: return {Tag::LSpaceFP, Tag::LFCInt};
    case FunctorId::F10: return {Tag::LFtransDown, Tag::LFCInt};
  }
  throw std::invalid_argument("unknown functor id");
}

CategoryTag object_tag(const AnyObject& obj) {
  switch (obj.index()) {
    case 0: return CategoryTag::LSpaceFP;
    case 1: return CategoryTag::LFtransDown;
    case 2: return CategoryTag::LFPrTop;
    default: return CategoryTag::LFCInt;
  }
}

const FiniteSet& object_first_set(const AnyObject& obj) {
  return std::visit([](const auto& o) -> const FiniteSet& { return o.space(); }, obj);
}

const FiniteSet& object_second_set(const AnyObject& obj) {
  if (const auto* p = std::get_if<FuzzyPartition>(&obj)) return p->index_set();
  if (const auto* h = std::get_if<LowerTransformationSystem>(&obj)) return h->target();
  return object_first_set(obj);
}

const LatticePtr& object_lattice(const AnyObject& obj) {
  return std::visit([](const auto& o) -> const LatticePtr& { return o.lattice(); }, obj);
}

ValidationReport validate_object(const AnyObject& obj, const QuantifierConfig& config) {
  if (const auto* p = std::get_if<FuzzyPartition>(&obj)) return validate_partition(*p);
  if (const auto* h = std::get_if<LowerTransformationSystem>(&obj)) return validate_lts(*h, config);
  if (const auto* s = std::get_if<Pretopology>(&obj)) return validate_pretopology(*s);
  return validate_interior(std::get<CechInterior>(obj));
}

Morphism identity_morphism(const AnyObject& obj, bool crisp) {
  const CategoryTag tag = object_tag(obj);
  if (crisp) {
    return Morphism{identity_crisp_morphism(tag, object_first_set(obj), object_second_set(obj)),
                    obj, obj};
  }
  return Morphism{
      identity_pair(tag, object_first_set(obj), object_second_set(obj), object_lattice(obj)), obj,
      obj};
}

Morphism compose_morphisms(const Morphism& p, const Morphism& q) {
  if (!(p.target == q.source)) {
    throw std::invalid_argument("compose_morphisms: middle objects differ");
  }
  if (p.is_crisp() != q.is_crisp()) {
    throw std::invalid_argument("compose_morphisms: cannot mix crisp and relational morphisms");
  }
  if (p.is_crisp()) return Morphism{compose(p.crisp(), q.crisp()), p.source, q.target};
  return Morphism{compose(p.pair(), q.pair()), p.source, q.target};
}

ValidationReport validate_morphism(const Morphism& m, const QuantifierConfig& config) {
  const MorphismPair pair =
      m.is_crisp() ? crisp_to_pair(m.crisp(), object_lattice(m.source)) : m.pair();
  switch (pair.tag) {
    case CategoryTag::LSpaceFP:
      return check_fpmap(std::get<FuzzyPartition>(m.source), std::get<FuzzyPartition>(m.target),
                         pair);
    case CategoryTag::LFtransDown:
      return check_lts_morphism(std::get<LowerTransformationSystem>(m.source),
                                std::get<LowerTransformationSystem>(m.target), pair, config);
    case CategoryTag::LFPrTop:
      return check_pretop_morphism(std::get<Pretopology>(m.source),
                                   std::get<Pretopology>(m.target), pair, config);
    case CategoryTag::LFCInt:
      return check_interior_morphism(std::get<CechInterior>(m.source),
                                     std::get<CechInterior>(m.target), pair, config);
    case CategoryTag::Qua:
      throw std::invalid_argument("validate_morphism: Qua morphisms carry their own objects");
  }
  throw std::invalid_argument("validate_morphism: unknown tag");
}

namespace {

const FuzzyPartition& as_partition(const AnyObject& obj, const char* what) {
  if (const auto* p = std::get_if<FuzzyPartition>(&obj)) return *p;
  throw std::invalid_argument(std::string(what) + ": expected a partition object");
}

const LowerTransformationSystem& as_lts(const AnyObject& obj, const char* what) {
  if (const auto* h = std::get_if<LowerTransformationSystem>(&obj)) return *h;
  throw std::invalid_argument(std::string(what) + ": expected a transformation-system object");
}

const Pretopology& as_pretopology(const AnyObject& obj, const char* what) {
  if (const auto* s = std::get_if<Pretopology>(&obj)) return *s;
  throw std::invalid_argument(std::string(what) + ": expected a pretopology object");
}

const CechInterior& as_interior(const AnyObject& obj, const char* what) {
  if (const auto* i = std::get_if<CechInterior>(&obj)) return *i;
  throw std::invalid_argument(std::string(what) + ": expected an interior object");
}

MorphismPair retag(const MorphismPair& pair, CategoryTag tag) {
  return MorphismPair{tag, pair.forward, pair.backward};
}

// The point-level transfer of the backward component: rho'(x2, x1) =
// mu(xi2(x2), xi1(x1)).
FuzzyRelation transfer_backward(const FuzzyPartition& p1, const FuzzyPartition& p2,
                                const FuzzyRelation& mu) {
  const std::size_t n2 = p2.space().size(), n1 = p1.space().size();
  std::vector<Elem> entries(n2 * n1);
  for (std::size_t x2 = 0; x2 < n2; ++x2) {
    for (std::size_t x1 = 0; x1 < n1; ++x1) {
      entries[x2 * n1 + x1] = mu.at(p2.xi()[x2], p1.xi()[x1]);
    }
  }
  return FuzzyRelation(p2.space(), p1.space(), std::move(entries), mu.lattice());
}

}  // namespace

AnyObject apply_functor_object(FunctorId id, const AnyObject& obj, const QuantifierConfig& config) {
  switch (id) {
    case FunctorId::F1:
    case FunctorId::F1Prime: return as_partition(obj, "F1");
    case FunctorId::F2:
    case FunctorId::F2Prime: return as_lts(obj, "F2");
    case FunctorId::F3: return lts_from_partition(as_partition(obj, "F3"));
    case FunctorId::F3Prime: return partition_from_lts(as_lts(obj, "F3'"));
    case FunctorId::F4:
    case FunctorId::F4Prime: return as_pretopology(obj, "F4");
    case FunctorId::F5:
    case FunctorId::F5Prime: return as_interior(obj, "F5");
    case FunctorId::F6: return interior_from_pretopology(as_pretopology(obj, "F6"));
    case FunctorId::F6Prime: return pretopology_from_interior(as_interior(obj, "F6'"));
    case FunctorId::F7: return pretopology_from_partition(as_partition(obj, "F7"), config);
    case FunctorId::F8:
      return apply_functor_object(FunctorId::F7, apply_functor_object(FunctorId::F3Prime, obj),
                                  config);
    case FunctorId::F9: return interior_from_partition(as_partition(obj, "F9"), config);
    case FunctorId::F10:
      return apply_functor_object(FunctorId::F9, apply_functor_object(FunctorId::F3Prime, obj),
                                  config);
  }
  throw std::invalid_argument("unknown functor id");
}

Morphism apply_functor(FunctorId id, const Morphism& m, const QuantifierConfig& config) {
  const FunctorSignature sig = functor_signature(id);
  if (m.is_crisp() != sig.crisp_source) {
    throw std::invalid_argument(std::string(to_string(id)) +
                                ": morphism kind does not match the functor's source category");
  }
  AnyObject source = apply_functor_object(id, m.source, config);
  AnyObject target = apply_functor_object(id, m.target, config);

  switch (id) {
    case FunctorId::F1:
    case FunctorId::F2:
    case FunctorId::F4:
    case FunctorId::F5:
      return Morphism{crisp_to_pair(m.crisp(), object_lattice(m.source)), std::move(source),
                      std::move(target)};
    case FunctorId::F1Prime:
    case FunctorId::F2Prime:
    case FunctorId::F4Prime:
    case FunctorId::F5Prime:
      return Morphism{pair_to_crisp(m.pair()), std::move(source), std::move(target)};
    case FunctorId::F3:
      return Morphism{retag(m.pair(), CategoryTag::LFtransDown), std::move(source),
                      std::move(target)};
    case FunctorId::F3Prime:
      return Morphism{retag(m.pair(), CategoryTag::LSpaceFP), std::move(source), std::move(target)};
    case FunctorId::F6:
      return Morphism{retag(m.pair(), CategoryTag::LFCInt), std::move(source), std::move(target)};
    case FunctorId::F6Prime:
      return Morphism{retag(m.pair(), CategoryTag::LFPrTop), std::move(source), std::move(target)};
    case FunctorId::F7:
    case FunctorId::F9: {
      const FuzzyPartition& p1 = as_partition(m.source, "morphism transfer");
      const FuzzyPartition& p2 = as_partition(m.target, "morphism transfer");
      const CategoryTag tag =
          id == FunctorId::F7 ? CategoryTag::LFPrTop : CategoryTag::LFCInt;
      MorphismPair pair{tag, m.pair().forward, transfer_backward(p1, p2, m.pair().backward)};
      return Morphism{std::move(pair), std::move(source), std::move(target)};
    }
    case FunctorId::F8:
      return apply_functor(FunctorId::F7, apply_functor(FunctorId::F3Prime, m, config), config);
    case FunctorId::F10:
      return apply_functor(FunctorId::F9, apply_functor(FunctorId::F3Prime, m, config), config);
  }
  throw std::invalid_argument("unknown functor id");
}

ValidationReport check_functor_laws(FunctorId id, std::span<const Morphism> sample,
                                    const QuantifierConfig& config) {
  const FunctorSignature sig = functor_signature(id);
  ValidationReport report(std::string(to_string(id)) + " functor laws");
  {
    bool ok = true;
    std::string witness;
    std::size_t index = 0;
    for (const Morphism& m : sample) {
      for (const AnyObject* obj : {&m.source, &m.target}) {
        const Morphism lhs =
            apply_functor(id, identity_morphism(*obj, sig.crisp_source), config);
        const Morphism rhs =
            identity_morphism(apply_functor_object(id, *obj, config), sig.crisp_target);
        if (!(lhs == rhs)) {
          ok = false;
          witness = "identity of sample object " + std::to_string(index);
          break;
        }
      }
      if (!ok) break;
      ++index;
    }
    report.record("preserves identities", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < sample.size() && ok; ++i) {
      for (std::size_t k = 0; k < sample.size() && ok; ++k) {
        if (!(sample[i].target == sample[k].source)) continue;
        const Morphism composite = compose_morphisms(sample[i], sample[k]);
        const Morphism lhs = apply_functor(id, composite, config);
        const Morphism rhs = compose_morphisms(apply_functor(id, sample[i], config),
                                               apply_functor(id, sample[k], config));
        if (!(lhs == rhs)) {
          ok = false;
          witness = "samples " + std::to_string(i) + " then " + std::to_string(k);
        }
      }
    }
    report.record("preserves composition", ok, witness);
  }
  return report;
}

ValidationReport check_isomorphism(FunctorId a, FunctorId b,
                                   std::span<const Morphism> forward_samples,
                                   std::span<const Morphism> backward_samples,
                                   const QuantifierConfig& config) {
  ValidationReport report(std::string(to_string(a)) + "/" + std::string(to_string(b)) +
                          " isomorphism");
  auto round_trip = [&](FunctorId first, FunctorId second, std::span<const Morphism> samples,
                        const char* label) {
    bool ok = true;
    std::string witness;
    std::size_t index = 0;
    for (const Morphism& m : samples) {
      const AnyObject obj_rt =
          apply_functor_object(second, apply_functor_object(first, m.source, config), config);
      if (!(obj_rt == m.source)) {
        ok = false;
        witness = "object of sample " + std::to_string(index);
        break;
      }
      const Morphism m_rt = apply_functor(second, apply_functor(first, m, config), config);
      if (!(m_rt == m)) {
        ok = false;
        witness = "morphism of sample " + std::to_string(index);
        break;
      }
      ++index;
    }
    report.record(label, ok, witness);
  };
  round_trip(a, b, forward_samples, "B(A(-)) is the identity");
  round_trip(b, a, backward_samples, "A(B(-)) is the identity");
  return report;
}

ValidationReport check_diagram_fig2(std::span<const Morphism> lspacefp_samples,
                                    std::span<const Morphism> lftrans_samples,
                                    const QuantifierConfig& config) {
  ValidationReport report("commuting diagram");
  auto square = [&](FunctorId outer, FunctorId inner, FunctorId right_outer, FunctorId right_inner,
                    std::span<const Morphism> samples, const char* label) {
    bool ok = true;
    std::string witness;
    std::size_t index = 0;
    for (const Morphism& m : samples) {
      const AnyObject left =
          apply_functor_object(outer, apply_functor_object(inner, m.source, config), config);
      const AnyObject right = apply_functor_object(
          right_outer, apply_functor_object(right_inner, m.source, config), config);
      if (!(left == right)) {
        ok = false;
        witness = "object of sample " + std::to_string(index);
        break;
      }
      const Morphism left_m = apply_functor(outer, apply_functor(inner, m, config), config);
      const Morphism right_m =
          apply_functor(right_outer, apply_functor(right_inner, m, config), config);
      if (!(left_m == right_m)) {
        ok = false;
        witness = "morphism of sample " + std::to_string(index);
        break;
      }
      ++index;
    }
    report.record(label, ok, witness);
  };
  square(FunctorId::F10, FunctorId::F3, FunctorId::F6, FunctorId::F7, lspacefp_samples,
         "F10.F3 = F6.F7");
  square(FunctorId::F6, FunctorId::F8, FunctorId::F9, FunctorId::F3Prime, lftrans_samples,
         "F6.F8 = F9.F3'");
  return report;
}

ValidationReport check_adjunction(AdjunctionKind kind, std::span<const AdjunctionSample> samples,
                                  std::span<const Morphism> naturality_morphisms,
                                  const QuantifierConfig& config) {
  const bool f3 = kind == AdjunctionKind::F3;
  const FunctorId left = f3 ? FunctorId::F3 : FunctorId::F6;
  const FunctorId right = f3 ? FunctorId::F3Prime : FunctorId::F6Prime;
  ValidationReport report(f3 ? "adjunction F3 -| F3'" : "adjunction F6 -| F6'");

  auto unit_for = [&](const AnyObject& obj) {
    return identity_pair(object_tag(obj), object_first_set(obj), object_second_set(obj),
                         object_lattice(obj));
  };

  {
    // Unit components are morphisms obj -> F'(F(obj)) of the left category.
    bool ok = true;
    std::string witness;
    std::size_t index = 0;
    for (const AdjunctionSample& s : samples) {
      const AnyObject round = apply_functor_object(right, apply_functor_object(left, s.c_object, config), config);
      if (!(round == s.c_object)) {
        ok = false;
        witness = "F'(F(-)) differs from identity on sample " + std::to_string(index);
        break;
      }
      const Morphism unit_m{unit_for(s.c_object), s.c_object, round};
      if (!validate_morphism(unit_m, config).passed()) {
        ok = false;
        witness = "unit is not a morphism on sample " + std::to_string(index);
        break;
      }
      ++index;
    }
    report.record("unit is a morphism", ok, witness);
  }
  {
    // Naturality: unit_src then F'F(m) equals m then unit_dst.
    bool ok = true;
    std::string witness;
    std::size_t index = 0;
    for (const Morphism& m : naturality_morphisms) {
      const Morphism mapped = apply_functor(right, apply_functor(left, m, config), config);
      const MorphismPair lhs = compose(unit_for(m.source), mapped.pair());
      const MorphismPair rhs = compose(m.pair(), unit_for(m.target));
      if (!(lhs == rhs)) {
        ok = false;
        witness = "naturality square of sample " + std::to_string(index);
        break;
      }
      ++index;
    }
    report.record("unit naturality", ok, witness);
  }
  {
    // Triangle: with (psi, nu) = (phi, mu), F'(psi, nu) . unit = (phi, mu);
    // the transposed arrow must be a morphism of the right category.
    bool ok = true;
    std::string witness;
    std::size_t index = 0;
    for (const AdjunctionSample& s : samples) {
      const CategoryTag right_tag = f3 ? CategoryTag::LFtransDown : CategoryTag::LFCInt;
      const Morphism transposed{retag(s.into_gd, right_tag),
                                apply_functor_object(left, s.c_object, config), s.d_object};
      if (!validate_morphism(transposed, config).passed()) {
        ok = false;
        witness = "transposed arrow fails the right category's condition on sample " +
                  std::to_string(index);
        break;
      }
      const MorphismPair composite = compose(unit_for(s.c_object), s.into_gd);
      if (!(composite == s.into_gd)) {
        ok = false;
        witness = "triangle fails on sample " + std::to_string(index);
        break;
      }
      ++index;
    }
    report.record("triangle identity", ok, witness);
  }
  {
    // Uniqueness through the identity law: composing with the unit is the
    // identity operation, so equal composites force equal candidates.
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < samples.size() && ok; ++i) {
      for (std::size_t k = 0; k < samples.size() && ok; ++k) {
        if (!(samples[i].c_object == samples[k].c_object) ||
            !(samples[i].d_object == samples[k].d_object)) {
          continue;
        }
        const MorphismPair ci = compose(unit_for(samples[i].c_object), samples[i].into_gd);
        const MorphismPair ck = compose(unit_for(samples[k].c_object), samples[k].into_gd);
        if (ci == ck && !(samples[i].into_gd == samples[k].into_gd)) {
          ok = false;
          witness = "samples " + std::to_string(i) + " and " + std::to_string(k);
        }
      }
    }
    report.record("uniqueness via identity law", ok, witness);
  }
  return report;
}

}  // namespace lfuzz
