#pragma once

#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "lfuzz/category.hpp"

namespace lfuzz {

/// The functors between the four structure categories and their
/// function-based sister categories. Unprimed/primed pairs are mutually
/// inverse on their isomorphism domains:
///   F1/F1': SpaceFP <-> SLSpaceFP        (crisp <-> relational FP-maps)
///   F2/F2': Ftrans <-> SLFtrans          (crisp <-> relational homomorphisms)
///   F3/F3': LSpaceFP <-> LFtrans         (partition <-> transformation system)
///   F4/F4': FPrTop <-> SLFPrTop          (crisp <-> relational continuity)
///   F5/F5': CInt <-> SLFCInt             (crisp <-> relational continuity)
///   F6/F6': LFPrTop <-> LFCInt           (pretopology <-> interior)
///   F7/F9:  LSpaceFP -> LFPrTop / LFCInt (partition-induced operators)
///   F8/F10: LFtrans -> LFPrTop / LFCInt  (composites through F3')
enum class FunctorId {
  F1, F1Prime, F2, F2Prime, F3, F3Prime, F4, F4Prime, F5, F5Prime, F6, F6Prime, F7, F8, F9, F10
};

std::string_view to_string(FunctorId id);

struct FunctorSignature {
  CategoryTag source;
  CategoryTag target;
  bool crisp_source = false;  // source morphisms are CrispMorphism
  bool crisp_target = false;  // target morphisms are CrispMorphism
};

FunctorSignature functor_signature(FunctorId id);

/// Objects of the four structure categories (crisp sister categories share
/// them). Equality is exact data equality.
using AnyObject =
    std::variant<FuzzyPartition, LowerTransformationSystem, Pretopology, CechInterior>;

CategoryTag object_tag(const AnyObject& obj);
const FiniteSet& object_first_set(const AnyObject& obj);
const FiniteSet& object_second_set(const AnyObject& obj);
const LatticePtr& object_lattice(const AnyObject& obj);
/// Dispatches to the object kind's validator.
ValidationReport validate_object(const AnyObject& obj, const QuantifierConfig& config = {});

/// A morphism together with its endpoint objects, so functor application and
/// law checking are self-contained. The arrow is a relation pair in the
/// L-categories and a plain function pair in the crisp ones.
struct Morphism {
  std::variant<MorphismPair, CrispMorphism> arrow;
  AnyObject source;
  AnyObject target;

  bool is_crisp() const { return std::holds_alternative<CrispMorphism>(arrow); }
  const MorphismPair& pair() const { return std::get<MorphismPair>(arrow); }
  const CrispMorphism& crisp() const { return std::get<CrispMorphism>(arrow); }

  bool operator==(const Morphism& other) const = default;
};

Morphism identity_morphism(const AnyObject& obj, bool crisp = false);
Morphism compose_morphisms(const Morphism& p, const Morphism& q);
/// Runs the target category's morphism-condition validator (crisp arrows are
/// checked through their relation pair).
ValidationReport validate_morphism(const Morphism& m, const QuantifierConfig& config = {});

AnyObject apply_functor_object(FunctorId id, const AnyObject& obj,
                               const QuantifierConfig& config = {});
Morphism apply_functor(FunctorId id, const Morphism& m, const QuantifierConfig& config = {});

/// F(id) = id on every sampled object and F(q . p) = F(q) . F(p) on every
/// composable sampled pair, as data equality.
ValidationReport check_functor_laws(FunctorId id, std::span<const Morphism> sample,
                                    const QuantifierConfig& config = {});

/// B(A(-)) and A(B(-)) are identities on the sampled objects and morphisms.
/// `forward_samples` live in A's source category, `backward_samples` in B's.
ValidationReport check_isomorphism(FunctorId a, FunctorId b,
                                   std::span<const Morphism> forward_samples,
                                   std::span<const Morphism> backward_samples,
                                   const QuantifierConfig& config = {});

/// The two commuting-square equalities F10 . F3 = F6 . F7 (on LSpaceFP data)
/// and F6 . F8 = F9 . F3' (on LFtrans data).
ValidationReport check_diagram_fig2(std::span<const Morphism> lspacefp_samples,
                                    std::span<const Morphism> lftrans_samples,
                                    const QuantifierConfig& config = {});

/// Which adjoint pair to exercise: F3 -| F3' with unit (1_X, 0_J), or
/// F6 -| F6' with unit (1_X, 0_X).
enum class AdjunctionKind { F3, F6 };

/// One triangle instance: an object of the left category, an object of the
/// right category, and a morphism c_object -> F'(d_object).
struct AdjunctionSample {
  AnyObject c_object;
  AnyObject d_object;
  MorphismPair into_gd;

  bool operator==(const AdjunctionSample& other) const = default;
};

/// Verifies (a) the unit is a morphism and its naturality squares commute on
/// the sampled morphisms, (b) the triangle F'(psi, nu) . unit = (phi, mu)
/// with (psi, nu) = (phi, mu) on every sample, the transposed arrow being a
/// valid morphism of the right category, and (c) uniqueness through the
/// identity law: composing any candidate with the unit is the identity
/// operation, so candidates with equal composites are equal.
ValidationReport check_adjunction(AdjunctionKind kind, std::span<const AdjunctionSample> samples,
                                  std::span<const Morphism> naturality_morphisms,
                                  const QuantifierConfig& config = {});

}  // namespace lfuzz
