#include "lfuzz/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

namespace lfuzz {

namespace {

constexpr std::size_t kContravariancePairs = 100;
constexpr std::size_t kFtransformPartitions = 20;
constexpr std::size_t kMinComposablePairs = 50;

// ---------------------------------------------------------------------------
// Fixture builders. Everything is deterministic in (config.seed, lattice,
// max_x); the partition chain p1 -> p2 -> p3 carries the morphism pools.

std::size_t varied_block_count(Rng& rng, std::size_t nx, std::size_t i) {
  if (i % 3 == 0) return 1;        // one-block partition
  if (i % 3 == 1) return nx;       // singleton cores
  return 1 + pick_index(rng, nx);  // anything in between
}

std::vector<FuzzyPartition> varied_partitions(Rng& rng, const SuiteConfig& cfg,
                                              std::size_t count, const std::string& stem) {
  std::vector<FuzzyPartition> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t nx = 1 + (i + cfg.max_x - 1) % cfg.max_x;
    out.push_back(random_partition(rng, cfg.lattice, nx, varied_block_count(rng, nx, i),
                                   stem + std::to_string(i + 1)));
  }
  return out;
}

struct PartitionChain {
  FuzzyPartition p1, p2, p3;
};

PartitionChain fixture_chain(Rng& rng, const SuiteConfig& cfg) {
  const std::size_t nx = cfg.max_x;
  return PartitionChain{
      random_partition(rng, cfg.lattice, nx, std::max<std::size_t>(1, nx - 1), "a"),
      random_partition(rng, cfg.lattice, nx, nx, "b"),
      random_partition(rng, cfg.lattice, nx, 1, "c"),
  };
}

/// Chain of singleton-core partitions (xi injective). The point-level
/// transfer functors F7..F10 preserve identities only on such objects: a
/// block with two points sends the dual identity 0_J to the block
/// co-equivalence rather than 0_X. Composition preservation needs no such
/// restriction since xi is onto.
PartitionChain fixture_chain_injective(Rng& rng, const SuiteConfig& cfg) {
  const std::size_t nx = cfg.max_x;
  return PartitionChain{
      random_partition(rng, cfg.lattice, nx, nx, "ia"),
      random_partition(rng, cfg.lattice, nx, nx, "ib"),
      random_partition(rng, cfg.lattice, nx, nx, "ic"),
  };
}

/// The all-top one-block partition: every crisp pair into it is a morphism.
FuzzyPartition one_block_partition(const LatticePtr& lattice, std::size_t nx,
                                   const std::string& suffix) {
  FiniteSet x = enumerated_set("X" + suffix, "x", nx);
  FiniteSet j = enumerated_set("J" + suffix, "j", 1);
  std::vector<Elem> membership(nx, lattice->top());
  return FuzzyPartition(x, j, FuzzyRelation(j, x, std::move(membership), lattice),
                        std::vector<std::size_t>(nx, 0));
}

std::vector<MorphismPair> fpmap_pool(Rng& rng, const FuzzyPartition& a, const FuzzyPartition& b,
                                     const QuantifierConfig& quant, std::size_t random_count) {
  std::vector<MorphismPair> pool;
  for (std::size_t i = 0; i < random_count; ++i) pool.push_back(random_fpmap(rng, a, b));
  pool.push_back(random_fpmap(rng, a, b, /*bump=*/false));
  if (auto c = random_crisp_morphism(rng, AnyObject(a), AnyObject(b), quant)) {
    pool.push_back(crisp_to_pair(*c, a.lattice()));
  }
  if (auto r = rejection_sample_fpmap(rng, a, b, 40)) pool.push_back(*r);
  return pool;
}

std::vector<Morphism> fp_morphism_samples(Rng& rng, const SuiteConfig& cfg,
                                          const PartitionChain& chain, std::size_t per_edge) {
  std::vector<Morphism> out;
  auto edge = [&](const FuzzyPartition& a, const FuzzyPartition& b) {
    for (const MorphismPair& pair : fpmap_pool(rng, a, b, cfg.quant, per_edge)) {
      out.push_back(Morphism{pair, a, b});
    }
  };
  out.push_back(identity_morphism(AnyObject(chain.p1)));
  edge(chain.p1, chain.p2);
  edge(chain.p2, chain.p3);
  out.push_back(identity_morphism(AnyObject(chain.p3)));
  return out;
}

using PairValidator = std::function<ValidationReport(const MorphismPair&)>;

/// Criterion body shared by the five composition-closure suites: every
/// composable pair of validator-passing morphisms composes to a
/// validator-passing morphism.
void run_closure(ValidationReport& report, const std::vector<MorphismPair>& into_mid,
                 const std::vector<MorphismPair>& from_mid, const MorphismPair& id_left,
                 const MorphismPair& id_mid, const PairValidator& validate_left_edge,
                 const PairValidator& validate_right_edge, const PairValidator& validate_whole) {
  std::size_t pairs = 0;
  bool inputs_ok = true, closed = true;
  std::string witness;
  for (const MorphismPair& p : into_mid) {
    if (!validate_left_edge(p).passed()) {
      inputs_ok = false;
      witness = "generated left morphism fails its validator";
      break;
    }
  }
  for (const MorphismPair& q : from_mid) {
    if (inputs_ok && !validate_right_edge(q).passed()) {
      inputs_ok = false;
      witness = "generated right morphism fails its validator";
      break;
    }
  }
  report.record("fixture morphisms valid", inputs_ok, witness);
  witness.clear();
  if (inputs_ok) {
    for (std::size_t i = 0; i < into_mid.size() && closed; ++i) {
      for (std::size_t k = 0; k < from_mid.size() && closed; ++k) {
        const MorphismPair composite = compose(into_mid[i], from_mid[k]);
        ++pairs;
        if (!validate_whole(composite).passed()) {
          closed = false;
          witness = "composite of morphisms " + std::to_string(i) + " and " + std::to_string(k);
        }
      }
    }
    // Identity pairs participate as well.
    for (std::size_t i = 0; i < into_mid.size() && closed; ++i) {
      const MorphismPair left = compose(id_left, into_mid[i]);
      const MorphismPair right = compose(into_mid[i], id_mid);
      pairs += 2;
      if (!validate_left_edge(left).passed() || !validate_left_edge(right).passed()) {
        closed = false;
        witness = "identity composite of morphism " + std::to_string(i);
      }
    }
  }
  report.record("composites pass the validator", inputs_ok && closed, witness);
  report.record("at least " + std::to_string(kMinComposablePairs) + " composable pairs",
                pairs >= kMinComposablePairs,
                pairs >= kMinComposablePairs ? "" : "only " + std::to_string(pairs));
}

// ---------------------------------------------------------------------------
// Suite bodies.

ValidationReport suite_lattice_laws(const SuiteConfig& cfg) {
  ValidationReport report("lattice laws");
  report.absorb(validate_lattice(*cfg.lattice));
  return report;
}

ValidationReport suite_contravariance(const SuiteConfig& cfg) {
  ValidationReport report("backward powerset contravariance");
  Rng rng(cfg.seed);
  bool ok = true;
  std::string witness;
  for (std::size_t i = 0; i < kContravariancePairs && ok; ++i) {
    const std::size_t n1 = 1 + pick_index(rng, cfg.max_x);
    const std::size_t n2 = 1 + pick_index(rng, cfg.max_x);
    const std::size_t n3 = 1 + pick_index(rng, cfg.max_x);
    const FiniteSet x1 = enumerated_set("X1", "u", n1);
    const FiniteSet x2 = enumerated_set("X2", "v", n2);
    const FiniteSet x3 = enumerated_set("X3", "w", n3);
    const FuzzyRelation psi = random_relation(rng, x1, x2, cfg.lattice);
    const FuzzyRelation psi2 = random_relation(rng, x2, x3, cfg.lattice);
    const FuzzyRelation product = compose_sup_star(psi, psi2);
    const FunctionSpace space = FunctionSpace::build(x3, cfg.lattice, cfg.quant);
    for (const FuzzySet& g : space.functions()) {
      if (backward_powerset(product, g) != backward_powerset(psi, backward_powerset(psi2, g))) {
        ok = false;
        witness = "pair " + std::to_string(i) + ", g index " + std::to_string(function_index(g));
        break;
      }
    }
  }
  report.record("composed relation pulls back as composed operators", ok, witness);
  return report;
}

ValidationReport suite_ftransform(const SuiteConfig& cfg) {
  ValidationReport report("lower F-transform properties");
  Rng rng(cfg.seed);
  for (std::size_t i = 0; i < kFtransformPartitions; ++i) {
    const std::size_t nx = cfg.max_x;
    FuzzyPartition p = random_partition(rng, cfg.lattice, nx, varied_block_count(rng, nx, i),
                                        "f" + std::to_string(i + 1));
    ValidationReport sub = check_ftransform_properties(p, cfg.quant);
    ValidationReport named("partition " + std::to_string(i + 1));
    named.absorb(sub);
    report.absorb(named);
  }
  return report;
}

ValidationReport suite_category_lspacefp(const SuiteConfig& cfg) {
  ValidationReport report("LSpaceFP composition closure");
  Rng rng(cfg.seed);
  const PartitionChain chain = fixture_chain(rng, cfg);
  const auto pool12 = fpmap_pool(rng, chain.p1, chain.p2, cfg.quant, 6);
  const auto pool23 = fpmap_pool(rng, chain.p2, chain.p3, cfg.quant, 6);
  run_closure(
      report, pool12, pool23,
      identity_pair(CategoryTag::LSpaceFP, chain.p1.space(), chain.p1.index_set(), cfg.lattice),
      identity_pair(CategoryTag::LSpaceFP, chain.p2.space(), chain.p2.index_set(), cfg.lattice),
      [&](const MorphismPair& m) { return check_fpmap(chain.p1, chain.p2, m); },
      [&](const MorphismPair& m) { return check_fpmap(chain.p2, chain.p3, m); },
      [&](const MorphismPair& m) { return check_fpmap(chain.p1, chain.p3, m); });
  return report;
}

ValidationReport suite_category_lftrans(const SuiteConfig& cfg) {
  ValidationReport report("LFtrans composition closure");
  Rng rng(cfg.seed);
  const PartitionChain chain = fixture_chain(rng, cfg);
  const auto h1 = lts_from_partition(chain.p1);
  const auto h2 = lts_from_partition(chain.p2);
  const auto h3 = lts_from_partition(chain.p3);
  std::vector<MorphismPair> pool12, pool23;
  for (std::size_t i = 0; i < 7; ++i) {
    pool12.push_back(random_lts_morphism(rng, h1, h2, cfg.quant, i != 0));
    pool23.push_back(random_lts_morphism(rng, h2, h3, cfg.quant, i != 0));
  }
  run_closure(
      report, pool12, pool23,
      identity_pair(CategoryTag::LFtransDown, h1.space(), h1.target(), cfg.lattice),
      identity_pair(CategoryTag::LFtransDown, h2.space(), h2.target(), cfg.lattice),
      [&](const MorphismPair& m) { return check_lts_morphism(h1, h2, m, cfg.quant); },
      [&](const MorphismPair& m) { return check_lts_morphism(h2, h3, m, cfg.quant); },
      [&](const MorphismPair& m) { return check_lts_morphism(h1, h3, m, cfg.quant); });
  return report;
}

ValidationReport suite_category_lfprtop(const SuiteConfig& cfg) {
  ValidationReport report("LFPrTop composition closure");
  Rng rng(cfg.seed);
  const PartitionChain chain = fixture_chain(rng, cfg);
  const Pretopology s1 = pretopology_from_partition(chain.p1, cfg.quant);
  const Pretopology s2 = pretopology_from_partition(chain.p2, cfg.quant);
  const Pretopology s3 = pretopology_from_interior(
      indiscrete_interior(enumerated_set("Xi", "x", cfg.max_x), cfg.lattice, cfg.quant));
  std::vector<MorphismPair> pool12, pool23;
  for (std::size_t i = 0; i < 7; ++i) {
    pool12.push_back(random_pretop_morphism(rng, s1, s2, cfg.quant, i != 0));
    pool23.push_back(random_pretop_morphism(rng, s2, s3, cfg.quant, i != 0));
  }
  run_closure(
      report, pool12, pool23,
      identity_pair(CategoryTag::LFPrTop, s1.space(), s1.space(), cfg.lattice),
      identity_pair(CategoryTag::LFPrTop, s2.space(), s2.space(), cfg.lattice),
      [&](const MorphismPair& m) { return check_pretop_morphism(s1, s2, m, cfg.quant); },
      [&](const MorphismPair& m) { return check_pretop_morphism(s2, s3, m, cfg.quant); },
      [&](const MorphismPair& m) { return check_pretop_morphism(s1, s3, m, cfg.quant); });
  return report;
}

ValidationReport suite_category_lfcint(const SuiteConfig& cfg) {
  ValidationReport report("LFCInt composition closure");
  Rng rng(cfg.seed);
  const PartitionChain chain = fixture_chain(rng, cfg);
  const CechInterior i1 = interior_from_partition(chain.p1, cfg.quant);
  const CechInterior i2 =
      identity_interior(enumerated_set("Xe", "x", cfg.max_x), cfg.lattice, cfg.quant);
  const CechInterior i3 = interior_from_partition(chain.p3, cfg.quant);
  std::vector<MorphismPair> pool12, pool23;
  for (std::size_t i = 0; i < 7; ++i) {
    pool12.push_back(random_interior_morphism(rng, i1, i2, cfg.quant, i != 0));
    pool23.push_back(random_interior_morphism(rng, i2, i3, cfg.quant, i != 0));
  }
  run_closure(
      report, pool12, pool23,
      identity_pair(CategoryTag::LFCInt, i1.space(), i1.space(), cfg.lattice),
      identity_pair(CategoryTag::LFCInt, i2.space(), i2.space(), cfg.lattice),
      [&](const MorphismPair& m) { return check_interior_morphism(i1, i2, m, cfg.quant); },
      [&](const MorphismPair& m) { return check_interior_morphism(i2, i3, m, cfg.quant); },
      [&](const MorphismPair& m) { return check_interior_morphism(i1, i3, m, cfg.quant); });
  return report;
}

ValidationReport suite_category_qua(const SuiteConfig& cfg) {
  ValidationReport report("Qua composition closure");
  Rng rng(cfg.seed);
  const PartitionChain chain = fixture_chain(rng, cfg);
  const QuaObject m1 = embed_qua_partition(chain.p1);
  const QuaObject m2 = embed_qua_partition(chain.p2);
  const QuaObject m3 = embed_qua_pretopology(pretopology_from_partition(chain.p3, cfg.quant));
  std::vector<MorphismPair> pool12, pool23;
  for (std::size_t i = 0; i < 7; ++i) {
    pool12.push_back(random_qua_morphism(rng, m1, m2, i != 0));
    pool23.push_back(random_qua_morphism(rng, m2, m3, i != 0));
  }
  run_closure(
      report, pool12, pool23,
      identity_pair(CategoryTag::Qua, m1.answers, m1.questions, cfg.lattice),
      identity_pair(CategoryTag::Qua, m2.answers, m2.questions, cfg.lattice),
      [&](const MorphismPair& m) { return check_qua_morphism(m1, m2, m); },
      [&](const MorphismPair& m) { return check_qua_morphism(m2, m3, m); },
      [&](const MorphismPair& m) { return check_qua_morphism(m1, m3, m); });
  return report;
}

std::vector<Morphism> crisp_samples(Rng& rng, const SuiteConfig& cfg, CategoryTag tag) {
  // Identity arrows plus arrows into the one-block structure, which accepts
  // every crisp pair; random crisp arrows join when rejection finds one.
  const PartitionChain chain = fixture_chain(rng, cfg);
  const FuzzyPartition ob = one_block_partition(cfg.lattice, cfg.max_x, "ob");
  auto lift = [&](const FuzzyPartition& p) -> AnyObject {
    switch (tag) {
      case CategoryTag::LSpaceFP: return p;
      case CategoryTag::LFtransDown: return lts_from_partition(p);
      case CategoryTag::LFPrTop: return pretopology_from_partition(p, cfg.quant);
      default: return interior_from_partition(p, cfg.quant);
    }
  };
  const AnyObject o1 = lift(chain.p1), o2 = lift(chain.p2), target = lift(ob);
  std::vector<Morphism> out;
  out.push_back(identity_morphism(o1, /*crisp=*/true));
  out.push_back(identity_morphism(target, /*crisp=*/true));
  for (const AnyObject* src : {&o1, &o2}) {
    if (auto c = random_crisp_morphism(rng, *src, target, cfg.quant)) {
      out.push_back(Morphism{*c, *src, target});
    }
    if (auto c = random_crisp_morphism(rng, *src, o2, cfg.quant, 24)) {
      out.push_back(Morphism{*c, *src, o2});
    }
  }
  return out;
}

std::vector<Morphism> apply_all(FunctorId id, std::span<const Morphism> samples,
                                const QuantifierConfig& quant) {
  std::vector<Morphism> out;
  out.reserve(samples.size());
  for (const Morphism& m : samples) out.push_back(apply_functor(id, m, quant));
  return out;
}

std::vector<Morphism> pretop_pair_samples(Rng& rng, const SuiteConfig& cfg) {
  const PartitionChain chain = fixture_chain(rng, cfg);
  const Pretopology s1 = pretopology_from_partition(chain.p1, cfg.quant);
  const Pretopology s2 = pretopology_from_interior(
      indiscrete_interior(enumerated_set("Xq", "x", cfg.max_x), cfg.lattice, cfg.quant));
  std::vector<Morphism> out;
  out.push_back(identity_morphism(AnyObject(s1)));
  for (std::size_t i = 0; i < 4; ++i) {
    out.push_back(Morphism{random_pretop_morphism(rng, s1, s2, cfg.quant, i != 0), s1, s2});
  }
  out.push_back(identity_morphism(AnyObject(s2)));
  return out;
}

ValidationReport suite_iso(const SuiteConfig& cfg, FunctorId a, FunctorId b) {
  Rng rng(cfg.seed);
  std::vector<Morphism> forward;
  switch (a) {
    case FunctorId::F1: forward = crisp_samples(rng, cfg, CategoryTag::LSpaceFP); break;
    case FunctorId::F2: forward = crisp_samples(rng, cfg, CategoryTag::LFtransDown); break;
    case FunctorId::F4: forward = crisp_samples(rng, cfg, CategoryTag::LFPrTop); break;
    case FunctorId::F5: forward = crisp_samples(rng, cfg, CategoryTag::LFCInt); break;
    case FunctorId::F3: {
      const PartitionChain chain = fixture_chain(rng, cfg);
      forward = fp_morphism_samples(rng, cfg, chain, 3);
      break;
    }
    case FunctorId::F6: forward = pretop_pair_samples(rng, cfg); break;
    default: throw std::invalid_argument("no isomorphism suite for this functor");
  }
  const std::vector<Morphism> backward = apply_all(a, forward, cfg.quant);
  return check_isomorphism(a, b, forward, backward, cfg.quant);
}

ValidationReport suite_roundtrips(const SuiteConfig& cfg) {
  ValidationReport report("structure round trips");
  Rng rng(cfg.seed);
  const auto partitions = varied_partitions(rng, cfg, 6, "r");
  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < partitions.size() && ok; ++i) {
      if (partition_from_lts(lts_from_partition(partitions[i])) != partitions[i]) {
        ok = false;
        witness = "partition " + std::to_string(i);
      }
    }
    report.record("partition -> system -> partition", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < partitions.size() && ok; ++i) {
      const auto h = lts_from_partition(partitions[i]);
      if (lts_from_partition(partition_from_lts(h)) != h) {
        ok = false;
        witness = "system of partition " + std::to_string(i);
      }
    }
    report.record("system -> partition -> system", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < partitions.size() && ok; ++i) {
      const Pretopology s = pretopology_from_partition(partitions[i], cfg.quant);
      if (pretopology_from_interior(interior_from_pretopology(s)) != s) {
        ok = false;
        witness = "pretopology of partition " + std::to_string(i);
      }
      const CechInterior in = interior_from_partition(partitions[i], cfg.quant);
      if (interior_from_pretopology(pretopology_from_interior(in)) != in) {
        ok = false;
        witness = "interior of partition " + std::to_string(i);
      }
    }
    report.record("pretopology <-> interior", ok, witness);
  }
  return report;
}

ValidationReport suite_qua_embed_partition(const SuiteConfig& cfg) {
  ValidationReport report("Qua embedding of partitions");
  Rng rng(cfg.seed);
  const PartitionChain chain = fixture_chain(rng, cfg);
  bool ok = true;
  std::string witness;
  std::size_t index = 0;
  for (const MorphismPair& pair : fpmap_pool(rng, chain.p1, chain.p2, cfg.quant, 8)) {
    if (!check_qua_morphism(embed_qua_partition(chain.p1), embed_qua_partition(chain.p2), pair)
             .passed()) {
      ok = false;
      witness = "FP-map " + std::to_string(index);
      break;
    }
    ++index;
  }
  report.record("every fixture FP-map is a Qua morphism", ok, witness);
  return report;
}

ValidationReport suite_qua_embed_pretop(const SuiteConfig& cfg) {
  ValidationReport report("Qua embedding of pretopologies");
  Rng rng(cfg.seed);
  const PartitionChain chain = fixture_chain(rng, cfg);
  const Pretopology s1 = pretopology_from_partition(chain.p1, cfg.quant);
  const Pretopology s2 = pretopology_from_partition(chain.p2, cfg.quant);
  bool ok = true;
  std::string witness;
  for (std::size_t i = 0; i < 8; ++i) {
    const MorphismPair pair = random_pretop_morphism(rng, s1, s2, cfg.quant, i != 0);
    if (!check_qua_morphism(embed_qua_pretopology(s1), embed_qua_pretopology(s2), pair).passed()) {
      ok = false;
      witness = "continuous pair " + std::to_string(i);
      break;
    }
  }
  report.record("every fixture continuous pair is a Qua morphism", ok, witness);
  return report;
}

ValidationReport suite_transfer(const SuiteConfig& cfg, FunctorId id) {
  ValidationReport report(id == FunctorId::F7 ? "morphism transfer to pretopologies"
                                              : "morphism transfer to interiors");
  Rng rng(cfg.seed);
  const PartitionChain chain = fixture_chain(rng, cfg);
  bool ok = true;
  std::string witness;
  std::size_t index = 0;
  for (const MorphismPair& pair : fpmap_pool(rng, chain.p1, chain.p2, cfg.quant, 8)) {
    const Morphism transferred =
        apply_functor(id, Morphism{pair, chain.p1, chain.p2}, cfg.quant);
    if (!validate_morphism(transferred, cfg.quant).passed()) {
      ok = false;
      witness = "FP-map " + std::to_string(index);
      break;
    }
    ++index;
  }
  report.record("transferred morphisms pass the target validator", ok, witness);
  return report;
}

ValidationReport suite_morphism_carryover(const SuiteConfig& cfg) {
  // The identity-on-arrows functors move a morphism between presentations;
  // the same relation pair must satisfy the other category's condition.
  ValidationReport report("morphism carry-over");
  Rng rng(cfg.seed);
  const PartitionChain chain = fixture_chain(rng, cfg);
  const std::vector<Morphism> fp = fp_morphism_samples(rng, cfg, chain, 4);
  auto carried = [&](FunctorId id, std::span<const Morphism> samples, const char* label) {
    bool ok = true;
    std::string witness;
    std::size_t index = 0;
    for (const Morphism& m : samples) {
      const Morphism image = apply_functor(id, m, cfg.quant);
      const ValidationReport sub = validate_morphism(image, cfg.quant);
      if (!sub.passed()) {
        ok = false;
        witness = "sample " + std::to_string(index) + ": " + sub.first_failure()->witness;
        break;
      }
      ++index;
    }
    report.record(label, ok, witness);
  };
  carried(FunctorId::F3, fp, "partition morphisms are system morphisms");
  const std::vector<Morphism> lts = apply_all(FunctorId::F3, fp, cfg.quant);
  carried(FunctorId::F3Prime, lts, "system morphisms are partition morphisms");
  const std::vector<Morphism> pretop = pretop_pair_samples(rng, cfg);
  carried(FunctorId::F6, pretop, "pretopology morphisms are interior morphisms");
  const std::vector<Morphism> interiors = apply_all(FunctorId::F6, pretop, cfg.quant);
  carried(FunctorId::F6Prime, interiors, "interior morphisms are pretopology morphisms");
  return report;
}

ValidationReport suite_fig2(const SuiteConfig& cfg) {
  Rng rng(cfg.seed);
  const PartitionChain chain = fixture_chain(rng, cfg);
  const std::vector<Morphism> fp = fp_morphism_samples(rng, cfg, chain, 3);
  const std::vector<Morphism> lts = apply_all(FunctorId::F3, fp, cfg.quant);
  return check_diagram_fig2(fp, lts, cfg.quant);
}

ValidationReport suite_adjunction_f3(const SuiteConfig& cfg) {
  Rng rng(cfg.seed);
  const PartitionChain chain = fixture_chain(rng, cfg);
  std::vector<AdjunctionSample> samples;
  const auto h2 = lts_from_partition(chain.p2);
  const auto h3 = lts_from_partition(chain.p3);
  for (std::size_t i = 0; i < 3; ++i) {
    samples.push_back(AdjunctionSample{chain.p1, h2, random_fpmap(rng, chain.p1, chain.p2)});
    samples.push_back(AdjunctionSample{chain.p1, h3, random_fpmap(rng, chain.p1, chain.p3)});
  }
  const std::vector<Morphism> naturality = fp_morphism_samples(rng, cfg, chain, 2);
  return check_adjunction(AdjunctionKind::F3, samples, naturality, cfg.quant);
}

ValidationReport suite_adjunction_f6(const SuiteConfig& cfg) {
  Rng rng(cfg.seed);
  const PartitionChain chain = fixture_chain(rng, cfg);
  const Pretopology s1 = pretopology_from_partition(chain.p1, cfg.quant);
  const CechInterior i2 = interior_from_partition(chain.p2, cfg.quant);
  const CechInterior i3 =
      indiscrete_interior(enumerated_set("Xj", "x", cfg.max_x), cfg.lattice, cfg.quant);
  std::vector<AdjunctionSample> samples;
  for (std::size_t i = 0; i < 3; ++i) {
    samples.push_back(AdjunctionSample{
        s1, i2, random_pretop_morphism(rng, s1, pretopology_from_interior(i2), cfg.quant)});
    samples.push_back(AdjunctionSample{
        s1, i3, random_pretop_morphism(rng, s1, pretopology_from_interior(i3), cfg.quant)});
  }
  const std::vector<Morphism> naturality = pretop_pair_samples(rng, cfg);
  return check_adjunction(AdjunctionKind::F6, samples, naturality, cfg.quant);
}

ValidationReport suite_functor_laws(const SuiteConfig& cfg) {
  ValidationReport report("functor laws");
  Rng rng(cfg.seed);
  const PartitionChain chain = fixture_chain(rng, cfg);
  const std::vector<Morphism> fp = fp_morphism_samples(rng, cfg, chain, 2);
  const std::vector<Morphism> lts = apply_all(FunctorId::F3, fp, cfg.quant);
  const std::vector<Morphism> pretop = pretop_pair_samples(rng, cfg);
  const std::vector<Morphism> interior = apply_all(FunctorId::F6, pretop, cfg.quant);

  std::map<FunctorId, std::vector<Morphism>> samples;
  samples[FunctorId::F1] = crisp_samples(rng, cfg, CategoryTag::LSpaceFP);
  samples[FunctorId::F1Prime] = apply_all(FunctorId::F1, samples[FunctorId::F1], cfg.quant);
  samples[FunctorId::F2] = crisp_samples(rng, cfg, CategoryTag::LFtransDown);
  samples[FunctorId::F2Prime] = apply_all(FunctorId::F2, samples[FunctorId::F2], cfg.quant);
  samples[FunctorId::F3] = fp;
  samples[FunctorId::F3Prime] = lts;
  samples[FunctorId::F4] = crisp_samples(rng, cfg, CategoryTag::LFPrTop);
  samples[FunctorId::F4Prime] = apply_all(FunctorId::F4, samples[FunctorId::F4], cfg.quant);
  samples[FunctorId::F5] = crisp_samples(rng, cfg, CategoryTag::LFCInt);
  samples[FunctorId::F5Prime] = apply_all(FunctorId::F5, samples[FunctorId::F5], cfg.quant);
  samples[FunctorId::F6] = pretop;
  samples[FunctorId::F6Prime] = interior;
  const PartitionChain injective = fixture_chain_injective(rng, cfg);
  const std::vector<Morphism> fp_inj = fp_morphism_samples(rng, cfg, injective, 2);
  const std::vector<Morphism> lts_inj = apply_all(FunctorId::F3, fp_inj, cfg.quant);
  samples[FunctorId::F7] = fp_inj;
  samples[FunctorId::F8] = lts_inj;
  samples[FunctorId::F9] = fp_inj;
  samples[FunctorId::F10] = lts_inj;

  for (const auto& [id, sample] : samples) {
    report.absorb(check_functor_laws(id, sample, cfg.quant));
  }
  return report;
}

ValidationReport suite_negative_controls(const SuiteConfig& cfg) {
  ValidationReport report("negative controls");
  const LatticePtr& lattice = cfg.lattice;
  const Lattice& lat = *lattice;

  {
    // A corrupted star cell must be flagged as a commutativity failure.
    auto star = lat.star_table();
    const std::size_t cell = 0 * lat.size() + (lat.size() - 1);  // star(0, top) = 0
    star[cell] = star[cell] == lat.top() ? lat.bottom() : lat.top();
    auto broken = Lattice::from_tables(lat.labels(), lat.leq_table(), std::move(star),
                                       lat.hash_table(), lat.neg_table());
    const ValidationReport sub = validate_lattice(*broken);
    const CheckResult* law = sub.find("star commutative");
    const bool flagged = law && !law->passed && !law->witness.empty();
    report.record("corrupted star cell flagged", flagged,
                  flagged ? "" : "star commutative did not fail with a witness");
  }
  {
    // Membership whose cores miss an element is not a partition.
    FiniteSet x = enumerated_set("Xn", "x", 3);
    FiniteSet j = enumerated_set("Jn", "j", 2);
    const Elem t = lat.top(), b = lat.bottom();
    FuzzyPartition broken(x, j, FuzzyRelation(j, x, {t, b, b, b, b, t}, lattice), {0, 0, 1});
    const ValidationReport sub = validate_partition(broken);
    const CheckResult* law = sub.find("cores partition X");
    const bool flagged = law && !law->passed && law->witness.find("x2") != std::string::npos;
    report.record("uncovered element flagged", flagged,
                  flagged ? "" : "cores check did not fail naming x2");
  }
  {
    // A kernel top off the graph of v breaks the co-atom axiom.
    FiniteSet x = enumerated_set("Xg", "x", 3);
    FiniteSet y = enumerated_set("Yg", "y", 2);
    const Elem t = lat.top(), b = lat.bottom();
    LowerTransformationSystem broken(
        x, y, {0, 0, 1}, FuzzyRelation(y, x, {t, t, b, t, b, t}, lattice));
    const ValidationReport sub = validate_lts(broken, cfg.quant);
    const CheckResult* law = sub.find("coatom graph axiom");
    const bool flagged = law && !law->passed && !law->witness.empty();
    report.record("off-graph kernel top flagged", flagged,
                  flagged ? "" : "coatom graph axiom did not fail with a witness");
  }
  {
    // v missing a target is reported as a surjectivity failure.
    FiniteSet x = enumerated_set("Xs", "x", 2);
    FiniteSet y = enumerated_set("Ys", "y", 2);
    const Elem t = lat.top(), b = lat.bottom();
    LowerTransformationSystem broken(x, y, {0, 0},
                                     FuzzyRelation(y, x, {t, t, b, b}, lattice));
    const ValidationReport sub = validate_lts(broken, cfg.quant);
    const CheckResult* law = sub.find("v surjective");
    const bool flagged = law && !law->passed && law->witness.find("y2") != std::string::npos;
    report.record("non-surjective v flagged", flagged,
                  flagged ? "" : "surjectivity check did not fail naming y2");
  }
  {
    // A non-crisp pair must be rejected by the crisp translation.
    FiniteSet x = enumerated_set("Xc", "x", 2);
    MorphismPair pair{CategoryTag::LSpaceFP,
                      FuzzyRelation(x, x, std::vector<Elem>(4, lat.bottom()), lattice),
                      co_identity_relation(x, lattice)};
    bool rejected = false;
    std::string detail = "pair_to_crisp accepted a non-crisp pair";
    try {
      (void)pair_to_crisp(pair);
    } catch (const CrispnessError& e) {
      rejected = std::string(e.what()).find("row") != std::string::npos;
      if (!rejected) detail = "crispness error does not name the row";
    }
    report.record("non-crisp pair rejected", rejected, rejected ? "" : detail);
  }
  {
    // Perturbing the adjunction unit with an off-diagonal top breaks the
    // triangle equality.
    FiniteSet x = enumerated_set("Xt", "x", 2);
    FiniteSet j = enumerated_set("Jt", "j", 1);
    const Elem t = lat.top(), b = lat.bottom();
    MorphismPair into_gd{CategoryTag::LSpaceFP, FuzzyRelation(x, x, {b, b, t, t}, lattice),
                         FuzzyRelation(j, j, {t}, lattice)};
    std::vector<Elem> unit_fwd = {t, t, b, t};  // identity plus an off-diagonal top
    MorphismPair perturbed{CategoryTag::LSpaceFP, FuzzyRelation(x, x, std::move(unit_fwd), lattice),
                           co_identity_relation(j, lattice)};
    const MorphismPair composite = compose(perturbed, into_gd);
    const bool differs = !(composite == into_gd);
    report.record("perturbed unit breaks the triangle", differs,
                  differs ? "" : "composite still equals the original morphism");
  }
  {
    // An interior raising a non-constant function above itself fails
    // contractivity.
    FiniteSet x = enumerated_set("Xm", "x", 2);
    CechInterior base = identity_interior(x, lattice, cfg.quant);
    auto table = base.table();
    const FuzzySet witness_fn = coatom(x, 0, lattice);
    table[function_index(witness_fn)][0] = lat.top();
    const ValidationReport sub = validate_interior(CechInterior(x, lattice, std::move(table)));
    const CheckResult* law = sub.find("contractive");
    const bool flagged = law && !law->passed && !law->witness.empty();
    report.record("non-contractive interior flagged", flagged,
                  flagged ? "" : "contractivity did not fail with a witness");
  }
  {
    // All-top forward against all-bottom backward cannot be a Qua morphism
    // when success measures 1 and 0 meet.
    FiniteSet x = enumerated_set("Xq", "x", 2);
    FiniteSet j = enumerated_set("Jq", "j", 2);
    const Elem t = lat.top(), b = lat.bottom();
    QuaObject m1(j, x, FuzzyRelation(j, x, {t, b, b, t}, lattice));
    QuaObject m2(j, x, FuzzyRelation(j, x, {b, t, t, b}, lattice));
    MorphismPair pair{CategoryTag::Qua, FuzzyRelation(x, x, std::vector<Elem>(4, t), lattice),
                      FuzzyRelation(j, j, std::vector<Elem>(4, b), lattice)};
    const ValidationReport sub = check_qua_morphism(m1, m2, pair);
    const CheckResult* law = sub.find("cooperation below competition");
    const bool flagged = law && !law->passed && !law->witness.empty();
    report.record("degenerate Qua pair flagged", flagged,
                  flagged ? "" : "Qua condition did not fail with a witness");
  }
  return report;
}

using SuiteFn = std::function<ValidationReport(const SuiteConfig&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites = {
      {"prop-lattice-laws", suite_lattice_laws},
      {"prop-contravariance", suite_contravariance},
      {"prop-ftransform", suite_ftransform},
      {"prop-category-lspacefp", suite_category_lspacefp},
      {"prop-category-lftrans", suite_category_lftrans},
      {"prop-category-lfprtop", suite_category_lfprtop},
      {"prop-category-lfcint", suite_category_lfcint},
      {"prop-category-qua", suite_category_qua},
      {"prop-iso-f1", [](const SuiteConfig& c) { return suite_iso(c, FunctorId::F1, FunctorId::F1Prime); }},
      {"prop-iso-f2", [](const SuiteConfig& c) { return suite_iso(c, FunctorId::F2, FunctorId::F2Prime); }},
      {"prop-iso-f3", [](const SuiteConfig& c) { return suite_iso(c, FunctorId::F3, FunctorId::F3Prime); }},
      {"prop-iso-f4", [](const SuiteConfig& c) { return suite_iso(c, FunctorId::F4, FunctorId::F4Prime); }},
      {"prop-iso-f5", [](const SuiteConfig& c) { return suite_iso(c, FunctorId::F5, FunctorId::F5Prime); }},
      {"prop-iso-f6", [](const SuiteConfig& c) { return suite_iso(c, FunctorId::F6, FunctorId::F6Prime); }},
      {"prop-morphism-carryover", suite_morphism_carryover},
      {"prop-roundtrips", suite_roundtrips},
      {"prop-qua-embed-partition", suite_qua_embed_partition},
      {"prop-qua-embed-pretop", suite_qua_embed_pretop},
      {"prop-transfer-pretop", [](const SuiteConfig& c) { return suite_transfer(c, FunctorId::F7); }},
      {"prop-transfer-interior", [](const SuiteConfig& c) { return suite_transfer(c, FunctorId::F9); }},
      {"prop-fig2", suite_fig2},
      {"prop-adjunction-f3", suite_adjunction_f3},
      {"prop-adjunction-f6", suite_adjunction_f6},
      {"prop-functor-laws", suite_functor_laws},
      {"neg-controls", suite_negative_controls},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_ids() {
  std::vector<std::string> ids;
  ids.reserve(registry().size());
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

bool is_suite_id(const std::string& id) { return registry().count(id) != 0; }

SuiteResult run_suite(const std::string& id, const SuiteConfig& config) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw std::invalid_argument("unknown suite id '" + id + "'");
  if (!config.lattice) throw std::invalid_argument("suite config needs a lattice");
  const auto start = std::chrono::steady_clock::now();
  ValidationReport report = it->second(config);
  const auto stop = std::chrono::steady_clock::now();
  return SuiteResult{id, std::move(report),
                     std::chrono::duration<double>(stop - start).count()};
}

std::vector<SuiteResult> run_suites(std::span<const std::string> ids, const SuiteConfig& config) {
  std::vector<std::string> selected;
  if (ids.size() == 1 && ids[0] == "all") {
    selected = suite_ids();
  } else {
    selected.assign(ids.begin(), ids.end());
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  }
  std::vector<SuiteResult> results;
  results.reserve(selected.size());
  for (const std::string& id : selected) results.push_back(run_suite(id, config));
  return results;
}

}  // namespace lfuzz
