#include "lfuzz/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lfuzz {

std::size_t pick_index(Rng& rng, std::size_t n) {
  if (n == 0) throw std::invalid_argument("pick_index: empty range");
  return static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n));
}

Elem pick_elem(Rng& rng, const Lattice& lat) {
  return static_cast<Elem>(pick_index(rng, static_cast<std::size_t>(lat.size())));
}

Elem pick_non_top(Rng& rng, const Lattice& lat) {
  if (lat.size() < 2) throw std::invalid_argument("pick_non_top: carrier has no non-top element");
  Elem e;
  do {
    e = pick_elem(rng, lat);
  } while (e == lat.top());
  return e;
}

FuzzyRelation random_relation(Rng& rng, const FiniteSet& source, const FiniteSet& target,
                              const LatticePtr& lattice) {
  std::vector<Elem> entries(source.size() * target.size());
  for (Elem& e : entries) e = pick_elem(rng, *lattice);
  return FuzzyRelation(source, target, std::move(entries), lattice);
}

FuzzyPartition random_partition(Rng& rng, const LatticePtr& lattice, std::size_t x_size,
                                std::size_t j_size, const std::string& name_suffix) {
  if (j_size == 0 || j_size > x_size) {
    throw std::invalid_argument("random_partition: need 1 <= |J| <= |X|");
  }
  FiniteSet x = enumerated_set("X" + name_suffix, "x", x_size);
  FiniteSet j = enumerated_set("J" + name_suffix, "j", j_size);

  // A surjection: hit every block once, then distribute the rest.
  std::vector<std::size_t> xi(x_size);
  std::vector<std::size_t> positions(x_size);
  for (std::size_t i = 0; i < x_size; ++i) positions[i] = i;
  for (std::size_t i = x_size; i > 1; --i) std::swap(positions[i - 1], positions[pick_index(rng, i)]);
  for (std::size_t block = 0; block < j_size; ++block) xi[positions[block]] = block;
  for (std::size_t i = j_size; i < x_size; ++i) xi[positions[i]] = pick_index(rng, j_size);

  std::vector<Elem> membership(j_size * x_size);
  for (std::size_t jj = 0; jj < j_size; ++jj) {
    for (std::size_t xx = 0; xx < x_size; ++xx) {
      membership[jj * x_size + xx] =
          xi[xx] == jj ? lattice->top() : pick_non_top(rng, *lattice);
    }
  }
  return FuzzyPartition(x, j, FuzzyRelation(j, x, std::move(membership), lattice), std::move(xi));
}

namespace {

/// Least m in the meet-closed up-set {m : pred(m)}; pred(top) must hold.
Elem least_satisfying(const Lattice& lat, const std::function<bool(Elem)>& pred) {
  std::vector<Elem> satisfying;
  for (Elem m = 0; m < lat.size(); ++m) {
    if (pred(m)) satisfying.push_back(m);
  }
  if (satisfying.empty()) throw std::logic_error("least_satisfying: empty satisfying set");
  return lat.fold_meet(satisfying);
}

Elem bump_above(Rng& rng, const Lattice& lat, Elem lower) {
  std::vector<Elem> candidates;
  for (Elem m = 0; m < lat.size(); ++m) {
    if (lat.leq(lower, m)) candidates.push_back(m);
  }
  return candidates[pick_index(rng, candidates.size())];
}

}  // namespace

MorphismPair random_fpmap(Rng& rng, const FuzzyPartition& p1, const FuzzyPartition& p2, bool bump) {
  const LatticePtr& lattice = p1.lattice();
  const Lattice& lat = *lattice;
  FuzzyRelation forward = random_relation(rng, p1.space(), p2.space(), lattice);

  const std::size_t nj2 = p2.index_set().size(), nj1 = p1.index_set().size();
  std::vector<Elem> backward(nj2 * nj1);
  for (std::size_t j2 = 0; j2 < nj2; ++j2) {
    for (std::size_t j1 = 0; j1 < nj1; ++j1) {
      Elem least = least_satisfying(lat, [&](Elem m) {
        for (std::size_t x1 = 0; x1 < p1.space().size(); ++x1) {
          for (std::size_t x2 = 0; x2 < p2.space().size(); ++x2) {
            const Elem lhs = lat.star(forward.at(x1, x2), p1.member(j1, x1));
            if (!lat.leq(lhs, lat.hash(m, p2.member(j2, x2)))) return false;
          }
        }
        return true;
      });
      backward[j2 * nj1 + j1] = bump ? bump_above(rng, lat, least) : least;
    }
  }
  return MorphismPair{CategoryTag::LSpaceFP, std::move(forward),
                      FuzzyRelation(p2.index_set(), p1.index_set(), std::move(backward), lattice)};
}

MorphismPair random_lts_morphism(Rng& rng, const LowerTransformationSystem& h1,
                                 const LowerTransformationSystem& h2,
                                 const QuantifierConfig& config, bool bump) {
  const LatticePtr& lattice = h1.lattice();
  const Lattice& lat = *lattice;
  FuzzyRelation forward = random_relation(rng, h1.space(), h2.space(), lattice);

  const FunctionSpace space = FunctionSpace::build(h2.space(), lattice, config);
  std::vector<FuzzySet> h2_images, pulled_images;
  h2_images.reserve(space.size());
  pulled_images.reserve(space.size());
  for (const FuzzySet& f : space.functions()) {
    h2_images.push_back(apply_lts(h2, f));
    pulled_images.push_back(apply_lts(h1, backward_powerset(forward, f)));
  }

  const std::size_t ny2 = h2.target().size(), ny1 = h1.target().size();
  std::vector<Elem> backward(ny2 * ny1);
  for (std::size_t y2 = 0; y2 < ny2; ++y2) {
    for (std::size_t y1 = 0; y1 < ny1; ++y1) {
      Elem least = least_satisfying(lat, [&](Elem m) {
        for (std::size_t fi = 0; fi < space.size(); ++fi) {
          const Elem lhs = lat.star(lat.neg(m), h2_images[fi].value(y2));
          if (!lat.leq(lhs, pulled_images[fi].value(y1))) return false;
        }
        return true;
      });
      backward[y2 * ny1 + y1] = bump ? bump_above(rng, lat, least) : least;
    }
  }
  return MorphismPair{CategoryTag::LFtransDown, std::move(forward),
                      FuzzyRelation(h2.target(), h1.target(), std::move(backward), lattice)};
}

namespace {

template <typename Op>
MorphismPair random_continuous_pair(Rng& rng, const Op& t1, const Op& t2, CategoryTag tag,
                                    const QuantifierConfig& config, bool bump) {
  const LatticePtr& lattice = t1.lattice();
  const Lattice& lat = *lattice;
  FuzzyRelation forward = random_relation(rng, t1.space(), t2.space(), lattice);

  const FunctionSpace space = FunctionSpace::build(t2.space(), lattice, config);
  std::vector<FuzzySet> images, pulled;
  images.reserve(space.size());
  pulled.reserve(space.size());
  for (const FuzzySet& f : space.functions()) {
    images.push_back(t2.apply(f));
    pulled.push_back(t1.apply(backward_powerset(forward, f)));
  }

  const std::size_t n2 = t2.space().size(), n1 = t1.space().size();
  std::vector<Elem> backward(n2 * n1);
  for (std::size_t x2 = 0; x2 < n2; ++x2) {
    for (std::size_t x1 = 0; x1 < n1; ++x1) {
      Elem least = least_satisfying(lat, [&](Elem m) {
        for (std::size_t fi = 0; fi < space.size(); ++fi) {
          const Elem lhs = lat.star(lat.neg(m), images[fi].value(x2));
          if (!lat.leq(lhs, pulled[fi].value(x1))) return false;
        }
        return true;
      });
      backward[x2 * n1 + x1] = bump ? bump_above(rng, lat, least) : least;
    }
  }
  return MorphismPair{tag, std::move(forward),
                      FuzzyRelation(t2.space(), t1.space(), std::move(backward), lattice)};
}

}  // namespace

MorphismPair random_pretop_morphism(Rng& rng, const Pretopology& s1, const Pretopology& s2,
                                    const QuantifierConfig& config, bool bump) {
  return random_continuous_pair(rng, s1, s2, CategoryTag::LFPrTop, config, bump);
}

MorphismPair random_interior_morphism(Rng& rng, const CechInterior& i1, const CechInterior& i2,
                                      const QuantifierConfig& config, bool bump) {
  return random_continuous_pair(rng, i1, i2, CategoryTag::LFCInt, config, bump);
}

MorphismPair random_qua_morphism(Rng& rng, const QuaObject& m1, const QuaObject& m2, bool bump) {
  const LatticePtr& lattice = m1.success.lattice();
  const Lattice& lat = *lattice;
  FuzzyRelation forward = random_relation(rng, m1.answers, m2.answers, lattice);

  const std::size_t nq2 = m2.questions.size(), nq1 = m1.questions.size();
  std::vector<Elem> backward(nq2 * nq1);
  for (std::size_t q2 = 0; q2 < nq2; ++q2) {
    for (std::size_t q1 = 0; q1 < nq1; ++q1) {
      Elem least = least_satisfying(lat, [&](Elem m) {
        for (std::size_t a1 = 0; a1 < m1.answers.size(); ++a1) {
          for (std::size_t a2 = 0; a2 < m2.answers.size(); ++a2) {
            const Elem lhs = lat.star(forward.at(a1, a2), m1.success.at(q1, a1));
            if (!lat.leq(lhs, lat.hash(m, m2.success.at(q2, a2)))) return false;
          }
        }
        return true;
      });
      backward[q2 * nq1 + q1] = bump ? bump_above(rng, lat, least) : least;
    }
  }
  return MorphismPair{CategoryTag::Qua, std::move(forward),
                      FuzzyRelation(m2.questions, m1.questions, std::move(backward), lattice)};
}

std::optional<MorphismPair> rejection_sample_fpmap(Rng& rng, const FuzzyPartition& p1,
                                                   const FuzzyPartition& p2, std::size_t tries) {
  for (std::size_t i = 0; i < tries; ++i) {
    MorphismPair candidate{CategoryTag::LSpaceFP,
                           random_relation(rng, p1.space(), p2.space(), p1.lattice()),
                           random_relation(rng, p2.index_set(), p1.index_set(), p1.lattice())};
    if (check_fpmap(p1, p2, candidate).passed()) return candidate;
  }
  return std::nullopt;
}

std::optional<CrispMorphism> random_crisp_morphism(Rng& rng, const AnyObject& source,
                                                   const AnyObject& target,
                                                   const QuantifierConfig& config,
                                                   std::size_t tries) {
  const CategoryTag tag = object_tag(source);
  const FiniteSet& src_first = object_first_set(source);
  const FiniteSet& dst_first = object_first_set(target);
  const FiniteSet& src_second = object_second_set(source);
  const FiniteSet& dst_second = object_second_set(target);
  for (std::size_t i = 0; i < tries; ++i) {
    std::vector<std::size_t> forward_fn(src_first.size()), backward_fn(src_second.size());
    for (auto& v : forward_fn) v = pick_index(rng, dst_first.size());
    if (tag == CategoryTag::LFPrTop || tag == CategoryTag::LFCInt) {
      backward_fn = forward_fn;
    } else {
      for (auto& v : backward_fn) v = pick_index(rng, dst_second.size());
    }
    CrispMorphism candidate = make_crisp_morphism(tag, src_first, dst_first, src_second,
                                                  dst_second, forward_fn, backward_fn);
    Morphism m{candidate, source, target};
    if (validate_morphism(m, config).passed()) return candidate;
  }
  return std::nullopt;
}

}  // namespace lfuzz
