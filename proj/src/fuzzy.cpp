#include "lfuzz/fuzzy.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace lfuzz {

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

void require_same_algebra(const LatticePtr& a, const LatticePtr& b, const char* what) {
  if (a == b) return;
  require(a && b && a->same_algebra(*b), std::string(what) + ": operands use different lattices");
}

void require_range(const std::vector<Elem>& values, const Lattice& lat, const char* what) {
  for (Elem v : values) {
    require(v >= 0 && v < lat.size(), std::string(what) + ": value index out of lattice range");
  }
}

}  // namespace

FiniteSet::FiniteSet(std::string name, std::vector<std::string> elements)
    : name_(std::move(name)), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      require(elements_[i] != elements_[j],
              "set '" + name_ + "' has duplicate element label '" + elements_[i] + "'");
    }
  }
}

std::optional<std::size_t> FiniteSet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == label) return i;
  }
  return std::nullopt;
}

FiniteSet enumerated_set(std::string name, std::string_view prefix, std::size_t count) {
  std::vector<std::string> elements;
  elements.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    elements.push_back(std::string(prefix) + std::to_string(i));
  }
  return FiniteSet(std::move(name), std::move(elements));
}

FuzzySet::FuzzySet(FiniteSet domain, std::vector<Elem> values, LatticePtr lattice)
    : domain_(std::move(domain)), values_(std::move(values)), lattice_(std::move(lattice)) {
  require(static_cast<bool>(lattice_), "fuzzy set requires a lattice");
  require(values_.size() == domain_.size(), "fuzzy set value count does not match domain size");
  require_range(values_, *lattice_, "fuzzy set");
}

bool FuzzySet::operator==(const FuzzySet& other) const {
  return domain_ == other.domain_ && values_ == other.values_ &&
         (lattice_ == other.lattice_ || lattice_->same_algebra(*other.lattice_));
}

FuzzyRelation::FuzzyRelation(FiniteSet source, FiniteSet target, std::vector<Elem> entries,
                             LatticePtr lattice)
    : source_(std::move(source)),
      target_(std::move(target)),
      entries_(std::move(entries)),
      lattice_(std::move(lattice)) {
  require(static_cast<bool>(lattice_), "fuzzy relation requires a lattice");
  require(entries_.size() == source_.size() * target_.size(),
          "fuzzy relation entry count does not match axes");
  require_range(entries_, *lattice_, "fuzzy relation");
}

Elem FuzzyRelation::at(std::size_t row, std::size_t col) const {
  require(row < source_.size() && col < target_.size(), "fuzzy relation index out of range");
  return entries_[row * target_.size() + col];
}

bool FuzzyRelation::operator==(const FuzzyRelation& other) const {
  return source_ == other.source_ && target_ == other.target_ && entries_ == other.entries_ &&
         (lattice_ == other.lattice_ || lattice_->same_algebra(*other.lattice_));
}

FuzzySet pointwise(BinOp op, const FuzzySet& f, const FuzzySet& g) {
  require(f.domain() == g.domain(), "pointwise: domain mismatch");
  require_same_algebra(f.lattice(), g.lattice(), "pointwise");
  const Lattice& lat = *f.lattice();
  std::vector<Elem> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = lat.apply(op, f.value(i), g.value(i));
  return FuzzySet(f.domain(), std::move(out), f.lattice());
}

FuzzySet negate(const FuzzySet& f) {
  const Lattice& lat = *f.lattice();
  std::vector<Elem> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = lat.neg(f.value(i));
  return FuzzySet(f.domain(), std::move(out), f.lattice());
}

bool pointwise_leq(const FuzzySet& f, const FuzzySet& g) {
  require(f.domain() == g.domain(), "pointwise_leq: domain mismatch");
  require_same_algebra(f.lattice(), g.lattice(), "pointwise_leq");
  const Lattice& lat = *f.lattice();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!lat.leq(f.value(i), g.value(i))) return false;
  }
  return true;
}

FuzzySet constant_set(const FiniteSet& domain, Elem a, LatticePtr lattice) {
  require(static_cast<bool>(lattice), "constant_set requires a lattice");
  require(a >= 0 && a < lattice->size(), "constant_set: element out of lattice range");
  return FuzzySet(domain, std::vector<Elem>(domain.size(), a), std::move(lattice));
}

FuzzySet characteristic(const FiniteSet& domain, std::span<const std::string> subset,
                        LatticePtr lattice) {
  require(static_cast<bool>(lattice), "characteristic requires a lattice");
  std::vector<Elem> values(domain.size(), lattice->bottom());
  for (const std::string& label : subset) {
    auto i = domain.index_of(label);
    require(i.has_value(), "characteristic: unknown element label '" + label + "'");
    values[*i] = lattice->top();
  }
  return FuzzySet(domain, std::move(values), std::move(lattice));
}

FuzzySet coatom(const FiniteSet& domain, std::size_t x, LatticePtr lattice) {
  require(static_cast<bool>(lattice), "coatom requires a lattice");
  require(x < domain.size(), "coatom: element index out of range");
  std::vector<Elem> values(domain.size(), lattice->top());
  values[x] = lattice->bottom();
  return FuzzySet(domain, std::move(values), std::move(lattice));
}

FuzzySet coatom(const FiniteSet& domain, std::string_view x_label, LatticePtr lattice) {
  auto i = domain.index_of(x_label);
  require(i.has_value(), "coatom: unknown element label '" + std::string(x_label) + "'");
  return coatom(domain, *i, std::move(lattice));
}

std::vector<std::size_t> core(const FuzzySet& f) {
  std::vector<std::size_t> result;
  const Elem top = f.lattice()->top();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.value(i) == top) result.push_back(i);
  }
  return result;
}

bool is_normal(const FuzzySet& f) { return !core(f).empty(); }

FuzzyRelation compose_sup_star(const FuzzyRelation& r, const FuzzyRelation& s) {
  require(r.target() == s.source(), "compose_sup_star: middle sets differ");
  require_same_algebra(r.lattice(), s.lattice(), "compose_sup_star");
  const Lattice& lat = *r.lattice();
  const std::size_t rows = r.source().size(), mid = r.target().size(), cols = s.target().size();
  std::vector<Elem> out(rows * cols, lat.bottom());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      Elem acc = lat.bottom();
      for (std::size_t j = 0; j < mid; ++j) acc = lat.join(acc, lat.star(r.at(i, j), s.at(j, k)));
      out[i * cols + k] = acc;
    }
  }
  return FuzzyRelation(r.source(), s.target(), std::move(out), r.lattice());
}

FuzzyRelation compose_inf_hash(const FuzzyRelation& a, const FuzzyRelation& b) {
  require(a.target() == b.source(), "compose_inf_hash: middle sets differ");
  require_same_algebra(a.lattice(), b.lattice(), "compose_inf_hash");
  const Lattice& lat = *a.lattice();
  const std::size_t rows = a.source().size(), mid = a.target().size(), cols = b.target().size();
  std::vector<Elem> out(rows * cols, lat.top());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      Elem acc = lat.top();
      for (std::size_t j = 0; j < mid; ++j) acc = lat.meet(acc, lat.hash(a.at(i, j), b.at(j, k)));
      out[i * cols + k] = acc;
    }
  }
  return FuzzyRelation(a.source(), b.target(), std::move(out), a.lattice());
}

FuzzySet backward_powerset(const FuzzyRelation& psi, const FuzzySet& f) {
  require(psi.target() == f.domain(), "backward_powerset: relation target differs from f's domain");
  require_same_algebra(psi.lattice(), f.lattice(), "backward_powerset");
  const Lattice& lat = *psi.lattice();
  std::vector<Elem> out(psi.source().size());
  for (std::size_t x1 = 0; x1 < psi.source().size(); ++x1) {
    Elem acc = lat.top();
    for (std::size_t x2 = 0; x2 < f.size(); ++x2) {
      acc = lat.meet(acc, lat.hash(lat.neg(psi.at(x1, x2)), f.value(x2)));
    }
    out[x1] = acc;
  }
  return FuzzySet(psi.source(), std::move(out), psi.lattice());
}

FuzzyRelation identity_relation(const FiniteSet& x, LatticePtr lattice) {
  require(static_cast<bool>(lattice), "identity_relation requires a lattice");
  const std::size_t n = x.size();
  std::vector<Elem> entries(n * n, lattice->bottom());
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = lattice->top();
  return FuzzyRelation(x, x, std::move(entries), std::move(lattice));
}

FuzzyRelation co_identity_relation(const FiniteSet& x, LatticePtr lattice) {
  require(static_cast<bool>(lattice), "co_identity_relation requires a lattice");
  const std::size_t n = x.size();
  std::vector<Elem> entries(n * n, lattice->top());
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = lattice->bottom();
  return FuzzyRelation(x, x, std::move(entries), std::move(lattice));
}

std::pair<FuzzyRelation, FuzzyRelation> make_identity_pair(const FiniteSet& x, const FiniteSet& j,
                                                           LatticePtr lattice) {
  return {identity_relation(x, lattice), co_identity_relation(j, lattice)};
}

std::size_t function_space_cardinality(std::size_t domain_size, std::size_t lattice_size) {
  std::size_t result = 1;
  const std::size_t cap = std::numeric_limits<std::size_t>::max() / 2;
  for (std::size_t i = 0; i < domain_size; ++i) {
    if (result > cap / std::max<std::size_t>(lattice_size, 1)) return cap;
    result *= lattice_size;
  }
  return result;
}

std::size_t function_index(const FuzzySet& f) {
  const std::size_t base = static_cast<std::size_t>(f.lattice()->size());
  std::size_t index = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    index = index * base + static_cast<std::size_t>(f.value(i));
  }
  return index;
}

FunctionSpace FunctionSpace::build(const FiniteSet& domain, const LatticePtr& lattice,
                                   const QuantifierConfig& config) {
  require(static_cast<bool>(lattice), "FunctionSpace requires a lattice");
  FunctionSpace space;
  const std::size_t n = domain.size();
  const std::size_t card = function_space_cardinality(n, lattice->size());

  if (card <= config.budget) {
    space.exhaustive_ = true;
    space.functions_.reserve(card);
    std::vector<Elem> digits(n, 0);
    while (true) {
      space.functions_.emplace_back(domain, digits, lattice);
      // Odometer increment from the right keeps lexicographic order.
      std::size_t pos = n;
      while (pos > 0) {
        --pos;
        if (++digits[pos] < lattice->size()) break;
        digits[pos] = 0;
        if (pos == 0) return space;
      }
      if (n == 0) return space;
    }
  }

  if (!config.sampling) {
    throw QuantifierBudgetError("function space of size " + std::to_string(card) +
                                " exceeds quantifier budget " + std::to_string(config.budget) +
                                " (enable sampling to proceed)");
  }

  space.exhaustive_ = false;
  std::set<std::vector<Elem>> seen;
  auto add = [&](std::vector<Elem> values) {
    if (seen.insert(values).second) {
      space.functions_.emplace_back(domain, std::move(values), lattice);
    }
  };
  // Constants and co-atoms are always part of the sample: co-atoms generate
  // the function space, so they catch most violations.
  for (Elem a = 0; a < lattice->size(); ++a) add(std::vector<Elem>(n, a));
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Elem> values(n, lattice->top());
    values[x] = lattice->bottom();
    add(std::move(values));
  }
  std::mt19937_64 gen(config.seed);
  for (std::size_t i = 0; i < config.sample_count; ++i) {
    std::vector<Elem> values(n);
    for (std::size_t x = 0; x < n; ++x) {
      values[x] = static_cast<Elem>(gen() % static_cast<std::uint64_t>(lattice->size()));
    }
    add(std::move(values));
  }
  return space;
}

}  // namespace lfuzz
