#include "lfuzz/topology.hpp"

#include <stdexcept>

namespace lfuzz {

namespace {

void check_table(const FiniteSet& x, const LatticePtr& lattice,
                 const std::vector<std::vector<Elem>>& table, const char* what) {
  if (!lattice) throw std::invalid_argument(std::string(what) + " requires a lattice");
  const std::size_t expected = function_space_cardinality(x.size(), lattice->size());
  if (table.size() != expected) {
    throw std::invalid_argument(std::string(what) + ": table must cover all " +
                                std::to_string(expected) + " functions, got " +
                                std::to_string(table.size()));
  }
  for (const auto& row : table) {
    if (row.size() != x.size()) {
      throw std::invalid_argument(std::string(what) + ": table row width must equal |X|");
    }
    for (Elem v : row) {
      if (v < 0 || v >= lattice->size()) {
        throw std::invalid_argument(std::string(what) + ": table value out of lattice range");
      }
    }
  }
}

// Decodes the lexicographic function index into the function's values.
std::vector<Elem> decode_function(std::size_t index, std::size_t domain_size, int lattice_size) {
  std::vector<Elem> values(domain_size);
  for (std::size_t pos = domain_size; pos > 0; --pos) {
    values[pos - 1] = static_cast<Elem>(index % lattice_size);
    index /= lattice_size;
  }
  return values;
}

template <typename Table>
ValidationReport validate_operator_table(const Table& t, const char* subject, bool per_point) {
  ValidationReport report(subject);
  const Lattice& lat = *t.lattice();
  const std::size_t nx = t.space().size();
  const std::size_t count = t.function_count();

  {
    bool ok = true;
    std::string witness;
    for (Elem a = 0; a < lat.size() && ok; ++a) {
      FuzzySet image = t.apply(constant_set(t.space(), a, t.lattice()));
      for (std::size_t x = 0; x < nx && ok; ++x) {
        if (image.value(x) != a) {
          ok = false;
          witness = "a=" + lat.label(a) + ", x=" + t.space().label(x);
        }
      }
    }
    report.record("constants fixed", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (std::size_t fi = 0; fi < count && ok; ++fi) {
      const std::vector<Elem> f = decode_function(fi, nx, lat.size());
      for (std::size_t x = 0; x < nx && ok; ++x) {
        if (!lat.leq(t.value(fi, x), f[x])) {
          ok = false;
          witness = "f index " + std::to_string(fi) + ", x=" + t.space().label(x) +
                    (per_point ? std::string(": p_x(f) > f(x)") : std::string(": i(f) > f"));
        }
      }
    }
    report.record("contractive", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    const int base = lat.size();
    for (std::size_t fi = 0; fi < count && ok; ++fi) {
      const std::vector<Elem> f = decode_function(fi, nx, base);
      for (std::size_t gi = 0; gi < count && ok; ++gi) {
        const std::vector<Elem> g = decode_function(gi, nx, base);
        std::size_t mi = 0;
        for (std::size_t x = 0; x < nx; ++x) {
          mi = mi * base + static_cast<std::size_t>(lat.meet(f[x], g[x]));
        }
        for (std::size_t x = 0; x < nx && ok; ++x) {
          if (t.value(mi, x) != lat.meet(t.value(fi, x), t.value(gi, x))) {
            ok = false;
            witness = "f index " + std::to_string(fi) + ", g index " + std::to_string(gi) +
                      ", x=" + t.space().label(x);
          }
        }
      }
    }
    report.record("binary meets preserved", ok, witness);
  }
  return report;
}

}  // namespace

Pretopology::Pretopology(FiniteSet x, LatticePtr lattice, std::vector<std::vector<Elem>> table)
    : x_(std::move(x)), lattice_(std::move(lattice)), table_(std::move(table)) {
  check_table(x_, lattice_, table_, "pretopology");
}

Elem Pretopology::value(std::size_t f_index, std::size_t x) const {
  return table_.at(f_index).at(x);
}

FuzzySet Pretopology::apply(const FuzzySet& f) const {
  if (f.domain() != x_) throw std::invalid_argument("pretopology: f must live on X");
  if (f.lattice() != lattice_ && !f.lattice()->same_algebra(*lattice_)) {
    throw std::invalid_argument("pretopology: f uses a different lattice");
  }
  return FuzzySet(x_, table_.at(function_index(f)), lattice_);
}

bool Pretopology::operator==(const Pretopology& other) const {
  return x_ == other.x_ && table_ == other.table_ &&
         (lattice_ == other.lattice_ || lattice_->same_algebra(*other.lattice_));
}

CechInterior::CechInterior(FiniteSet x, LatticePtr lattice, std::vector<std::vector<Elem>> table)
    : x_(std::move(x)), lattice_(std::move(lattice)), table_(std::move(table)) {
  check_table(x_, lattice_, table_, "interior");
}

Elem CechInterior::value(std::size_t f_index, std::size_t x) const {
  return table_.at(f_index).at(x);
}

FuzzySet CechInterior::apply(const FuzzySet& f) const {
  if (f.domain() != x_) throw std::invalid_argument("interior: f must live on X");
  if (f.lattice() != lattice_ && !f.lattice()->same_algebra(*lattice_)) {
    throw std::invalid_argument("interior: f uses a different lattice");
  }
  return FuzzySet(x_, table_.at(function_index(f)), lattice_);
}

bool CechInterior::operator==(const CechInterior& other) const {
  return x_ == other.x_ && table_ == other.table_ &&
         (lattice_ == other.lattice_ || lattice_->same_algebra(*other.lattice_));
}

ValidationReport validate_pretopology(const Pretopology& s) {
  return validate_operator_table(s, "pretopology", /*per_point=*/true);
}

ValidationReport validate_interior(const CechInterior& i) {
  return validate_operator_table(i, "interior", /*per_point=*/false);
}

CechInterior interior_from_pretopology(const Pretopology& s) {
  return CechInterior(s.space(), s.lattice(), s.table());
}

Pretopology pretopology_from_interior(const CechInterior& i) {
  return Pretopology(i.space(), i.lattice(), i.table());
}

namespace {

std::vector<std::vector<Elem>> partition_table(const FuzzyPartition& p,
                                               const QuantifierConfig& config) {
  if (!is_valid_partition(p)) {
    throw std::invalid_argument("partition-induced operator: input partition is invalid");
  }
  QuantifierConfig exhaustive = config;
  exhaustive.sampling = false;  // the table must be total
  const FunctionSpace space = FunctionSpace::build(p.space(), p.lattice(), exhaustive);
  std::vector<std::vector<Elem>> table;
  table.reserve(space.size());
  for (const FuzzySet& f : space.functions()) {
    const FuzzySet transformed = lower_ftransform(p, f);
    std::vector<Elem> row(p.space().size());
    for (std::size_t x = 0; x < p.space().size(); ++x) row[x] = transformed.value(p.xi()[x]);
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace

Pretopology pretopology_from_partition(const FuzzyPartition& p, const QuantifierConfig& config) {
  return Pretopology(p.space(), p.lattice(), partition_table(p, config));
}

CechInterior interior_from_partition(const FuzzyPartition& p, const QuantifierConfig& config) {
  return CechInterior(p.space(), p.lattice(), partition_table(p, config));
}

FuzzyRelation qua_relation_from_pretopology(const Pretopology& s) {
  const Lattice& lat = *s.lattice();
  const std::size_t n = s.space().size();
  std::vector<Elem> entries(n * n);
  for (std::size_t xp = 0; xp < n; ++xp) {
    const FuzzySet co = coatom(s.space(), xp, s.lattice());
    const FuzzySet image = s.apply(co);
    for (std::size_t x = 0; x < n; ++x) entries[x * n + xp] = lat.neg(image.value(x));
  }
  return FuzzyRelation(s.space(), s.space(), std::move(entries), s.lattice());
}

CechInterior identity_interior(const FiniteSet& x, const LatticePtr& lattice,
                               const QuantifierConfig& config) {
  QuantifierConfig exhaustive = config;
  exhaustive.sampling = false;
  const FunctionSpace space = FunctionSpace::build(x, lattice, exhaustive);
  std::vector<std::vector<Elem>> table;
  table.reserve(space.size());
  for (const FuzzySet& f : space.functions()) {
    table.emplace_back(f.values().begin(), f.values().end());
  }
  return CechInterior(x, lattice, std::move(table));
}

CechInterior indiscrete_interior(const FiniteSet& x, const LatticePtr& lattice,
                                 const QuantifierConfig& config) {
  QuantifierConfig exhaustive = config;
  exhaustive.sampling = false;
  const FunctionSpace space = FunctionSpace::build(x, lattice, exhaustive);
  std::vector<std::vector<Elem>> table;
  table.reserve(space.size());
  for (const FuzzySet& f : space.functions()) {
    const Elem m = lattice->fold_meet(f.values());
    table.emplace_back(x.size(), m);
  }
  return CechInterior(x, lattice, std::move(table));
}

}  // namespace lfuzz
