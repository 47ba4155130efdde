#include "lfuzz/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace lfuzz {

std::string_view to_string(BinOp op) {
  switch (op) {
    case BinOp::Meet: return "meet";
    case BinOp::Join: return "join";
    case BinOp::Star: return "star";
    case BinOp::Hash: return "hash";
  }
  return "?";
}

namespace {

std::string fraction_label(int k, int n) {
  if (k == 0) return "0";
  if (k == n) return "1";
  int g = std::gcd(k, n);
  return std::to_string(k / g) + "/" + std::to_string(n / g);
}

// Largest lower bound / least upper bound of {a, b} under `leq`, or -1 when
// no such element exists (flagged later by validate_lattice).
Elem bound_of(const std::vector<std::uint8_t>& leq, int n, Elem a, Elem b, bool lower) {
  auto le = [&](Elem x, Elem y) { return leq[static_cast<std::size_t>(x) * n + y] != 0; };
  Elem best = -1;
  for (Elem c = 0; c < n; ++c) {
    bool is_bound = lower ? (le(c, a) && le(c, b)) : (le(a, c) && le(b, c));
    if (!is_bound) continue;
    if (best == -1) {
      best = c;
    } else if (lower ? le(best, c) : le(c, best)) {
      best = c;
    }
  }
  if (best == -1) return -1;
  // `best` must actually dominate every bound, not just the ones seen so far.
  for (Elem c = 0; c < n; ++c) {
    bool is_bound = lower ? (le(c, a) && le(c, b)) : (le(a, c) && le(b, c));
    if (is_bound && !(lower ? le(c, best) : le(best, c))) return -1;
  }
  return best;
}

}  // namespace

int Lattice::at(Elem a) const {
  if (a < 0 || a >= n_) {
    throw std::invalid_argument("lattice element index " + std::to_string(a) +
                                " out of range for carrier of size " + std::to_string(n_));
  }
  return a;
}

LatticePtr Lattice::lukasiewicz_chain(int n) {
  if (n < 1) throw std::invalid_argument("lukasiewicz_chain requires n >= 1");
  const int size = n + 1;
  std::vector<std::string> labels;
  labels.reserve(size);
  for (int k = 0; k < size; ++k) labels.push_back(fraction_label(k, n));

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(size) * size);
  std::vector<Elem> star(leq.size()), hash(leq.size()), neg(size);
  for (int a = 0; a < size; ++a) {
    neg[a] = n - a;
    for (int b = 0; b < size; ++b) {
      const std::size_t i = static_cast<std::size_t>(a) * size + b;
      leq[i] = a <= b ? 1 : 0;
      star[i] = std::max(0, a + b - n);
      hash[i] = std::min(n, a + b);
    }
  }
  return from_tables(std::move(labels), std::move(leq), std::move(star), std::move(hash),
                     std::move(neg));
}

LatticePtr Lattice::from_tables(std::vector<std::string> labels, std::vector<std::uint8_t> leq,
                                std::vector<Elem> star, std::vector<Elem> hash,
                                std::vector<Elem> neg) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw std::invalid_argument("lattice carrier must be nonempty");
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  if (leq.size() != nn || star.size() != nn || hash.size() != nn || neg.size() != labels.size()) {
    throw std::invalid_argument("lattice table sizes do not match carrier size");
  }
  for (Elem v : star) {
    if (v < 0 || v >= n) throw std::invalid_argument("star table entry out of range");
  }
  for (Elem v : hash) {
    if (v < 0 || v >= n) throw std::invalid_argument("hash table entry out of range");
  }
  for (Elem v : neg) {
    if (v < 0 || v >= n) throw std::invalid_argument("neg table entry out of range");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && labels[a] == labels[b]) {
        throw std::invalid_argument("duplicate carrier label '" + labels[a] + "'");
      }
    }
  }

  auto lat = std::shared_ptr<Lattice>(new Lattice());
  lat->n_ = n;
  lat->labels_ = std::move(labels);
  lat->leq_ = std::move(leq);
  lat->star_ = std::move(star);
  lat->hash_ = std::move(hash);
  lat->neg_ = std::move(neg);

  lat->meet_.resize(nn);
  lat->join_.resize(nn);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem m = bound_of(lat->leq_, n, a, b, /*lower=*/true);
      Elem j = bound_of(lat->leq_, n, a, b, /*lower=*/false);
      lat->meet_[static_cast<std::size_t>(a) * n + b] = m == -1 ? 0 : m;
      lat->join_[static_cast<std::size_t>(a) * n + b] = j == -1 ? 0 : j;
    }
  }

  auto le = [&](Elem x, Elem y) { return lat->leq_[static_cast<std::size_t>(x) * n + y] != 0; };
  lat->bottom_ = 0;
  lat->top_ = 0;
  for (Elem c = 0; c < n; ++c) {
    bool is_bottom = true, is_top = true;
    for (Elem d = 0; d < n; ++d) {
      is_bottom = is_bottom && le(c, d);
      is_top = is_top && le(d, c);
    }
    if (is_bottom) lat->bottom_ = c;
    if (is_top) lat->top_ = c;
  }
  return lat;
}

Elem Lattice::apply(BinOp op, Elem a, Elem b) const {
  switch (op) {
    case BinOp::Meet: return meet(a, b);
    case BinOp::Join: return join(a, b);
    case BinOp::Star: return star(a, b);
    case BinOp::Hash: return hash(a, b);
  }
  throw std::invalid_argument("unknown binary operation");
}

Elem Lattice::fold_meet(std::span<const Elem> elems) const {
  Elem acc = top_;
  for (Elem e : elems) acc = meet(acc, e);
  return acc;
}

Elem Lattice::fold_join(std::span<const Elem> elems) const {
  Elem acc = bottom_;
  for (Elem e : elems) acc = join(acc, e);
  return acc;
}

std::optional<Elem> Lattice::find_label(std::string_view label) const {
  for (int i = 0; i < n_; ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

bool Lattice::same_algebra(const Lattice& other) const {
  return n_ == other.n_ && leq_ == other.leq_ && star_ == other.star_ && hash_ == other.hash_ &&
         neg_ == other.neg_;
}

namespace {

class LawChecker {
 public:
  LawChecker(const Lattice& lat, ValidationReport& report) : lat_(lat), report_(report) {}

  template <typename Pred, typename Witness>
  void pairs(std::string name, Pred&& pred, Witness&& witness) {
    const int n = lat_.size();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (!pred(a, b)) {
          report_.record(std::move(name), false, witness(a, b));
          return;
        }
      }
    }
    report_.record(std::move(name), true);
  }

  template <typename Pred, typename Witness>
  void triples(std::string name, Pred&& pred, Witness&& witness) {
    const int n = lat_.size();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (!pred(a, b, c)) {
            report_.record(std::move(name), false, witness(a, b, c));
            return;
          }
        }
      }
    }
    report_.record(std::move(name), true);
  }

 private:
  const Lattice& lat_;
  ValidationReport& report_;
};

}  // namespace

ValidationReport validate_lattice(const Lattice& lat) {
  ValidationReport report("lattice");
  LawChecker check(lat, report);
  const int n = lat.size();
  auto L = [&](Elem a) { return lat.label(a); };
  auto w2 = [&](Elem a, Elem b) { return "a=" + L(a) + ", b=" + L(b); };
  auto w3 = [&](Elem a, Elem b, Elem c) { return "a=" + L(a) + ", b=" + L(b) + ", c=" + L(c); };

  // Partial order with global bounds.
  {
    bool ok = true;
    std::string witness;
    for (Elem a = 0; a < n && ok; ++a) {
      if (!lat.leq(a, a)) {
        ok = false;
        witness = "a=" + L(a);
      }
    }
    report.record("leq reflexive", ok, witness);
  }
  check.pairs(
      "leq antisymmetric", [&](Elem a, Elem b) { return !(lat.leq(a, b) && lat.leq(b, a) && a != b); },
      w2);
  check.triples(
      "leq transitive",
      [&](Elem a, Elem b, Elem c) { return !(lat.leq(a, b) && lat.leq(b, c)) || lat.leq(a, c); }, w3);
  {
    bool ok = true;
    std::string witness;
    for (Elem a = 0; a < n && ok; ++a) {
      if (!lat.leq(lat.bottom(), a)) {
        ok = false;
        witness = "a=" + L(a);
      }
    }
    report.record("global bottom", ok, witness);
    ok = true;
    witness.clear();
    for (Elem a = 0; a < n && ok; ++a) {
      if (!lat.leq(a, lat.top())) {
        ok = false;
        witness = "a=" + L(a);
      }
    }
    report.record("global top", ok, witness);
  }
  check.triples(
      "meet is binary infimum",
      [&](Elem a, Elem b, Elem c) {
        Elem m = lat.meet(a, b);
        if (!(lat.leq(m, a) && lat.leq(m, b))) return false;
        return !(lat.leq(c, a) && lat.leq(c, b)) || lat.leq(c, m);
      },
      w3);
  check.triples(
      "join is binary supremum",
      [&](Elem a, Elem b, Elem c) {
        Elem j = lat.join(a, b);
        if (!(lat.leq(a, j) && lat.leq(b, j))) return false;
        return !(lat.leq(a, c) && lat.leq(b, c)) || lat.leq(j, c);
      },
      w3);

  // (L, star, 1) commutative monoid, monotone, distributing over joins.
  check.pairs(
      "star commutative", [&](Elem a, Elem b) { return lat.star(a, b) == lat.star(b, a); }, w2);
  check.triples(
      "star associative",
      [&](Elem a, Elem b, Elem c) { return lat.star(lat.star(a, b), c) == lat.star(a, lat.star(b, c)); },
      w3);
  {
    bool ok = true;
    std::string witness;
    for (Elem a = 0; a < n && ok; ++a) {
      if (lat.star(lat.top(), a) != a) {
        ok = false;
        witness = "a=" + L(a);
      }
    }
    report.record("star identity 1", ok, witness);
  }
  check.triples(
      "star monotone",
      [&](Elem a, Elem b, Elem c) { return !lat.leq(a, b) || lat.leq(lat.star(a, c), lat.star(b, c)); },
      w3);
  check.triples(
      "star distributes over join",
      [&](Elem a, Elem b, Elem c) {
        return lat.star(a, lat.join(b, c)) == lat.join(lat.star(a, b), lat.star(a, c));
      },
      w3);
  {
    bool ok = true;
    std::string witness;
    for (Elem a = 0; a < n && ok; ++a) {
      if (lat.star(a, lat.bottom()) != lat.bottom()) {
        ok = false;
        witness = "a=" + L(a);
      }
    }
    report.record("star annihilates 0", ok, witness);
  }

  // (L, hash, 0) commutative monoid, monotone, distributing over meets.
  check.pairs(
      "hash commutative", [&](Elem a, Elem b) { return lat.hash(a, b) == lat.hash(b, a); }, w2);
  check.triples(
      "hash associative",
      [&](Elem a, Elem b, Elem c) { return lat.hash(lat.hash(a, b), c) == lat.hash(a, lat.hash(b, c)); },
      w3);
  {
    bool ok = true;
    std::string witness;
    for (Elem a = 0; a < n && ok; ++a) {
      if (lat.hash(lat.bottom(), a) != a) {
        ok = false;
        witness = "a=" + L(a);
      }
    }
    report.record("hash identity 0", ok, witness);
  }
  check.triples(
      "hash monotone",
      [&](Elem a, Elem b, Elem c) { return !lat.leq(a, b) || lat.leq(lat.hash(a, c), lat.hash(b, c)); },
      w3);
  check.triples(
      "hash distributes over meet",
      [&](Elem a, Elem b, Elem c) {
        return lat.hash(a, lat.meet(b, c)) == lat.meet(lat.hash(a, b), lat.hash(a, c));
      },
      w3);
  {
    bool ok = true;
    std::string witness;
    for (Elem a = 0; a < n && ok; ++a) {
      if (lat.hash(a, lat.top()) != lat.top()) {
        ok = false;
        witness = "a=" + L(a);
      }
    }
    report.record("hash absorbs 1", ok, witness);
  }

  // Involutive negator tying the two monoids together.
  check.pairs(
      "neg antitone", [&](Elem a, Elem b) { return !lat.leq(a, b) || lat.leq(lat.neg(b), lat.neg(a)); },
      w2);
  {
    bool ok = lat.neg(lat.bottom()) == lat.top() && lat.neg(lat.top()) == lat.bottom();
    report.record("neg swaps bounds", ok, ok ? "" : "neg(0) or neg(1)");
    bool inv = true;
    std::string witness;
    for (Elem a = 0; a < n && inv; ++a) {
      if (lat.neg(lat.neg(a)) != a) {
        inv = false;
        witness = "a=" + L(a);
      }
    }
    report.record("neg involutive", inv, witness);
  }
  check.triples(
      "absorption",
      [&](Elem a, Elem b, Elem c) { return lat.leq(lat.star(lat.hash(a, b), c), lat.hash(a, lat.star(b, c))); },
      w3);
  check.pairs(
      "neg duality",
      [&](Elem a, Elem b) { return lat.star(lat.neg(a), lat.neg(b)) == lat.neg(lat.hash(a, b)); }, w2);

  return report;
}

}  // namespace lfuzz
