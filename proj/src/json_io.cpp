#include "lfuzz/json_io.hpp"

#include <fstream>
#include <sstream>

namespace lfuzz::io {

namespace {

/// Accepts both the wrapped form {"key": {...}} and the bare body.
const json& unwrap(const json& j, const char* key) {
  if (j.is_object() && j.contains(key)) return j.at(key);
  return j;
}

Elem parse_elem(const json& j, const Lattice& lat) {
  if (j.is_string()) {
    auto e = lat.find_label(j.get<std::string>());
    if (!e) throw std::invalid_argument("unknown carrier label '" + j.get<std::string>() + "'");
    return *e;
  }
  throw std::invalid_argument("fuzzy values must be carrier label strings");
}

std::vector<Elem> parse_matrix(const json& j, const Lattice& lat, std::size_t rows,
                               std::size_t cols, const char* what) {
  if (!j.is_array() || j.size() != rows) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(rows) + " rows");
  }
  std::vector<Elem> entries;
  entries.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) {
      throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(cols) +
                                  " columns per row");
    }
    for (const auto& cell : row) entries.push_back(parse_elem(cell, lat));
  }
  return entries;
}

json matrix_to_json(const FuzzyRelation& r) {
  json rows = json::array();
  for (std::size_t i = 0; i < r.source().size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < r.target().size(); ++k) {
      row.push_back(r.lattice()->label(r.at(i, k)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t parse_set_index(const json& j, const FiniteSet& s, const char* what) {
  if (j.is_string()) {
    auto i = s.index_of(j.get<std::string>());
    if (!i) {
      throw std::invalid_argument(std::string(what) + ": unknown element label '" +
                                  j.get<std::string>() + "'");
    }
    return *i;
  }
  throw std::invalid_argument(std::string(what) + ": expected an element label string");
}

}  // namespace

LatticePtr load_lattice(const json& root) {
  const json& j = unwrap(root, "lattice");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "lukasiewicz") {
    return Lattice::lukasiewicz_chain(j.at("levels").get<int>());
  }
  if (kind == "table") {
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    const std::size_t n = labels.size();
    auto flat_int = [&](const json& m, const char* what) {
      if (!m.is_array() || m.size() != n) {
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(n) + " rows");
      }
      std::vector<Elem> out;
      out.reserve(n * n);
      for (const auto& row : m) {
        if (!row.is_array() || row.size() != n) {
          throw std::invalid_argument(std::string(what) + ": ragged table");
        }
        for (const auto& cell : row) out.push_back(cell.get<Elem>());
      }
      return out;
    };
    std::vector<Elem> leq_int = flat_int(j.at("leq"), "leq");
    std::vector<std::uint8_t> leq(leq_int.size());
    for (std::size_t i = 0; i < leq_int.size(); ++i) leq[i] = leq_int[i] != 0;
    return Lattice::from_tables(std::move(labels), std::move(leq), flat_int(j.at("star"), "star"),
                                flat_int(j.at("hash"), "hash"),
                                j.at("neg").get<std::vector<Elem>>());
  }
  throw std::invalid_argument("unknown lattice kind '" + kind + "'");
}

json save_lattice(const Lattice& lat) {
  const std::size_t n = static_cast<std::size_t>(lat.size());
  auto table = [&](auto&& get) {
    json rows = json::array();
    for (std::size_t a = 0; a < n; ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < n; ++b) row.push_back(get(a, b));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  json j;
  j["kind"] = "table";
  j["labels"] = lat.labels();
  j["leq"] = table([&](std::size_t a, std::size_t b) {
    return lat.leq(static_cast<Elem>(a), static_cast<Elem>(b)) ? 1 : 0;
  });
  j["star"] = table([&](std::size_t a, std::size_t b) {
    return lat.star(static_cast<Elem>(a), static_cast<Elem>(b));
  });
  j["hash"] = table([&](std::size_t a, std::size_t b) {
    return lat.hash(static_cast<Elem>(a), static_cast<Elem>(b));
  });
  json neg = json::array();
  for (std::size_t a = 0; a < n; ++a) neg.push_back(lat.neg(static_cast<Elem>(a)));
  j["neg"] = std::move(neg);
  return json{{"lattice", std::move(j)}};
}

LatticePtr lattice_from_spec(const std::string& spec) {
  if (spec.rfind("luk:", 0) == 0) {
    const int elements = std::stoi(spec.substr(4));
    if (elements < 2) throw std::invalid_argument("luk:k needs a carrier of at least 2 elements");
    return Lattice::lukasiewicz_chain(elements - 1);
  }
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open lattice file '" + spec + "'");
  return load_lattice(json::parse(in));
}

FiniteSet load_set(const json& root) {
  const json& j = unwrap(root, "set");
  return FiniteSet(j.at("name").get<std::string>(),
                   j.at("elements").get<std::vector<std::string>>());
}

json save_set(const FiniteSet& s) {
  return json{{"name", s.name()}, {"elements", s.elements()}};
}

FuzzySet load_fuzzyset(const json& root, const LatticePtr& lattice) {
  const json& j = unwrap(root, "fuzzyset");
  FiniteSet domain = load_set(j.at("domain"));
  const json& values = j.at("values");
  if (!values.is_array() || values.size() != domain.size()) {
    throw std::invalid_argument("fuzzyset: one value per domain element required");
  }
  std::vector<Elem> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(parse_elem(v, *lattice));
  return FuzzySet(std::move(domain), std::move(out), lattice);
}

json save_fuzzyset(const FuzzySet& f) {
  json values = json::array();
  for (std::size_t i = 0; i < f.size(); ++i) values.push_back(f.lattice()->label(f.value(i)));
  return json{{"fuzzyset", {{"domain", save_set(f.domain())}, {"values", std::move(values)}}}};
}

FuzzyRelation load_relation(const json& root, const LatticePtr& lattice) {
  const json& j = unwrap(root, "relation");
  FiniteSet source = load_set(j.at("source"));
  FiniteSet target = load_set(j.at("target"));
  std::vector<Elem> entries =
      parse_matrix(j.at("entries"), *lattice, source.size(), target.size(), "relation entries");
  return FuzzyRelation(std::move(source), std::move(target), std::move(entries), lattice);
}

json save_relation(const FuzzyRelation& r) {
  return json{{"relation",
               {{"source", save_set(r.source())},
                {"target", save_set(r.target())},
                {"entries", matrix_to_json(r)}}}};
}

FuzzyPartition load_partition(const json& root, const LatticePtr& lattice) {
  const json& j = unwrap(root, "partition");
  FiniteSet x = load_set(j.at("X"));
  FiniteSet js = load_set(j.at("J"));
  std::vector<Elem> membership =
      parse_matrix(j.at("membership"), *lattice, js.size(), x.size(), "partition membership");
  const json& xi_json = j.at("xi");
  if (!xi_json.is_array() || xi_json.size() != x.size()) {
    throw std::invalid_argument("partition xi: one block label per element of X required");
  }
  std::vector<std::size_t> xi;
  xi.reserve(x.size());
  for (const auto& v : xi_json) xi.push_back(parse_set_index(v, js, "partition xi"));
  return FuzzyPartition(x, js, FuzzyRelation(js, x, std::move(membership), lattice),
                        std::move(xi));
}

json save_partition(const FuzzyPartition& p) {
  json xi = json::array();
  for (std::size_t v : p.xi()) xi.push_back(p.index_set().label(v));
  return json{{"partition",
               {{"X", save_set(p.space())},
                {"J", save_set(p.index_set())},
                {"membership", matrix_to_json(p.membership())},
                {"xi", std::move(xi)}}}};
}

LowerTransformationSystem load_lts(const json& root, const LatticePtr& lattice) {
  const json& j = unwrap(root, "lts");
  FiniteSet x = load_set(j.at("X"));
  FiniteSet y = load_set(j.at("Y"));
  std::vector<Elem> kernel =
      parse_matrix(j.at("kernel"), *lattice, y.size(), x.size(), "lts kernel");
  const json& v_json = j.at("v");
  if (!v_json.is_array() || v_json.size() != x.size()) {
    throw std::invalid_argument("lts v: one target label per element of X required");
  }
  std::vector<std::size_t> v;
  v.reserve(x.size());
  for (const auto& entry : v_json) v.push_back(parse_set_index(entry, y, "lts v"));
  return LowerTransformationSystem(x, y, std::move(v),
                                   FuzzyRelation(y, x, std::move(kernel), lattice));
}

json save_lts(const LowerTransformationSystem& h) {
  json v = json::array();
  for (std::size_t value : h.v()) v.push_back(h.target().label(value));
  return json{{"lts",
               {{"X", save_set(h.space())},
                {"Y", save_set(h.target())},
                {"v", std::move(v)},
                {"kernel", matrix_to_json(h.kernel())}}}};
}

namespace {

template <typename Out, typename FromPartition, typename Direct>
Out load_operator_table(const json& root, const char* key, LatticePtr lattice,
                        const QuantifierConfig& config, FromPartition&& from_partition,
                        Direct&& direct) {
  const json& j = unwrap(root, key);
  if (j.contains("from_partition")) {
    if (j.contains("lattice")) lattice = load_lattice(j.at("lattice"));
    if (!lattice) throw std::invalid_argument(std::string(key) + ": no lattice supplied");
    return from_partition(load_partition(j.at("from_partition"), lattice), config);
  }
  if (j.contains("lattice")) lattice = load_lattice(j.at("lattice"));
  if (!lattice) throw std::invalid_argument(std::string(key) + ": no lattice supplied");
  FiniteSet x = load_set(j.at("X"));
  const json& table_json = j.at("table");
  if (!table_json.is_array()) throw std::invalid_argument(std::string(key) + ": table must be an array");
  std::vector<std::vector<Elem>> table;
  table.reserve(table_json.size());
  for (const auto& row : table_json) {
    if (!row.is_array() || row.size() != x.size()) {
      throw std::invalid_argument(std::string(key) + ": each table row needs |X| values");
    }
    std::vector<Elem> out;
    out.reserve(row.size());
    for (const auto& cell : row) out.push_back(parse_elem(cell, *lattice));
    table.push_back(std::move(out));
  }
  return direct(std::move(x), std::move(lattice), std::move(table));
}

template <typename Op>
json save_operator_table(const Op& t, const char* key) {
  json table = json::array();
  for (const auto& row : t.table()) {
    json out = json::array();
    for (Elem v : row) out.push_back(t.lattice()->label(v));
    table.push_back(std::move(out));
  }
  return json{{key,
               {{"X", save_set(t.space())},
                {"lattice", save_lattice(*t.lattice()).at("lattice")},
                {"table", std::move(table)}}}};
}

}  // namespace

Pretopology load_pretopology(const json& root, LatticePtr lattice, const QuantifierConfig& config) {
  return load_operator_table<Pretopology>(
      root, "pretopology", std::move(lattice), config,
      [](const FuzzyPartition& p, const QuantifierConfig& c) {
        return pretopology_from_partition(p, c);
      },
      [](FiniteSet x, LatticePtr lat, std::vector<std::vector<Elem>> table) {
        return Pretopology(std::move(x), std::move(lat), std::move(table));
      });
}

json save_pretopology(const Pretopology& s) { return save_operator_table(s, "pretopology"); }

CechInterior load_interior(const json& root, LatticePtr lattice, const QuantifierConfig& config) {
  return load_operator_table<CechInterior>(
      root, "interior", std::move(lattice), config,
      [](const FuzzyPartition& p, const QuantifierConfig& c) {
        return interior_from_partition(p, c);
      },
      [](FiniteSet x, LatticePtr lat, std::vector<std::vector<Elem>> table) {
        return CechInterior(std::move(x), std::move(lat), std::move(table));
      });
}

json save_interior(const CechInterior& i) { return save_operator_table(i, "interior"); }

QuaObject load_qua_object(const json& root, const LatticePtr& lattice) {
  const json& j = unwrap(root, "qua");
  FiniteSet questions = load_set(j.at("questions"));
  FiniteSet answers = load_set(j.at("answers"));
  std::vector<Elem> success =
      parse_matrix(j.at("success"), *lattice, questions.size(), answers.size(), "qua success");
  return QuaObject(questions, answers,
                   FuzzyRelation(questions, answers, std::move(success), lattice));
}

json save_qua_object(const QuaObject& m) {
  return json{{"qua",
               {{"questions", save_set(m.questions)},
                {"answers", save_set(m.answers)},
                {"success", matrix_to_json(m.success)}}}};
}

LoadedMorphism load_morphism(const json& root, const LatticePtr& lattice,
                             const QuantifierConfig& config) {
  const json& j = unwrap(root, "morphism");
  const CategoryTag tag = category_tag_from_string(j.at("category").get<std::string>());
  FuzzyRelation forward = load_relation(j.at("forward"), lattice);
  FuzzyRelation backward = load_relation(j.at("backward"), lattice);
  MorphismPair pair{tag, std::move(forward), std::move(backward)};
  switch (tag) {
    case CategoryTag::Qua:
      return QuaMorphism{load_qua_object(j.at("source"), lattice),
                         load_qua_object(j.at("target"), lattice), std::move(pair)};
    case CategoryTag::LSpaceFP:
      return Morphism{std::move(pair), load_partition(j.at("source"), lattice),
                      load_partition(j.at("target"), lattice)};
    case CategoryTag::LFtransDown:
      return Morphism{std::move(pair), load_lts(j.at("source"), lattice),
                      load_lts(j.at("target"), lattice)};
    case CategoryTag::LFPrTop:
      return Morphism{std::move(pair), load_pretopology(j.at("source"), lattice, config),
                      load_pretopology(j.at("target"), lattice, config)};
    case CategoryTag::LFCInt:
      return Morphism{std::move(pair), load_interior(j.at("source"), lattice, config),
                      load_interior(j.at("target"), lattice, config)};
  }
  throw std::invalid_argument("unknown morphism category");
}

ValidationReport validate_loaded_morphism(const LoadedMorphism& m, const QuantifierConfig& config) {
  if (const auto* qua = std::get_if<QuaMorphism>(&m)) {
    return check_qua_morphism(qua->source, qua->target, qua->pair);
  }
  return validate_morphism(std::get<Morphism>(m), config);
}

json report_to_json(const ValidationReport& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks()) {
    json entry{{"name", c.name}, {"status", c.passed ? "pass" : "fail"},
               {"exhaustive", c.exhaustive}};
    if (!c.passed) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  return json{{"subject", report.subject()},
              {"passed", report.passed()},
              {"checks", std::move(checks)}};
}

FuzzySet parse_value_list(const std::string& text, const FiniteSet& domain,
                          const LatticePtr& lattice) {
  std::vector<Elem> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const auto begin = token.find_first_not_of(" \t[]");
    const auto end = token.find_last_not_of(" \t[]");
    if (begin == std::string::npos) continue;
    token = token.substr(begin, end - begin + 1);
    auto e = lattice->find_label(token);
    if (!e) throw std::invalid_argument("unknown carrier label '" + token + "'");
    values.push_back(*e);
  }
  if (values.size() != domain.size()) {
    throw std::invalid_argument("expected " + std::to_string(domain.size()) +
                                " values, got " + std::to_string(values.size()));
  }
  return FuzzySet(domain, std::move(values), lattice);
}

std::string format_fuzzyset(const FuzzySet& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out += ", ";
    out += f.lattice()->label(f.value(i));
  }
  out += "]";
  return out;
}

}  // namespace lfuzz::io
