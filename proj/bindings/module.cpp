#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lfuzz/json_io.hpp"
#include "lfuzz/suites.hpp"

namespace py = pybind11;
using namespace lfuzz;

namespace {

std::vector<Elem> flatten(const std::vector<std::vector<Elem>>& rows) {
  std::vector<Elem> flat;
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

// The object and arrow variants cross the boundary as plain Python objects;
// std::variant casting would need default-constructible alternatives.
AnyObject to_any(py::handle h) {
  if (py::isinstance<FuzzyPartition>(h)) return h.cast<FuzzyPartition>();
  if (py::isinstance<LowerTransformationSystem>(h)) return h.cast<LowerTransformationSystem>();
  if (py::isinstance<Pretopology>(h)) return h.cast<Pretopology>();
  if (py::isinstance<CechInterior>(h)) return h.cast<CechInterior>();
  throw py::type_error("expected a partition, transformation system, pretopology or interior");
}

py::object from_any(const AnyObject& obj) {
  return std::visit([](const auto& o) { return py::cast(o); }, obj);
}

std::variant<MorphismPair, CrispMorphism> to_arrow(py::handle h) {
  if (py::isinstance<MorphismPair>(h)) return h.cast<MorphismPair>();
  if (py::isinstance<CrispMorphism>(h)) return h.cast<CrispMorphism>();
  throw py::type_error("expected a MorphismPair or CrispMorphism");
}

py::object from_arrow(const std::variant<MorphismPair, CrispMorphism>& arrow) {
  return std::visit([](const auto& a) { return py::cast(a); }, arrow);
}

}  // namespace

PYBIND11_MODULE(lfuzz, m) {
  m.doc() = "finite lattice-valued fuzzy structures: partitions, lower transforms, "
            "pretopologies, interiors, and machine-checked category laws";

  py::register_exception<QuantifierBudgetError>(m, "QuantifierBudgetError", PyExc_RuntimeError);
  py::register_exception<CrispnessError>(m, "CrispnessError", PyExc_ValueError);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("passed", &CheckResult::passed)
      .def_readonly("witness", &CheckResult::witness)
      .def_readonly("exhaustive", &CheckResult::exhaustive)
      .def("__repr__", [](const CheckResult& c) {
        return "<" + std::string(c.passed ? "PASS " : "FAIL ") + c.name +
               (c.passed ? "" : " @ " + c.witness) + ">";
      });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_property_readonly("subject", &ValidationReport::subject)
      .def_property_readonly("checks", &ValidationReport::checks)
      .def("passed", &ValidationReport::passed)
      .def("failure_count", &ValidationReport::failure_count)
      .def("to_json", [](const ValidationReport& r) { return io::report_to_json(r).dump(2); })
      .def("__repr__", [](const ValidationReport& r) {
        return "<ValidationReport " + r.subject() + ": " +
               (r.passed() ? "pass" : std::to_string(r.failure_count()) + " failure(s)") + ">";
      });

  py::enum_<BinOp>(m, "BinOp")
      .value("MEET", BinOp::Meet)
      .value("JOIN", BinOp::Join)
      .value("STAR", BinOp::Star)
      .value("HASH", BinOp::Hash);

  py::class_<Lattice, std::shared_ptr<Lattice>>(m, "Lattice")
      .def_static("lukasiewicz_chain", &Lattice::lukasiewicz_chain, py::arg("n"),
                  "the (n+1)-element chain {0, 1/n, ..., 1}")
      .def_static("from_tables", &Lattice::from_tables, py::arg("labels"), py::arg("leq"),
                  py::arg("star"), py::arg("hash"), py::arg("neg"))
      .def("__len__", &Lattice::size)
      .def_property_readonly("bottom", &Lattice::bottom)
      .def_property_readonly("top", &Lattice::top)
      .def("leq", &Lattice::leq)
      .def("meet", &Lattice::meet)
      .def("join", &Lattice::join)
      .def("star", &Lattice::star)
      .def("hash", &Lattice::hash)
      .def("neg", &Lattice::neg)
      .def("fold_meet", [](const Lattice& l, std::vector<Elem> es) { return l.fold_meet(es); })
      .def("fold_join", [](const Lattice& l, std::vector<Elem> es) { return l.fold_join(es); })
      .def("label", &Lattice::label, py::return_value_policy::copy)
      .def_property_readonly("labels", &Lattice::labels)
      .def("find_label", &Lattice::find_label)
      .def("same_algebra", &Lattice::same_algebra)
      .def("__repr__", [](const Lattice& l) {
        return "<Lattice |L|=" + std::to_string(l.size()) + ">";
      });
  m.def("validate_lattice", &validate_lattice);

  py::class_<FiniteSet>(m, "FiniteSet")
      .def(py::init<std::string, std::vector<std::string>>(), py::arg("name"),
           py::arg("elements"))
      .def_property_readonly("name", &FiniteSet::name)
      .def_property_readonly("elements", &FiniteSet::elements)
      .def("__len__", &FiniteSet::size)
      .def("index_of", &FiniteSet::index_of)
      .def(py::self == py::self)
      .def("__repr__", [](const FiniteSet& s) {
        return "<FiniteSet " + s.name() + " |" + std::to_string(s.size()) + "|>";
      });
  m.def("enumerated_set", &enumerated_set, py::arg("name"), py::arg("prefix"), py::arg("count"));

  py::class_<FuzzySet>(m, "FuzzySet")
      .def(py::init<FiniteSet, std::vector<Elem>, LatticePtr>(), py::arg("domain"),
           py::arg("values"), py::arg("lattice"))
      .def_property_readonly("domain", &FuzzySet::domain)
      .def_property_readonly("lattice", &FuzzySet::lattice)
      .def_property_readonly("values",
                             [](const FuzzySet& f) {
                               return std::vector<Elem>(f.values().begin(), f.values().end());
                             })
      .def_property_readonly("labels",
                             [](const FuzzySet& f) {
                               std::vector<std::string> out;
                               for (std::size_t i = 0; i < f.size(); ++i) {
                                 out.push_back(f.lattice()->label(f.value(i)));
                               }
                               return out;
                             })
      .def("__len__", &FuzzySet::size)
      .def(py::self == py::self)
      .def("__repr__", [](const FuzzySet& f) { return io::format_fuzzyset(f); });

  py::class_<FuzzyRelation>(m, "FuzzyRelation")
      .def(py::init([](FiniteSet source, FiniteSet target, std::vector<std::vector<Elem>> rows,
                       LatticePtr lattice) {
             return FuzzyRelation(std::move(source), std::move(target), flatten(rows),
                                  std::move(lattice));
           }),
           py::arg("source"), py::arg("target"), py::arg("rows"), py::arg("lattice"))
      .def_property_readonly("source", &FuzzyRelation::source)
      .def_property_readonly("target", &FuzzyRelation::target)
      .def_property_readonly("lattice", &FuzzyRelation::lattice)
      .def("at", &FuzzyRelation::at)
      .def(py::self == py::self);

  m.def("pointwise", &pointwise);
  m.def("negate", &negate);
  m.def("pointwise_leq", &pointwise_leq);
  m.def("constant_set", &constant_set);
  m.def("characteristic", [](const FiniteSet& domain, std::vector<std::string> subset,
                             LatticePtr lattice) { return characteristic(domain, subset, lattice); });
  m.def("coatom",
        [](const FiniteSet& domain, std::string_view label, LatticePtr lattice) {
          return coatom(domain, label, lattice);
        });
  m.def("core", &core);
  m.def("is_normal", &is_normal);
  m.def("compose_sup_star", &compose_sup_star);
  m.def("compose_inf_hash", &compose_inf_hash);
  m.def("backward_powerset", &backward_powerset);
  m.def("identity_relation", &identity_relation);
  m.def("co_identity_relation", &co_identity_relation);
  m.def("make_identity_pair", &make_identity_pair);
  m.def("function_index", &function_index);

  py::class_<QuantifierConfig>(m, "QuantifierConfig")
      .def(py::init([](std::size_t budget, bool sampling, std::size_t sample_count,
                       std::uint64_t seed) {
             return QuantifierConfig{budget, sampling, sample_count, seed};
           }),
           py::arg("budget") = 10000, py::arg("sampling") = false, py::arg("sample_count") = 64,
           py::arg("seed") = 1)
      .def_readwrite("budget", &QuantifierConfig::budget)
      .def_readwrite("sampling", &QuantifierConfig::sampling)
      .def_readwrite("sample_count", &QuantifierConfig::sample_count)
      .def_readwrite("seed", &QuantifierConfig::seed);

  py::class_<FunctionSpace>(m, "FunctionSpace")
      .def_static("build", &FunctionSpace::build, py::arg("domain"), py::arg("lattice"),
                  py::arg("config") = QuantifierConfig{})
      .def_property_readonly("exhaustive", &FunctionSpace::exhaustive)
      .def_property_readonly("functions", &FunctionSpace::functions)
      .def("__len__", &FunctionSpace::size);

  py::class_<FuzzyPartition>(m, "FuzzyPartition")
      .def(py::init([](FiniteSet x, FiniteSet j, std::vector<std::vector<Elem>> membership,
                       std::vector<std::size_t> xi, LatticePtr lattice) {
             FuzzyRelation rel(j, x, flatten(membership), std::move(lattice));
             return FuzzyPartition(std::move(x), std::move(j), std::move(rel), std::move(xi));
           }),
           py::arg("X"), py::arg("J"), py::arg("membership"), py::arg("xi"), py::arg("lattice"))
      .def_property_readonly("space", &FuzzyPartition::space)
      .def_property_readonly("index_set", &FuzzyPartition::index_set)
      .def_property_readonly("membership", &FuzzyPartition::membership)
      .def_property_readonly("xi", &FuzzyPartition::xi)
      .def_property_readonly("lattice", &FuzzyPartition::lattice)
      .def("block", &FuzzyPartition::block)
      .def(py::self == py::self);
  m.def("validate_partition", &validate_partition);
  m.def("lower_ftransform", &lower_ftransform);
  m.def("check_ftransform_properties", &check_ftransform_properties, py::arg("partition"),
        py::arg("config") = QuantifierConfig{});

  py::class_<LowerTransformationSystem>(m, "LowerTransformationSystem")
      .def(py::init([](FiniteSet x, FiniteSet y, std::vector<std::size_t> v,
                       std::vector<std::vector<Elem>> kernel, LatticePtr lattice) {
             FuzzyRelation rel(y, x, flatten(kernel), std::move(lattice));
             return LowerTransformationSystem(std::move(x), std::move(y), std::move(v),
                                              std::move(rel));
           }),
           py::arg("X"), py::arg("Y"), py::arg("v"), py::arg("kernel"), py::arg("lattice"))
      .def_property_readonly("space", &LowerTransformationSystem::space)
      .def_property_readonly("target", &LowerTransformationSystem::target)
      .def_property_readonly("v", &LowerTransformationSystem::v)
      .def_property_readonly("kernel", &LowerTransformationSystem::kernel)
      .def(py::self == py::self);
  m.def("apply_lts", &apply_lts);
  m.def("lts_from_partition", &lts_from_partition);
  m.def("partition_from_lts", &partition_from_lts);
  m.def("validate_lts", &validate_lts, py::arg("system"), py::arg("config") = QuantifierConfig{});

  py::class_<Pretopology>(m, "Pretopology")
      .def_property_readonly("space", &Pretopology::space)
      .def_property_readonly("lattice", &Pretopology::lattice)
      .def_property_readonly("table", &Pretopology::table)
      .def("apply", &Pretopology::apply)
      .def("__len__", &Pretopology::function_count)
      .def(py::self == py::self);
  py::class_<CechInterior>(m, "CechInterior")
      .def_property_readonly("space", &CechInterior::space)
      .def_property_readonly("lattice", &CechInterior::lattice)
      .def_property_readonly("table", &CechInterior::table)
      .def("apply", &CechInterior::apply)
      .def("__len__", &CechInterior::function_count)
      .def(py::self == py::self);
  m.def("validate_pretopology", &validate_pretopology);
  m.def("validate_interior", &validate_interior);
  m.def("interior_from_pretopology", &interior_from_pretopology);
  m.def("pretopology_from_interior", &pretopology_from_interior);
  m.def("pretopology_from_partition", &pretopology_from_partition, py::arg("partition"),
        py::arg("config") = QuantifierConfig{});
  m.def("interior_from_partition", &interior_from_partition, py::arg("partition"),
        py::arg("config") = QuantifierConfig{});
  m.def("qua_relation_from_pretopology", &qua_relation_from_pretopology);
  m.def("identity_interior", &identity_interior, py::arg("X"), py::arg("lattice"),
        py::arg("config") = QuantifierConfig{});
  m.def("indiscrete_interior", &indiscrete_interior, py::arg("X"), py::arg("lattice"),
        py::arg("config") = QuantifierConfig{});

  py::enum_<CategoryTag>(m, "CategoryTag")
      .value("QUA", CategoryTag::Qua)
      .value("LSPACEFP", CategoryTag::LSpaceFP)
      .value("LFTRANS", CategoryTag::LFtransDown)
      .value("LFPRTOP", CategoryTag::LFPrTop)
      .value("LFCINT", CategoryTag::LFCInt);

  py::class_<QuaObject>(m, "QuaObject")
      .def(py::init<FiniteSet, FiniteSet, FuzzyRelation>(), py::arg("questions"),
           py::arg("answers"), py::arg("success"))
      .def_readonly("questions", &QuaObject::questions)
      .def_readonly("answers", &QuaObject::answers)
      .def_readonly("success", &QuaObject::success)
      .def(py::self == py::self);

  py::class_<MorphismPair>(m, "MorphismPair")
      .def(py::init([](CategoryTag tag, FuzzyRelation forward, FuzzyRelation backward) {
             return MorphismPair{tag, std::move(forward), std::move(backward)};
           }),
           py::arg("tag"), py::arg("forward"), py::arg("backward"))
      .def_readonly("tag", &MorphismPair::tag)
      .def_readonly("forward", &MorphismPair::forward)
      .def_readonly("backward", &MorphismPair::backward)
      .def(py::self == py::self);

  py::class_<CrispMorphism>(m, "CrispMorphism")
      .def_readonly("tag", &CrispMorphism::tag)
      .def_readonly("forward_fn", &CrispMorphism::forward_fn)
      .def_readonly("backward_fn", &CrispMorphism::backward_fn)
      .def(py::self == py::self);
  m.def("make_crisp_morphism",
        py::overload_cast<CategoryTag, FiniteSet, FiniteSet, FiniteSet, FiniteSet,
                          std::vector<std::size_t>, std::vector<std::size_t>>(
            &make_crisp_morphism));
  m.def("identity_crisp_morphism", &identity_crisp_morphism);

  m.def("compose_pairs",
        py::overload_cast<const MorphismPair&, const MorphismPair&>(&compose));
  m.def("identity_pair", &identity_pair);
  m.def("check_qua_morphism", &check_qua_morphism);
  m.def("check_fpmap", &check_fpmap);
  m.def("check_lts_morphism", &check_lts_morphism, py::arg("h1"), py::arg("h2"), py::arg("pair"),
        py::arg("config") = QuantifierConfig{});
  m.def("check_pretop_morphism", &check_pretop_morphism, py::arg("s1"), py::arg("s2"),
        py::arg("pair"), py::arg("config") = QuantifierConfig{});
  m.def("check_interior_morphism", &check_interior_morphism, py::arg("i1"), py::arg("i2"),
        py::arg("pair"), py::arg("config") = QuantifierConfig{});
  m.def("embed_qua_partition", &embed_qua_partition);
  m.def("embed_qua_pretopology", &embed_qua_pretopology);
  m.def("crisp_to_pair", &crisp_to_pair);
  m.def("pair_to_crisp", &pair_to_crisp);

  py::enum_<FunctorId>(m, "FunctorId")
      .value("F1", FunctorId::F1)
      .value("F1_PRIME", FunctorId::F1Prime)
      .value("F2", FunctorId::F2)
      .value("F2_PRIME", FunctorId::F2Prime)
      .value("F3", FunctorId::F3)
      .value("F3_PRIME", FunctorId::F3Prime)
      .value("F4", FunctorId::F4)
      .value("F4_PRIME", FunctorId::F4Prime)
      .value("F5", FunctorId::F5)
      .value("F5_PRIME", FunctorId::F5Prime)
      .value("F6", FunctorId::F6)
      .value("F6_PRIME", FunctorId::F6Prime)
      .value("F7", FunctorId::F7)
      .value("F8", FunctorId::F8)
      .value("F9", FunctorId::F9)
      .value("F10", FunctorId::F10);

  py::class_<Morphism>(m, "Morphism")
      .def(py::init([](py::object arrow, py::object source, py::object target) {
             return Morphism{to_arrow(arrow), to_any(source), to_any(target)};
           }),
           py::arg("arrow"), py::arg("source"), py::arg("target"))
      .def_property_readonly("arrow", [](const Morphism& m) { return from_arrow(m.arrow); })
      .def_property_readonly("source", [](const Morphism& m) { return from_any(m.source); })
      .def_property_readonly("target", [](const Morphism& m) { return from_any(m.target); })
      .def(py::self == py::self);

  m.def(
      "identity_morphism",
      [](py::object obj, bool crisp) { return identity_morphism(to_any(obj), crisp); },
      py::arg("obj"), py::arg("crisp") = false);
  m.def("compose_morphisms", &compose_morphisms);
  m.def("validate_morphism", &validate_morphism, py::arg("m"),
        py::arg("config") = QuantifierConfig{});
  m.def(
      "validate_object",
      [](py::object obj, const QuantifierConfig& config) {
        return validate_object(to_any(obj), config);
      },
      py::arg("obj"), py::arg("config") = QuantifierConfig{});
  m.def(
      "apply_functor_object",
      [](FunctorId id, py::object obj, const QuantifierConfig& config) {
        return from_any(apply_functor_object(id, to_any(obj), config));
      },
      py::arg("id"), py::arg("obj"), py::arg("config") = QuantifierConfig{});
  m.def("apply_functor", &apply_functor, py::arg("id"), py::arg("m"),
        py::arg("config") = QuantifierConfig{});
  m.def(
      "check_functor_laws",
      [](FunctorId id, std::vector<Morphism> sample, const QuantifierConfig& config) {
        return check_functor_laws(id, sample, config);
      },
      py::arg("id"), py::arg("sample"), py::arg("config") = QuantifierConfig{});
  m.def(
      "check_isomorphism",
      [](FunctorId a, FunctorId b, std::vector<Morphism> fwd, std::vector<Morphism> bwd,
         const QuantifierConfig& config) { return check_isomorphism(a, b, fwd, bwd, config); },
      py::arg("a"), py::arg("b"), py::arg("forward_samples"), py::arg("backward_samples"),
      py::arg("config") = QuantifierConfig{});
  m.def(
      "check_diagram_fig2",
      [](std::vector<Morphism> fp, std::vector<Morphism> lts, const QuantifierConfig& config) {
        return check_diagram_fig2(fp, lts, config);
      },
      py::arg("lspacefp_samples"), py::arg("lftrans_samples"),
      py::arg("config") = QuantifierConfig{});

  py::enum_<AdjunctionKind>(m, "AdjunctionKind")
      .value("F3", AdjunctionKind::F3)
      .value("F6", AdjunctionKind::F6);
  py::class_<AdjunctionSample>(m, "AdjunctionSample")
      .def(py::init([](py::object c, py::object d, MorphismPair pair) {
             return AdjunctionSample{to_any(c), to_any(d), std::move(pair)};
           }),
           py::arg("c_object"), py::arg("d_object"), py::arg("into_gd"));
  m.def(
      "check_adjunction",
      [](AdjunctionKind kind, std::vector<AdjunctionSample> samples,
         std::vector<Morphism> naturality, const QuantifierConfig& config) {
        return check_adjunction(kind, samples, naturality, config);
      },
      py::arg("kind"), py::arg("samples"), py::arg("naturality_morphisms"),
      py::arg("config") = QuantifierConfig{});

  py::class_<SuiteConfig>(m, "SuiteConfig")
      .def(py::init([](LatticePtr lattice, std::size_t max_x, QuantifierConfig quant,
                       std::uint64_t seed) {
             return SuiteConfig{std::move(lattice), max_x, quant, seed};
           }),
           py::arg("lattice"), py::arg("max_x") = 3, py::arg("quant") = QuantifierConfig{},
           py::arg("seed") = 1)
      .def_readwrite("max_x", &SuiteConfig::max_x)
      .def_readwrite("quant", &SuiteConfig::quant)
      .def_readwrite("seed", &SuiteConfig::seed);
  py::class_<SuiteResult>(m, "SuiteResult")
      .def_readonly("id", &SuiteResult::id)
      .def_readonly("report", &SuiteResult::report)
      .def_readonly("seconds", &SuiteResult::seconds);
  m.def("suite_ids", &suite_ids);
  m.def("run_suite", &run_suite);
  m.def("run_suites", [](std::vector<std::string> ids, const SuiteConfig& config) {
    return run_suites(ids, config);
  });

  auto io_mod = m.def_submodule("io", "JSON loading and saving");
  io_mod.def("lattice_from_spec", &io::lattice_from_spec);
  io_mod.def("load_lattice",
             [](const std::string& text) { return io::load_lattice(io::json::parse(text)); });
  io_mod.def("save_lattice",
             [](const Lattice& lat) { return io::save_lattice(lat).dump(2); });
  io_mod.def("load_partition", [](const std::string& text, const LatticePtr& lat) {
    return io::load_partition(io::json::parse(text), lat);
  });
  io_mod.def("save_partition",
             [](const FuzzyPartition& p) { return io::save_partition(p).dump(2); });
  io_mod.def("load_lts", [](const std::string& text, const LatticePtr& lat) {
    return io::load_lts(io::json::parse(text), lat);
  });
  io_mod.def("save_lts",
             [](const LowerTransformationSystem& h) { return io::save_lts(h).dump(2); });
  io_mod.def("parse_value_list", &io::parse_value_list);
  io_mod.def("format_fuzzyset", &io::format_fuzzyset);
}
