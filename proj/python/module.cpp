#include <algorithm>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symtern/symtern.hpp"

namespace py = pybind11;
using namespace symtern;

namespace {

py::tuple quartet_tuple(const QuartetSystem& q, const Quartet& quartet) {
  const auto& t = q.taxa();
  return py::make_tuple(py::make_tuple(t.name(quartet.a()), t.name(quartet.b())),
                        py::make_tuple(t.name(quartet.c()), t.name(quartet.d())));
}

py::list quartet_list(const QuartetSystem& q) {
  py::list out;
  for (const auto& m : q.members()) out.append(quartet_tuple(q, m));
  return out;
}

StarMode star_mode(bool strict) { return strict ? StarMode::Strict : StarMode::Loose; }

}  // namespace

PYBIND11_MODULE(symtern, m) {
  m.doc() = "Symbolic ternary metrics and symbolically dated phylogenetic trees";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<LookupError>(m, "LookupError", error);
  py::register_exception<SizeError>(m, "SizeError", error);
  py::register_exception<DomainError>(m, "DomainError", error);
  py::register_exception<CompletenessError>(m, "CompletenessError", error);
  py::register_exception<ConflictError>(m, "ConflictError", error);
  py::register_exception<AlphabetError>(m, "AlphabetError", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  auto validation = py::register_exception<ValidationError>(m, "ValidationError", error);
  py::register_exception<ColorError>(m, "ColorError", validation);
  py::register_exception<NotAMetricError>(m, "NotAMetricError", error);

  py::class_<TernaryMap>(m, "TernaryMap")
      .def(py::init([](const std::vector<std::string>& taxa, const std::vector<Symbol>& symbols,
                       const std::vector<std::tuple<std::string, std::string, std::string, Symbol>>&
                           triples) {
             std::vector<TripleEntry> entries;
             for (const auto& [x, y, z, s] : triples) entries.push_back({{x, y, z}, s});
             return build_ternary(TaxonSet(taxa), SymbolAlphabet(symbols), entries);
           }),
           py::arg("taxa"), py::arg("symbols"), py::arg("triples"),
           "Build a map from (x, y, z, symbol) tuples covering every 3-subset.")
      .def_static("constant", [](const std::vector<std::string>& taxa, const Symbol& value) {
        return constant_map(TaxonSet(taxa), value);
      })
      .def_static("from_table", [](const std::string& text) { return read_triple_table(text); })
      .def("to_table", &write_triple_table)
      .def_property_readonly("taxa", [](const TernaryMap& map) { return map.taxa().names(); })
      .def_property_readonly("symbols",
                             [](const TernaryMap& map) { return map.alphabet().symbols(); })
      .def("get",
           [](const TernaryMap& map, const std::string& x, const std::string& y,
              const std::string& z) {
             return map.get(x, y, z).value_or(std::string(kEmptySymbolText));
           })
      .def("restrict",
           [](const TernaryMap& map, const std::vector<std::string>& subset) {
             return map.restrict(subset);
           })
      .def("__len__", &TernaryMap::size)
      .def("__eq__", [](const TernaryMap& a, const TernaryMap& b) { return a == b; })
      .def("__repr__", [](const TernaryMap& map) {
        return "<TernaryMap on " + std::to_string(map.size()) + " taxa>";
      });

  py::class_<ColoredTree>(m, "Tree")
      .def_static("from_newick", &parse_newick)
      .def("to_newick", &write_newick)
      .def("to_dot", &write_dot)
      .def_property_readonly("taxa", [](const ColoredTree& t) { return t.taxa().names(); })
      .def_property_readonly("is_binary",
                             [](const ColoredTree& t) { return t.topology().is_binary(); })
      .def_property_readonly("is_discriminating", &is_discriminating)
      .def("isomorphic", &trees_isomorphic)
      .def("displayed_quartets",
           [](const ColoredTree& t) { return quartet_list(displayed_quartets(t.topology())); })
      .def("pseudo_cherries", [](const ColoredTree& t) { return pseudo_cherries(t.topology()); })
      .def("__repr__", [](const ColoredTree& t) { return "<Tree " + write_newick(t) + ">"; });

  m.def("encode", &encode, py::arg("tree"), "Triple map of a colored tree.");
  m.def(
      "reconstruct",
      [](const TernaryMap& map) {
        auto r = reconstruct(map);
        return py::make_tuple(r.tree, r.trace);
      },
      py::arg("map"), "Tree and contraction trace; raises NotAMetricError on failure.");

  m.def(
      "verify",
      [](const TernaryMap& map, bool star, bool strict_star, bool fail_fast) {
        VerifyOptions o;
        o.check_star = star;
        o.star_mode = star_mode(strict_star);
        o.fail_fast = fail_fast;
        const auto report = verify_metric(map, o);
        py::list violations;
        for (const auto& v : report.violations) {
          violations.append(py::make_tuple(std::string(1, v.condition), v.subset, v.detail));
        }
        py::dict out;
        out["metric"] = report.verdict;
        out["fully_resolved"] = report.fully_resolved;
        out["violations"] = violations;
        out["report"] = format_report(report);
        return out;
      },
      py::arg("map"), py::kw_only(), py::arg("star") = false, py::arg("strict_star") = true,
      py::arg("fail_fast") = false);

  m.def("quartets", [](const TernaryMap& map) { return quartet_list(generate_quartets(map)); },
        py::arg("map"), "Quartets generated by the map, as ((a, b), (c, d)) tuples.");
  m.def("check_binary", &check_binary, py::arg("map"));
  m.def(
      "classify_k5",
      [](const TernaryMap& map, const std::vector<std::string>& five) {
        std::vector<std::size_t> idx;
        for (const auto& t : five) idx.push_back(map.taxa().index(t));
        std::sort(idx.begin(), idx.end());
        return std::string(to_string(classify_k5(map, idx)));
      },
      py::arg("map"), py::arg("subset"));
  m.def(
      "equivalence_classes",
      [](const TernaryMap& map) {
        py::list out;
        const auto classes = delta_equivalence_classes(map);
        for (const auto& c : classes.classes) {
          std::vector<std::string> names;
          for (std::size_t i : c.members) names.push_back(map.taxa().name(i));
          std::optional<Symbol> symbol;
          if (c.symbol) symbol = map.symbol(*c.symbol);
          out.append(py::make_tuple(names, symbol));
        }
        return out;
      },
      py::arg("map"));

  m.def(
      "enumerate_trees",
      [](std::size_t n) {
        std::vector<std::string> out;
        for (const auto& topo : oracle::enumerate_trees(n).topologies)
          out.push_back(canonical_form(topo));
        return out;
      },
      py::arg("n"), "Canonical forms of all tree shapes on n taxa t1..tn.");
  m.def("find_fig6_like", &oracle::find_fig6_like);
  m.def("selftest", [] {
    py::list lines;
    const bool ok =
        run_acceptance([&](const CriterionResult& r) { lines.append(format_result(r)); });
    return py::make_tuple(ok, lines);
  });
}
