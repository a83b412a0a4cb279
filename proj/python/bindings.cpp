#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "morse_orbit/analysis.hpp"
#include "morse_orbit/group_spec.hpp"

namespace py = pybind11;
using namespace morse_orbit;

namespace {

py::object loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

AnalysisOptions make_options(const std::string& group, unsigned prime, const std::string& collection,
                             unsigned threads, std::size_t max_order) {
  AnalysisOptions o;
  o.group_spec = group;
  o.prime = prime;
  o.collection_spec = collection;
  o.threads = threads;
  o.max_order = max_order;
  return o;
}

}  // namespace

PYBIND11_MODULE(_morse_orbit, m) {
  m.doc() = "Morse matchings on orbit spaces of p-subgroup complexes";

  py::register_exception<Error>(m, "Error");

  py::class_<FiniteGroup>(m, "Group")
      .def(py::init([](const std::string& spec, std::size_t max_order) { return parse_group_spec(spec, max_order); }),
           py::arg("spec"), py::arg("max_order") = kDefaultMaxOrder)
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("degree", &FiniteGroup::degree)
      .def("elements", [](const FiniteGroup& g) {
        std::vector<std::string> out;
        for (const auto& p : g.elements()) out.push_back(p.to_cycle_string());
        return out;
      });

  m.def(
      "analyze",
      [](const std::string& group, unsigned prime, const std::string& collection, bool fusion, unsigned threads,
         std::size_t max_order) {
        auto o = make_options(group, prime, collection, threads, max_order);
        o.fusion = fusion;
        std::string text;
        {
          py::gil_scoped_release release;
          text = run_analysis(o).report.to_json();
        }
        return loads(text);
      },
      py::arg("group"), py::arg("prime"), py::arg("collection") = "all", py::arg("fusion") = false,
      py::arg("threads") = 1, py::arg("max_order") = kDefaultMaxOrder,
      "Run the full analysis and return the JSON report as a dict.");

  m.def(
      "homology",
      [](const std::string& group, unsigned prime, const std::string& collection, unsigned threads) {
        auto report = run_analysis(make_options(group, prime, collection, threads, kDefaultMaxOrder)).report;
        return loads(report.homology_json());
      },
      py::arg("group"), py::arg("prime"), py::arg("collection") = "all", py::arg("threads") = 1);

  m.def(
      "export_dot",
      [](const std::string& group, unsigned prime, const std::string& collection) {
        auto result = run_analysis(make_options(group, prime, collection, 1, kDefaultMaxOrder));
        if (!result.digraph) throw Error(ErrorCode::MatchingInvalid, "no digraph: the matching failed");
        return to_dot(*result.digraph);
      },
      py::arg("group"), py::arg("prime"), py::arg("collection") = "all");

  m.def(
      "fusion_compare",
      [](const std::string& group, unsigned prime, const std::string& collection) {
        return loads(run_fusion_comparison(make_options(group, prime, collection, 1, kDefaultMaxOrder)).to_json());
      },
      py::arg("group"), py::arg("prime"), py::arg("collection") = "all");

  m.def(
      "smith_normal_form",
      [](const std::vector<std::vector<std::int64_t>>& rows) {
        IntegerMatrix a(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (rows[r].size() != a.cols) throw Error(ErrorCode::IndexOutOfRange, "ragged matrix");
          for (std::size_t c = 0; c < a.cols; ++c) a.at(r, c) = rows[r][c];
        }
        auto form = smith_normal_form(a);
        py::list factors;
        for (const auto& f : form.invariant_factors) factors.append(py::int_(py::str(f.str())));
        return py::make_tuple(form.rank, factors);
      },
      py::arg("matrix"), "Rank and invariant factors of an integer matrix.");
}
