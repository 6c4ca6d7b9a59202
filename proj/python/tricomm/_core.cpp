// Python bindings.  Every function returns a JSON document as a string; the
// package wrapper decodes it, so Python sees the same schema as the CLI.

#include "tricomm/io.hpp"
#include "tricomm/moduli.hpp"
#include "tricomm/report.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;
using namespace tricomm;

namespace {

std::string datum_json(const std::string& group) {
    const RootDatum& d = datum(parse_group(group));
    Json j;
    j["type"] = type_to_json(d.type);
    j["h"] = d.h;
    j["g"] = d.g;
    j["dual_coxeter"] = dual_coxeter(d.type);
    j["diagram"] = diagram_to_json(d.diagram());
    return j.dump();
}

std::string quotient_json(const std::string& group, const std::string& center) {
    const RootDatum& d = datum(parse_group(group));
    CenterSubgroup sub = parse_center(d, center);
    AffineDiagram q = quotient(d.diagram(), sub.automorphisms());
    auto cls = classify(q);
    Json j;
    j["group"] = d.type.name();
    j["center"] = center_label(d, sub);
    j["structure"] = sub.structure();
    j["diagram"] = diagram_to_json(q);
    j["classified"] = cls.type ? canonical(*cls.type).name() : "unrecognized";
    return j.dump();
}

std::string components_json(const std::string& group, const std::string& center) {
    const RootDatum& d = datum(parse_group(group));
    CenterSubgroup sub = parse_center(d, center);
    auto cs = sub.is_cyclic() ? components(d, sub) : noncyclic_components(d.rank() / 2);
    return components_to_json(cs).dump();
}

std::string rank_zero_json(int k, bool central, int max_rank) {
    Json a = Json::array();
    for (const auto& e : rank_zero_list(k, central, max_rank)) a.push_back({e.type.name(), e.center});
    return a.dump();
}

std::string render(const std::string& group, const std::string& center) {
    const RootDatum& d = datum(parse_group(group));
    CenterSubgroup sub = parse_center(d, center);
    return render_diagram(quotient(d.diagram(), sub.automorphisms()));
}

std::string tables_json(int max_rank) {
    Json a = Json::array();
    for (const auto& t : paper_tables(max_rank)) a.push_back(table_to_json(t));
    return a.dump();
}

std::string check_all_json(int max_rank) { return check_all(max_rank).json().dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Extended coroot diagrams, center quotients and moduli of commuting triples";
    m.attr("schema_version") = kSchemaVersion;

    m.def("datum", &datum_json, py::arg("group"), "Catalog datum of a group spec such as 'E8' or 'Spin(12)'");
    m.def("quotient", &quotient_json, py::arg("group"), py::arg("center") = "trivial",
          "Quotient of the extended coroot diagram by a center subgroup");
    m.def("components", &components_json, py::arg("group"), py::arg("center") = "trivial",
          "Components of the moduli space with their invariants");
    m.def("rank_zero", &rank_zero_json, py::arg("k"), py::arg("central") = false, py::arg("max_rank") = 12,
          "Groups admitting a rank-zero triple of order k");
    m.def("render", &render, py::arg("group"), py::arg("center") = "trivial", "ASCII drawing of a (quotient) diagram");
    m.def("paper_tables", &tables_json, py::arg("max_rank") = 12, "The regenerated diagram and root-system tables");
    m.def("check_all", &check_all_json, py::arg("max_rank") = 12, py::call_guard<py::gil_scoped_release>(),
          "Every cross-check over the catalog");

    py::register_exception<std::invalid_argument>(m, "SpecError", PyExc_ValueError);
}
