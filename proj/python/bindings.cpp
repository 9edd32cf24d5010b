#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aibomkit/cli.hpp"
#include "aibomkit/compliance.hpp"
#include "aibomkit/fixtures.hpp"
#include "aibomkit/serialization.hpp"
#include "aibomkit/validator.hpp"

namespace py = pybind11;
using namespace aibomkit;

namespace {

// JSON crosses the boundary as text; the Python side parses it with `json`.
std::string to_text(const nlohmann::json& j) { return j.dump(); }

ProfileSet profiles_for(const SpdxDocument& doc, const std::string& profile) {
    if (profile == "auto") return ProfileSet::from_document(doc);
    return ProfileSet::from_tokens(std::vector<std::string>{profile});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Native core of aibomkit";

    py::register_exception<Error>(m, "AibomError", PyExc_ValueError);

    m.def("canonicalize", [](const std::string& text) { return canonicalize(text); }, py::arg("text"));

    m.def(
        "validate",
        [](const std::string& text, const std::string& profile) {
            const auto doc = read_document(text).document;
            const auto diags = validate_document(doc, profiles_for(doc, profile));
            return py::make_tuple(std::string(to_string(verdict(diags))), to_text(diagnostics_to_json(diags)));
        },
        py::arg("text"), py::arg("profile") = "auto",
        "Returns (verdict, diagnostics as JSON text).");

    m.def(
        "report",
        [](const std::string& text, const std::string& framework, const std::string& format) {
            const auto fmt = parse_report_format(format);
            if (!fmt) throw Error("unknown report format '" + format + "'");
            const auto report = assess(read_document(text).document, load_framework(framework));
            return render_report(report, *fmt);
        },
        py::arg("text"), py::arg("framework"), py::arg("format") = "json");

    m.def("framework_ids", &framework_ids);

    m.def(
        "scaffold", [](const std::string& kind) { return write_document(scaffold_document(kind)); },
        py::arg("kind"));

    m.def("fixture_names", &fixture_names);
    m.def(
        "fixture_text", [](const std::string& name) { return std::string(fixture_bytes(name)); },
        py::arg("name"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Returns (exit code, stdout, stderr).");
}
