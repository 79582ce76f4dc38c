#include "rbx/commands.hpp"
#include "rbx/errors.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>
#include <optional>
#include <utility>

namespace py = pybind11;
using namespace rbx;

namespace {

/// A document handed over from Python: file path or JSON text.
struct Doc {
    std::string text;
    bool is_path = false;
};

Input load(const Doc& d) { return d.is_path ? Input::from_file(d.text) : Input::from_text(d.text); }

std::optional<Input> load(const std::optional<Doc>& d) {
    if (!d) {
        return std::nullopt;
    }
    return load(*d);
}

std::pair<int, std::string> run(const std::function<CommandResult()>& body) {
    CommandResult r;
    {
        py::gil_scoped_release release;
        r = guarded(body);
    }
    return {r.exit_code, r.payload.dump()};
}

} // namespace

PYBIND11_MODULE(_rbx, m) {
    m.doc() = "Rota-Baxter Lie algebra extensions: exact cohomology, inducibility and Wells maps";

    py::class_<Doc>(m, "Doc")
        .def(py::init<std::string, bool>(), py::arg("text"), py::arg("is_path") = false)
        .def_readonly("text", &Doc::text)
        .def_readonly("is_path", &Doc::is_path);

    m.attr("EXIT_OK") = static_cast<int>(kExitOk);
    m.attr("EXIT_NEGATIVE") = static_cast<int>(kExitNegative);
    m.attr("EXIT_UNDECIDED") = static_cast<int>(kExitUndecided);
    m.attr("EXIT_INPUT_ERROR") = static_cast<int>(kExitInputError);
    m.attr("EXIT_BUDGET") = static_cast<int>(kExitBudget);
    m.attr("EXIT_INTERNAL") = static_cast<int>(kExitInternal);
    m.attr("DEFAULT_BUDGET") = kDefaultBudget;

    m.def("validate", [](const Doc& d) { return run([&] { return cmd_validate(load(d)); }); });
    m.def("cohomology", [](const Doc& rep, std::size_t degree) {
        return run([&] { return cmd_cohomology(load(rep), degree); });
    }, py::arg("rep"), py::arg("degree") = 2);
    m.def("derivations", [](const Doc& rep) { return run([&] { return cmd_derivations(load(rep)); }); });
    m.def("extend", [](const Doc& c) { return run([&] { return cmd_extend(load(c)); }); });
    m.def("extract", [](const Doc& x, const std::optional<Doc>& s) {
        return run([&] { return cmd_extract(load(x), load(s)); });
    }, py::arg("extension"), py::arg("section") = std::nullopt);
    m.def("equivalent", [](const Doc& a, const Doc& b) {
        return run([&] { return cmd_equivalent(load(a), load(b)); });
    });
    m.def("inducible", [](const Doc& x, const Doc& pair, const std::optional<Doc>& witness) {
        return run([&] { return cmd_inducible(load(x), load(pair), load(witness)); });
    }, py::arg("extension"), py::arg("pair"), py::arg("witness") = std::nullopt);
    m.def("wells", [](const Doc& x, const Doc& arg, const std::string& kind) {
        return run([&]() -> CommandResult {
            if (kind == "pair") {
                return cmd_wells(load(x), load(arg), WellsKind::Pair);
            }
            if (kind == "alpha") {
                return cmd_wells(load(x), load(arg), WellsKind::Alpha);
            }
            if (kind == "beta") {
                return cmd_wells(load(x), load(arg), WellsKind::Beta);
            }
            throw ParseError("wells: kind must be pair, alpha or beta, got \"" + kind + "\"");
        });
    }, py::arg("extension"), py::arg("arg"), py::arg("kind") = "pair");
    m.def("exactness", [](const Doc& x, std::optional<std::uint64_t> budget) {
        return run([&] { return cmd_exactness(load(x), resolve_budget(budget)); });
    }, py::arg("extension"), py::arg("budget") = std::nullopt);
    m.def("semidirect", [](const Doc& rep) { return run([&] { return cmd_semidirect(load(rep)); }); });
}
