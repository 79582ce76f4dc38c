#include "rbx/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace rbx;

namespace {

std::optional<Input> optional_input(const std::string& path) {
    if (path.empty()) {
        return std::nullopt;
    }
    return Input::from_file(path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rota-Baxter Lie algebra extensions: cohomology, inducibility and Wells maps"};
    app.require_subcommand(1);

    std::string file;
    std::string rep;
    std::string cocycle;
    std::string extension;
    std::string section;
    std::string a;
    std::string b;
    std::string pair;
    std::string witness;
    std::string alpha;
    std::string beta;
    std::string output;
    std::size_t degree = 2;
    std::optional<std::uint64_t> budget;

    auto* validate = app.add_subcommand("validate", "Check an algebra, representation, cocycle or extension file");
    validate->add_option("file", file, "Definition file")->required();

    auto* cohomology = app.add_subcommand("cohomology", "Dimensions of Z^n, B^n, H^n of the combined complex");
    cohomology->add_option("--rep", rep, "Representation file")->required();
    cohomology->add_option("--degree", degree, "Degree n >= 1")->capture_default_str();

    auto* derivations = app.add_subcommand("derivations", "Basis of Der(g_T, h_S)");
    derivations->add_option("--rep", rep, "Representation file")->required();

    auto* extend = app.add_subcommand("extend", "Build the extension of a non-abelian cocycle");
    extend->add_option("--cocycle", cocycle, "Cocycle file")->required();
    extend->add_option("-o,--output", output, "Write the extension here instead of standard output");

    auto* extract = app.add_subcommand("extract", "Read off the cocycle of an extension");
    extract->add_option("--extension", extension, "Extension file")->required();
    extract->add_option("--section", section, "Section file {\"s\": matrix}; canonical if omitted");

    auto* equivalent = app.add_subcommand("equivalent", "Decide equivalence of two cocycles or two extensions");
    equivalent->add_option("--a", a, "First cocycle or extension file")->required();
    equivalent->add_option("--b", b, "Second file of the same kind")->required();

    auto* inducible = app.add_subcommand("inducible", "Decide whether (beta, alpha) is inducible");
    inducible->add_option("--extension", extension, "Extension file")->required();
    inducible->add_option("--pair", pair, "Pair file {\"beta\", \"alpha\"}")->required();
    inducible->add_option("--witness", witness, "Witness file {\"lambda\": matrix} to check and lift");

    auto* wells = app.add_subcommand("wells", "Triviality of the Wells class of a pair");
    wells->add_option("--extension", extension, "Extension file")->required();
    auto* wp = wells->add_option("--pair", pair, "Pair file");
    auto* wa = wells->add_option("--alpha", alpha, "File {\"alpha\": matrix}; beta = id");
    auto* wb = wells->add_option("--beta", beta, "File {\"beta\": matrix}; alpha = id");
    wp->excludes(wa)->excludes(wb);
    wa->excludes(wb);

    auto* exactness = app.add_subcommand("exactness", "Enumerate Aut_h and check the Wells exact sequences");
    exactness->add_option("--extension", extension, "Extension file")->required();
    exactness->add_option("--budget", budget, "Enumeration budget (default RBX_BUDGET or 6561)");

    auto* semidirect = app.add_subcommand("semidirect", "Split extension g ⋉ h of a representation");
    semidirect->add_option("--rep", rep, "Representation file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cout << dump_json(Json{{"error", e.what()}});
        return kExitInputError;
    }

    CommandResult r = guarded([&]() -> CommandResult {
        if (*validate) {
            return cmd_validate(Input::from_file(file));
        }
        if (*cohomology) {
            return cmd_cohomology(Input::from_file(rep), degree);
        }
        if (*derivations) {
            return cmd_derivations(Input::from_file(rep));
        }
        if (*extend) {
            return cmd_extend(Input::from_file(cocycle));
        }
        if (*extract) {
            return cmd_extract(Input::from_file(extension), optional_input(section));
        }
        if (*equivalent) {
            return cmd_equivalent(Input::from_file(a), Input::from_file(b));
        }
        if (*inducible) {
            return cmd_inducible(Input::from_file(extension), Input::from_file(pair), optional_input(witness));
        }
        if (*wells) {
            if (!pair.empty()) {
                return cmd_wells(Input::from_file(extension), Input::from_file(pair), WellsKind::Pair);
            }
            if (!alpha.empty()) {
                return cmd_wells(Input::from_file(extension), Input::from_file(alpha), WellsKind::Alpha);
            }
            if (!beta.empty()) {
                return cmd_wells(Input::from_file(extension), Input::from_file(beta), WellsKind::Beta);
            }
            return {kExitInputError, Json{{"error", "wells needs one of --pair, --alpha, --beta"}}};
        }
        if (*exactness) {
            return cmd_exactness(Input::from_file(extension), resolve_budget(budget));
        }
        return cmd_semidirect(Input::from_file(rep));
    });

    if (r.exit_code == kExitOk && *extend && !output.empty()) {
        std::ofstream out(output, std::ios::binary);
        if (!out) {
            std::cerr << "rbx: cannot write " << output << "\n";
            std::cout << dump_json(Json{{"error", "cannot write " + output}});
            return kExitInputError;
        }
        out << dump_json(r.payload);
        std::cout << dump_json(Json{{"output", output}});
        return kExitOk;
    }
    if (r.exit_code >= kExitInputError && r.payload.contains("error")) {
        std::cerr << "rbx: " << r.payload["error"].get<std::string>() << "\n";
    }
    std::cout << dump_json(r.payload);
    return r.exit_code;
}
