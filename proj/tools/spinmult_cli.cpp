// spinmult: coupled-spin multiplet tables, eigenstate verification and
// entanglement diagnostics for spin-1/2 particles.

#include "spinmult/coupling.hpp"
#include "spinmult/registry.hpp"
#include "spinmult/reports.hpp"
#include "spinmult/state_file.hpp"
#include "spinmult/table.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace spinmult;

namespace {

double default_tolerance() {
    if (const char* env = std::getenv("SPINMULT_TOL")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("SPINMULT_TOL is not a number: ") + env);
        }
    }
    return kDefaultEigenTolerance;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coupled spin-1/2 multiplets and their entanglement"};
    app.require_subcommand(1);

    std::string tree_spec, target_spec, format = "text", label_text, state_name, file_path;
    double tol = 0.0;
    bool z_branches = false;

    auto* table = app.add_subcommand("table", "Print the coupled basis of a tree");
    table->add_option("tree", tree_spec, "Tree spec, e.g. \"((1 2)(3 4))\"")->required();
    table->add_option("--format", format, "text | json | latex")->check(CLI::IsMember({"text", "json", "latex"}));

    auto* verify = app.add_subcommand("verify", "Check every basis state against the commuting operator set");
    verify->add_option("tree", tree_spec)->required();
    verify->add_option("--tol", tol, "Residual tolerance (default $SPINMULT_TOL or 1e-12)");
    verify->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    auto* measure = app.add_subcommand("measure", "Entanglement report for a named state or a state file");
    auto* name_opt = measure->add_option("name", state_name, "Registry name");
    auto* file_opt = measure->add_option("--file", file_path, "State file (JSON)");
    name_opt->excludes(file_opt);
    measure->add_flag("--branches", z_branches, "Also measure each site in Z and classify 3-qubit branches");

    auto* state = app.add_subcommand("state", "Emit a registry state as a state file");
    state->add_option("name", state_name)->required();

    auto* list = app.add_subcommand("list", "List registry states");

    auto* expand_cmd = app.add_subcommand("expand", "Expand one coupled state");
    expand_cmd->add_option("tree", tree_spec)->required();
    expand_cmd->add_option("--label", label_text, "Internal spins in post-order, then M, e.g. \"1 1 2 0\"")
        ->required();
    expand_cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    auto* recouple_cmd = app.add_subcommand("recouple", "Coefficients of a coupled state in another tree's basis");
    recouple_cmd->add_option("tree", tree_spec)->required();
    recouple_cmd->add_option("target", target_spec)->required();
    recouple_cmd->add_option("--label", label_text)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) {
            std::cout << emit_table(CouplingTree::parse(tree_spec), parse_table_format(format));
            return 0;
        }
        if (verify->parsed()) {
            if (verify->count("--tol") == 0) tol = default_tolerance();
            if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be non-negative");
            VerifyReport report = run_verify(CouplingTree::parse(tree_spec), tol);
            if (format == "json")
                std::cout << to_json(report).dump(2) << '\n';
            else
                std::cout << to_text(report);
            return report.passed ? 0 : 1;
        }
        if (measure->parsed()) {
            NumericState psi;
            if (!file_path.empty())
                psi = to_numeric(parse_state_file(read_file(file_path)));
            else if (!state_name.empty())
                psi = named_state(state_name).to_numeric();
            else
                throw std::invalid_argument("measure needs a state name or --file");
            MeasuresOptions options;
            options.z_branches = z_branches;
            std::cout << to_json(run_measures(psi, options)).dump(2) << '\n';
            return 0;
        }
        if (state->parsed()) {
            std::cout << emit_state_file(named_state(state_name));
            return 0;
        }
        if (list->parsed()) {
            for (const auto& info : named_states()) std::cout << info.name << "\t" << info.description << '\n';
            return 0;
        }
        if (expand_cmd->parsed()) {
            CouplingTree tree = CouplingTree::parse(tree_spec);
            CoupledLabel label = CoupledLabel::parse(tree, label_text);
            ExactState s = expand(label);
            if (format == "text")
                std::cout << '|' << label.to_string() << "> = " << s.to_string() << '\n';
            else
                std::cout << emit_state_file(s);
            return 0;
        }
        if (recouple_cmd->parsed()) {
            CouplingTree tree = CouplingTree::parse(tree_spec);
            CouplingTree target = CouplingTree::parse(target_spec);
            CoupledLabel label = CoupledLabel::parse(tree, label_text);
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& t : recouple(label, target))
                terms.push_back({{"label", t.label.to_string()}, {"coefficient", t.coefficient}});
            nlohmann::json out = {{"source", label.to_string()}, {"source_tree", tree.to_string()},
                                  {"target_tree", target.to_string()}, {"terms", terms}};
            std::cout << out.dump(2) << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
