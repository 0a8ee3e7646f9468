#include <CLI11.hpp>

#include <iostream>

#include "hyperdyn/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Finite-horizon checks for weighted translations on discrete hypergroups"};
    hyperdyn::CliOptions options;
    std::string out_path;
    std::string format = "records";

    app.add_option("--scenario", options.scenario_path, "Scenario file (YAML)")->required()->check(CLI::ExistingFile);
    app.add_option("--command", options.request.command,
                   "axioms | haar | norm | aperiodic | probe | witness | orbit")
        ->required();
    app.add_option("--args", options.request.args, "Command arguments (names of sets, functions, theorem ids)")
        ->delimiter(',');
    app.add_option("--out", out_path, "Report file; standard output when omitted");
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"records", "csv"}));
    app.add_option("--seed", options.request.seed, "Seed for randomized probes (haar)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : hyperdyn::kExitPrecondition;
    }
    if (!out_path.empty()) options.out_path = out_path;
    options.format = format == "csv" ? hyperdyn::ReportFormat::Csv : hyperdyn::ReportFormat::Records;
    return hyperdyn::run_cli(options, std::cout, std::cerr);
}
