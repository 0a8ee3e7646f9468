#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hyperdyn/report.hpp"
#include "hyperdyn/scenario.hpp"

namespace hyperdyn {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitPrecondition = 2, kExitWindowOverflow = 3 };

struct CommandRequest {
    std::string command;
    std::vector<std::string> args;
    std::uint64_t seed = 0;
};

/// Runs one command against a validated scenario, filling `report` with rows
/// and a summary. Library exceptions propagate.
///
///   axioms                              verify_axioms up to run.triple_bound
///   haar                                weights and invariance residuals
///   norm <fn>                           Luxemburg, Amemiya and the sandwich
///   aperiodic <set>                     sequence, strong and center checks
///   probe <thm33|thm22|center|hereditary> <set>
///   witness <f> <g>
///   orbit <f> [targets...]              targets default to every function
int run_command(const Scenario& scenario, const CommandRequest& request, Report& report);

struct CliOptions {
    std::string scenario_path;
    CommandRequest request;
    std::optional<std::string> out_path;
    ReportFormat format = ReportFormat::Records;
    /// Fixed header timestamp; the wall clock is used when empty.
    std::optional<std::string> timestamp;
};

/// Loads the scenario, runs the command and writes the report to `out_path`
/// or `out`. Diagnostics go to `err`. Returns the process exit code.
int run_cli(const CliOptions& options, std::ostream& out, std::ostream& err);

}  // namespace hyperdyn
