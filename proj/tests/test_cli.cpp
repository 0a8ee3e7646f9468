#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "hyperdyn/commands.hpp"
#include "hyperdyn/errors.hpp"

using namespace hyperdyn;

namespace {

const std::string kScenarioDir = HYPERDYN_SCENARIO_DIR;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("hyperdyn_test_" + name + ".yaml");
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
}

struct Run {
    int code = -1;
    std::string out;
    std::string err;

    std::vector<nlohmann::json> records() const {
        std::vector<nlohmann::json> r;
        std::istringstream in(out);
        for (std::string line; std::getline(in, line);) r.push_back(nlohmann::json::parse(line));
        return r;
    }
    std::string body() const { return out.substr(out.find('\n') + 1); }
};

Run run(const std::string& path, const std::string& command, std::vector<std::string> args = {},
        ReportFormat format = ReportFormat::Records, const std::string& stamp = "2000-01-01T00:00:00Z") {
    CliOptions opt;
    opt.scenario_path = path;
    opt.request.command = command;
    opt.request.args = std::move(args);
    opt.format = format;
    opt.timestamp = stamp;
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(opt, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string scenario(const std::string& name) { return kScenarioDir + "/" + name + ".yaml"; }

std::string replace(std::string text, const std::string& from, const std::string& to) {
    const auto pos = text.find(from);
    EXPECT_NE(pos, std::string::npos) << from;
    return text.replace(pos, from.size(), to);
}

}  // namespace

TEST(Sha256, KnownVectors) {
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(ReportNumber, TwelveSignificantDigits) {
    EXPECT_EQ(number(1.0 / 3.0).get<double>(), 0.333333333333);
    EXPECT_EQ(number(std::ldexp(1.0, -10) / std::sqrt(2.0)).get<double>(), 0.000690533966002);
    EXPECT_EQ(number(0.5).get<double>(), 0.5);
    EXPECT_EQ(number(INFINITY).dump(), "\"inf\"");
    EXPECT_EQ(number(NAN).dump(), "\"nan\"");
}

TEST(Cli, AxiomsOnDunklRamirezPass) {
    const auto r = run(scenario("dr_axioms"), "axioms");
    EXPECT_EQ(r.code, 0) << r.err;
    const auto recs = r.records();
    ASSERT_EQ(recs.size(), 2u);
    EXPECT_EQ(recs[0]["record"], "header");
    EXPECT_EQ(recs[1]["record"], "summary");
    EXPECT_EQ(recs[1]["violations"], 0);
    EXPECT_EQ(recs[1]["verdict"], "pass");
}

TEST(Cli, HereditaryOnSalasHolds) {
    const auto r = run(scenario("salas"), "probe", {"hereditary", "E0"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto recs = r.records();
    int rows = 0;
    for (const auto& rec : recs) {
        if (rec["record"] != "row") continue;
        ++rows;
        const double expected = std::ldexp(1.0, -rec["n"].get<int>());
        EXPECT_NEAR(rec["sup_w_n"].get<double>(), expected, 1e-12);
        EXPECT_NEAR(rec["sup_w~_n"].get<double>(), expected, 1e-12);
    }
    EXPECT_EQ(rows, 20);
    EXPECT_EQ(recs.back()["verdict"], "holds_empirically");
}

TEST(Cli, HereditaryWithUnitWeightFails) {
    const auto r = run(scenario("salas_flat"), "probe", {"hereditary", "E0"});
    EXPECT_EQ(r.code, 1) << r.err;
    EXPECT_EQ(r.records().back()["verdict"], "fails");
}

TEST(Cli, ExitCodesForEveryProbe) {
    for (const char* id : {"thm33", "thm22", "center", "hereditary"}) {
        EXPECT_EQ(run(scenario("salas"), "probe", {id, "E0"}).code, 0) << id;
        EXPECT_EQ(run(scenario("salas_flat"), "probe", {id, "E0"}).code, 1) << id;
    }
    EXPECT_EQ(run(scenario("salas"), "witness", {"f", "g"}).code, 0);
    EXPECT_EQ(run(scenario("salas_flat"), "witness", {"f", "g"}).code, 2);
    EXPECT_EQ(run(scenario("salas"), "orbit", {"h"}).code, 0);
    EXPECT_EQ(run(scenario("su2"), "aperiodic", {"E"}).code, 0);
    EXPECT_EQ(run(scenario("table"), "haar").code, 0);
    EXPECT_EQ(run(scenario("su2"), "norm", {"f"}).code, 0);
}

TEST(Cli, WitnessRowsMatchClosedForm) {
    const auto r = run(scenario("salas"), "witness", {"f", "g"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const auto& rec : r.records()) {
        if (rec["record"] != "row") continue;
        const double expected = std::ldexp(1.0, -rec["n"].get<int>()) / std::sqrt(2.0);
        EXPECT_NEAR(rec["err_target"].get<double>(), expected, 1e-9);
    }
}

TEST(Cli, PreconditionAndValidationExitTwo) {
    const std::string salas = read_file(scenario("salas"));
    EXPECT_EQ(run(write_temp("unknown_key", salas + "extra: 1\n"), "axioms").code, 2);
    EXPECT_EQ(run(write_temp("neg_weight", replace(salas, "high: 0.5", "high: -0.5")), "axioms").code, 2);
    EXPECT_EQ(run(write_temp("bad_label", replace(salas, "E0: [0]", "E0: [99]")), "axioms").code, 2);
    EXPECT_EQ(run(write_temp("bad_yaml", "hypergroup: [unclosed"), "axioms").code, 2);
    EXPECT_EQ(run(scenario("salas"), "probe", {"thm99", "E0"}).code, 2);
    EXPECT_EQ(run(scenario("salas"), "probe", {"center", "missing"}).code, 2);
    EXPECT_EQ(run(scenario("salas"), "norm").code, 2);
    EXPECT_EQ(run(scenario("salas"), "frobnicate").code, 2);
    EXPECT_EQ(run(kScenarioDir + "/does_not_exist.yaml", "axioms").code, 2);
    // Identity eta: the hereditary probe needs a center element.
    EXPECT_EQ(run(scenario("su2"), "probe", {"hereditary", "E"}).code, 2);
    // The center of DR(0.3) is {0}.
    const std::string dr = read_file(scenario("dr_axioms"));
    const auto non_central = replace(dr, "generator: identity", "generator: center_powers\n  params: {z: 1}");
    const auto r = run(write_temp("non_central", non_central), "axioms");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, CorruptTableRejectedOnLoad) {
    const std::string table = read_file(scenario("table"));
    const auto bad = replace(table, "measure: [[0, 0.25], [1, 0.75]]", "measure: [[0, 0.5], [1, 0.75]]");
    const auto r = run(write_temp("corrupt_table", bad), "axioms");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("violates"), std::string::npos) << r.err;
}

TEST(Cli, WindowTooSmallForHorizonExitThree) {
    const std::string salas = read_file(scenario("salas"));
    const auto r = run(write_temp("small_window", replace(salas, "window: 64", "window: 10")), "axioms");
    EXPECT_EQ(r.code, 3);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, BodyIsDeterministic) {
    const std::vector<std::pair<std::string, std::vector<std::string>>> commands = {
        {"axioms", {}}, {"haar", {}}, {"norm", {"h"}}, {"aperiodic", {"E"}}, {"probe", {"thm22", "E0"}},
        {"probe", {"center", "E0"}}, {"witness", {"f", "g"}}, {"orbit", {"h"}}};
    for (const auto& [cmd, args] : commands) {
        for (auto format : {ReportFormat::Records, ReportFormat::Csv}) {
            const auto a = run(scenario("salas"), cmd, args, format, "2000-01-01T00:00:00Z");
            const auto b = run(scenario("salas"), cmd, args, format, "2030-06-15T12:00:00Z");
            EXPECT_NE(a.out, b.out);
            EXPECT_EQ(a.body(), b.body()) << cmd;
        }
    }
}

TEST(Cli, EchoedScenarioReproducesRun) {
    const auto first = run(scenario("salas"), "probe", {"center", "E0"});
    const auto header = first.records().front();
    const std::string text = header["scenario_text"];
    EXPECT_EQ(text, read_file(scenario("salas")));
    EXPECT_EQ(header["scenario_sha256"], sha256_hex(text));
    const auto second = run(write_temp("echo", text), "probe", {"center", "E0"});
    EXPECT_EQ(second.code, first.code);
    EXPECT_EQ(second.body(), first.body());
}

TEST(Cli, EveryRowCarriesMetadata) {
    const auto r = run(scenario("salas"), "probe", {"thm33", "E0"});
    const auto recs = r.records();
    const std::string hash = recs.front()["scenario_sha256"];
    for (std::size_t i = 1; i < recs.size(); ++i) {
        EXPECT_EQ(recs[i]["command"], "probe");
        EXPECT_EQ(recs[i]["scenario"], "salas");
        EXPECT_EQ(recs[i]["scenario_sha256"], hash);
        EXPECT_EQ(recs[i]["convention"], "iterate_exclusive");
        EXPECT_EQ(recs[i]["horizon"], 20);
    }
}

TEST(Cli, NumbersUseAtMostTwelveDigits) {
    const auto r = run(scenario("dr_axioms"), "haar");
    const std::regex num(R"([-+]?(\d+)\.(\d+)(?:[eE][-+]?\d+)?)");
    const std::string body = r.body();
    for (auto it = std::sregex_iterator(body.begin(), body.end(), num); it != std::sregex_iterator(); ++it) {
        std::string digits = (*it)[1].str() + (*it)[2].str();
        digits.erase(0, digits.find_first_not_of('0'));
        EXPECT_LE(digits.size(), 12u) << it->str();
    }
}

TEST(Cli, CsvProjection) {
    const auto r = run(scenario("salas"), "probe", {"hereditary", "E0"}, ReportFormat::Csv);
    std::istringstream in(r.out);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    ASSERT_EQ(lines.size(), 1u + 1u + 20u + 1u);
    EXPECT_EQ(lines[0].rfind("# hyperdyn", 0), 0u);
    EXPECT_NE(lines[1].find("sup_w_n"), std::string::npos);
    EXPECT_NE(lines[2].find(",0.5,"), std::string::npos);
}

TEST(Cli, SeedChangesOnlyRandomizedProbe) {
    CliOptions opt;
    opt.scenario_path = scenario("su2");
    opt.request.command = "haar";
    opt.timestamp = "t";
    std::ostringstream a, b, err;
    EXPECT_EQ(run_cli(opt, a, err), 0);
    opt.request.seed = 7;
    EXPECT_EQ(run_cli(opt, b, err), 0);
    EXPECT_NE(a.str(), b.str());
}

TEST(ScenarioGrammar, RangesDefaultsAndDuplicates) {
    const auto sc = parse_scenario(R"(
hypergroup: {family: integer_group, window: 8}
young: {kind: phi_p, params: {p: 1.5}}
weight: {form: constant, params: {c: 1}}
eta: {generator: constant, params: {c: 1}}
sets:
  R: {from: -1, to: 2}
functions:
  f: [[1, 0.5], [1, 0.25], [3, -1]]
)");
    EXPECT_EQ(sc.id, "scenario");
    EXPECT_EQ(sc.set("R"), (ElementSet{Element{-1}, Element{0}, Element{1}, Element{2}}));
    EXPECT_EQ(sc.function("f")(Element{1}), 0.75);
    EXPECT_EQ(sc.run.horizon, 20);
    EXPECT_EQ(sc.run.convention, ProductConvention::IterateExclusive);
    EXPECT_THROW(sc.set("nope"), ValidationError);
}

TEST(ScenarioGrammar, DryRunCoversHorizon) {
    const std::string base = R"(
hypergroup: {family: integer_group, window: 8}
young: {kind: phi_p, params: {p: 2}}
weight: {form: constant, params: {c: 1}}
eta: {generator: center_powers, params: {z: 1}}
run: {horizon: HORIZON}
)";
    EXPECT_NO_THROW(parse_scenario(replace(base, "HORIZON", "8")));
    EXPECT_THROW(parse_scenario(replace(base, "HORIZON", "9")), WindowOverflow);
}

TEST(ScenarioGrammar, EtaTableMustCoverHorizon) {
    const std::string base = R"(
hypergroup: {family: su2, window: 8}
young: {kind: phi_p, params: {p: 2}}
weight: {form: constant, params: {c: 1}}
eta: {generator: table, params: {entries: [[1, 2], [2, 4]]}}
run: {horizon: H}
)";
    EXPECT_NO_THROW(parse_scenario(replace(base, "H", "2")));
    EXPECT_THROW(parse_scenario(replace(base, "H", "3")), WindowOverflow);
}
