#include "hyperdyn/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include "hyperdyn/aperiodicity.hpp"
#include "hyperdyn/criteria.hpp"
#include "hyperdyn/errors.hpp"
#include "hyperdyn/orlicz.hpp"

namespace hyperdyn {

namespace {

void require_args(const CommandRequest& req, std::size_t min, std::size_t max, const char* usage) {
    if (req.args.size() < min || req.args.size() > max) {
        throw ValidationError(std::string("usage: ") + usage);
    }
}

int verdict_exit(bool pass) { return pass ? kExitPass : kExitFail; }

int cmd_axioms(const Scenario& sc, Report& report) {
    const auto violations = verify_axioms(sc.model, sc.run.triple_bound);
    for (const auto& v : violations) {
        auto& row = report.add_row("violation");
        row["axiom"] = to_string(v.axiom);
        row["count"] = v.count;
        row["witness"] = v.witness;
        row["worst_residual"] = number(v.worst_residual);
    }
    const bool pass = violations.empty();
    Record extra;
    extra["family"] = to_string(sc.model.family());
    extra["triple_bound"] = sc.run.triple_bound;
    extra["violations"] = violations.size();
    report.finish(pass ? "pass" : "fails", verdict_exit(pass), extra);
    return verdict_exit(pass);
}

int cmd_haar(const Scenario& sc, const CommandRequest& req, Report& report) {
    const auto& m = sc.model;
    for (const Element& x : m.elements()) {
        auto& row = report.add_row("haar_weight");
        row["label"] = x.label;
        row["haar_weight"] = number(m.haar_weight(x));
    }
    const std::int64_t shift = sc.run.haar_shift;
    const std::int64_t lo = std::max(m.elements().front().label, -shift);
    const std::int64_t hi = std::min(m.elements().back().label, shift);
    std::vector<Element> points;
    for (const Element& x : m.elements()) {
        if (x.label >= lo && x.label <= hi) points.push_back(x);
    }

    std::mt19937_64 rng(req.seed);
    std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    double worst = 0.0;
    std::size_t checked = 0;
    for (int trial = 0; trial < sc.run.haar_trials; ++trial) {
        std::map<Element, double> values;
        for (int i = 0; i < 5; ++i) values[points[pick(rng)]] = value(rng);
        const auto f = SparseFunction::from_map(values);
        const double integral = integrate_haar(m, f);
        double trial_worst = 0.0;
        std::size_t translates = 0, skipped = 0;
        for (const Element& y : points) {
            try {
                trial_worst = std::max(trial_worst, std::abs(integrate_haar(m, translate(m, f, y)) - integral));
                ++translates;
            } catch (const WindowOverflow&) {
                ++skipped;
            }
        }
        worst = std::max(worst, trial_worst);
        checked += translates;
        auto& row = report.add_row("invariance");
        row["trial"] = trial;
        row["integral"] = number(integral);
        row["max_residual"] = number(trial_worst);
        row["translates"] = translates;
        row["skipped"] = skipped;
    }
    const bool pass = checked > 0 && worst <= sc.run.haar_tolerance;
    Record extra;
    extra["max_residual"] = number(worst);
    extra["tolerance"] = number(sc.run.haar_tolerance);
    extra["translates"] = checked;
    report.finish(pass ? "pass" : "fails", verdict_exit(pass), extra);
    return verdict_exit(pass);
}

int cmd_norm(const Scenario& sc, const CommandRequest& req, Report& report) {
    require_args(req, 1, 1, "norm <function>");
    const auto& f = sc.function(req.args[0]);
    const auto lux = luxemburg_norm(sc.model, f, sc.phi);
    const auto ame = orlicz_norm(sc.model, f, sc.phi);
    const double low = ame.value - lux.value;
    const double high = 2.0 * lux.value - ame.value;
    const double tol = sc.run.sandwich_tolerance * std::max(1.0, lux.value);
    const bool pass = low >= -tol && high >= -tol;

    auto& row = report.add_row("norm");
    row["function"] = req.args[0];
    row["young"] = sc.phi.describe();
    row["luxemburg"] = number(lux.value);
    row["luxemburg_iterations"] = lux.iterations;
    row["luxemburg_bracket_lo"] = number(lux.bracket_lo);
    row["luxemburg_bracket_hi"] = number(lux.bracket_hi);
    row["amemiya"] = number(ame.value);
    row["amemiya_minimizer"] = number(ame.minimizer);
    row["sandwich_low_residual"] = number(low);
    row["sandwich_high_residual"] = number(high);
    const auto emb = l1_embedding_check(sc.phi, sc.model);
    row["l1_embedding"] = emb.holds;
    row["slope_positive"] = to_string(emb.slope_positive);

    Record extra;
    extra["tolerance"] = number(tol);
    report.finish(pass ? "pass" : "fails", verdict_exit(pass), extra);
    return verdict_exit(pass);
}

void emit_check(Report& report, const std::string& check, const AperiodicityVerdict& v) {
    for (const auto& c : v.counterexamples) {
        auto& row = report.add_row("counterexample");
        row["check"] = check;
        row["n"] = c.n;
        row["overlap"] = labels(c.overlap);
        row["detail"] = c.detail;
    }
    auto& row = report.add_row("aperiodicity");
    row["check"] = check;
    row["holds"] = v.holds_at_horizon;
    row["first_n"] = v.first_n ? Record(*v.first_n) : Record();
    row["conclusive_horizon"] = v.conclusive_horizon;
    row["inconclusive"] = v.inconclusive.size();
}

int cmd_aperiodic(const Scenario& sc, const CommandRequest& req, Report& report) {
    require_args(req, 1, 1, "aperiodic <set>");
    const auto& e = sc.set(req.args[0]);
    const auto seq = aperiodic_sequence_check(sc.model, sc.eta, e, sc.run.horizon);
    emit_check(report, "sequence", seq);
    emit_check(report, "strong", strongly_aperiodic_check(sc.model, sc.eta, e, sc.run.horizon, sc.run.rs_bound));
    Record extra;
    extra["eta"] = sc.eta.describe();
    if (sc.eta.generator() == EtaSequence::Generator::CenterPowers) {
        const auto center = aperiodic_center_check(sc.model, *sc.eta.base(), e, sc.run.horizon, sc.run.rs_bound);
        emit_check(report, "center_direct", center.direct);
        emit_check(report, "center_strong", center.strong);
        extra["center_disagree"] = center.disagree;
    }
    extra["first_n"] = seq.first_n ? Record(*seq.first_n) : Record();
    const bool pass = seq.holds_at_horizon;
    report.finish(pass ? "pass" : "fails", verdict_exit(pass), extra);
    return verdict_exit(pass);
}

int cmd_probe(const Scenario& sc, const CommandRequest& req, Report& report) {
    require_args(req, 2, 2, "probe <thm33|thm22|center|hereditary> <set>");
    const std::string& which = req.args[0];
    const auto& e = sc.set(req.args[1]);
    const auto ctx = sc.context();
    CriterionReport probe;
    if (which == "thm33") {
        probe = probe_thm33(ctx, e, sc.run.horizon);
    } else if (which == "thm22") {
        probe = probe_thm22(ctx, e, sc.run.horizon, sc.run.series_cutoff, sc.run.rs_bound);
    } else if (which == "center") {
        probe = probe_center_conditions(ctx, e, sc.run.horizon, sc.run.rs_bound);
    } else if (which == "hereditary") {
        if (sc.eta.generator() != EtaSequence::Generator::CenterPowers) {
            throw PreconditionFailed("the hereditary probe needs eta generator center_powers");
        }
        probe = probe_hereditary(ctx, *sc.eta.base(), e, sc.run.horizon, sc.run.rs_bound);
    } else {
        throw ValidationError("unknown theorem id '" + which + "' (thm33, thm22, center, hereditary)");
    }

    for (const auto& r : probe.rows) {
        auto& row = report.add_row("criterion");
        row["theorem"] = to_string(probe.theorem);
        row["k"] = r.k;
        row["n"] = r.n;
        row["subset"] = labels(r.subset);
        row["measure_ratio"] = number(r.measure_ratio);
        row["eps"] = number(r.eps);
        for (const auto& t : r.tracked) {
            row["sup_" + t.name] = number(t.sup_on_subset);
            row["sup_set_" + t.name] = number(t.sup_on_set);
        }
        if (r.series) {
            row["series_first"] = number(r.series->first);
            row["series_second"] = number(r.series->second);
            row["series_combined"] = number(r.series->combined());
            row["series_terms"] = r.series->terms;
            row["series_truncated"] = r.series->truncated;
        }
        if (r.complement_norm) row["complement_norm"] = number(*r.complement_norm);
    }
    const bool pass = probe.verdict == Verdict::HoldsEmpirically;
    Record extra;
    extra["theorem"] = to_string(probe.theorem);
    extra["label"] = probe.label;
    extra["notes"] = probe.notes;
    report.finish(to_string(probe.verdict), verdict_exit(pass), extra);
    return verdict_exit(pass);
}

int cmd_witness(const Scenario& sc, const CommandRequest& req, Report& report) {
    require_args(req, 2, 2, "witness <f> <g>");
    const auto w = build_transitivity_witness(sc.context(), sc.function(req.args[0]), sc.function(req.args[1]),
                                              sc.run.horizon, sc.run.k_max, sc.run.rs_bound);
    for (const auto& r : w.rows) {
        auto& row = report.add_row("witness");
        row["k"] = r.k;
        row["n"] = r.n;
        row["subset"] = labels(r.subset);
        row["err_source"] = number(r.err_source);
        row["err_target"] = number(r.err_target);
        row["skipped"] = r.skipped;
        row["note"] = r.note;
    }
    const bool pass = w.eventually_decreasing;
    Record extra;
    extra["eventually_decreasing"] = w.eventually_decreasing;
    extra["label"] = w.label;
    extra["witness_support"] = labels(w.last_witness.support());
    report.finish(pass ? "pass" : "fails", verdict_exit(pass), extra);
    return verdict_exit(pass);
}

int cmd_orbit(const Scenario& sc, const CommandRequest& req, Report& report) {
    require_args(req, 1, static_cast<std::size_t>(-1), "orbit <f> [targets...]");
    const auto& f = sc.function(req.args[0]);
    std::vector<std::string> names(req.args.begin() + 1, req.args.end());
    if (names.empty()) {
        for (const auto& [name, g] : sc.functions) names.push_back(name);
    }
    std::vector<SparseFunction> targets;
    for (const auto& name : names) targets.push_back(sc.function(name));
    const auto hits = orbit_density_probe(sc.context(), f, targets, sc.run.horizon);
    for (std::size_t i = 0; i < hits.size(); ++i) {
        auto& row = report.add_row("orbit");
        row["target"] = names[i];
        row["best_n"] = hits[i].best_n;
        row["best_error"] = number(hits[i].best_error);
        row["skipped"] = hits[i].skipped.size();
    }
    report.finish("reported", kExitPass);
    return kExitPass;
}

}  // namespace

int run_command(const Scenario& scenario, const CommandRequest& request, Report& report) {
    const auto& cmd = request.command;
    if (cmd == "axioms") {
        require_args(request, 0, 0, "axioms");
        return cmd_axioms(scenario, report);
    }
    if (cmd == "haar") {
        require_args(request, 0, 0, "haar");
        return cmd_haar(scenario, request, report);
    }
    if (cmd == "norm") return cmd_norm(scenario, request, report);
    if (cmd == "aperiodic") return cmd_aperiodic(scenario, request, report);
    if (cmd == "probe") return cmd_probe(scenario, request, report);
    if (cmd == "witness") return cmd_witness(scenario, request, report);
    if (cmd == "orbit") return cmd_orbit(scenario, request, report);
    throw ValidationError("unknown command '" + cmd + "'");
}

int run_cli(const CliOptions& options, std::ostream& out, std::ostream& err) {
    std::optional<Scenario> scenario;
    try {
        scenario.emplace(load_scenario(options.scenario_path));
    } catch (const WindowOverflow& e) {
        err << "error: " << e.what() << '\n';
        return kExitWindowOverflow;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    }
    const Scenario& sc = *scenario;
    for (const auto& a : sc.advisories) err << "advisory: " << a << '\n';

    Report report(options.request.command, options.request.args, sc.id, sc.source, to_string(sc.run.convention),
                  sc.run.horizon, options.request.seed);
    int code = kExitPass;
    auto abort_with = [&](int c, const char* kind, const std::exception& e) {
        err << "error: " << e.what() << '\n';
        Record extra;
        extra["error"] = kind;
        report.finish("aborted", c, extra);
        code = c;
    };
    try {
        code = run_command(sc, options.request, report);
    } catch (const WindowOverflow& e) {
        abort_with(kExitWindowOverflow, "window_overflow", e);
    } catch (const PreconditionFailed& e) {
        abort_with(kExitPrecondition, "precondition_failed", e);
    } catch (const NotCentral& e) {
        abort_with(kExitPrecondition, "not_central", e);
    } catch (const ValidationError& e) {
        abort_with(kExitPrecondition, "validation_error", e);
    } catch (const NonFiniteIntegrand& e) {
        abort_with(kExitPrecondition, "non_finite_integrand", e);
    } catch (const std::invalid_argument& e) {
        abort_with(kExitPrecondition, "invalid_argument", e);
    }

    const std::string stamp = options.timestamp ? *options.timestamp : utc_timestamp();
    if (options.out_path) {
        std::ofstream file(*options.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << *options.out_path << '\n';
            return kExitPrecondition;
        }
        report.write(file, options.format, stamp);
    } else {
        report.write(out, options.format, stamp);
    }
    return code;
}

}  // namespace hyperdyn
