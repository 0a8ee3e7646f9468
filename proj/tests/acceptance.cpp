// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperdyn/aperiodicity.hpp"
#include "hyperdyn/commands.hpp"
#include "hyperdyn/criteria.hpp"
#include "hyperdyn/errors.hpp"
#include "hyperdyn/hypergroup.hpp"
#include "hyperdyn/orlicz.hpp"
#include "hyperdyn/weighted_translation.hpp"

using namespace hyperdyn;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

/// Collects the first few failure messages of a criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) messages_ += (messages_.empty() ? "" : "; ") + what;
    }
    bool ok() const { return failures_ == 0; }
    std::string summary(const std::string& good) const {
        if (ok()) return good;
        return std::to_string(failures_) + " failure(s): " + messages_;
    }

private:
    int failures_ = 0;
    std::string messages_;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

SparseFunction random_function(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, int points,
                               double scale = 1.0) {
    std::uniform_int_distribution<std::int64_t> label(lo, hi);
    std::uniform_real_distribution<double> value(-scale, scale);
    std::map<Element, double> values;
    for (int i = 0; i < points; ++i) values[Element{label(rng)}] = value(rng);
    return SparseFunction::from_map(values);
}

Weight random_weight(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    std::uniform_real_distribution<double> value(0.25, 4.0);
    std::map<Element, double> table;
    for (std::int64_t x = lo; x <= hi; ++x) table[Element{x}] = value(rng);
    return Weight::table(table, value(rng));
}

std::int64_t low(const HypergroupModel& m) { return m.elements().front().label; }
std::int64_t high(const HypergroupModel& m) { return m.elements().back().label; }

HypergroupModel two_point_table() {
    TableSpec spec;
    spec.elements = {Element{0}, Element{1}};
    spec.identity = Element{0};
    spec.products[{Element{0}, Element{0}}] = SparseMeasure::point(Element{0});
    spec.products[{Element{0}, Element{1}}] = SparseMeasure::point(Element{1});
    spec.products[{Element{1}, Element{0}}] = SparseMeasure::point(Element{1});
    spec.products[{Element{1}, Element{1}}] = SparseMeasure::from_map({{Element{0}, 0.25}, {Element{1}, 0.75}});
    return HypergroupModel::table_defined(spec);
}

Outcome axioms() {
    const auto start = Clock::now();
    Check c;
    const HypergroupModel models[] = {HypergroupModel::dunkl_ramirez(0.3, 32), HypergroupModel::dunkl_ramirez(0.5, 32),
                                      HypergroupModel::su2(32)};
    for (const auto& m : models) {
        for (const auto& v : verify_axioms(m, 12)) {
            c.expect(false, m.describe() + ": " + to_string(v.axiom) + " " + v.witness);
        }
    }
    const double t = seconds_since(start);
    c.expect(t < 5.0, "runtime " + fmt(t) + " s");
    return {c.ok(), c.summary("no violations in " + fmt(t) + " s")};
}

Outcome haar_invariance() {
    Check c;
    std::mt19937_64 rng(2);
    const HypergroupModel models[] = {HypergroupModel::dunkl_ramirez(0.3, 32), HypergroupModel::dunkl_ramirez(0.5, 32),
                                      HypergroupModel::su2(32), HypergroupModel::integer_group(32), two_point_table()};
    double worst = 0.0;
    int translates = 0;
    for (const auto& m : models) {
        const std::int64_t lo = std::max<std::int64_t>(low(m), -8);
        const std::int64_t hi = std::min<std::int64_t>(high(m), 8);
        for (int trial = 0; trial < 20; ++trial) {
            const auto f = random_function(rng, lo, hi, 5);
            const double base = integrate_haar(m, f);
            for (std::int64_t y = lo; y <= hi; ++y) {
                if (!m.contains(Element{y})) continue;
                SparseFunction fy;
                try {
                    fy = translate(m, f, Element{y});
                } catch (const WindowOverflow&) {
                    continue;
                }
                const double r = std::abs(integrate_haar(m, fy) - base);
                worst = std::max(worst, r);
                ++translates;
                c.expect(r <= 1e-10, m.describe() + " y=" + std::to_string(y) + " residual " + fmt(r));
            }
        }
    }
    for (double a : {0.3, 0.5}) {
        const auto dr = HypergroupModel::dunkl_ramirez(a, 32);
        for (std::int64_t r = 1; r <= 32; ++r) {
            const double expected = (1.0 - a) / std::pow(a, static_cast<double>(r));
            c.expect(std::abs(dr.haar_weight(Element{r}) - expected) <= 1e-12 * expected,
                     "DR m({" + std::to_string(r) + "})");
        }
    }
    const auto su2 = HypergroupModel::su2(32);
    for (std::int64_t n = 0; n <= 32; ++n) {
        c.expect(su2.haar_weight(Element{n}) == static_cast<double>((n + 1) * (n + 1)), "SU2 m({n}) not exact");
    }
    return {c.ok(), c.summary(std::to_string(translates) + " translates, max residual " + fmt(worst))};
}

double p_norm(const HypergroupModel& m, const SparseFunction& f, double p) {
    double s = 0.0;
    for (const Sample& x : f.samples()) s += std::pow(std::abs(x.value), p) * m.haar_weight(x.point);
    return std::pow(s, 1.0 / p);
}

Outcome orlicz_closed_forms() {
    Check c;
    std::mt19937_64 rng(3);
    const HypergroupModel models[] = {HypergroupModel::dunkl_ramirez(0.3, 16), HypergroupModel::dunkl_ramirez(0.5, 16),
                                      HypergroupModel::su2(16), HypergroupModel::integer_group(16)};
    const YoungFunction kinds[] = {YoungFunction::phi_p(1), YoungFunction::phi_p(2), YoungFunction::phi_p(3),
                                   YoungFunction::exp_minus_linear(), YoungFunction::cosh_minus_one()};
    double worst_closed = 0.0;
    for (const auto& m : models) {
        for (double p : {1.0, 2.0, 3.0}) {
            const auto phi = YoungFunction::phi_p(p);
            for (int trial = 0; trial < 50; ++trial) {
                const auto f = random_function(rng, low(m), std::min<std::int64_t>(high(m), 12), 5);
                const double d = std::abs(luxemburg_norm(m, f, phi).value - std::pow(p, -1.0 / p) * p_norm(m, f, p));
                worst_closed = std::max(worst_closed, d);
                c.expect(d <= 1e-8, m.describe() + " p=" + fmt(p) + " closed form off by " + fmt(d));
            }
        }
        for (const auto& phi : kinds) {
            for (int trial = 0; trial < 10; ++trial) {
                const auto f = random_function(rng, low(m), std::min<std::int64_t>(high(m), 12), 5);
                const double n = luxemburg_norm(m, f, phi).value;
                const double a = orlicz_norm(m, f, phi).value;
                c.expect(n <= a + 1e-9 && a <= 2.0 * n + 1e-9,
                         m.describe() + " " + phi.describe() + " sandwich " + fmt(n) + " " + fmt(a));
            }
            const auto g = random_function(rng, low(m), high(m), 12, 2.0).abs();
            for (Element x : m.elements()) {
                for (Element y : m.elements()) {
                    if (!m.product_in_window(x, y)) continue;
                    double mean = 0.0, avg = 0.0;
                    for (const Atom& at : m.convolve_points(x, y).atoms()) {
                        mean += g(at.point) * at.mass;
                        avg += phi(g(at.point)) * at.mass;
                    }
                    c.expect(avg - phi(mean) >= -1e-12, "Jensen residual " + fmt(avg - phi(mean)));
                }
            }
        }
    }
    return {c.ok(), c.summary("closed form max error " + fmt(worst_closed) + ", sandwich and Jensen hold")};
}

Outcome central_translation_invariance() {
    Check c;
    std::mt19937_64 rng(4);
    const auto dr = HypergroupModel::dunkl_ramirez(0.5, 32);
    const auto z = HypergroupModel::integer_group(32);
    c.expect(is_central(dr, Element{1}), "1 is not central in DR(0.5)");
    const YoungFunction kinds[] = {YoungFunction::phi_p(1), YoungFunction::phi_p(2), YoungFunction::cosh_minus_one()};
    double worst = 0.0;
    for (const HypergroupModel* m : {&dr, &z}) {
        for (const auto& phi : kinds) {
            for (int trial = 0; trial < 50; ++trial) {
                const auto f = random_function(rng, std::max<std::int64_t>(low(*m), -12), 12, 5, 2.0);
                const double d =
                    std::abs(luxemburg_norm(*m, translate(*m, f, Element{1}), phi).value -
                             luxemburg_norm(*m, f, phi).value);
                worst = std::max(worst, d);
                c.expect(d <= 1e-9, m->describe() + " " + phi.describe() + " differs by " + fmt(d));
            }
        }
    }
    return {c.ok(), c.summary("max |N(f^z) - N(f)| = " + fmt(worst))};
}

Outcome weighted_translate_bound() {
    Check c;
    std::mt19937_64 rng(5);
    const HypergroupModel models[] = {HypergroupModel::dunkl_ramirez(0.3, 24), HypergroupModel::dunkl_ramirez(0.5, 24),
                                      HypergroupModel::su2(24), HypergroupModel::integer_group(24)};
    const auto phi = YoungFunction::phi_p(2);
    double worst = -INFINITY;
    for (const auto& m : models) {
        const std::int64_t lo = std::max<std::int64_t>(low(m), -8);
        for (int trial = 0; trial < 100; ++trial) {
            const Weight w = random_weight(rng, low(m), high(m));
            const auto f = random_function(rng, lo, 8, 4);
            const Element a{std::uniform_int_distribution<std::int64_t>(lo, 8)(rng)};
            const auto wf = multiply(w, translate(m, f, a));
            const double lhs = orlicz_norm(m, wf, phi).value;
            const double rhs = w.sup_on(m) * orlicz_norm(m, f, phi).value;
            worst = std::max(worst, lhs - rhs);
            c.expect(lhs <= rhs + 1e-9, m.describe() + " excess " + fmt(lhs - rhs));
        }
    }
    return {c.ok(), c.summary("max lhs - rhs = " + fmt(worst))};
}

Outcome group_consistency() {
    Check c;
    std::mt19937_64 rng(6);
    const auto z = HypergroupModel::integer_group(40);
    int comparisons = 0;
    for (int trial = 0; trial < 25; ++trial) {
        const Weight w = random_weight(rng, -40, 40);
        const auto f = random_function(rng, -10, 10, 6);
        for (std::int64_t a : {1, -1, 2}) {
            const auto eta = EtaSequence::center_powers(z, Element{a});
            for (std::int64_t n = 0; n <= 12; ++n) {
                ++comparisons;
                c.expect(lambda_apply(z, f, w, eta, n, ProductConvention::IterateExclusive) ==
                             t_iterate(z, f, Element{a}, w, n),
                         "a=" + std::to_string(a) + " n=" + std::to_string(n));
            }
        }
    }
    return {c.ok(), c.summary(std::to_string(comparisons) + " atom-exact comparisons")};
}

Outcome inverse_identities() {
    Check c;
    std::mt19937_64 rng(7);
    const auto z = HypergroupModel::integer_group(40);
    const auto dr = HypergroupModel::dunkl_ramirez(0.5, 16);
    struct Case {
        const HypergroupModel* model;
        Element gen;
        std::int64_t lo, hi;
    };
    const Case cases[] = {{&z, Element{1}, -10, 10}, {&dr, Element{1}, 0, 16}};
    double worst = 0.0;
    for (const Case& cs : cases) {
        const auto eta = EtaSequence::center_powers(*cs.model, cs.gen);
        for (int trial = 0; trial < 10; ++trial) {
            const Weight w = random_weight(rng, cs.lo - 30, cs.hi + 30);
            const auto f = random_function(rng, cs.lo, cs.hi, 5);
            for (std::int64_t n = 0; n <= 10; ++n) {
                const auto conv = ProductConvention::IterateExclusive;
                const auto sl = s_apply(*cs.model, lambda_apply(*cs.model, f, w, eta, n, conv), w, eta, n, conv);
                const auto ls = lambda_apply(*cs.model, s_apply(*cs.model, f, w, eta, n, conv), w, eta, n, conv);
                const double d = std::max(SparseFunction::max_difference(sl, f), SparseFunction::max_difference(ls, f));
                worst = std::max(worst, d);
                c.expect(d <= 1e-12, cs.model->describe() + " n=" + std::to_string(n) + " off by " + fmt(d));
            }
        }
    }
    return {c.ok(), c.summary("max atom error " + fmt(worst))};
}

Outcome aperiodicity_goldens() {
    Check c;
    const auto first_n = [](const HypergroupModel& m, const EtaSequence& eta, const ElementSet& e, std::int64_t h) {
        return aperiodic_sequence_check(m, eta, e, h);
    };
    const auto ids = EtaSequence::identity_labels();
    const auto zg = HypergroupModel::integer_group(64);
    const auto dr = HypergroupModel::dunkl_ramirez(0.5, 64);
    const auto su2 = HypergroupModel::su2(64);
    struct Golden {
        std::string name;
        AperiodicityVerdict verdict;
        std::int64_t expected;
    };
    const Golden goldens[] = {
        {"IntegerGroup", first_n(zg, ids, {Element{-2}, Element{-1}, Element{0}, Element{1}, Element{2}}, 32), 5},
        {"DR(0.5)", first_n(dr, ids, {Element{0}, Element{1}, Element{2}}, 32), 3},
        {"SU2", first_n(su2, ids, {Element{0}, Element{1}}, 32), 3}};
    std::string found;
    for (const auto& g : goldens) {
        c.expect(g.verdict.holds_at_horizon && g.verdict.first_n == g.expected,
                 g.name + " first_N " + (g.verdict.first_n ? std::to_string(*g.verdict.first_n) : "none"));
        found += g.name + "=" + (g.verdict.first_n ? std::to_string(*g.verdict.first_n) : "none") + " ";
    }
    const auto constant = aperiodic_sequence_check(su2, EtaSequence::constant(Element{1}), {Element{0}, Element{1}}, 64);
    c.expect(!constant.holds_at_horizon, "SU2 constant sequence does not fail");
    return {c.ok(), c.summary(found + "SU2 constant fails")};
}

DynamicsContext salas_context(const HypergroupModel& m, const Weight& w) {
    return DynamicsContext{m, w, EtaSequence::center_powers(m, Element{1}), YoungFunction::phi_p(2),
                           ProductConvention::IterateExclusive, geometric_schedule(0.5)};
}

const Weight kSalasWeight = Weight::step(0, 2.0, 0.5);
const ElementSet kOrigin{Element{0}};

void expect_tracked(Check& c, const CriterionReport& r, const std::string& what) {
    c.expect(r.verdict == Verdict::HoldsEmpirically, what + " verdict " + to_string(r.verdict));
    c.expect(r.rows.size() == 20, what + " has " + std::to_string(r.rows.size()) + " rows");
    for (const auto& row : r.rows) {
        const double expected = std::ldexp(1.0, -static_cast<int>(row.n));
        for (const auto& t : row.tracked) {
            c.expect(std::abs(t.sup_on_subset - expected) <= 1e-12,
                     what + " " + t.name + " at n=" + std::to_string(row.n) + " is " + fmt(t.sup_on_subset));
        }
    }
}

Outcome salas_end_to_end() {
    const auto start = Clock::now();
    Check c;
    const auto m = HypergroupModel::integer_group(64);
    const auto ctx = salas_context(m, kSalasWeight);
    expect_tracked(c, probe_center_conditions(ctx, kOrigin, 20, 3), "center");
    expect_tracked(c, probe_hereditary(ctx, Element{1}, kOrigin, 20, 3), "hereditary");

    const auto chi0 = indicator(kOrigin);
    const auto witness = build_transitivity_witness(ctx, chi0, chi0, 20, 20, 3);
    double row10 = NAN;
    int rows = 0;
    for (const auto& row : witness.rows) {
        if (row.skipped || row.n > 20) continue;
        ++rows;
        const double expected = std::ldexp(1.0, -static_cast<int>(row.n)) / std::sqrt(2.0);
        c.expect(std::abs(row.err_target - expected) <= 1e-9, "witness n=" + std::to_string(row.n));
        if (row.n == 10) row10 = row.err_target;
    }
    c.expect(rows == 20, "witness has " + std::to_string(rows) + " rows");
    c.expect(std::abs(row10 - 6.905e-4) <= 5e-8, "n = 10 row " + fmt(row10));

    for (double k : {1.0, 2.0, 0.5}) {
        const auto flat = salas_context(m, Weight::constant(k));
        c.expect(probe_center_conditions(flat, kOrigin, 20, 3).verdict == Verdict::Fails, "center w=" + fmt(k));
        c.expect(probe_hereditary(flat, Element{1}, kOrigin, 20, 3).verdict == Verdict::Fails,
                 "hereditary w=" + fmt(k));
    }
    const double t = seconds_since(start);
    c.expect(t < 10.0, "runtime " + fmt(t) + " s");
    char buf[128];
    std::snprintf(buf, sizeof buf, "tracked 2^-n exact, n=10 witness %.4g, constants fail, %.3g s", row10, t);
    return {c.ok(), c.summary(buf)};
}

Outcome theorem_probes() {
    Check c;
    const auto m = HypergroupModel::integer_group(64);
    const auto ctx = salas_context(m, kSalasWeight);
    const auto t33 = probe_thm33(ctx, kOrigin, 20);
    c.expect(t33.verdict == Verdict::HoldsEmpirically, "thm33 " + to_string(t33.verdict));
    const auto t22 = probe_thm22(ctx, kOrigin, 12, 5, 3);
    c.expect(t22.verdict == Verdict::HoldsEmpirically, "thm22 " + to_string(t22.verdict));
    c.expect(!t22.rows.empty(), "thm22 has no rows");
    for (const auto& row : t22.rows) {
        const double q = std::ldexp(1.0, -static_cast<int>(row.n));
        c.expect(row.series.has_value() && row.series->combined() <= 2.0 * q / (1.0 - q),
                 "thm22 tail at n=" + std::to_string(row.n));
    }
    const auto flat = salas_context(m, Weight::constant(1.0));
    c.expect(probe_thm33(flat, kOrigin, 20).verdict == Verdict::Fails, "thm33 with w = 1");
    c.expect(probe_thm22(flat, kOrigin, 12, 5, 3).verdict == Verdict::Fails, "thm22 with w = 1");
    return {c.ok(), c.summary("Salas holds with tail within 2q/(1-q), w = 1 fails")};
}

Outcome determinism() {
    Check c;
    const std::string dir = HYPERDYN_SCENARIO_DIR;
    const std::vector<std::pair<std::string, std::vector<std::string>>> commands = {
        {"axioms", {}}, {"haar", {}}, {"norm", {"f"}}, {"aperiodic", {"E"}}};
    const std::vector<std::pair<std::string, std::vector<std::string>>> salas_commands = {
        {"probe", {"thm33", "E0"}}, {"probe", {"thm22", "E0"}},   {"probe", {"center", "E0"}},
        {"probe", {"hereditary", "E0"}}, {"witness", {"f", "g"}}, {"orbit", {"h"}}};
    int runs = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".yaml") continue;
        auto list = commands;
        if (entry.path().stem().string().rfind("salas", 0) == 0) {
            list.insert(list.end(), salas_commands.begin(), salas_commands.end());
        }
        for (const auto& [cmd, args] : list) {
            for (auto format : {ReportFormat::Records, ReportFormat::Csv}) {
                std::string bodies[2];
                for (int i = 0; i < 2; ++i) {
                    CliOptions opt;
                    opt.scenario_path = entry.path().string();
                    opt.request = {cmd, args, 0};
                    opt.format = format;
                    opt.timestamp = i == 0 ? "first" : "second";
                    std::ostringstream out, err;
                    run_cli(opt, out, err);
                    const std::string text = out.str();
                    bodies[i] = text.substr(text.find('\n') + 1);
                }
                ++runs;
                c.expect(!bodies[0].empty() && bodies[0] == bodies[1],
                         entry.path().filename().string() + " " + cmd + " body differs");
            }
        }
    }
    return {c.ok(), c.summary(std::to_string(runs) + " repeated runs byte-identical")};
}

Outcome full_suite(Clock::time_point acceptance_start) {
    Check c;
    const auto start = Clock::now();
    for (const char* binary : {HYPERDYN_UNIT_TESTS, HYPERDYN_CLI_TESTS}) {
        const std::string cmd = std::string("\"") + binary + "\" > /dev/null 2>&1";
        c.expect(std::system(cmd.c_str()) == 0, std::filesystem::path(binary).filename().string() + " failed");
    }
    const double suites = seconds_since(start);
    const double total = seconds_since(acceptance_start);
    c.expect(total < 60.0, "total " + fmt(total) + " s");
    return {c.ok(), c.summary("unit and CLI suites " + fmt(suites) + " s, total with acceptance " + fmt(total) + " s")};
}

}  // namespace

int main() {
    const auto start = Clock::now();
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"hypergroup axioms DR(0.3), DR(0.5), SU2 at B=32", axioms},
        {"Haar invariance and derived weights", haar_invariance},
        {"Orlicz closed forms, sandwich, Jensen", orlicz_closed_forms},
        {"Luxemburg norm invariant under central translation", central_translation_invariance},
        {"weighted translate bound", weighted_translate_bound},
        {"group consistency of lambda_apply and t_iterate", group_consistency},
        {"inverse identities of s_apply and lambda_apply", inverse_identities},
        {"aperiodicity golden values", aperiodicity_goldens},
        {"weighted shift end to end", salas_end_to_end},
        {"thm33 and thm22 probes", theorem_probes},
        {"report determinism", determinism},
        {"full test suite under 60 s", [start] { return full_suite(start); }},
    };
    int failed = 0;
    int index = 0;
    for (const auto& criterion : criteria) {
        ++index;
        Outcome o;
        try {
            o = criterion.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s [%2d] %s: %s\n", o.pass ? "PASS" : "FAIL", index, criterion.name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
