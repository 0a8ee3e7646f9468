#include "hyperdyn/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hyperdyn/errors.hpp"

namespace hyperdyn {

namespace {

bool below(double value, double eps) { return value <= eps * (1.0 + kThresholdSlack); }

double measure_ratio(const HypergroupModel& model, const ElementSet& subset, const ElementSet& e) {
    return model.haar_measure(subset) / model.haar_measure(e);
}

std::size_t tail_begin(std::size_t rows) {
    const std::size_t quarter = (rows + 3) / 4;
    return rows - std::max<std::size_t>(2, quarter);
}

template <typename Get>
bool nonincreasing(const std::vector<CriterionRow>& rows, std::size_t from, Get get) {
    for (std::size_t i = from + 1; i < rows.size(); ++i) {
        if (get(rows[i]) > get(rows[i - 1]) * (1.0 + kThresholdSlack)) return false;
    }
    return true;
}

/// Last-quartile rule: m(E_k)/m(E) reaches 1 without dropping, and every
/// tracked sup (and the series tail, if any) is nonincreasing.
Verdict judge(const std::vector<CriterionRow>& rows) {
    if (rows.size() < 2) return Verdict::Inconclusive;
    const std::size_t from = tail_begin(rows.size());
    if (rows.back().measure_ratio < 1.0 - kThresholdSlack) return Verdict::Fails;
    for (std::size_t i = from + 1; i < rows.size(); ++i) {
        if (rows[i].measure_ratio < rows[i - 1].measure_ratio - kThresholdSlack) return Verdict::Fails;
    }
    for (std::size_t t = 0; t < rows.back().tracked.size(); ++t) {
        if (!nonincreasing(rows, from, [t](const CriterionRow& r) { return r.tracked[t].sup_on_subset; })) {
            return Verdict::Fails;
        }
    }
    if (rows.back().series &&
        !nonincreasing(rows, from, [](const CriterionRow& r) { return r.series ? r.series->combined() : 0.0; })) {
        return Verdict::Fails;
    }
    return Verdict::HoldsEmpirically;
}

/// Pointwise values of several quantities on E; E_k keeps the points where
/// all of them are below eps.
struct PointValues {
    std::map<Element, std::vector<double>> values;

    ElementSet sublevel(double eps) const {
        ElementSet out;
        for (const auto& [x, vs] : values) {
            if (std::all_of(vs.begin(), vs.end(), [eps](double v) { return below(v, eps); })) out.insert(out.end(), x);
        }
        return out;
    }

    double sup(std::size_t i, const ElementSet& where) const {
        double s = 0.0;
        for (Element x : where) s = std::max(s, std::abs(values.at(x)[i]));
        return s;
    }
};

CriterionRow make_row(const DynamicsContext& ctx, const ElementSet& e, int k, std::int64_t n,
                      const PointValues& pv, const std::vector<std::string>& names) {
    CriterionRow row;
    row.k = k;
    row.n = n;
    row.eps = ctx.eps(k);
    row.subset = pv.sublevel(row.eps);
    row.measure_ratio = measure_ratio(ctx.model, row.subset, e);
    ElementSet all;
    for (const auto& [x, v] : pv.values) all.insert(all.end(), x);
    for (std::size_t i = 0; i < names.size(); ++i) row.tracked.push_back({names[i], pv.sup(i, row.subset), pv.sup(i, all)});
    return row;
}

/// ((chi_E)^{a(-n)} v_n)^{a(n)}
SparseFunction thm33_weight(const DynamicsContext& ctx, const ElementSet& e, std::int64_t n) {
    const SparseFunction shifted = translate(ctx.model, indicator(e), ctx.eta(ctx.model, -n));
    std::map<Element, double> weighted;
    for (const Sample& s : shifted.samples()) {
        weighted[s.point] = s.value * v_n(ctx.model, ctx.weight, ctx.eta, s.point, n, ctx.convention);
    }
    return translate(ctx.model, SparseFunction::from_map(weighted), ctx.eta(ctx.model, n));
}

void require_nonempty(const HypergroupModel& model, const ElementSet& e) {
    if (e.empty() || model.haar_measure(e) <= 0.0) throw PreconditionFailed("E must have positive measure");
}

CriterionReport new_report(const DynamicsContext& ctx, TheoremId id, std::int64_t horizon) {
    CriterionReport r;
    r.theorem = id;
    r.convention = ctx.convention;
    r.horizon = horizon;
    return r;
}

std::string verdict_summary(const AperiodicityVerdict& v) {
    if (v.counterexamples.empty()) return "no overlap found";
    const Counterexample& c = v.counterexamples.back();
    return "overlap " + to_string(c.overlap) + " at n = " + std::to_string(c.n) + " (" + c.detail + ")";
}

bool disjoint_both_ways(const HypergroupModel& model, const ElementSet& e, Element a) {
    return set_intersection(e, set_convolve(model, e, {a})).empty() &&
           set_intersection(e, set_convolve(model, e, {model.involution(a)})).empty();
}

}  // namespace

EpsSchedule geometric_schedule(double ratio) {
    return [ratio](int k) { return std::pow(ratio, k); };
}

std::string to_string(TheoremId t) {
    switch (t) {
        case TheoremId::Thm33: return "thm33";
        case TheoremId::Thm22: return "thm22";
        case TheoremId::CenterNecessary: return "center_necessary";
        case TheoremId::Thm35Sufficient: return "thm35_sufficient";
        case TheoremId::Hereditary: return "hereditary";
    }
    return "unknown";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::HoldsEmpirically: return "holds_empirically";
        case Verdict::Fails: return "fails";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

CriterionReport probe_thm33(const DynamicsContext& ctx, const ElementSet& e, std::int64_t horizon) {
    require_nonempty(ctx.model, e);
    const AperiodicityVerdict ap = aperiodic_sequence_check(ctx.model, ctx.eta, e, horizon);
    if (!ap.holds_at_horizon) throw PreconditionFailed("eta is not aperiodic for E at the horizon: " + verdict_summary(ap));
    if (!l1_embedding_check(ctx.phi, ctx.model).holds) throw PreconditionFailed("L^Phi does not embed into L^1");

    CriterionReport report = new_report(ctx, TheoremId::Thm33, horizon);
    int k = 0;
    for (std::int64_t n = 1; n <= horizon; ++n) {
        if (ap.fails_at(n)) continue;
        if (std::find(ap.inconclusive.begin(), ap.inconclusive.end(), n) != ap.inconclusive.end()) continue;
        try {
            const SparseFunction wn = thm33_weight(ctx, e, n);
            PointValues pv;
            for (Element x : e) pv.values[x] = {wn(x)};
            report.rows.push_back(make_row(ctx, e, k + 1, n, pv, {"w_n"}));
            ++k;
        } catch (const WindowOverflow& ex) {
            report.notes.push_back("n = " + std::to_string(n) + " skipped: " + ex.what());
        }
    }
    report.verdict = judge(report.rows);
    return report;
}

CriterionReport probe_thm22(const DynamicsContext& ctx, const ElementSet& e, std::int64_t horizon,
                            int series_cutoff, std::int64_t rs_bound) {
    require_nonempty(ctx.model, e);
    if (series_cutoff < 1) throw PreconditionFailed("series cutoff must be at least 1");
    const AperiodicityVerdict ap = strongly_aperiodic_check(ctx.model, ctx.eta, e, horizon, rs_bound);
    if (!ap.holds_at_horizon) {
        throw PreconditionFailed("eta is not strongly aperiodic for E at the horizon: " + verdict_summary(ap));
    }
    if (!l1_embedding_check(ctx.phi, ctx.model).holds) throw PreconditionFailed("L^Phi does not embed into L^1");

    CriterionReport report = new_report(ctx, TheoremId::Thm22, horizon);
    report.notes.push_back("both series are summed over s; terms use index s * n_k");
    int k = 0;
    for (std::int64_t n = *ap.first_n; n <= horizon; ++n) {
        if (ap.fails_at(n)) continue;
        if (std::find(ap.inconclusive.begin(), ap.inconclusive.end(), n) != ap.inconclusive.end()) continue;

        // terms[x] = {forward_1, inverse_1, forward_2, inverse_2, ...}
        PointValues pv;
        for (Element x : e) pv.values[x] = {};
        SeriesTail tail;
        for (int s = 1; s <= series_cutoff; ++s) {
            try {
                const std::int64_t sn = s * n;
                const SparseFunction wn = thm33_weight(ctx, e, sn);
                std::map<Element, double> inverse;
                for (Element x : e) inverse[x] = 1.0 / v_n(ctx.model, ctx.weight, ctx.eta, x, sn, ctx.convention);
                for (Element x : e) {
                    pv.values[x].push_back(wn(x));
                    pv.values[x].push_back(inverse[x]);
                }
                ++tail.terms;
            } catch (const WindowOverflow&) {
                tail.truncated = true;
                break;
            }
        }
        if (tail.terms == 0) {
            report.notes.push_back("n = " + std::to_string(n) + " skipped: first series term leaves the window");
            continue;
        }

        CriterionRow row;
        row.k = k + 1;
        row.n = n;
        row.eps = ctx.eps(row.k);
        row.subset = pv.sublevel(row.eps);
        row.measure_ratio = measure_ratio(ctx.model, row.subset, e);
        for (Element x : row.subset) {
            const auto& vs = pv.values.at(x);
            const double m = ctx.model.haar_weight(x);
            for (std::size_t i = 0; i < vs.size(); i += 2) {
                tail.first += vs[i] * m;
                tail.second += vs[i + 1] * m;
            }
        }
        row.series = tail;
        row.tracked.push_back({"w_n", pv.sup(0, row.subset), pv.sup(0, e)});
        row.tracked.push_back({"v_n^-1", pv.sup(1, row.subset), pv.sup(1, e)});
        report.rows.push_back(std::move(row));
        ++k;
    }
    report.verdict = judge(report.rows);
    return report;
}

CriterionReport probe_center_conditions(const DynamicsContext& ctx, const ElementSet& e, std::int64_t horizon,
                                        std::int64_t rs_bound) {
    require_nonempty(ctx.model, e);
    for (std::int64_t n = 1; n <= horizon; ++n) {
        const Element a = ctx.eta(ctx.model, n);
        if (!is_central(ctx.model, a)) {
            throw PreconditionFailed("eta is not central: a_" + std::to_string(n) + " = " + to_string(a));
        }
    }

    CriterionReport report = new_report(ctx, TheoremId::CenterNecessary, horizon);
    if (ctx.eta.generator() == EtaSequence::Generator::CenterPowers) {
        const CenterAperiodicity ap = aperiodic_center_check(ctx.model, *ctx.eta.base(), e, horizon, rs_bound);
        if (!ap.direct.holds_at_horizon) {
            throw PreconditionFailed("z is not aperiodic for E at the horizon: " + verdict_summary(ap.direct));
        }
        if (ap.disagree) report.notes.push_back("direct and strong aperiodicity checks disagree at the horizon");
    } else {
        const AperiodicityVerdict ap = aperiodic_sequence_check(ctx.model, ctx.eta, e, horizon);
        if (!ap.holds_at_horizon) {
            throw PreconditionFailed("eta is not aperiodic for E at the horizon: " + verdict_summary(ap));
        }
    }

    const bool delta2 = ctx.phi.delta2() == TriState::Proven;
    const bool inverse_weight = ctx.weight.inf_on(ctx.model) > 0.0;
    if (!delta2) report.notes.push_back("Phi is not proven Delta_2; sufficiency not certified");
    if (!inverse_weight) report.notes.push_back("1/w is not a weight on the window; sufficiency not certified");

    int k = 0;
    for (std::int64_t n = 1; n <= horizon; ++n) {
        try {
            if (!disjoint_both_ways(ctx.model, e, ctx.eta(ctx.model, n))) continue;
            PointValues pv;
            for (Element x : e) {
                const double inv = 1.0 / v_n(ctx.model, ctx.weight, ctx.eta, x, n, ctx.convention);
                pv.values[x] = {inv, h_n(ctx.model, ctx.weight, ctx.eta, x, n, ctx.convention)};
            }
            CriterionRow row = make_row(ctx, e, k + 1, n, pv, {"v_n^-1", "h_n"});
            row.complement_norm = orlicz_norm(ctx.model, indicator(set_difference(e, row.subset)), ctx.phi).value;
            report.rows.push_back(std::move(row));
            ++k;
        } catch (const WindowOverflow& ex) {
            report.notes.push_back("n = " + std::to_string(n) + " skipped: " + ex.what());
        }
    }
    report.verdict = judge(report.rows);
    if (delta2 && inverse_weight) {
        report.theorem = TheoremId::Thm35Sufficient;
        if (report.verdict == Verdict::HoldsEmpirically) report.label = "densely hypercyclic certified at horizon";
    }
    return report;
}

CriterionReport probe_hereditary(const DynamicsContext& ctx, Element z, const ElementSet& e, std::int64_t horizon,
                                 std::int64_t rs_bound) {
    require_nonempty(ctx.model, e);
    if (!ctx.model.contains(z) || !is_central(ctx.model, z)) throw PreconditionFailed("z = " + to_string(z) + " is not central");
    if (!ctx.phi.strictly_increasing()) throw PreconditionFailed("Phi is not strictly increasing");
    if (ctx.phi.delta2() != TriState::Proven) throw PreconditionFailed("Phi is not proven Delta_2");
    const CenterAperiodicity ap = aperiodic_center_check(ctx.model, z, e, horizon, rs_bound);
    if (!ap.direct.holds_at_horizon) {
        throw PreconditionFailed("z is not aperiodic for E at the horizon: " + verdict_summary(ap.direct));
    }

    CriterionReport report = new_report(ctx, TheoremId::Hereditary, horizon);
    if (ap.disagree) report.notes.push_back("direct and strong aperiodicity checks disagree at the horizon");
    int k = 0;
    for (std::int64_t n = 1; n <= horizon; ++n) {
        if (ap.direct.fails_at(n)) continue;
        try {
            PointValues pv;
            for (Element x : e) {
                const HereditaryWeights hw = hereditary_weights(ctx.model, x, z, ctx.weight, n);
                pv.values[x] = {hw.forward, hw.backward};
            }
            report.rows.push_back(make_row(ctx, e, k + 1, n, pv, {"w_n", "w~_n"}));
            ++k;
        } catch (const WindowOverflow& ex) {
            report.notes.push_back("n = " + std::to_string(n) + " skipped: " + ex.what());
        }
    }
    report.verdict = judge(report.rows);
    return report;
}

WitnessReport build_transitivity_witness(const DynamicsContext& ctx, const SparseFunction& f,
                                         const SparseFunction& g, std::int64_t horizon, int k_max,
                                         std::int64_t rs_bound) {
    WitnessReport out;
    out.convention = ctx.convention;
    const ElementSet e = set_union(f.support(), g.support());
    if (e.empty()) {
        for (int k = 1; k <= k_max; ++k) out.rows.push_back({k, k, {}, 0.0, 0.0, false, "f = g = 0"});
        out.eventually_decreasing = true;
        out.label = "trivial";
        return out;
    }

    const CriterionReport probe = probe_center_conditions(ctx, e, horizon, rs_bound);
    if (probe.verdict != Verdict::HoldsEmpirically) {
        throw PreconditionFailed("center conditions " + to_string(probe.verdict) + " for E = supp f u supp g");
    }

    for (const CriterionRow& pr : probe.rows) {
        if (pr.k > k_max) break;
        WitnessRow row{pr.k, pr.n, pr.subset, 0.0, 0.0, false, {}};
        try {
            const SparseFunction v = f.restricted(pr.subset) +
                                     s_apply(ctx.model, g.restricted(pr.subset), ctx.weight, ctx.eta, pr.n, ctx.convention);
            const SparseFunction image = lambda_apply(ctx.model, v, ctx.weight, ctx.eta, pr.n, ctx.convention);
            row.err_source = luxemburg_norm(ctx.model, v - f, ctx.phi).value;
            row.err_target = luxemburg_norm(ctx.model, image - g, ctx.phi).value;
            out.last_witness = v;
        } catch (const WindowOverflow& ex) {
            row.skipped = true;
            row.note = ex.what();
        }
        out.rows.push_back(std::move(row));
    }

    std::vector<const WitnessRow*> kept;
    for (const WitnessRow& r : out.rows) {
        if (!r.skipped) kept.push_back(&r);
    }
    bool decreasing = kept.size() >= 2;
    for (std::size_t i = kept.size() / 4 + 1; i < kept.size(); ++i) {
        if (!(kept[i]->err_source < kept[i - 1]->err_source) || !(kept[i]->err_target < kept[i - 1]->err_target)) {
            decreasing = false;
        }
    }
    out.eventually_decreasing = decreasing;
    out.label = probe.label;
    return out;
}

std::vector<OrbitHit> orbit_density_probe(const DynamicsContext& ctx, const SparseFunction& f,
                                          const std::vector<SparseFunction>& targets, std::int64_t horizon) {
    std::vector<OrbitHit> hits(targets.size());
    std::vector<bool> seen(targets.size(), false);
    std::vector<std::int64_t> skipped;
    for (std::int64_t n = 0; n <= horizon; ++n) {
        SparseFunction image;
        try {
            image = lambda_apply(ctx.model, f, ctx.weight, ctx.eta, n, ctx.convention);
        } catch (const WindowOverflow&) {
            skipped.push_back(n);
            continue;
        }
        for (std::size_t t = 0; t < targets.size(); ++t) {
            const double err = luxemburg_norm(ctx.model, image - targets[t], ctx.phi).value;
            if (!seen[t] || err <= hits[t].best_error) {
                hits[t].best_error = err;
                hits[t].best_n = n;
                seen[t] = true;
            }
        }
    }
    for (OrbitHit& h : hits) h.skipped = skipped;
    return hits;
}

bool periodic_point_check(const DynamicsContext& ctx, const SparseFunction& f, std::int64_t n, std::int64_t r_max,
                          double tol) {
    for (std::int64_t r = 1; r <= r_max; ++r) {
        const SparseFunction image = lambda_apply(ctx.model, f, ctx.weight, ctx.eta, r * n, ctx.convention);
        if (luxemburg_norm(ctx.model, image - f, ctx.phi).value > tol) return false;
    }
    return true;
}

}  // namespace hyperdyn
