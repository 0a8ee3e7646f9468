#include "hyperdyn/aperiodicity.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperdyn/errors.hpp"

namespace hyperdyn {

namespace {

void require_set(const HypergroupModel& model, const ElementSet& e, std::int64_t horizon) {
    if (e.empty()) throw PreconditionFailed("the set E is empty, so m(E) = 0");
    for (Element x : e) {
        if (!model.contains(x)) throw PreconditionFailed("E contains " + to_string(x) + " outside the window");
    }
    if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
}

class VerdictBuilder {
public:
    explicit VerdictBuilder(std::int64_t horizon) { v_.horizon = horizon; }

    void fail(std::int64_t n, ElementSet overlap, std::string detail) {
        v_.counterexamples.push_back({n, std::move(overlap), std::move(detail)});
        last_conclusive_ = n;
    }
    void pass(std::int64_t n) { last_conclusive_ = n; }
    void inconclusive(std::int64_t n) { v_.inconclusive.push_back(n); }

    AperiodicityVerdict finish() {
        v_.conclusive_horizon = last_conclusive_;
        if (last_conclusive_ == 0) return v_;
        const std::int64_t tail_start = (3 * last_conclusive_) / 4 + 1;
        std::int64_t worst = 0;
        for (const Counterexample& c : v_.counterexamples) worst = std::max(worst, c.n);
        v_.holds_at_horizon = worst < tail_start;
        if (v_.holds_at_horizon) v_.first_n = worst + 1;
        return v_;
    }

private:
    AperiodicityVerdict v_;
    std::int64_t last_conclusive_ = 0;
};

ElementSet shifted(const HypergroupModel& model, const ElementSet& e, Element a) {
    return set_convolve(model, e, {a});
}

}  // namespace

bool AperiodicityVerdict::fails_at(std::int64_t n) const {
    return std::any_of(counterexamples.begin(), counterexamples.end(),
                       [n](const Counterexample& c) { return c.n == n; });
}

AperiodicityVerdict aperiodic_sequence_check(const HypergroupModel& model, const EtaSequence& eta,
                                             const ElementSet& e, std::int64_t horizon) {
    require_set(model, e, horizon);
    VerdictBuilder out(horizon);
    for (std::int64_t n = 1; n <= horizon; ++n) {
        try {
            ElementSet overlap;
            std::string detail;
            for (std::int64_t sign : {1, -1}) {
                const Element a = eta(model, sign * n);
                const ElementSet hit = set_intersection(e, shifted(model, e, a));
                if (!hit.empty() && overlap.empty()) detail = "a_" + std::to_string(sign * n) + " = " + to_string(a);
                overlap = set_union(overlap, hit);
            }
            if (overlap.empty()) {
                out.pass(n);
            } else {
                out.fail(n, std::move(overlap), std::move(detail));
            }
        } catch (const WindowOverflow&) {
            out.inconclusive(n);
        }
    }
    return out.finish();
}

AperiodicityVerdict strongly_aperiodic_check(const HypergroupModel& model, const EtaSequence& eta,
                                             const ElementSet& e, std::int64_t horizon, std::int64_t rs_bound) {
    require_set(model, e, horizon);
    if (rs_bound < 1) throw std::invalid_argument("rs_bound must be at least 1");
    VerdictBuilder out(horizon);
    for (std::int64_t n = 1; n <= horizon; ++n) {
        const std::int64_t reach = std::min(rs_bound, horizon / n);
        bool overflow = false;
        bool failed = false;
        for (std::int64_t r = -reach; r <= reach && !failed; ++r) {
            for (std::int64_t s = r + 1; s <= reach && !failed; ++s) {
                try {
                    const ElementSet hit = set_intersection(shifted(model, e, eta(model, r * n)),
                                                            shifted(model, e, eta(model, s * n)));
                    if (!hit.empty()) {
                        failed = true;
                        out.fail(n, hit, "r = " + std::to_string(r) + ", s = " + std::to_string(s));
                    }
                } catch (const WindowOverflow&) {
                    overflow = true;
                }
            }
        }
        if (failed) continue;
        if (overflow) {
            out.inconclusive(n);
        } else {
            out.pass(n);
        }
    }
    return out.finish();
}

CenterAperiodicity aperiodic_center_check(const HypergroupModel& model, Element z, const ElementSet& e,
                                          std::int64_t horizon, std::int64_t rs_bound) {
    const EtaSequence powers = EtaSequence::center_powers(model, z);
    require_set(model, e, horizon);

    VerdictBuilder direct(horizon);
    for (std::int64_t n = 1; n <= horizon; ++n) {
        try {
            const Element zn = powers(model, n);
            const ElementSet hit = set_intersection(e, shifted(model, e, zn));
            if (hit.empty()) {
                direct.pass(n);
            } else {
                direct.fail(n, hit, "z^" + std::to_string(n) + " = " + to_string(zn));
            }
        } catch (const WindowOverflow&) {
            direct.inconclusive(n);
        }
    }

    CenterAperiodicity out;
    out.direct = direct.finish();
    out.strong = strongly_aperiodic_check(model, powers, e, horizon, rs_bound);
    out.disagree = out.direct.holds_at_horizon != out.strong.holds_at_horizon;
    return out;
}

}  // namespace hyperdyn
