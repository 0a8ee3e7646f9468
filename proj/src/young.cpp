#include "hyperdyn/young.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "hyperdyn/errors.hpp"

namespace hyperdyn {

namespace {

constexpr int kMaxBisection = 200;
constexpr int kMaxExpansion = 2100;
constexpr double kSeriesCutoff = 1e-2;

// Ratios beyond this, still growing at the end of the grid, count as unbounded.
constexpr double kDelta2Unbounded = 1e6;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::string to_string(TriState t) {
    switch (t) {
        case TriState::Proven: return "proven";
        case TriState::Refuted: return "refuted";
        case TriState::Unknown: return "unknown";
    }
    return "unknown";
}

YoungFunction YoungFunction::phi_p(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw ValidationError("PhiP needs a finite exponent p >= 1");
    YoungFunction phi;
    phi.kind_ = YoungKind::PhiP;
    phi.p_ = p;
    return phi;
}

YoungFunction YoungFunction::exp_minus_linear() {
    YoungFunction phi;
    phi.kind_ = YoungKind::ExpMinusLinear;
    return phi;
}

YoungFunction YoungFunction::cosh_minus_one() {
    YoungFunction phi;
    phi.kind_ = YoungKind::CoshMinusOne;
    return phi;
}

YoungFunction YoungFunction::tabulated(std::vector<Knot> knots) {
    if (knots.size() < 2) throw ValidationError("a tabulated Young function needs at least two knots");
    if (knots.front().t != 0.0 || knots.front().value != 0.0) {
        throw ValidationError("a tabulated Young function must start at (0, 0)");
    }
    double prev_slope = 0.0;
    for (std::size_t i = 1; i < knots.size(); ++i) {
        const double dt = knots[i].t - knots[i - 1].t;
        if (!(dt > 0.0)) throw ValidationError("tabulated knots must have increasing abscissae");
        const double slope = (knots[i].value - knots[i - 1].value) / dt;
        if (slope < 0.0) throw ValidationError("tabulated Young function must be nondecreasing");
        if (slope < prev_slope) throw ValidationError("tabulated Young function must be convex");
        prev_slope = slope;
    }
    if (!(prev_slope > 0.0)) throw ValidationError("tabulated Young function must grow without bound");
    YoungFunction phi;
    phi.kind_ = YoungKind::Tabulated;
    phi.knots_ = std::move(knots);
    return phi;
}

std::string YoungFunction::describe() const {
    switch (kind_) {
        case YoungKind::PhiP: return "phi_p(p=" + format_double(p_) + ")";
        case YoungKind::ExpMinusLinear: return "exp_minus_linear";
        case YoungKind::CoshMinusOne: return "cosh_minus_one";
        case YoungKind::Tabulated: return "tabulated(" + std::to_string(knots_.size()) + " knots)";
    }
    return "unknown";
}

TriState YoungFunction::delta2() const {
    switch (kind_) {
        case YoungKind::PhiP: return TriState::Proven;
        case YoungKind::ExpMinusLinear:
        case YoungKind::CoshMinusOne: return TriState::Refuted;
        case YoungKind::Tabulated: return TriState::Unknown;
    }
    return TriState::Unknown;
}

bool YoungFunction::strictly_increasing() const {
    if (kind_ != YoungKind::Tabulated) return true;
    for (std::size_t i = 1; i < knots_.size(); ++i) {
        if (!(knots_[i].value > knots_[i - 1].value)) return false;
    }
    return true;
}

double YoungFunction::operator()(double t) const {
    if (t < 0.0 || std::isnan(t)) throw std::invalid_argument("Young functions are evaluated on [0, inf)");
    if (std::isinf(t)) return t;
    switch (kind_) {
        case YoungKind::PhiP: return std::pow(t, p_) / p_;
        case YoungKind::ExpMinusLinear: {
            if (t >= kSeriesCutoff) return std::expm1(t) - t;
            // sum_{k>=2} t^k / k!, avoiding the cancellation in expm1(t) - t
            double term = 0.5 * t * t;
            double sum = term;
            for (int k = 3; k <= 12; ++k) {
                term *= t / k;
                sum += term;
            }
            return sum;
        }
        case YoungKind::CoshMinusOne: {
            const double s = std::sinh(0.5 * t);
            return 2.0 * s * s;
        }
        case YoungKind::Tabulated: {
            auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                                       [](double v, const Knot& k) { return v < k.t; });
            const Knot& a = (it == knots_.end()) ? knots_[knots_.size() - 2] : *(it - 1);
            const Knot& b = (it == knots_.end()) ? knots_.back() : *it;
            const double slope = (b.value - a.value) / (b.t - a.t);
            return a.value + slope * (t - a.t);
        }
    }
    return 0.0;
}

double YoungFunction::right_derivative(double t) const {
    if (t < 0.0) throw std::invalid_argument("Young functions are evaluated on [0, inf)");
    switch (kind_) {
        case YoungKind::PhiP: return p_ == 1.0 ? 1.0 : std::pow(t, p_ - 1.0);
        case YoungKind::ExpMinusLinear: return std::expm1(t);
        case YoungKind::CoshMinusOne: return std::sinh(t);
        case YoungKind::Tabulated: {
            auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                                       [](double v, const Knot& k) { return v < k.t; });
            if (it == knots_.end()) --it;
            const Knot& a = *(it - 1);
            return (it->value - a.value) / (it->t - a.t);
        }
    }
    return 0.0;
}

double YoungFunction::inverse(double y) const {
    if (y < 0.0) throw std::invalid_argument("inverse Young function needs y >= 0");
    if (kind_ == YoungKind::PhiP) return std::pow(p_ * y, 1.0 / p_);
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; (*this)(hi) <= y; ++i) {
        lo = hi;
        hi *= 2.0;
        if (i > kMaxExpansion) return std::numeric_limits<double>::infinity();
    }
    for (int i = 0; i < kMaxBisection && hi - lo > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        ((*this)(mid) <= y ? lo : hi) = mid;
    }
    return lo;
}

ComplementValue complementary_eval(const YoungFunction& phi, double y) {
    if (y < 0.0 || std::isnan(y)) throw std::invalid_argument("complementary function is evaluated on [0, inf)");
    if (y == 0.0) return ComplementValue::finite(0.0);

    if (phi.kind() == YoungKind::PhiP) {
        const double p = phi.exponent();
        if (p == 1.0) return y <= 1.0 ? ComplementValue::finite(0.0) : ComplementValue::infinite();
        const double q = p / (p - 1.0);
        return ComplementValue::finite(std::pow(y, q) / q);
    }

    if (phi.kind() == YoungKind::Tabulated) {
        const auto& k = phi.knots();
        const double last_slope = (k.back().value - k[k.size() - 2].value) / (k.back().t - k[k.size() - 2].t);
        if (y > last_slope) return ComplementValue::infinite();
    }

    // x -> x y - Phi(x) is concave; its maximiser is where Phi' crosses y.
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; phi.right_derivative(hi) < y; ++i) {
        lo = hi;
        hi *= 2.0;
        if (i > kMaxExpansion) return ComplementValue::infinite();
    }
    for (int i = 0; i < kMaxBisection && hi - lo > 1e-16 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (phi.right_derivative(mid) < y ? lo : hi) = mid;
    }
    double best = 0.0;
    for (double x : {lo, hi}) best = std::max(best, x * y - phi(x));
    return ComplementValue::finite(best);
}

Delta2Result delta2_check(const YoungFunction& phi, const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("delta2_check needs a nonempty grid");
    if (phi.kind() == YoungKind::PhiP) {
        // Phi(2t) = 2^p Phi(t) for every t.
        return {TriState::Proven, std::pow(2.0, phi.exponent()), "scaling identity Phi(2t) = 2^p Phi(t)"};
    }

    std::vector<double> sorted = grid;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> ratios;
    for (double t : sorted) {
        if (t <= 0.0) continue;
        const double base = phi(t);
        const double doubled = phi(2.0 * t);
        if (base > 0.0 && std::isfinite(base)) ratios.push_back(doubled / base);
    }
    if (ratios.size() < 3) return {TriState::Unknown, std::nullopt, "grid has fewer than three usable points"};

    const std::size_t tail = std::max<std::size_t>(2, ratios.size() / 4);
    bool growing = true;
    for (std::size_t i = ratios.size() - tail + 1; i < ratios.size(); ++i) {
        if (!(ratios[i] > ratios[i - 1])) growing = false;
    }
    const double last = ratios.back();
    if (growing && (!std::isfinite(last) || last > kDelta2Unbounded)) {
        return {TriState::Refuted, std::nullopt,
                "Phi(2t)/Phi(t) increases to " + format_double(last) + " at t = " + format_double(sorted.back())};
    }
    return {TriState::Unknown, std::nullopt, "ratios stay bounded on the grid; a finite grid proves nothing"};
}

}  // namespace hyperdyn
