#include "hyperdyn/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperdyn/errors.hpp"

namespace hyperdyn {

namespace {

constexpr int kMaxExpansion = 4000;
constexpr int kMaxBisection = 400;
constexpr double kLogHalfWidth = 40.0;
constexpr double kGoldenTolerance = 1e-10;
constexpr double kSlopeStep = 1e-8;
constexpr double kSlopeThreshold = 1e-6;

double amemiya_objective(const HypergroupModel& model, const SparseFunction& f, const YoungFunction& phi,
                         double k) {
    double s = 0.0;
    for (const Sample& v : f.samples()) s += phi(k * std::abs(v.value)) * model.haar_weight(v.point);
    return (1.0 + s) / k;
}

bool zero_slope_kind(const YoungFunction& phi) {
    switch (phi.kind()) {
        case YoungKind::PhiP: return phi.exponent() > 1.0;
        case YoungKind::ExpMinusLinear:
        case YoungKind::CoshMinusOne: return true;
        case YoungKind::Tabulated: {
            const auto& k = phi.knots();
            return k[1].value == 0.0;
        }
    }
    return false;
}

}  // namespace

double modular(const HypergroupModel& model, const SparseFunction& f, const YoungFunction& phi, double k) {
    double s = 0.0;
    for (const Sample& v : f.samples()) s += phi(std::abs(v.value) / k) * model.haar_weight(v.point);
    return s;
}

NormResult luxemburg_norm(const HypergroupModel& model, const SparseFunction& f, const YoungFunction& phi,
                          double rtol) {
    if (f.is_zero()) return {};

    double m_min = std::numeric_limits<double>::infinity();
    for (const Sample& v : f.samples()) m_min = std::min(m_min, model.haar_weight(v.point));
    double lo = f.max_abs() / phi.inverse(1.0 / m_min);
    if (!(lo > 0.0) || !std::isfinite(lo)) lo = f.max_abs();

    // Invariant: modular(lo) > 1 >= modular(hi).
    int iterations = 0;
    while (modular(model, f, phi, lo) <= 1.0) {
        lo *= 0.5;
        if (++iterations > kMaxExpansion || lo == 0.0) throw NonFiniteIntegrand("Luxemburg bracket expansion failed");
    }
    double hi = lo;
    while (modular(model, f, phi, hi) > 1.0) {
        lo = hi;
        hi *= 2.0;
        if (++iterations > kMaxExpansion || !std::isfinite(hi)) {
            throw NonFiniteIntegrand("Luxemburg bracket expansion failed");
        }
    }
    for (int i = 0; i < kMaxBisection && hi - lo > rtol * hi; ++i, ++iterations) {
        const double mid = 0.5 * (lo + hi);
        (modular(model, f, phi, mid) > 1.0 ? lo : hi) = mid;
    }
    return {hi, iterations, lo, hi, 0.0};
}

NormResult orlicz_norm(const HypergroupModel& model, const SparseFunction& f, const YoungFunction& phi) {
    if (f.is_zero()) return {};

    const double centre = -std::log(luxemburg_norm(model, f, phi).value);
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    const auto objective = [&](double u) { return amemiya_objective(model, f, phi, std::exp(u)); };

    double a = centre - kLogHalfWidth;
    double b = centre + kLogHalfWidth;
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    double best_u = fc <= fd ? c : d;
    double best = std::min(fc, fd);
    int iterations = 2;
    while (b - a > kGoldenTolerance) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = objective(c);
            if (fc < best) best = fc, best_u = c;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = objective(d);
            if (fd < best) best = fd, best_u = d;
        }
        ++iterations;
    }
    for (double u : {a, b}) {
        const double v = objective(u);
        if (v < best) best = v, best_u = u;
    }
    return {best, iterations, std::exp(a), std::exp(b), std::exp(best_u)};
}

EmbeddingCheck l1_embedding_check(const YoungFunction& phi, const HypergroupModel& model) {
    EmbeddingCheck out;
    const auto slope = [&phi](double h) { return phi(h) / h; };
    out.slope_estimate = 2.0 * slope(0.5 * kSlopeStep) - slope(kSlopeStep);
    if (out.slope_estimate >= kSlopeThreshold) {
        out.slope_positive = TriState::Proven;
    } else {
        out.slope_positive = zero_slope_kind(phi) ? TriState::Refuted : TriState::Unknown;
    }
    out.via_finite_window = out.slope_positive != TriState::Proven;
    out.holds = true;
    out.basis = out.via_finite_window ? "finite measure of the truncated window" : "Phi'(0+) > 0";

    double best = std::numeric_limits<double>::infinity();
    ElementSet all;
    for (Element x : model.elements()) {
        all.insert(all.end(), x);
        const SparseFunction chi = indicator({x});
        best = std::min(best, orlicz_norm(model, chi, phi).value / l1_norm(model, chi));
    }
    const SparseFunction chi = indicator(all);
    best = std::min(best, orlicz_norm(model, chi, phi).value / l1_norm(model, chi));
    out.constant_estimate = best;
    return out;
}

}  // namespace hyperdyn
