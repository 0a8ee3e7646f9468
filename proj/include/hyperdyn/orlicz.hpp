#pragma once

#include <string>

#include "hyperdyn/hypergroup.hpp"
#include "hyperdyn/sparse_function.hpp"
#include "hyperdyn/young.hpp"

namespace hyperdyn {

inline constexpr double kNormRtol = 1e-15;

/// For the Luxemburg norm, [bracket_lo, bracket_hi] is the final bisection
/// bracket on k and value == bracket_hi. For the Orlicz (Amemiya) norm the
/// bracket is the final golden-section bracket on the minimising k and
/// `minimizer` is the best k found.
struct NormResult {
    double value = 0.0;
    int iterations = 0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double minimizer = 0.0;
};

/// sum_x Phi(|f(x)| / k) m({x})
double modular(const HypergroupModel& model, const SparseFunction& f, const YoungFunction& phi, double k);

/// N_Phi(f) = inf{k > 0 : sum_x Phi(|f(x)|/k) m({x}) <= 1}.
NormResult luxemburg_norm(const HypergroupModel& model, const SparseFunction& f, const YoungFunction& phi,
                          double rtol = kNormRtol);

/// ||f||_Phi = inf_{k>0} (1 + sum_x Phi(k|f(x)|) m({x})) / k.
///
/// The objective is quasi-convex in k, so a golden-section search over log k
/// is used on a window of e^{+-40} around 1 / N_Phi(f). When the infimum is
/// only approached as k -> inf (Phi_1) the result is the value at the clamp,
/// which differs from the infimum by N_Phi(f) e^{-40}.
NormResult orlicz_norm(const HypergroupModel& model, const SparseFunction& f, const YoungFunction& phi);

struct EmbeddingCheck {
    bool holds = false;
    /// Two-point Richardson estimate of Phi'(0+).
    double slope_estimate = 0.0;
    TriState slope_positive = TriState::Unknown;
    bool via_finite_window = false;
    /// min ||f||_Phi / ||f||_1 over singleton and whole-window indicators.
    /// A heuristic upper bound for the embedding constant, never a proof.
    double constant_estimate = 0.0;
    bool constant_rigorous = false;
    std::string basis;
};

/// Whether L^Phi embeds into L^1 on the model: either Phi'(0+) > 0 or the
/// measure space is finite. Every truncated window is a finite measure
/// space, so `holds` is always true here; `slope_positive` tells whether the
/// embedding survives removing the truncation.
EmbeddingCheck l1_embedding_check(const YoungFunction& phi, const HypergroupModel& model);

}  // namespace hyperdyn
