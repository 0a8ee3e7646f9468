#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hyperdyn {

enum class TriState { Proven, Refuted, Unknown };

std::string to_string(TriState t);

enum class YoungKind { PhiP, ExpMinusLinear, CoshMinusOne, Tabulated };

struct Knot {
    double t = 0.0;
    double value = 0.0;
};

/// A convex Young function Phi on [0, inf) with Phi(0) = 0 and Phi(t) -> inf.
///
///   PhiP(p)          t^p / p,  p >= 1
///   ExpMinusLinear   e^t - t - 1
///   CoshMinusOne     cosh t - 1
///   Tabulated        piecewise linear through user knots, continued past the
///                    last knot with the last slope
class YoungFunction {
public:
    static YoungFunction phi_p(double p);
    static YoungFunction exp_minus_linear();
    static YoungFunction cosh_minus_one();
    /// Knots must start at (0, 0), have increasing abscissae, nondecreasing
    /// slopes (convexity) and a positive final slope. Throws ValidationError.
    static YoungFunction tabulated(std::vector<Knot> knots);

    YoungKind kind() const { return kind_; }
    double exponent() const { return p_; }
    const std::vector<Knot>& knots() const { return knots_; }
    std::string describe() const;

    /// Analytic Delta_2 status: proven for PhiP, refuted for the exponential
    /// kinds, unknown for tables. delta2_check gives the numerical verdict.
    TriState delta2() const;
    bool strictly_increasing() const;

    /// Phi(t). Throws std::invalid_argument for t < 0.
    double operator()(double t) const;
    double right_derivative(double t) const;
    /// sup{t >= 0 : Phi(t) <= y}
    double inverse(double y) const;

private:
    YoungFunction() = default;

    YoungKind kind_ = YoungKind::PhiP;
    double p_ = 1.0;
    std::vector<Knot> knots_;
};

/// Value of the complementary function; `unbounded` is an explicit marker for
/// Psi(y) = +inf instead of a floating-point overflow.
struct ComplementValue {
    bool unbounded = false;
    double value = 0.0;

    static ComplementValue infinite() { return {true, 0.0}; }
    static ComplementValue finite(double v) { return {false, v}; }
};

/// Psi(y) = sup{x y - Phi(x) : x >= 0}.
ComplementValue complementary_eval(const YoungFunction& phi, double y);

struct Delta2Result {
    TriState status = TriState::Unknown;
    std::optional<double> constant;  // k with Phi(2t) <= k Phi(t), when proven
    std::string basis;
};

/// Delta_2 regularity. PhiP is decided analytically (k = 2^p); every other
/// kind is judged from the ratios Phi(2t)/Phi(t) on `grid`.
Delta2Result delta2_check(const YoungFunction& phi, const std::vector<double>& grid);

}  // namespace hyperdyn
