#pragma once

#include <map>
#include <vector>

#include "hyperdyn/element.hpp"
#include "hyperdyn/hypergroup.hpp"
#include "hyperdyn/sparse_measure.hpp"

namespace hyperdyn {

struct Sample {
    Element point;
    double value = 0.0;

    bool operator==(const Sample&) const = default;
};

/// Finitely supported real function on the carrier, implicitly zero off its
/// support. Exact zeros are never stored.
class SparseFunction {
public:
    SparseFunction() = default;

    static SparseFunction from_map(const std::map<Element, double>& values);
    /// Duplicate points are summed.
    static SparseFunction from_samples(const std::vector<Sample>& samples);

    const std::vector<Sample>& samples() const { return samples_; }
    double operator()(Element x) const;
    ElementSet support() const;
    bool is_zero() const { return samples_.empty(); }

    double max_abs() const;
    SparseFunction abs() const;
    /// f * chi_A
    SparseFunction restricted(const ElementSet& a) const;

    SparseFunction& operator+=(const SparseFunction& g);
    SparseFunction& operator-=(const SparseFunction& g);
    SparseFunction& operator*=(double c);

    friend SparseFunction operator+(SparseFunction f, const SparseFunction& g) { return f += g; }
    friend SparseFunction operator-(SparseFunction f, const SparseFunction& g) { return f -= g; }
    friend SparseFunction operator*(SparseFunction f, double c) { return f *= c; }
    friend SparseFunction operator*(double c, SparseFunction f) { return f *= c; }

    bool operator==(const SparseFunction&) const = default;

    static double max_difference(const SparseFunction& f, const SparseFunction& g);

private:
    std::vector<Sample> samples_;
};

/// chi_A
SparseFunction indicator(const ElementSet& a);

/// f^y(x) = f(x*y) = sum_u f(u) (delta_x * delta_y)({u}).
///
/// The support of f^y lies in supp(f) * {y^-}; every x there must have
/// delta_x * delta_y inside the window or WindowOverflow is thrown.
SparseFunction translate(const HypergroupModel& model, const SparseFunction& f, Element y);

/// (f * mu)(x) = sum_y mu({y}) f(x * y^-). In particular f * delta_{y^-} = f^y.
SparseFunction convolve_fn_measure(const HypergroupModel& model, const SparseFunction& f,
                                   const SparseMeasure& mu);

/// sum_x f(x) m({x})
double integrate_haar(const HypergroupModel& model, const SparseFunction& f);

/// sum_x |f(x)| m({x})
double l1_norm(const HypergroupModel& model, const SparseFunction& f);

/// max_{x in A} |f(x)|, zero for empty A.
double sup_on_set(const SparseFunction& f, const ElementSet& a);

}  // namespace hyperdyn
