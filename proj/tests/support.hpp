#pragma once

#include <cstdint>
#include <map>
#include <random>

#include "hyperdyn/hypergroup.hpp"
#include "hyperdyn/sparse_function.hpp"

namespace hyperdyn::fixtures {

/// Random function with `points` nonzero values drawn from labels in [lo, hi].
inline SparseFunction random_function(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, int points,
                                      double scale = 1.0) {
    std::uniform_int_distribution<std::int64_t> label(lo, hi);
    std::uniform_real_distribution<double> value(-scale, scale);
    std::map<Element, double> values;
    for (int i = 0; i < points; ++i) values[Element{label(rng)}] = value(rng);
    return SparseFunction::from_map(values);
}

/// Lowest label of the carrier window.
inline std::int64_t window_low(const HypergroupModel& m) { return m.elements().front().label; }

}  // namespace hyperdyn::fixtures
