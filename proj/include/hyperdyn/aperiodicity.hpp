#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperdyn/element.hpp"
#include "hyperdyn/hypergroup.hpp"
#include "hyperdyn/weight.hpp"

namespace hyperdyn {

struct Counterexample {
    std::int64_t n = 0;
    ElementSet overlap;
    std::string detail;
};

/// Outcome of a disjointness test over n = 1..horizon.
///
/// holds_at_horizon is true when no n in the last quarter of the conclusive
/// range fails; first_n is then one past the largest failing n. Indices whose
/// sets leave the window are listed in `inconclusive` and excluded.
struct AperiodicityVerdict {
    bool holds_at_horizon = false;
    std::optional<std::int64_t> first_n;
    std::int64_t horizon = 0;
    std::int64_t conclusive_horizon = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<std::int64_t> inconclusive;

    bool fails_at(std::int64_t n) const;
};

/// E and E*{a_{+-n}} disjoint.
AperiodicityVerdict aperiodic_sequence_check(const HypergroupModel& model, const EtaSequence& eta,
                                             const ElementSet& e, std::int64_t horizon);

/// (E*{a_{rn}}) and (E*{a_{sn}}) disjoint for distinct r, s with
/// |r|, |s| <= rs_bound and |rn|, |sn| <= horizon.
AperiodicityVerdict strongly_aperiodic_check(const HypergroupModel& model, const EtaSequence& eta,
                                             const ElementSet& e, std::int64_t horizon, std::int64_t rs_bound);

struct CenterAperiodicity {
    AperiodicityVerdict direct;  // E and E*{z}^n disjoint, n >= 1
    AperiodicityVerdict strong;  // strong aperiodicity of the powers of z
    bool disagree = false;
};

/// Throws NotCentral.
CenterAperiodicity aperiodic_center_check(const HypergroupModel& model, Element z, const ElementSet& e,
                                          std::int64_t horizon, std::int64_t rs_bound);

}  // namespace hyperdyn
