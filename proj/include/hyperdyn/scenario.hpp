#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperdyn/criteria.hpp"
#include "hyperdyn/hypergroup.hpp"
#include "hyperdyn/sparse_function.hpp"
#include "hyperdyn/weight.hpp"
#include "hyperdyn/young.hpp"

namespace hyperdyn {

struct RunConfig {
    std::int64_t horizon = 20;
    int k_max = 20;
    int series_cutoff = 5;
    std::int64_t rs_bound = 3;
    std::int64_t triple_bound = 12;
    ProductConvention convention = ProductConvention::IterateExclusive;
    double eps_ratio = 0.5;
    /// Absolute tolerance for the Haar invariance residual.
    double haar_tolerance = 1e-10;
    /// Absolute tolerance for the norm sandwich, scaled by max(1, N(f)).
    double sandwich_tolerance = 1e-9;
    /// Labels with |y| <= haar_shift are used as translation points by `haar`.
    std::int64_t haar_shift = 8;
    int haar_trials = 20;
};

/// A validated scenario file. `source` is the exact text that was parsed.
struct Scenario {
    std::string id;
    std::string source;
    HypergroupModel model;
    YoungFunction phi;
    Weight weight;
    EtaSequence eta;
    std::map<std::string, ElementSet> sets;
    std::map<std::string, SparseFunction> functions;
    RunConfig run;
    /// Advisory notes raised while loading (never errors).
    std::vector<std::string> advisories;

    DynamicsContext context() const;
    const ElementSet& set(const std::string& name) const;
    const SparseFunction& function(const std::string& name) const;
};

/// Parses and validates scenario text. Throws ValidationError (including for
/// malformed YAML, unknown keys and TableDefined axiom violations), NotCentral
/// for a non-central `z`, and WindowOverflow when some a(+-n), n <= horizon,
/// is not addressable in the window.
Scenario parse_scenario(const std::string& text);

Scenario load_scenario(const std::string& path);

}  // namespace hyperdyn
