#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperdyn/aperiodicity.hpp"
#include "hyperdyn/hypergroup.hpp"
#include "hyperdyn/orlicz.hpp"
#include "hyperdyn/sparse_function.hpp"
#include "hyperdyn/weight.hpp"
#include "hyperdyn/weighted_translation.hpp"
#include "hyperdyn/young.hpp"

namespace hyperdyn {

using EpsSchedule = std::function<double(int)>;

/// eps(k) = ratio^k
EpsSchedule geometric_schedule(double ratio = 0.5);

/// Relative slack when comparing a tracked value against eps(k).
inline constexpr double kThresholdSlack = 1e-12;

/// Everything a probe needs besides the set E.
struct DynamicsContext {
    const HypergroupModel& model;
    Weight weight;
    EtaSequence eta;
    YoungFunction phi;
    ProductConvention convention = ProductConvention::IterateExclusive;
    EpsSchedule eps = geometric_schedule();
};

enum class TheoremId { Thm33, Thm22, CenterNecessary, Thm35Sufficient, Hereditary };
enum class Verdict { HoldsEmpirically, Fails, Inconclusive };

std::string to_string(TheoremId t);
std::string to_string(Verdict v);

struct Tracked {
    std::string name;
    double sup_on_subset = 0.0;  // over E_k
    double sup_on_set = 0.0;     // over E
};

struct SeriesTail {
    double first = 0.0;   // sum_s int_{E_k} (chi_E^{a(-sn)} v_sn)^{a(sn)} dm
    double second = 0.0;  // sum_s int_{E_k} v_sn^{-1} dm
    int terms = 0;
    bool truncated = false;

    double combined() const { return first + second; }
};

struct CriterionRow {
    int k = 0;
    std::int64_t n = 0;
    ElementSet subset;  // E_k
    double measure_ratio = 0.0;
    double eps = 0.0;
    std::vector<Tracked> tracked;
    std::optional<SeriesTail> series;
    std::optional<double> complement_norm;  // ||chi_{E \ E_k}||_Phi
};

struct CriterionReport {
    TheoremId theorem = TheoremId::Thm33;
    Verdict verdict = Verdict::Inconclusive;
    ProductConvention convention = ProductConvention::IterateExclusive;
    std::int64_t horizon = 0;
    std::vector<CriterionRow> rows;
    std::string label;
    std::vector<std::string> notes;
};

/// Rows for n with E and E*{a_n} disjoint; the tracked quantity is
/// w_n = ((chi_E)^{a(-n)} v_n)^{a(n)}. Throws PreconditionFailed unless the
/// sequence is aperiodic at the horizon.
CriterionReport probe_thm33(const DynamicsContext& ctx, const ElementSet& e, std::int64_t horizon);

/// Rows for n where the strong disjointness holds. Both series are summed
/// over s = 1..series_cutoff and stop early (truncated) at the window edge.
/// E_k keeps the points where every individual term is <= eps(k).
CriterionReport probe_thm22(const DynamicsContext& ctx, const ElementSet& e, std::int64_t horizon,
                            int series_cutoff, std::int64_t rs_bound);

/// Tracks v_n^{-1} and h_n(x) = v_n(x a_n) for central eta. The report is
/// labelled as certified when Phi is Delta_2 and inf w > 0.
CriterionReport probe_center_conditions(const DynamicsContext& ctx, const ElementSet& e, std::int64_t horizon,
                                        std::int64_t rs_bound);

/// Tracks the hereditary weights w_n and w~_n of T_{z,w}. The context's
/// eta is ignored.
CriterionReport probe_hereditary(const DynamicsContext& ctx, Element z, const ElementSet& e, std::int64_t horizon,
                                 std::int64_t rs_bound);

struct WitnessRow {
    int k = 0;
    std::int64_t n = 0;
    ElementSet subset;
    double err_source = 0.0;  // N(v_k - f)
    double err_target = 0.0;  // N(Lambda_{n_k} v_k - g)
    bool skipped = false;
    std::string note;
};

struct WitnessReport {
    std::vector<WitnessRow> rows;
    SparseFunction last_witness;
    bool eventually_decreasing = false;
    ProductConvention convention = ProductConvention::IterateExclusive;
    std::string label;
};

/// v_k = f chi_{E_k} + S_{n_k}(g chi_{E_k}) with E = supp f u supp g and
/// (n_k, E_k) taken from probe_center_conditions at `horizon`.
WitnessReport build_transitivity_witness(const DynamicsContext& ctx, const SparseFunction& f,
                                         const SparseFunction& g, std::int64_t horizon, int k_max,
                                         std::int64_t rs_bound);

struct OrbitHit {
    std::int64_t best_n = 0;
    double best_error = 0.0;
    std::vector<std::int64_t> skipped;
};

/// min over 0 <= n <= horizon of N(Lambda_n f - g) per target; ties go to the
/// largest n.
std::vector<OrbitHit> orbit_density_probe(const DynamicsContext& ctx, const SparseFunction& f,
                                          const std::vector<SparseFunction>& targets, std::int64_t horizon);

/// N(Lambda_{rn} f - f) <= tol for r = 1..r_max.
bool periodic_point_check(const DynamicsContext& ctx, const SparseFunction& f, std::int64_t n, std::int64_t r_max,
                          double tol);

}  // namespace hyperdyn
