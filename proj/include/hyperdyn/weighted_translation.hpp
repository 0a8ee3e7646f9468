#pragma once

#include <cstdint>

#include "hyperdyn/hypergroup.hpp"
#include "hyperdyn/sparse_function.hpp"
#include "hyperdyn/weight.hpp"

namespace hyperdyn {

/// v_n(x) = prod_j w^{a(-j)}(x), j = 0..n-1 (IterateExclusive) or j = 0..n
/// (PaperInclusive).
double v_n(const HypergroupModel& model, const Weight& w, const EtaSequence& eta, Element x, std::int64_t n,
           ProductConvention conv);

/// h_n(x) = v_n(x a_n); a_n must be central.
double h_n(const HypergroupModel& model, const Weight& w, const EtaSequence& eta, Element x, std::int64_t n,
           ProductConvention conv);

/// x -> w(x) f(x)
SparseFunction multiply(const Weight& w, const SparseFunction& f);

/// (Lambda_n f)(x) = v_n(x) f^{a(-n)}(x).
///
/// Factors are applied innermost first, w^{a(-n+1)} before w^{a(0)}, which
/// is the order of repeated t_apply. On groups both agree bit for bit.
SparseFunction lambda_apply(const HypergroupModel& model, const SparseFunction& f, const Weight& w,
                            const EtaSequence& eta, std::int64_t n, ProductConvention conv);

/// T_{a,w} f = w f^{a^-}
SparseFunction t_apply(const HypergroupModel& model, const SparseFunction& f, Element a, const Weight& w);

/// T_{a,w}^n f
SparseFunction t_iterate(const HypergroupModel& model, const SparseFunction& f, Element a, const Weight& w,
                         std::int64_t n);

/// (S_n f)(x) = f(x a_n) / v_n(x a_n), the inverse of Lambda_n for central
/// a_n. Throws NotCentral otherwise.
SparseFunction s_apply(const HypergroupModel& model, const SparseFunction& f, const Weight& w,
                       const EtaSequence& eta, std::int64_t n, ProductConvention conv);

struct HereditaryWeights {
    double forward = 1.0;   // w_n(x) = prod_{j=1..n} w(x z^j)
    double backward = 1.0;  // w~_n(x) = 1 / prod_{j=0..n-1} w(x z^-j)
};

/// Throws NotCentral when z is not central.
HereditaryWeights hereditary_weights(const HypergroupModel& model, Element x, Element z, const Weight& w,
                                     std::int64_t n);

}  // namespace hyperdyn
