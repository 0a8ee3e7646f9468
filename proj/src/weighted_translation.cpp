#include "hyperdyn/weighted_translation.hpp"

#include <map>
#include <stdexcept>
#include <vector>

#include "hyperdyn/errors.hpp"

namespace hyperdyn {

namespace {

std::int64_t last_factor(std::int64_t n, ProductConvention conv) {
    if (n < 0) throw std::invalid_argument("weight products need n >= 0");
    return conv == ProductConvention::IterateExclusive ? n - 1 : n;
}

std::vector<Element> backward_indices(const HypergroupModel& model, const EtaSequence& eta, std::int64_t last) {
    std::vector<Element> out;
    for (std::int64_t j = 0; j <= last; ++j) out.push_back(eta(model, -j));
    return out;
}

Element central_shift(const HypergroupModel& model, Element x, Element a) {
    if (!is_central(model, a)) throw NotCentral("a_n = " + to_string(a) + " is not in the center");
    return central_product(model, x, a);
}

}  // namespace

double v_n(const HypergroupModel& model, const Weight& w, const EtaSequence& eta, Element x, std::int64_t n,
           ProductConvention conv) {
    double v = 1.0;
    const std::int64_t last = last_factor(n, conv);
    for (std::int64_t j = 0; j <= last; ++j) v *= translated_weight(model, w, x, eta(model, -j));
    return v;
}

double h_n(const HypergroupModel& model, const Weight& w, const EtaSequence& eta, Element x, std::int64_t n,
           ProductConvention conv) {
    return v_n(model, w, eta, central_shift(model, x, eta(model, n)), n, conv);
}

SparseFunction multiply(const Weight& w, const SparseFunction& f) {
    std::map<Element, double> values;
    for (const Sample& s : f.samples()) values[s.point] = w(s.point) * s.value;
    return SparseFunction::from_map(values);
}

SparseFunction lambda_apply(const HypergroupModel& model, const SparseFunction& f, const Weight& w,
                            const EtaSequence& eta, std::int64_t n, ProductConvention conv) {
    const std::int64_t last = last_factor(n, conv);
    const SparseFunction shifted = translate(model, f, eta(model, -n));
    const std::vector<Element> shifts = backward_indices(model, eta, last);
    std::map<Element, double> values;
    for (const Sample& s : shifted.samples()) {
        double val = s.value;
        for (std::int64_t j = last; j >= 0; --j) {
            val = translated_weight(model, w, s.point, shifts[static_cast<std::size_t>(j)]) * val;
        }
        values[s.point] = val;
    }
    return SparseFunction::from_map(values);
}

SparseFunction t_apply(const HypergroupModel& model, const SparseFunction& f, Element a, const Weight& w) {
    const SparseFunction shifted = translate(model, f, model.involution(a));
    std::map<Element, double> values;
    for (const Sample& s : shifted.samples()) values[s.point] = w(s.point) * s.value;
    return SparseFunction::from_map(values);
}

SparseFunction t_iterate(const HypergroupModel& model, const SparseFunction& f, Element a, const Weight& w,
                         std::int64_t n) {
    if (n < 0) throw std::invalid_argument("t_iterate needs n >= 0");
    SparseFunction g = f;
    for (std::int64_t i = 0; i < n; ++i) g = t_apply(model, g, a, w);
    return g;
}

SparseFunction s_apply(const HypergroupModel& model, const SparseFunction& f, const Weight& w,
                       const EtaSequence& eta, std::int64_t n, ProductConvention conv) {
    const Element a = eta(model, n);
    if (!is_central(model, a)) throw NotCentral("a_" + std::to_string(n) + " = " + to_string(a) + " is not in the center");
    const SparseFunction shifted = translate(model, f, a);
    std::map<Element, double> values;
    for (const Sample& s : shifted.samples()) {
        values[s.point] = s.value / v_n(model, w, eta, central_product(model, s.point, a), n, conv);
    }
    return SparseFunction::from_map(values);
}

HereditaryWeights hereditary_weights(const HypergroupModel& model, Element x, Element z, const Weight& w,
                                     std::int64_t n) {
    if (n < 0) throw std::invalid_argument("hereditary weights need n >= 0");
    if (!is_central(model, z)) throw NotCentral("element " + to_string(z) + " is not in the center");
    const Element zinv = model.involution(z);
    HereditaryWeights out;
    Element p = x;
    for (std::int64_t j = 1; j <= n; ++j) {
        p = central_product(model, p, z);
        out.forward *= w(p);
    }
    double back = 1.0;
    p = x;
    for (std::int64_t j = 0; j < n; ++j) {
        if (j > 0) p = central_product(model, p, zinv);
        back *= w(p);
    }
    out.backward = 1.0 / back;
    return out;
}

}  // namespace hyperdyn
