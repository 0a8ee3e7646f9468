#include "hyperdyn/weight.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "hyperdyn/errors.hpp"

namespace hyperdyn {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError(std::string("weight ") + what + " must be finite and > 0");
}

}  // namespace

Weight Weight::constant(double c) {
    require_positive(c, "constant");
    Weight w;
    w.form_ = Form::Constant;
    w.c_ = c;
    return w;
}

Weight Weight::step(std::int64_t threshold, double low, double high) {
    require_positive(low, "low side");
    require_positive(high, "high side");
    Weight w;
    w.form_ = Form::Step;
    w.threshold_ = threshold;
    w.low_ = low;
    w.high_ = high;
    return w;
}

Weight Weight::table(std::map<Element, double> values, double fallback) {
    require_positive(fallback, "default");
    for (const auto& [x, v] : values) require_positive(v, "table entry");
    Weight w;
    w.form_ = Form::Table;
    w.c_ = fallback;
    w.table_ = std::move(values);
    return w;
}

Weight Weight::geometric(double c, double r) {
    require_positive(c, "scale");
    require_positive(r, "ratio");
    Weight w;
    w.form_ = Form::Geometric;
    w.c_ = c;
    w.ratio_ = r;
    return w;
}

std::string Weight::describe() const {
    switch (form_) {
        case Form::Constant: return "constant(" + num(c_) + ")";
        case Form::Step:
            return "step(threshold=" + std::to_string(threshold_) + ", low=" + num(low_) + ", high=" + num(high_) + ")";
        case Form::Table: return "table(" + std::to_string(table_.size()) + " entries, default=" + num(c_) + ")";
        case Form::Geometric: return "geometric(c=" + num(c_) + ", r=" + num(ratio_) + ")";
    }
    return "unknown";
}

double Weight::operator()(Element x) const {
    switch (form_) {
        case Form::Constant: return c_;
        case Form::Step: return x.label <= threshold_ ? low_ : high_;
        case Form::Table: {
            auto it = table_.find(x);
            return it == table_.end() ? c_ : it->second;
        }
        case Form::Geometric: return c_ * std::pow(ratio_, static_cast<double>(x.label));
    }
    return c_;
}

double Weight::sup_on(const HypergroupModel& model) const {
    double s = 0.0;
    for (Element x : model.elements()) s = std::max(s, (*this)(x));
    return s;
}

double Weight::inf_on(const HypergroupModel& model) const {
    double s = std::numeric_limits<double>::infinity();
    for (Element x : model.elements()) s = std::min(s, (*this)(x));
    return s;
}

double translated_weight(const HypergroupModel& model, const Weight& w, Element x, Element b) {
    double v = 0.0;
    for (const Atom& a : model.convolve_points(x, b).atoms()) v += w(a.point) * a.mass;
    return v;
}

std::string to_string(ProductConvention c) {
    return c == ProductConvention::IterateExclusive ? "iterate_exclusive" : "paper_inclusive";
}

EtaSequence EtaSequence::center_powers(const HypergroupModel& model, Element z) {
    if (!model.contains(z)) throw ValidationError("eta generator " + to_string(z) + " is outside the window");
    if (!is_central(model, z)) throw NotCentral("eta generator " + to_string(z) + " is not in the center");
    EtaSequence eta;
    eta.generator_ = Generator::CenterPowers;
    eta.base_ = z;
    return eta;
}

EtaSequence EtaSequence::table(const HypergroupModel& model, std::map<std::int64_t, Element> entries) {
    for (const auto& [n, x] : entries) {
        if (n < 1) throw ValidationError("eta table keys start at 1; a_0 = e and a_{-n} = a_n^- are implied");
        if (!model.contains(x)) throw ValidationError("eta table entry " + to_string(x) + " is outside the window");
    }
    EtaSequence eta;
    eta.generator_ = Generator::Table;
    eta.table_ = std::move(entries);
    return eta;
}

EtaSequence EtaSequence::identity_labels() {
    EtaSequence eta;
    eta.generator_ = Generator::Identity;
    return eta;
}

EtaSequence EtaSequence::constant(Element c) {
    EtaSequence eta;
    eta.generator_ = Generator::Constant;
    eta.base_ = c;
    return eta;
}

std::optional<Element> EtaSequence::base() const {
    if (generator_ == Generator::CenterPowers || generator_ == Generator::Constant) return base_;
    return std::nullopt;
}

std::string EtaSequence::describe() const {
    switch (generator_) {
        case Generator::CenterPowers: return "center_powers(z=" + to_string(base_) + ")";
        case Generator::Table: return "table(" + std::to_string(table_.size()) + " entries)";
        case Generator::Identity: return "identity";
        case Generator::Constant: return "constant(" + to_string(base_) + ")";
    }
    return "unknown";
}

Element EtaSequence::operator()(const HypergroupModel& model, std::int64_t n) const {
    if (n == 0) return model.identity();
    if (generator_ == Generator::CenterPowers) return power_center_point(model, base_, n);

    const std::int64_t k = n < 0 ? -n : n;
    Element a{0};
    switch (generator_) {
        case Generator::Table: {
            auto it = table_.find(k);
            if (it == table_.end()) throw WindowOverflow("eta table has no entry for n = " + std::to_string(k));
            a = it->second;
            break;
        }
        case Generator::Identity: a = Element{k}; break;
        case Generator::Constant: a = base_; break;
        case Generator::CenterPowers: break;
    }
    if (!model.contains(a)) throw WindowOverflow("a_" + std::to_string(k) + " = " + to_string(a) + " is outside the window");
    return n < 0 ? model.involution(a) : a;
}

}  // namespace hyperdyn
