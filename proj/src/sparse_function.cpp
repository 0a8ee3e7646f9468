#include "hyperdyn/sparse_function.hpp"

#include <algorithm>
#include <cmath>

namespace hyperdyn {

SparseFunction SparseFunction::from_map(const std::map<Element, double>& values) {
    SparseFunction f;
    f.samples_.reserve(values.size());
    for (const auto& [x, v] : values) {
        if (v != 0.0) f.samples_.push_back({x, v});
    }
    return f;
}

SparseFunction SparseFunction::from_samples(const std::vector<Sample>& samples) {
    std::map<Element, double> values;
    for (const Sample& s : samples) values[s.point] += s.value;
    return from_map(values);
}

double SparseFunction::operator()(Element x) const {
    auto it = std::lower_bound(samples_.begin(), samples_.end(), x,
                               [](const Sample& s, Element p) { return s.point < p; });
    return (it != samples_.end() && it->point == x) ? it->value : 0.0;
}

ElementSet SparseFunction::support() const {
    ElementSet s;
    for (const Sample& v : samples_) s.insert(s.end(), v.point);
    return s;
}

double SparseFunction::max_abs() const {
    double m = 0.0;
    for (const Sample& s : samples_) m = std::max(m, std::abs(s.value));
    return m;
}

SparseFunction SparseFunction::abs() const {
    SparseFunction out = *this;
    for (Sample& s : out.samples_) s.value = std::abs(s.value);
    return out;
}

SparseFunction SparseFunction::restricted(const ElementSet& a) const {
    SparseFunction out;
    for (const Sample& s : samples_) {
        if (a.contains(s.point)) out.samples_.push_back(s);
    }
    return out;
}

namespace {

template <typename Op>
std::vector<Sample> merge(const std::vector<Sample>& a, const std::vector<Sample>& b, Op op) {
    std::vector<Sample> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    const auto push = [&out](Element x, double v) {
        if (v != 0.0) out.push_back({x, v});
    };
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->point < ib->point)) {
            push(ia->point, op(ia->value, 0.0));
            ++ia;
        } else if (ia == a.end() || ib->point < ia->point) {
            push(ib->point, op(0.0, ib->value));
            ++ib;
        } else {
            push(ia->point, op(ia->value, ib->value));
            ++ia;
            ++ib;
        }
    }
    return out;
}

}  // namespace

SparseFunction& SparseFunction::operator+=(const SparseFunction& g) {
    samples_ = merge(samples_, g.samples_, [](double x, double y) { return x + y; });
    return *this;
}

SparseFunction& SparseFunction::operator-=(const SparseFunction& g) {
    samples_ = merge(samples_, g.samples_, [](double x, double y) { return x - y; });
    return *this;
}

SparseFunction& SparseFunction::operator*=(double c) {
    if (c == 0.0) {
        samples_.clear();
        return *this;
    }
    for (Sample& s : samples_) s.value *= c;
    std::erase_if(samples_, [](const Sample& s) { return s.value == 0.0; });
    return *this;
}

double SparseFunction::max_difference(const SparseFunction& f, const SparseFunction& g) {
    return (f - g).max_abs();
}

SparseFunction indicator(const ElementSet& a) {
    std::map<Element, double> values;
    for (Element x : a) values[x] = 1.0;
    return SparseFunction::from_map(values);
}

SparseFunction translate(const HypergroupModel& model, const SparseFunction& f, Element y) {
    if (f.is_zero()) return {};
    // u in supp(delta_x * delta_y) iff x in supp(delta_u * delta_{y^-})
    const ElementSet candidates = set_convolve(model, f.support(), {model.involution(y)});
    std::map<Element, double> values;
    for (Element x : candidates) {
        double v = 0.0;
        for (const Atom& a : model.convolve_points(x, y).atoms()) v += f(a.point) * a.mass;
        values[x] = v;
    }
    return SparseFunction::from_map(values);
}

SparseFunction convolve_fn_measure(const HypergroupModel& model, const SparseFunction& f,
                                   const SparseMeasure& mu) {
    SparseFunction out;
    for (const Atom& a : mu.atoms()) out += translate(model, f, model.involution(a.point)) * a.mass;
    return out;
}

double integrate_haar(const HypergroupModel& model, const SparseFunction& f) {
    double s = 0.0;
    for (const Sample& v : f.samples()) s += v.value * model.haar_weight(v.point);
    return s;
}

double l1_norm(const HypergroupModel& model, const SparseFunction& f) {
    return integrate_haar(model, f.abs());
}

double sup_on_set(const SparseFunction& f, const ElementSet& a) {
    double m = 0.0;
    for (Element x : a) m = std::max(m, std::abs(f(x)));
    return m;
}

}  // namespace hyperdyn
