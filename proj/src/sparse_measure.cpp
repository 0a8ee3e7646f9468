#include "hyperdyn/sparse_measure.hpp"

#include <algorithm>
#include <cmath>

namespace hyperdyn {

std::string to_string(const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    for (Element x : s) {
        if (!first) out += ",";
        out += std::to_string(x.label);
        first = false;
    }
    return out + "}";
}

ElementSet element_range(std::int64_t lo, std::int64_t hi) {
    ElementSet s;
    for (std::int64_t l = lo; l <= hi; ++l) s.insert(Element{l});
    return s;
}

ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
    ElementSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

SparseMeasure SparseMeasure::from_map(const std::map<Element, double>& masses) {
    SparseMeasure m;
    m.atoms_.reserve(masses.size());
    for (const auto& [x, mass] : masses) {
        if (mass > 0.0) m.atoms_.push_back({x, mass});
    }
    return m;
}

SparseMeasure SparseMeasure::point(Element x, double mass) {
    SparseMeasure m;
    if (mass > 0.0) m.atoms_.push_back({x, mass});
    return m;
}

double SparseMeasure::mass_at(Element x) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                               [](const Atom& a, Element p) { return a.point < p; });
    return (it != atoms_.end() && it->point == x) ? it->mass : 0.0;
}

double SparseMeasure::total_mass() const {
    double s = 0.0;
    for (const Atom& a : atoms_) s += a.mass;
    return s;
}

ElementSet SparseMeasure::support() const {
    ElementSet s;
    for (const Atom& a : atoms_) s.insert(s.end(), a.point);
    return s;
}

bool SparseMeasure::is_probability() const {
    return std::abs(total_mass() - 1.0) <= kProbabilityTolerance;
}

double SparseMeasure::max_atom_difference(const SparseMeasure& a, const SparseMeasure& b) {
    double worst = 0.0;
    auto ia = a.atoms_.begin();
    auto ib = b.atoms_.begin();
    while (ia != a.atoms_.end() || ib != b.atoms_.end()) {
        if (ib == b.atoms_.end() || (ia != a.atoms_.end() && ia->point < ib->point)) {
            worst = std::max(worst, ia->mass);
            ++ia;
        } else if (ia == a.atoms_.end() || ib->point < ia->point) {
            worst = std::max(worst, ib->mass);
            ++ib;
        } else {
            worst = std::max(worst, std::abs(ia->mass - ib->mass));
            ++ia;
            ++ib;
        }
    }
    return worst;
}

}  // namespace hyperdyn
