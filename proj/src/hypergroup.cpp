#include "hyperdyn/hypergroup.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hyperdyn/errors.hpp"

namespace hyperdyn {

namespace {

constexpr double kCenterTolerance = 1e-12;

std::string pair_label(Element x, Element y) {
    return "(" + to_string(x) + "," + to_string(y) + ")";
}

SparseMeasure dunkl_ramirez_product(double a, std::int64_t r, std::int64_t s) {
    if (r != s) return SparseMeasure::point(Element{std::max(r, s)});
    if (r == 0) return SparseMeasure::point(Element{0});
    std::map<Element, double> masses;
    masses[Element{0}] = std::pow(a, static_cast<double>(r)) / (1.0 - a);
    for (std::int64_t k = 1; k < r; ++k) {
        masses[Element{k}] = std::pow(a, static_cast<double>(r - k));
    }
    masses[Element{r}] = (1.0 - 2.0 * a) / (1.0 - a);
    return SparseMeasure::from_map(masses);
}

// Only every second index between |m-n| and m+n carries mass.
SparseMeasure su2_product(std::int64_t m, std::int64_t n) {
    std::map<Element, double> masses;
    const double denom = static_cast<double>((m + 1) * (n + 1));
    for (std::int64_t k = std::abs(m - n); k <= m + n; k += 2) {
        masses[Element{k}] = static_cast<double>(k + 1) / denom;
    }
    return SparseMeasure::from_map(masses);
}

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::DunklRamirez: return "dunkl_ramirez";
        case Family::SU2: return "su2";
        case Family::IntegerGroup: return "integer";
        case Family::TableDefined: return "table";
    }
    return "unknown";
}

std::string to_string(Axiom a) {
    switch (a) {
        case Axiom::Probability: return "probability";
        case Axiom::Identity: return "identity";
        case Axiom::Involution: return "involution";
        case Axiom::IdentitySupport: return "identity_support";
        case Axiom::Adjoint: return "adjoint";
        case Axiom::Associativity: return "associativity";
    }
    return "unknown";
}

HypergroupModel HypergroupModel::dunkl_ramirez(double a, std::int64_t window) {
    if (!(a > 0.0 && a <= 0.5)) throw ValidationError("Dunkl-Ramirez parameter must lie in (0, 1/2]");
    if (window < 1) throw ValidationError("window must be >= 1");
    HypergroupModel m;
    m.family_ = Family::DunklRamirez;
    m.parameter_ = a;
    m.window_ = window;
    const auto n = static_cast<std::size_t>(window + 1);
    for (std::int64_t l = 0; l <= window; ++l) m.elements_.emplace_back(l);
    m.products_.resize(n * n);
    for (std::int64_t r = 0; r <= window; ++r) {
        for (std::int64_t s = 0; s <= window; ++s) {
            m.products_[static_cast<std::size_t>(r) * n + static_cast<std::size_t>(s)] =
                dunkl_ramirez_product(a, r, s);
        }
    }
    m.derive_haar();
    return m;
}

HypergroupModel HypergroupModel::su2(std::int64_t window) {
    if (window < 1) throw ValidationError("window must be >= 1");
    HypergroupModel m;
    m.family_ = Family::SU2;
    m.window_ = window;
    const auto n = static_cast<std::size_t>(window + 1);
    for (std::int64_t l = 0; l <= window; ++l) m.elements_.emplace_back(l);
    m.products_.resize(n * n);
    for (std::int64_t a = 0; a <= window; ++a) {
        for (std::int64_t b = 0; b <= window; ++b) {
            if (a + b > window) continue;
            m.products_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = su2_product(a, b);
        }
    }
    m.derive_haar();
    return m;
}

HypergroupModel HypergroupModel::integer_group(std::int64_t window) {
    if (window < 1) throw ValidationError("window must be >= 1");
    HypergroupModel m;
    m.family_ = Family::IntegerGroup;
    m.window_ = window;
    const auto n = static_cast<std::size_t>(2 * window + 1);
    for (std::int64_t l = -window; l <= window; ++l) m.elements_.emplace_back(l);
    m.products_.resize(n * n);
    for (std::int64_t x = -window; x <= window; ++x) {
        for (std::int64_t y = -window; y <= window; ++y) {
            if (std::abs(x + y) > window) continue;
            m.products_[static_cast<std::size_t>(x + window) * n + static_cast<std::size_t>(y + window)] =
                SparseMeasure::point(Element{x + y});
        }
    }
    m.derive_haar();
    return m;
}

HypergroupModel HypergroupModel::table_defined(const TableSpec& spec) {
    if (spec.elements.empty()) throw ValidationError("table hypergroup needs at least one element");
    HypergroupModel m;
    m.family_ = Family::TableDefined;
    m.elements_ = spec.elements;
    std::sort(m.elements_.begin(), m.elements_.end());
    if (std::adjacent_find(m.elements_.begin(), m.elements_.end()) != m.elements_.end()) {
        throw ValidationError("table hypergroup lists an element twice");
    }
    for (std::size_t i = 0; i < m.elements_.size(); ++i) {
        m.table_index_[m.elements_[i]] = i;
        m.window_ = std::max(m.window_, std::abs(m.elements_[i].label));
    }
    if (!m.table_index_.contains(spec.identity)) throw ValidationError("identity is not a table element");
    m.identity_ = spec.identity;

    m.involution_ = m.elements_;
    for (const auto& [x, xinv] : spec.involution) {
        if (!m.table_index_.contains(x) || !m.table_index_.contains(xinv)) {
            throw ValidationError("involution maps outside the table elements");
        }
        m.involution_[m.table_index_.at(x)] = xinv;
    }

    const std::size_t n = m.elements_.size();
    m.products_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto it = spec.products.find({m.elements_[i], m.elements_[j]});
            if (it == spec.products.end()) {
                throw ValidationError("table is missing the product " + pair_label(m.elements_[i], m.elements_[j]));
            }
            for (const Atom& a : it->second.atoms()) {
                if (!m.table_index_.contains(a.point)) {
                    throw ValidationError("product " + pair_label(m.elements_[i], m.elements_[j]) +
                                          " has support outside the table elements");
                }
            }
            m.products_[i * n + j] = it->second;
        }
    }
    for (Element x : m.elements_) {
        if (m.convolve_points(x, m.involution(x)).mass_at(m.identity_) <= 0.0) {
            throw ValidationError("delta_x * delta_{x^-} has no mass at the identity for x = " + to_string(x));
        }
    }
    m.derive_haar();
    return m;
}

void HypergroupModel::derive_haar() {
    haar_.clear();
    haar_.reserve(elements_.size());
    for (Element x : elements_) {
        if (family_ == Family::SU2) {
            // (delta_n * delta_n)({0}) = 1 / (n+1)^2; inverting the integer
            // denominator keeps the weight exact. The product itself leaves
            // the window for n > B/2.
            const double d = static_cast<double>(x.label + 1);
            haar_.push_back(d * d);
            continue;
        }
        haar_.push_back(1.0 / convolve_points(x, involution(x)).mass_at(identity_));
    }
}

std::string HypergroupModel::describe() const {
    std::ostringstream os;
    os << to_string(family_);
    if (family_ == Family::DunklRamirez) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", parameter_);
        os << "(a=" << buf << ")";
    }
    os << "[B=" << window_ << "]";
    return os.str();
}

bool HypergroupModel::contains(Element x) const {
    switch (family_) {
        case Family::DunklRamirez:
        case Family::SU2: return x.label >= 0 && x.label <= window_;
        case Family::IntegerGroup: return std::abs(x.label) <= window_;
        case Family::TableDefined: return table_index_.contains(x);
    }
    return false;
}

std::size_t HypergroupModel::index_of(Element x) const {
    if (!contains(x)) {
        throw WindowOverflow("element " + to_string(x) + " is outside the window of " + describe());
    }
    switch (family_) {
        case Family::DunklRamirez:
        case Family::SU2: return static_cast<std::size_t>(x.label);
        case Family::IntegerGroup: return static_cast<std::size_t>(x.label + window_);
        case Family::TableDefined: return table_index_.at(x);
    }
    return 0;
}

Element HypergroupModel::involution(Element x) const {
    const std::size_t i = index_of(x);
    switch (family_) {
        case Family::IntegerGroup: return Element{-x.label};
        case Family::TableDefined: return involution_[i];
        default: return x;
    }
}

bool HypergroupModel::is_hermitian() const {
    for (Element x : elements_) {
        if (involution(x) != x) return false;
    }
    return true;
}

const SparseMeasure& HypergroupModel::convolve_points(Element x, Element y) const {
    const std::size_t i = index_of(x);
    const std::size_t j = index_of(y);
    const auto& entry = products_[i * elements_.size() + j];
    if (!entry) {
        throw WindowOverflow("support of delta_" + to_string(x) + " * delta_" + to_string(y) +
                             " exceeds the window of " + describe());
    }
    return *entry;
}

bool HypergroupModel::product_in_window(Element x, Element y) const {
    if (!contains(x) || !contains(y)) return false;
    return products_[index_of(x) * elements_.size() + index_of(y)].has_value();
}

double HypergroupModel::haar_weight(Element x) const { return haar_[index_of(x)]; }

double HypergroupModel::min_haar_weight() const {
    return *std::min_element(haar_.begin(), haar_.end());
}

double HypergroupModel::haar_measure(const ElementSet& a) const {
    double s = 0.0;
    for (Element x : a) s += haar_weight(x);
    return s;
}

SparseMeasure convolve_measures(const HypergroupModel& model, const SparseMeasure& mu,
                                const SparseMeasure& nu) {
    std::map<Element, double> acc;
    for (const Atom& a : mu.atoms()) {
        for (const Atom& b : nu.atoms()) {
            const double w = a.mass * b.mass;
            for (const Atom& c : model.convolve_points(a.point, b.point).atoms()) {
                acc[c.point] += w * c.mass;
            }
        }
    }
    return SparseMeasure::from_map(acc);
}

SparseMeasure reflect(const HypergroupModel& model, const SparseMeasure& mu) {
    std::map<Element, double> acc;
    for (const Atom& a : mu.atoms()) acc[model.involution(a.point)] += a.mass;
    return SparseMeasure::from_map(acc);
}

bool is_central(const HypergroupModel& model, Element z) {
    if (!model.contains(z)) return false;
    const Element zinv = model.involution(z);
    const SparseMeasure e = SparseMeasure::point(model.identity());
    for (const auto& [a, b] : {std::pair{z, zinv}, std::pair{zinv, z}}) {
        if (!model.product_in_window(a, b)) return false;
        if (SparseMeasure::max_atom_difference(model.convolve_points(a, b), e) > kCenterTolerance) return false;
    }
    return true;
}

CenterReport center_elements(const HypergroupModel& model) {
    CenterReport report;
    report.horizon = model.window();
    for (Element x : model.elements()) {
        if (is_central(model, x)) report.members.push_back(x);
    }
    return report;
}

Element central_product(const HypergroupModel& model, Element x, Element z) {
    const SparseMeasure& m = model.convolve_points(x, z);
    if (!m.is_point_mass()) {
        throw NotCentral("delta_" + to_string(x) + " * delta_" + to_string(z) + " is not a point mass");
    }
    return m.atoms().front().point;
}

Element power_center_point(const HypergroupModel& model, Element z, std::int64_t n) {
    if (!is_central(model, z)) throw NotCentral("element " + to_string(z) + " is not in the center");
    const Element step = n >= 0 ? z : model.involution(z);
    Element p = model.identity();
    for (std::int64_t i = 0; i < std::abs(n); ++i) p = central_product(model, p, step);
    return p;
}

ElementSet set_convolve(const HypergroupModel& model, const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    for (Element x : a) {
        for (Element y : b) {
            for (const Atom& c : model.convolve_points(x, y).atoms()) out.insert(c.point);
        }
    }
    return out;
}

namespace {

class ViolationLog {
public:
    void record(Axiom axiom, const std::string& witness, double residual) {
        auto it = entries_.find(axiom);
        if (it == entries_.end()) {
            entries_.emplace(axiom, AxiomViolation{axiom, 1, witness, residual});
            return;
        }
        ++it->second.count;
        it->second.worst_residual = std::max(it->second.worst_residual, residual);
    }

    std::vector<AxiomViolation> take() const {
        std::vector<AxiomViolation> out;
        for (const auto& [axiom, v] : entries_) out.push_back(v);
        return out;
    }

private:
    std::map<Axiom, AxiomViolation> entries_;
};

}  // namespace

std::vector<AxiomViolation> verify_axioms(const HypergroupModel& model, std::int64_t triple_bound) {
    std::vector<Element> range;
    for (Element x : model.elements()) {
        if (std::abs(x.label) <= triple_bound) range.push_back(x);
    }
    ViolationLog log;
    const Element e = model.identity();

    for (Element x : range) {
        const Element xinv = model.involution(x);
        if (!model.contains(xinv) || model.involution(xinv) != x) {
            log.record(Axiom::Involution, "x=" + to_string(x), 1.0);
        }
        for (const auto& [a, b] : {std::pair{x, e}, std::pair{e, x}}) {
            const double r = SparseMeasure::max_atom_difference(model.convolve_points(a, b), SparseMeasure::point(x));
            if (r > kProbabilityTolerance) log.record(Axiom::Identity, pair_label(a, b), r);
        }
    }

    for (Element x : range) {
        for (Element y : range) {
            if (!model.product_in_window(x, y)) continue;
            const SparseMeasure& xy = model.convolve_points(x, y);
            const double mass_error = std::abs(xy.total_mass() - 1.0);
            if (mass_error > kProbabilityTolerance) log.record(Axiom::Probability, pair_label(x, y), mass_error);

            const bool has_identity = xy.mass_at(e) > 0.0;
            if (has_identity != (x == model.involution(y))) {
                log.record(Axiom::IdentitySupport, pair_label(x, y), 1.0);
            }

            const Element yinv = model.involution(y);
            const Element xinv = model.involution(x);
            if (model.product_in_window(yinv, xinv)) {
                const double r =
                    SparseMeasure::max_atom_difference(reflect(model, xy), model.convolve_points(yinv, xinv));
                if (r > kProbabilityTolerance) log.record(Axiom::Adjoint, pair_label(x, y), r);
            }
        }
    }

    const auto in_window = [&](const SparseMeasure& mu, Element z, bool left) {
        for (const Atom& a : mu.atoms()) {
            if (left ? !model.product_in_window(a.point, z) : !model.product_in_window(z, a.point)) return false;
        }
        return true;
    };

    for (Element x : range) {
        for (Element y : range) {
            if (!model.product_in_window(x, y)) continue;
            const SparseMeasure& xy = model.convolve_points(x, y);
            for (Element z : range) {
                if (!model.product_in_window(y, z)) continue;
                const SparseMeasure& yz = model.convolve_points(y, z);
                if (!in_window(xy, z, true) || !in_window(yz, x, false)) continue;
                const SparseMeasure left = convolve_measures(model, xy, SparseMeasure::point(z));
                const SparseMeasure right = convolve_measures(model, SparseMeasure::point(x), yz);
                const double r = SparseMeasure::max_atom_difference(left, right);
                if (r > kAssociativityTolerance) {
                    log.record(Axiom::Associativity, "(" + to_string(x) + "," + to_string(y) + "," + to_string(z) + ")", r);
                }
            }
        }
    }
    return log.take();
}

}  // namespace hyperdyn
