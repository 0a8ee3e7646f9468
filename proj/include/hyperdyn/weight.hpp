#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "hyperdyn/element.hpp"
#include "hyperdyn/hypergroup.hpp"

namespace hyperdyn {

/// A bounded positive weight on the carrier.
class Weight {
public:
    enum class Form { Constant, Step, Table, Geometric };

    static Weight constant(double c);
    /// `low` for labels <= threshold, `high` above it.
    static Weight step(std::int64_t threshold, double low, double high);
    /// Listed values, `fallback` elsewhere.
    static Weight table(std::map<Element, double> values, double fallback);
    /// c * r^label
    static Weight geometric(double c, double r);

    Form form() const { return form_; }
    std::string describe() const;

    double operator()(Element x) const;
    double sup_on(const HypergroupModel& model) const;
    double inf_on(const HypergroupModel& model) const;

private:
    Weight() = default;

    Form form_ = Form::Constant;
    double c_ = 1.0;
    double low_ = 1.0;
    double high_ = 1.0;
    double ratio_ = 1.0;
    std::int64_t threshold_ = 0;
    std::map<Element, double> table_;
};

/// w^b(x) = sum_u w(u) (delta_x * delta_b)({u}).
double translated_weight(const HypergroupModel& model, const Weight& w, Element x, Element b);

/// How many weight factors v_n carries: j = 0..n (inclusive) or j = 0..n-1.
enum class ProductConvention { IterateExclusive, PaperInclusive };

std::string to_string(ProductConvention c);

/// The index sequence eta = (a_n), n in Z, with a_0 = e and a_{-n} = a_n^-.
/// Generators define a_n for n >= 1 only.
class EtaSequence {
public:
    enum class Generator { CenterPowers, Table, Identity, Constant };

    /// a_n = z^n. Throws NotCentral.
    static EtaSequence center_powers(const HypergroupModel& model, Element z);
    /// Explicit a_n for n = 1..N. Throws ValidationError for keys < 1 or
    /// entries outside the window.
    static EtaSequence table(const HypergroupModel& model, std::map<std::int64_t, Element> entries);
    /// a_n = n (the label equal to the index).
    static EtaSequence identity_labels();
    /// a_n = c for every n >= 1.
    static EtaSequence constant(Element c);

    Generator generator() const { return generator_; }
    std::optional<Element> base() const;
    std::string describe() const;

    /// a(n). Throws WindowOverflow when a(n) leaves the window or the table
    /// has no entry for |n|.
    Element operator()(const HypergroupModel& model, std::int64_t n) const;

private:
    EtaSequence() = default;

    Generator generator_ = Generator::Identity;
    Element base_{0};
    std::map<std::int64_t, Element> table_;
};

}  // namespace hyperdyn
