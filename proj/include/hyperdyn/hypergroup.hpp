#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperdyn/element.hpp"
#include "hyperdyn/sparse_measure.hpp"

namespace hyperdyn {

enum class Family { DunklRamirez, SU2, IntegerGroup, TableDefined };

std::string to_string(Family f);

/// User-supplied finite hypergroup: every ordered pair of elements needs an
/// entry in `products`. Elements missing from `involution` are self-inverse.
struct TableSpec {
    std::vector<Element> elements;
    Element identity{0};
    std::map<Element, Element> involution;
    std::map<std::pair<Element, Element>, SparseMeasure> products;
};

/// A discrete hypergroup truncated to a finite window of its carrier.
///
/// The convolution table is filled once at construction and is read-only
/// afterwards, so a model may be shared freely between threads. Pairs whose
/// exact product leaves the window are stored as overflow markers and every
/// read of such a pair throws WindowOverflow.
///
/// Carrier windows:
///   DunklRamirez(a), SU2   labels 0..B
///   IntegerGroup           labels -B..B
///   TableDefined           the labels listed in the table
///
/// Haar weights are derived as m({x}) = 1 / (delta_x * delta_{x^-})({e}),
/// which gives m({e}) = 1.
class HypergroupModel {
public:
    static HypergroupModel dunkl_ramirez(double a, std::int64_t window);
    static HypergroupModel su2(std::int64_t window);
    static HypergroupModel integer_group(std::int64_t window);
    /// Throws ValidationError for incomplete tables, supports outside the
    /// carrier, or when delta_x * delta_{x^-} has no mass at the identity
    /// (the Haar weight would be undefined). Axioms are *not* checked here;
    /// use verify_axioms.
    static HypergroupModel table_defined(const TableSpec& spec);

    Family family() const { return family_; }
    /// The Dunkl-Ramirez parameter a; zero for the other families.
    double parameter() const { return parameter_; }
    std::int64_t window() const { return window_; }
    std::string describe() const;

    const std::vector<Element>& elements() const { return elements_; }
    bool contains(Element x) const;
    Element identity() const { return identity_; }
    Element involution(Element x) const;
    bool is_hermitian() const;

    /// delta_x * delta_y. Throws WindowOverflow when x, y or the product's
    /// support are outside the window.
    const SparseMeasure& convolve_points(Element x, Element y) const;
    bool product_in_window(Element x, Element y) const;

    double haar_weight(Element x) const;
    double min_haar_weight() const;
    /// m(A) for a finite set inside the window.
    double haar_measure(const ElementSet& a) const;

private:
    HypergroupModel() = default;

    std::size_t index_of(Element x) const;
    void derive_haar();

    Family family_ = Family::IntegerGroup;
    double parameter_ = 0.0;
    std::int64_t window_ = 0;
    Element identity_{0};
    std::vector<Element> elements_;
    std::map<Element, std::size_t> table_index_;  // TableDefined only
    std::vector<Element> involution_;              // TableDefined only, by index
    std::vector<std::optional<SparseMeasure>> products_;
    std::vector<double> haar_;
};

/// Bilinear extension of convolve_points to finitely supported measures.
SparseMeasure convolve_measures(const HypergroupModel& model, const SparseMeasure& mu,
                                const SparseMeasure& nu);

/// The pushforward of mu under the involution.
SparseMeasure reflect(const HypergroupModel& model, const SparseMeasure& mu);

/// z is in the center: delta_z * delta_{z^-} = delta_{z^-} * delta_z = delta_e.
bool is_central(const HypergroupModel& model, Element z);

struct CenterReport {
    std::vector<Element> members;
    std::int64_t horizon = 0;
};

CenterReport center_elements(const HypergroupModel& model);

/// Single support point of delta_z^n for central z; n = 0 gives e.
/// Negative n uses powers of z^-.
Element power_center_point(const HypergroupModel& model, Element z, std::int64_t n);

/// Single support point of delta_x * delta_z for central z (written xz).
Element central_product(const HypergroupModel& model, Element x, Element z);

/// A*B = union of supp(delta_x * delta_y), x in A, y in B.
ElementSet set_convolve(const HypergroupModel& model, const ElementSet& a, const ElementSet& b);

enum class Axiom { Probability, Identity, Involution, IdentitySupport, Adjoint, Associativity };

std::string to_string(Axiom a);

/// One entry per violated axiom, with the number of failing cases and the
/// first witness found.
struct AxiomViolation {
    Axiom axiom;
    std::size_t count = 0;
    std::string witness;
    double worst_residual = 0.0;
};

inline constexpr double kAssociativityTolerance = 1e-10;

/// Checks axioms (i), (ii), (iv), (v), (vi) and the involution law on all
/// elements with |label| <= triple_bound. Triples whose intermediate
/// supports leave the window are skipped.
std::vector<AxiomViolation> verify_axioms(const HypergroupModel& model, std::int64_t triple_bound);

}  // namespace hyperdyn
