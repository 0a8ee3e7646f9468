#pragma once

#include <map>
#include <vector>

#include "hyperdyn/element.hpp"

namespace hyperdyn {

inline constexpr double kProbabilityTolerance = 1e-12;

struct Atom {
    Element point;
    double mass = 0.0;

    bool operator==(const Atom&) const = default;
};

/// Finitely supported nonnegative measure. Atoms are sorted by label, labels
/// are unique and every stored mass is strictly positive.
class SparseMeasure {
public:
    SparseMeasure() = default;

    /// Builds from arbitrary (point, mass) pairs. Duplicate points are summed,
    /// nonpositive masses are dropped.
    static SparseMeasure from_map(const std::map<Element, double>& masses);
    static SparseMeasure point(Element x, double mass = 1.0);

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }
    std::size_t size() const { return atoms_.size(); }

    double mass_at(Element x) const;
    double total_mass() const;
    ElementSet support() const;

    /// Total mass equals one within kProbabilityTolerance.
    bool is_probability() const;

    /// Support is a singleton.
    bool is_point_mass() const { return atoms_.size() == 1; }

    /// Largest per-atom absolute difference over the union of supports.
    static double max_atom_difference(const SparseMeasure& a, const SparseMeasure& b);

    bool operator==(const SparseMeasure&) const = default;

private:
    std::vector<Atom> atoms_;
};

}  // namespace hyperdyn
