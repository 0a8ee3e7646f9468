#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <set>
#include <string>

namespace hyperdyn {

/// A point of a discrete hypergroup carrier. Labels are nonnegative for the
/// families living on N_0 and signed for the integer group.
struct Element {
    std::int64_t label = 0;

    constexpr Element() = default;
    constexpr explicit Element(std::int64_t l) : label(l) {}

    constexpr auto operator<=>(const Element&) const = default;
};

using ElementSet = std::set<Element>;

inline std::ostream& operator<<(std::ostream& os, Element x) { return os << x.label; }

inline std::string to_string(Element x) { return std::to_string(x.label); }

std::string to_string(const ElementSet& s);

/// {lo, lo+1, ..., hi}
ElementSet element_range(std::int64_t lo, std::int64_t hi);

ElementSet set_intersection(const ElementSet& a, const ElementSet& b);
ElementSet set_union(const ElementSet& a, const ElementSet& b);
ElementSet set_difference(const ElementSet& a, const ElementSet& b);

}  // namespace hyperdyn

template <>
struct std::hash<hyperdyn::Element> {
    std::size_t operator()(hyperdyn::Element x) const noexcept {
        return std::hash<std::int64_t>{}(x.label);
    }
};
