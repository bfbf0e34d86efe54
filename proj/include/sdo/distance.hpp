#pragma once

#include <compare>
#include <optional>
#include <string>

#include "sdo/types.hpp"

namespace sdo {

// Non-negative extended distance: a finite value or Unreachable.
// Unreachable compares greater than every finite value and absorbs addition.
class Distance {
public:
    constexpr Distance() = default;
    constexpr explicit Distance(Weight value) : value_(value) {}

    static constexpr Distance unreachable() { return Distance(); }

    constexpr bool finite() const { return value_.has_value(); }
    constexpr bool unreachable_value() const { return !value_.has_value(); }

    // Precondition: finite().
    Weight value() const;

    friend constexpr Distance operator+(Distance a, Distance b) {
        if (!a.finite() || !b.finite()) {
            return Distance();
        }
        return Distance(*a.value_ + *b.value_);
    }
    friend constexpr Distance operator+(Distance a, Weight w) {
        return a.finite() ? Distance(*a.value_ + w) : Distance();
    }

    friend constexpr bool operator==(const Distance&, const Distance&) = default;
    friend constexpr std::strong_ordering operator<=>(const Distance& a, const Distance& b) {
        if (a.finite() != b.finite()) {
            return a.finite() ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        if (!a.finite()) {
            return std::strong_ordering::equal;
        }
        return *a.value_ <=> *b.value_;
    }

    // Decimal integer, or "INF" for Unreachable.
    std::string to_string() const;
    static Distance parse(const std::string& text);

private:
    std::optional<Weight> value_;
};

}  // namespace sdo
