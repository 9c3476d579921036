#pragma once

#include <optional>
#include <string>

#include "toric_alpha/exact.hpp"

namespace toric_alpha {

/// A nonnegative quantity that may be +infinity, e.g. the threshold along a
/// ray where the width of a linear system vanishes.
class RationalOrInfinity {
public:
    RationalOrInfinity() = default;  // +infinity
    RationalOrInfinity(Rational value) : value_(std::move(value)) {}

    static RationalOrInfinity infinity() { return {}; }

    bool isInfinite() const noexcept { return !value_.has_value(); }
    const Rational& value() const {
        if (!value_) throw std::logic_error("value() on an infinite quantity");
        return *value_;
    }

    std::string toString() const { return value_ ? toric_alpha::toString(*value_) : "inf"; }

    friend bool operator==(const RationalOrInfinity& a, const RationalOrInfinity& b) {
        if (a.isInfinite() || b.isInfinite()) return a.isInfinite() && b.isInfinite();
        return *a.value_ == *b.value_;
    }
    friend bool operator<(const RationalOrInfinity& a, const RationalOrInfinity& b) {
        if (a.isInfinite()) return false;
        if (b.isInfinite()) return true;
        return *a.value_ < *b.value_;
    }
    friend bool operator<=(const RationalOrInfinity& a, const RationalOrInfinity& b) { return !(b < a); }

private:
    std::optional<Rational> value_;
};

inline RationalOrInfinity minOf(const RationalOrInfinity& a, const RationalOrInfinity& b) {
    return b < a ? b : a;
}

}  // namespace toric_alpha
