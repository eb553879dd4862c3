#pragma once

#include <compare>
#include <ostream>
#include <string>

namespace padico {

/// Valuation of an element known to finite precision. An all-zero digit
/// window cannot be told apart from an exact zero, so such values carry
/// the sentinel "plus infinity within precision" instead of a number.
/// Callers must treat the sentinel as "at least precision + shift",
/// never as zero.
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(long v) : v_(v), finite_(true) {}

    static constexpr Valuation plus_infinity() { return Valuation(0, false); }

    constexpr bool is_finite() const { return finite_; }

    /// Numeric value; only meaningful when finite.
    constexpr long value() const { return v_; }

    friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.v_ == b.v_;
    }

    // infinity compares greater than every finite valuation
    friend constexpr bool operator<(const Valuation& a, const Valuation& b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.v_ < b.v_;
    }
    friend constexpr bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend constexpr bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
    friend constexpr bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Valuation& v) {
        if (v.finite_) return os << v.v_;
        return os << "+inf";
    }

    std::string str() const { return finite_ ? std::to_string(v_) : "+inf"; }

private:
    constexpr Valuation(long v, bool finite) : v_(v), finite_(finite) {}

    long v_ = 0;
    bool finite_ = true;
};

} // namespace padico
