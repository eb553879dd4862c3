#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "padico/digit_system.hpp"
#include "padico/field.hpp"
#include "padico/valuation.hpp"

namespace padico {

/// Element of K = Frac(O_K) with N significant digits: x = p^shift * u,
/// where u is zero or a unit of O_K / p^N. The digit expansion
/// x = sum a_v p^v (lowest exponent = shift) is a derived view; arithmetic
/// runs on the coefficient form. Values are immutable.
class PadicNumber {
public:
    explicit PadicNumber(DigitSystemPtr sys);  // zero

    /// Normalizes p^shift * raw by factoring powers of p out of raw.
    static PadicNumber from_parts(DigitSystemPtr sys, long shift, OKElem raw);
    static PadicNumber from_ok(DigitSystemPtr sys, const OKElem& x) {
        return from_parts(std::move(sys), 0, x);
    }
    static PadicNumber from_integer(DigitSystemPtr sys, const mpz_class& n);
    static PadicNumber from_rational(DigitSystemPtr sys, const mpz_class& num,
                                     const mpz_class& den);

    const DigitSystemPtr& system() const { return sys_; }
    const FieldParamsPtr& params() const { return sys_->params(); }

    bool is_zero() const { return unit_.is_zero(); }  // zero within precision
    long shift() const { return shift_; }
    const OKElem& unit() const { return unit_; }

    /// shift + valuation of the unit part; plus_infinity for zero.
    Valuation valuation() const;

    /// |x| = p^(-v) as an exact rational. Throws PrecisionExhausted on zero.
    mpq_class norm() const;

    /// The N digit indices of the unit part, lowest exponent first
    /// (digit k sits at level shift + k).
    std::vector<uint32_t> digit_indices() const;

    /// Digit index at absolute level v; 0 below the shift. Levels at or
    /// beyond shift + N are outside the precision window.
    uint32_t digit_at_level(long v) const;

    /// The element as an OKElem when shift >= 0; throws otherwise.
    OKElem to_ok() const;

    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator-(const PadicNumber& a);
    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
    /// Division; the divisor must be nonzero within precision.
    friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);

    /// Equality within precision: the difference is zero within precision.
    friend bool operator==(const PadicNumber& a, const PadicNumber& b);

    nlohmann::json to_json() const;
    static PadicNumber from_json(const nlohmann::json& j);

    std::string str() const;  // "p^shift * (c0, c1, ...)" debugging form

private:
    DigitSystemPtr sys_;
    long shift_ = 0;
    OKElem unit_;
};

/// Greedy digit extraction of x in O_K (the spec's to_digits): a view of x
/// as a PadicNumber over the given system.
PadicNumber to_digits(const OKElem& x, DigitSystemPtr sys);

struct DigitsValue {
    OKElem value;  // sum of digit_value(d_k) p^k mod p^N
    long shift;    // x = value * p^shift
};

/// Evaluates the truncated digit series exactly mod p^N (the spec's
/// from_digits); exact inverse of to_digits on O_K.
DigitsValue from_digits(const PadicNumber& d);

/// Point of the projective line P^1(K): a finite value or infinity.
class ProjectivePoint {
public:
    ProjectivePoint(PadicNumber v) : v_(std::move(v)) {}
    static ProjectivePoint infinity() { return ProjectivePoint(); }

    bool is_infinity() const { return !v_.has_value(); }
    const PadicNumber& value() const {
        if (!v_) throw Error("value() on the point at infinity");
        return *v_;
    }

    /// Distinct within precision (infinity is distinct from every finite point).
    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b);

private:
    ProjectivePoint() = default;
    std::optional<PadicNumber> v_;
};

} // namespace padico
