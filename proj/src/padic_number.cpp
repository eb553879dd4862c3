#include "padico/padic_number.hpp"

#include <sstream>

namespace padico {

PadicNumber::PadicNumber(DigitSystemPtr sys)
    : sys_(std::move(sys)), shift_(0), unit_(sys_->params()) {}

PadicNumber PadicNumber::from_parts(DigitSystemPtr sys, long shift, OKElem raw) {
    PadicNumber x(sys);
    Valuation v = raw.valuation();
    if (!v.is_finite()) return x;  // canonical zero: shift 0
    x.shift_ = shift + v.value();
    x.unit_ = ok_divexact_p(raw, v.value());
    return x;
}

PadicNumber PadicNumber::from_integer(DigitSystemPtr sys, const mpz_class& n) {
    auto params = sys->params();
    return from_parts(std::move(sys), 0, OKElem::from_integer(params, n));
}

PadicNumber PadicNumber::from_rational(DigitSystemPtr sys, const mpz_class& num,
                                       const mpz_class& den) {
    if (den == 0) throw Error("zero denominator");
    PadicNumber n = from_integer(sys, num);
    PadicNumber d = from_integer(sys, den);
    return n / d;
}

Valuation PadicNumber::valuation() const {
    if (unit_.is_zero()) return Valuation::plus_infinity();
    return Valuation(shift_);  // unit part has valuation 0 by normalization
}

mpq_class PadicNumber::norm() const {
    Valuation v = valuation();
    if (!v.is_finite())
        throw PrecisionExhausted("norm of a value that vanishes within precision");
    mpz_class pv;
    mpz_pow_ui(pv.get_mpz_t(), params()->p_mpz.get_mpz_t(),
               static_cast<unsigned long>(v.value() >= 0 ? v.value() : -v.value()));
    mpq_class r = v.value() >= 0 ? mpq_class(1, pv) : mpq_class(pv, 1);
    r.canonicalize();
    return r;
}

std::vector<uint32_t> PadicNumber::digit_indices() const {
    // greedy extraction: a_k = digit with the residue of the remainder,
    // then divide out p; digit k only depends on the value mod p^(k+1)
    const int n = params()->precision;
    std::vector<uint32_t> out;
    out.reserve(static_cast<size_t>(n));
    OKElem cur = unit_;
    for (int k = 0; k < n; ++k) {
        uint32_t i = sys_->index_of_residue(cur.residue());
        out.push_back(i);
        cur = ok_divexact_p(ok_sub(cur, sys_->digit(i)), 1);
    }
    return out;
}

uint32_t PadicNumber::digit_at_level(long v) const {
    if (v < shift_) return 0;
    auto d = digit_indices();
    long k = v - shift_;
    if (k >= static_cast<long>(d.size()))
        throw PrecisionExhausted("digit level beyond precision window");
    return d[static_cast<size_t>(k)];
}

OKElem PadicNumber::to_ok() const {
    if (is_zero()) return OKElem(params());
    if (shift_ < 0) throw Error("element has a pole (negative valuation)");
    return ok_mul_p_pow(unit_, shift_);
}

namespace {
void check_same_system(const PadicNumber& a, const PadicNumber& b) {
    if (!a.system()->same_system(*b.system()))
        throw ParamMismatch("operands use different fields or digit systems");
}
} // namespace

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    check_same_system(a, b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long m = std::min(a.shift_, b.shift_);
    OKElem u = ok_add(ok_mul_p_pow(a.unit_, a.shift_ - m),
                      ok_mul_p_pow(b.unit_, b.shift_ - m));
    return PadicNumber::from_parts(a.sys_, m, std::move(u));
}

PadicNumber operator-(const PadicNumber& a) {
    PadicNumber r = a;
    r.unit_ = ok_neg(r.unit_);
    return r;
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    check_same_system(a, b);
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    PadicNumber r(a.sys_);
    r.shift_ = a.shift_ + b.shift_;
    r.unit_ = ok_mul(a.unit_, b.unit_);  // unit * unit stays a unit
    return r;
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
    check_same_system(a, b);
    if (b.is_zero())
        throw PrecisionExhausted("division by a value that vanishes within precision");
    if (a.is_zero()) return a;
    PadicNumber r(a.sys_);
    r.shift_ = a.shift_ - b.shift_;
    r.unit_ = ok_mul(a.unit_, invert_unit(b.unit_));
    return r;
}

bool operator==(const PadicNumber& a, const PadicNumber& b) {
    check_same_system(a, b);
    return (a - b).is_zero();
}

std::string PadicNumber::str() const {
    std::ostringstream os;
    os << "p^" << shift_ << " * (";
    for (int i = 0; i < params()->f; ++i) {
        if (i) os << ", ";
        os << unit_.coeffs()[i];
    }
    os << ")";
    return os.str();
}

PadicNumber to_digits(const OKElem& x, DigitSystemPtr sys) {
    return PadicNumber::from_ok(std::move(sys), x);
}

DigitsValue from_digits(const PadicNumber& d) {
    auto params = d.params();
    OKElem acc(params);
    auto idx = d.digit_indices();
    for (long k = static_cast<long>(idx.size()) - 1; k >= 0; --k) {
        acc = ok_mul_p_pow(acc, 1);
        acc = ok_add(acc, d.system()->digit(idx[static_cast<size_t>(k)]));
    }
    return DigitsValue{std::move(acc), d.shift()};
}

bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return a.value() == b.value();
}

namespace {

nlohmann::json coeff_to_json(const mpz_class& c) {
    if (c.fits_ulong_p()) return c.get_ui();
    return c.get_str();  // decimal string once past 64 bits
}

mpz_class coeff_from_json(const nlohmann::json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    return mpz_class(j.get<unsigned long>());
}

} // namespace

nlohmann::json PadicNumber::to_json() const {
    nlohmann::json j;
    j["p"] = params()->p;
    j["f"] = params()->f;
    j["precision"] = params()->precision;
    j["digit_system"] = to_string(sys_->kind());
    if (sys_->kind() == DigitKind::custom) {
        nlohmann::json digits = nlohmann::json::array();
        for (const auto& d : sys_->digits()) {
            nlohmann::json coeffs = nlohmann::json::array();
            for (const auto& c : d.coeffs()) coeffs.push_back(coeff_to_json(c));
            digits.push_back(std::move(coeffs));
        }
        j["custom_digits"] = std::move(digits);
    }
    j["shift"] = shift_;
    j["digits"] = digit_indices();
    return j;
}

PadicNumber PadicNumber::from_json(const nlohmann::json& j) {
    auto params = make_params(j.at("p").get<long>(), j.at("f").get<int>(),
                              j.at("precision").get<int>());
    DigitKind kind = digit_kind_from_string(j.at("digit_system").get<std::string>());
    DigitSystemPtr sys;
    if (kind == DigitKind::custom) {
        std::vector<OKElem> digits;
        for (const auto& coeffs : j.at("custom_digits")) {
            std::vector<mpz_class> c;
            for (const auto& x : coeffs) c.push_back(coeff_from_json(x));
            digits.push_back(OKElem(params, std::move(c)));
        }
        sys = DigitSystem::make(kind, params, std::move(digits));
    } else {
        sys = DigitSystem::make(kind, params);
    }

    PadicNumber r(sys);
    std::vector<uint32_t> idx = j.at("digits").get<std::vector<uint32_t>>();
    if (idx.size() != static_cast<size_t>(params->precision))
        throw Error("digit list length does not match precision");
    for (uint32_t i : idx)
        if (i >= sys->size()) throw Error("digit index out of range");
    OKElem acc(params);
    for (long k = static_cast<long>(idx.size()) - 1; k >= 0; --k)
        acc = ok_add(ok_mul_p_pow(acc, 1), sys->digit(idx[static_cast<size_t>(k)]));
    return PadicNumber::from_parts(sys, j.at("shift").get<long>(), std::move(acc));
}

} // namespace padico
