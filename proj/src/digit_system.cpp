#include "padico/digit_system.hpp"

#include <limits>

namespace padico {

std::string to_string(DigitKind k) {
    switch (k) {
        case DigitKind::teichmuller: return "teichmuller";
        case DigitKind::standard: return "standard";
        case DigitKind::custom: return "custom";
    }
    return "?";
}

DigitKind digit_kind_from_string(const std::string& s) {
    if (s == "teichmuller") return DigitKind::teichmuller;
    if (s == "standard") return DigitKind::standard;
    if (s == "custom") return DigitKind::custom;
    throw Error("unknown digit system kind: " + s);
}

DigitSystemPtr DigitSystem::make(DigitKind kind, FieldParamsPtr params,
                                 std::vector<OKElem> custom_digits) {
    if (params->q > (1ULL << 24))
        throw InvalidDigitSystem("q too large to enumerate a digit system");

    auto sys = std::shared_ptr<DigitSystem>(new DigitSystem());
    sys->kind_ = kind;
    sys->params_ = params;

    switch (kind) {
        case DigitKind::standard: {
            if (params->f != 1)
                throw InvalidDigitSystem("standard digits require residue degree 1");
            for (long d = 0; d < params->p; ++d)
                sys->digits_.push_back(OKElem::from_integer(params, d));
            break;
        }
        case DigitKind::teichmuller: {
            sys->digits_.push_back(OKElem(params));  // 0
            if (params->q >= 2) {
                OKElem zeta = params->q == 2
                                  ? OKElem::one(params)
                                  : teichmuller_lift(fq_smallest_generator(*params), params);
                OKElem power = OKElem::one(params);
                for (unsigned long long i = 0; i + 1 < params->q; ++i) {
                    sys->digits_.push_back(power);
                    power = ok_mul(power, zeta);
                }
            }
            break;
        }
        case DigitKind::custom: {
            if (custom_digits.size() != params->q)
                throw InvalidDigitSystem("custom system needs exactly q digits");
            for (const auto& d : custom_digits)
                if (!d.params()->same_field(*params))
                    throw ParamMismatch("custom digit from a different field");
            sys->digits_ = std::move(custom_digits);
            break;
        }
    }

    // residues must be pairwise distinct and exhaust F_q, index 0 residue 0
    sys->by_residue_.assign(params->q, std::numeric_limits<uint32_t>::max());
    if (!sys->digits_[0].residue().is_zero())
        throw InvalidDigitSystem("digit 0 must have residue 0");
    for (size_t i = 0; i < sys->digits_.size(); ++i) {
        unsigned long long code = fq_code(*params, sys->digits_[i].residue());
        if (sys->by_residue_[code] != std::numeric_limits<uint32_t>::max())
            throw InvalidDigitSystem("two digits share a residue class");
        sys->by_residue_[code] = static_cast<uint32_t>(i);
    }
    // q digits with distinct residues exhaust F_q by counting

    if (kind == DigitKind::teichmuller) {
        for (const auto& d : sys->digits_)
            if (ok_pow(d, params->q) != d)
                throw InvalidDigitSystem("digit is not a Teichmuller representative");
    }

    return sys;
}

uint32_t DigitSystem::index_of_residue(const FqElem& r) const {
    return by_residue_[fq_code(*params_, r)];
}

bool DigitSystem::same_system(const DigitSystem& o) const {
    if (kind_ != o.kind_ || !params_->same_field(*o.params_)) return false;
    if (kind_ != DigitKind::custom) return true;
    return digits_ == o.digits_;
}

} // namespace padico
