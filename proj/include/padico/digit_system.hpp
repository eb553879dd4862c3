#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "padico/field.hpp"

namespace padico {

enum class DigitKind { teichmuller, standard, custom };

std::string to_string(DigitKind k);
DigitKind digit_kind_from_string(const std::string& s);

class DigitSystem;
using DigitSystemPtr = std::shared_ptr<const DigitSystem>;

/// A complete system of representatives for the residue field F_q inside
/// O_K / p^N: exactly q digits with pairwise distinct residues covering
/// all of F_q, digit 0 representing residue 0.
///
/// The teichmuller kind lists [0, z^0, z^1, ..., z^(q-2)] where z is the
/// Teichmuller lift of the smallest multiplicative generator of F_q^x in
/// lexicographic coefficient order; each digit d satisfies d^q = d mod p^N.
class DigitSystem {
public:
    static DigitSystemPtr make(DigitKind kind, FieldParamsPtr params,
                               std::vector<OKElem> custom_digits = {});

    DigitKind kind() const { return kind_; }
    const FieldParamsPtr& params() const { return params_; }
    size_t size() const { return digits_.size(); }
    const OKElem& digit(uint32_t index) const { return digits_[index]; }
    const std::vector<OKElem>& digits() const { return digits_; }

    /// Digit index whose residue equals r.
    uint32_t index_of_residue(const FqElem& r) const;

    bool same_system(const DigitSystem& o) const;

private:
    DigitSystem() = default;

    DigitKind kind_ = DigitKind::standard;
    FieldParamsPtr params_;
    std::vector<OKElem> digits_;
    std::vector<uint32_t> by_residue_;  // residue code -> digit index
};

} // namespace padico
