#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "padico/errors.hpp"
#include "padico/valuation.hpp"

namespace padico {

struct FieldParams;
using FieldParamsPtr = std::shared_ptr<const FieldParams>;

/// The ambient unramified field K/Q_p, fixed at construction time.
///
/// K = Q_p[x]/(modulus), where modulus is the lexicographically smallest
/// monic irreducible polynomial of degree f over F_p (coefficient tuples
/// compared low-degree-first). All elements are handled modulo p^precision,
/// so every ring operation below is exact in O_K / p^N O_K.
struct FieldParams {
    long p;                     // prime
    int f;                      // residue degree, q = p^f
    int precision;              // digit count N
    int e = 1;                  // ramification index; always 1 here
    unsigned long long q;       // p^f
    std::vector<long> modulus;  // f+1 coefficients in [0,p), monic, low degree first
    mpz_class p_mpz;            // p
    mpz_class pn;               // p^N

    bool same_field(const FieldParams& o) const {
        return p == o.p && f == o.f && precision == o.precision && modulus == o.modulus;
    }
};

/// Builds FieldParams for the unramified degree-f extension of Q_p with N
/// significant digits. Throws NotPrime / UnsupportedDegree.
FieldParamsPtr make_params(long p, int f, int precision, int max_degree = 8);

/// True iff the given monic polynomial (low degree first, f+1 coefficients
/// in [0,p)) is irreducible over F_p.
bool is_irreducible_mod_p(const std::vector<long>& poly, long p);

/// Element of the residue field F_q in the power basis over F_p.
struct FqElem {
    std::vector<long> c;  // f coefficients in [0,p)

    bool is_zero() const {
        for (long x : c)
            if (x != 0) return false;
        return true;
    }
    friend bool operator==(const FqElem&, const FqElem&) = default;
};

// residue field arithmetic
FqElem fq_zero(const FieldParams& par);
FqElem fq_one(const FieldParams& par);
FqElem fq_add(const FieldParams& par, const FqElem& a, const FqElem& b);
FqElem fq_mul(const FieldParams& par, const FqElem& a, const FqElem& b);
FqElem fq_pow(const FieldParams& par, FqElem a, unsigned long long e);
FqElem fq_inv(const FieldParams& par, const FqElem& a);  // throws NotAUnit on 0

/// Index of an element in the lexicographic enumeration of F_q
/// (low-degree coefficient most significant), in [0, q).
unsigned long long fq_code(const FieldParams& par, const FqElem& a);
FqElem fq_from_code(const FieldParams& par, unsigned long long code);

/// Smallest multiplicative generator of F_q^x in lexicographic coefficient
/// order; the deterministic choice behind the Teichmuller digit system.
FqElem fq_smallest_generator(const FieldParams& par);

/// Element of O_K / p^N O_K in the lifted power basis: f coefficients,
/// each an integer in [0, p^N). Immutable in practice; all operations
/// return fresh values.
class OKElem {
public:
    explicit OKElem(FieldParamsPtr params);  // zero
    OKElem(FieldParamsPtr params, std::vector<mpz_class> coeffs);

    static OKElem from_integer(FieldParamsPtr params, const mpz_class& n);
    static OKElem one(FieldParamsPtr params);

    const FieldParamsPtr& params() const { return params_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    bool is_zero() const;
    FqElem residue() const;

    /// min over coefficients of v_p; plus_infinity when zero mod p^N.
    Valuation valuation() const;

    friend bool operator==(const OKElem& a, const OKElem& b);

private:
    FieldParamsPtr params_;
    std::vector<mpz_class> c_;

    friend OKElem ok_add(const OKElem&, const OKElem&);
    friend OKElem ok_sub(const OKElem&, const OKElem&);
    friend OKElem ok_neg(const OKElem&);
    friend OKElem ok_mul(const OKElem&, const OKElem&);
    friend OKElem ok_divexact_p(const OKElem&, long k);
    friend OKElem ok_mul_p_pow(const OKElem&, long k);
};

OKElem ok_add(const OKElem& a, const OKElem& b);
OKElem ok_sub(const OKElem& a, const OKElem& b);
OKElem ok_neg(const OKElem& a);
OKElem ok_mul(const OKElem& a, const OKElem& b);
OKElem ok_pow(const OKElem& a, unsigned long long e);

/// Exact division by p^k; every coefficient must be divisible by p^k.
OKElem ok_divexact_p(const OKElem& a, long k);
/// Multiplication by p^k mod p^N (k >= 0).
OKElem ok_mul_p_pow(const OKElem& a, long k);

inline OKElem operator+(const OKElem& a, const OKElem& b) { return ok_add(a, b); }
inline OKElem operator-(const OKElem& a, const OKElem& b) { return ok_sub(a, b); }
inline OKElem operator-(const OKElem& a) { return ok_neg(a); }
inline OKElem operator*(const OKElem& a, const OKElem& b) { return ok_mul(a, b); }

/// Inverse of a unit in O_K / p^N (Newton iteration from the residue-field
/// inverse, doubling precision each step). Throws NotAUnit when the residue
/// of a vanishes.
OKElem invert_unit(const OKElem& a);

/// The Teichmuller representative t of r: t = r (mod p) and t^q = t
/// (mod p^N), computed by iterating t <- t^q from any lift of r.
OKElem teichmuller_lift(const FqElem& r, FieldParamsPtr params);

} // namespace padico
