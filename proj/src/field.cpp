#include "padico/field.hpp"

#include <algorithm>
#include <cassert>

namespace padico {

namespace {

// polynomial arithmetic over F_p, low degree first, used only for the
// irreducibility check at field construction
using Poly = std::vector<long>;

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& m, long p) {
    // m monic
    while (a.size() >= m.size()) {
        long lead = a.back() % p;
        size_t off = a.size() - m.size();
        if (lead != 0) {
            for (size_t i = 0; i < m.size(); ++i) {
                long v = (a[off + i] - lead * m[i]) % p;
                if (v < 0) v += p;
                a[off + i] = v;
            }
        }
        a.pop_back();
    }
    return poly_trim(std::move(a));
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(r), m, p);
}

// x^(p^k) mod m, by repeated p-th powering
Poly poly_x_pow_p_pow(int k, const Poly& m, long p) {
    Poly x = poly_mod({0, 1}, m, p);
    Poly r = x;
    for (int i = 0; i < k; ++i) {
        // r <- r^p mod m
        Poly acc = {1};
        Poly base = r;
        long e = p;
        while (e > 0) {
            if (e & 1) acc = poly_mulmod(acc, base, m, p);
            base = poly_mulmod(base, base, m, p);
            e >>= 1;
        }
        r = std::move(acc);
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, long p) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        // make b monic for poly_mod
        long lead = b.back();
        if (lead != 1) {
            long inv = 1;
            for (long t = 1; t < p; ++t)
                if ((t * lead) % p == 1) { inv = t; break; }
            for (auto& c : b) c = (c * inv) % p;
        }
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_sub(Poly a, const Poly& b, long p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) {
        long v = (a[i] - b[i]) % p;
        if (v < 0) v += p;
        a[i] = v;
    }
    return poly_trim(std::move(a));
}

std::vector<long> prime_factors(long n) {
    std::vector<long> fs;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

std::vector<unsigned long long> prime_factors_ull(unsigned long long n) {
    std::vector<unsigned long long> fs;
    for (unsigned long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

bool is_irreducible_mod_p(const std::vector<long>& poly, long p) {
    const int f = static_cast<int>(poly.size()) - 1;
    if (f < 1 || poly.back() != 1) return false;
    if (f == 1) return true;
    // Rabin test: x^(p^f) = x mod g, and gcd(x^(p^(f/r)) - x, g) = 1 for
    // every prime r dividing f
    const Poly x = {0, 1};
    Poly top = poly_x_pow_p_pow(f, poly, p);
    if (poly_sub(top, x, p) != Poly{}) return false;
    for (long r : prime_factors(f)) {
        Poly sub = poly_x_pow_p_pow(f / static_cast<int>(r), poly, p);
        Poly g = poly_gcd(poly_sub(std::move(sub), x, p), poly, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

FieldParamsPtr make_params(long p, int f, int precision, int max_degree) {
    if (p < 2) throw NotPrime("p must be a prime >= 2, got " + std::to_string(p));
    mpz_class pz = p;
    if (mpz_probab_prime_p(pz.get_mpz_t(), 40) == 0)
        throw NotPrime(std::to_string(p) + " is composite");
    if (f < 1 || f > max_degree)
        throw UnsupportedDegree("residue degree " + std::to_string(f) +
                                " outside [1, " + std::to_string(max_degree) + "]");
    if (precision < 1) throw Error("precision must be >= 1");

    unsigned long long q = 1;
    for (int i = 0; i < f; ++i) {
        if (q > (~0ULL) / static_cast<unsigned long long>(p))
            throw UnsupportedDegree("p^f does not fit in 64 bits");
        q *= static_cast<unsigned long long>(p);
    }

    // lexicographically smallest monic irreducible, low-degree coefficient
    // compared first
    std::vector<long> mod(f + 1, 0);
    mod[f] = 1;
    bool found = false;
    std::vector<long> tuple(f, 0);
    while (true) {
        for (int i = 0; i < f; ++i) mod[i] = tuple[i];
        if (is_irreducible_mod_p(mod, p)) { found = true; break; }
        // next tuple: low-degree-first lexicographic successor increments
        // the least significant position, i.e. the highest index
        int i = f - 1;
        while (i >= 0 && tuple[i] == p - 1) tuple[i--] = 0;
        if (i < 0) break;
        ++tuple[i];
    }
    if (!found) throw Error("no irreducible polynomial found");  // unreachable

    auto par = std::make_shared<FieldParams>();
    par->p = p;
    par->f = f;
    par->precision = precision;
    par->e = 1;
    par->q = q;
    par->modulus = std::move(mod);
    par->p_mpz = pz;
    mpz_pow_ui(par->pn.get_mpz_t(), pz.get_mpz_t(), precision);
    return par;
}

// ---------------------------------------------------------------- residue field

FqElem fq_zero(const FieldParams& par) { return FqElem{std::vector<long>(par.f, 0)}; }

FqElem fq_one(const FieldParams& par) {
    FqElem r = fq_zero(par);
    r.c[0] = 1;
    return r;
}

FqElem fq_add(const FieldParams& par, const FqElem& a, const FqElem& b) {
    FqElem r = fq_zero(par);
    for (int i = 0; i < par.f; ++i) r.c[i] = (a.c[i] + b.c[i]) % par.p;
    return r;
}

FqElem fq_mul(const FieldParams& par, const FqElem& a, const FqElem& b) {
    const long p = par.p;
    std::vector<long> prod(2 * par.f - 1, 0);
    for (int i = 0; i < par.f; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < par.f; ++j)
            prod[i + j] = (prod[i + j] + a.c[i] * b.c[j]) % p;
    }
    // reduce by the monic modulus
    for (int d = 2 * par.f - 2; d >= par.f; --d) {
        long lead = prod[d];
        if (lead == 0) continue;
        for (int i = 0; i < par.f; ++i) {
            long v = (prod[d - par.f + i] - lead * par.modulus[i]) % p;
            if (v < 0) v += p;
            prod[d - par.f + i] = v;
        }
        prod[d] = 0;
    }
    prod.resize(par.f);
    return FqElem{std::move(prod)};
}

FqElem fq_pow(const FieldParams& par, FqElem a, unsigned long long e) {
    FqElem r = fq_one(par);
    while (e > 0) {
        if (e & 1ULL) r = fq_mul(par, r, a);
        a = fq_mul(par, a, a);
        e >>= 1ULL;
    }
    return r;
}

FqElem fq_inv(const FieldParams& par, const FqElem& a) {
    if (a.is_zero()) throw NotAUnit("inverse of zero in F_q");
    return fq_pow(par, a, par.q - 2);
}

unsigned long long fq_code(const FieldParams& par, const FqElem& a) {
    unsigned long long code = 0;
    for (int i = 0; i < par.f; ++i)
        code = code * static_cast<unsigned long long>(par.p) +
               static_cast<unsigned long long>(a.c[i]);
    return code;
}

FqElem fq_from_code(const FieldParams& par, unsigned long long code) {
    FqElem r = fq_zero(par);
    for (int i = par.f - 1; i >= 0; --i) {
        r.c[i] = static_cast<long>(code % static_cast<unsigned long long>(par.p));
        code /= static_cast<unsigned long long>(par.p);
    }
    return r;
}

FqElem fq_smallest_generator(const FieldParams& par) {
    const unsigned long long order = par.q - 1;
    auto factors = prime_factors_ull(order);
    for (unsigned long long code = 1; code < par.q; ++code) {
        FqElem g = fq_from_code(par, code);
        bool ok = true;
        for (auto r : factors) {
            if (fq_pow(par, g, order / r) == fq_one(par)) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw Error("no generator of F_q^x found");  // unreachable for q >= 2
}

// ---------------------------------------------------------------- O_K / p^N

OKElem::OKElem(FieldParamsPtr params)
    : params_(std::move(params)), c_(params_->f, mpz_class(0)) {}

OKElem::OKElem(FieldParamsPtr params, std::vector<mpz_class> coeffs)
    : params_(std::move(params)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != params_->f)
        throw Error("coefficient count does not match residue degree");
    for (auto& x : c_) {
        x %= params_->pn;
        if (x < 0) x += params_->pn;
    }
}

OKElem OKElem::from_integer(FieldParamsPtr params, const mpz_class& n) {
    std::vector<mpz_class> c(params->f, mpz_class(0));
    c[0] = n;
    return OKElem(std::move(params), std::move(c));
}

OKElem OKElem::one(FieldParamsPtr params) { return from_integer(std::move(params), 1); }

bool OKElem::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

FqElem OKElem::residue() const {
    FqElem r = fq_zero(*params_);
    for (int i = 0; i < params_->f; ++i) {
        mpz_class m = c_[i] % params_->p_mpz;
        r.c[i] = m.get_si();
    }
    return r;
}

Valuation OKElem::valuation() const {
    bool any = false;
    long best = 0;
    for (const auto& x : c_) {
        if (x == 0) continue;
        long v = static_cast<long>(
            mpz_remove(mpz_class().get_mpz_t(), x.get_mpz_t(), params_->p_mpz.get_mpz_t()));
        if (!any || v < best) best = v;
        any = true;
    }
    if (!any) return Valuation::plus_infinity();
    return Valuation(best);
}

bool operator==(const OKElem& a, const OKElem& b) {
    return a.params_->same_field(*b.params_) && a.c_ == b.c_;
}

namespace {
void check_same(const OKElem& a, const OKElem& b) {
    if (!a.params()->same_field(*b.params()))
        throw ParamMismatch("operands live in different fields");
}
} // namespace

OKElem ok_add(const OKElem& a, const OKElem& b) {
    check_same(a, b);
    std::vector<mpz_class> c(a.params()->f);
    for (int i = 0; i < a.params()->f; ++i) {
        c[i] = a.c_[i] + b.c_[i];
        if (c[i] >= a.params()->pn) c[i] -= a.params()->pn;
    }
    return OKElem(a.params(), std::move(c));
}

OKElem ok_sub(const OKElem& a, const OKElem& b) {
    check_same(a, b);
    std::vector<mpz_class> c(a.params()->f);
    for (int i = 0; i < a.params()->f; ++i) {
        c[i] = a.c_[i] - b.c_[i];
        if (c[i] < 0) c[i] += a.params()->pn;
    }
    return OKElem(a.params(), std::move(c));
}

OKElem ok_neg(const OKElem& a) {
    std::vector<mpz_class> c(a.params()->f);
    for (int i = 0; i < a.params()->f; ++i)
        c[i] = a.c_[i] == 0 ? mpz_class(0) : mpz_class(a.params()->pn - a.c_[i]);
    return OKElem(a.params(), std::move(c));
}

OKElem ok_mul(const OKElem& a, const OKElem& b) {
    check_same(a, b);
    const auto& par = *a.params();
    std::vector<mpz_class> prod(2 * par.f - 1, mpz_class(0));
    for (int i = 0; i < par.f; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < par.f; ++j) {
            if (b.c_[j] == 0) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    // reduce by the lifted monic modulus, then mod p^N
    for (int d = 2 * par.f - 2; d >= par.f; --d) {
        if (prod[d] == 0) continue;
        for (int i = 0; i < par.f; ++i) {
            if (par.modulus[i] != 0)
                prod[d - par.f + i] -= prod[d] * par.modulus[i];
        }
        prod[d] = 0;
    }
    prod.resize(par.f);
    return OKElem(a.params(), std::move(prod));
}

OKElem ok_pow(const OKElem& a, unsigned long long e) {
    OKElem r = OKElem::one(a.params());
    OKElem base = a;
    while (e > 0) {
        if (e & 1ULL) r = ok_mul(r, base);
        base = ok_mul(base, base);
        e >>= 1ULL;
    }
    return r;
}

OKElem ok_divexact_p(const OKElem& a, long k) {
    if (k == 0) return a;
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), a.params()->p_mpz.get_mpz_t(), k);
    std::vector<mpz_class> c(a.params()->f);
    for (int i = 0; i < a.params()->f; ++i) {
        if (!mpz_divisible_p(a.c_[i].get_mpz_t(), pk.get_mpz_t()))
            throw Error("exact division by p^k failed");
        mpz_divexact(c[i].get_mpz_t(), a.c_[i].get_mpz_t(), pk.get_mpz_t());
    }
    return OKElem(a.params(), std::move(c));
}

OKElem ok_mul_p_pow(const OKElem& a, long k) {
    if (k == 0) return a;
    if (k < 0) return ok_divexact_p(a, -k);
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), a.params()->p_mpz.get_mpz_t(), k);
    std::vector<mpz_class> c(a.params()->f);
    for (int i = 0; i < a.params()->f; ++i) c[i] = a.c_[i] * pk;
    return OKElem(a.params(), std::move(c));
}

OKElem invert_unit(const OKElem& a) {
    const auto& par = *a.params();
    FqElem r = a.residue();
    if (r.is_zero()) throw NotAUnit("element has residue 0");

    // lift of the residue-field inverse, then Newton: b <- b(2 - a b)
    FqElem rinv = fq_inv(par, r);
    std::vector<mpz_class> c(par.f);
    for (int i = 0; i < par.f; ++i) c[i] = rinv.c[i];
    OKElem b(a.params(), std::move(c));

    OKElem two = OKElem::from_integer(a.params(), 2);
    for (int known = 1; known < par.precision; known *= 2)
        b = ok_mul(b, ok_sub(two, ok_mul(a, b)));

    assert(ok_mul(a, b) == OKElem::one(a.params()));
    return b;
}

OKElem teichmuller_lift(const FqElem& r, FieldParamsPtr params) {
    std::vector<mpz_class> c(params->f);
    for (int i = 0; i < params->f; ++i) c[i] = r.c[i];
    OKElem t(params, std::move(c));
    for (int i = 0; i < params->precision; ++i) {
        OKElem next = ok_pow(t, params->q);
        if (next == t) break;
        t = next;
    }
    return t;
}

} // namespace padico
