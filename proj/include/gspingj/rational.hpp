#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace gspingj {

// Exact rational arithmetic. mpq_class keeps values in canonical reduced form,
// so equality of values is structural equality of representations.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

// r^e for integer e, with r != 0 when e < 0.
Rational rational_pow(const Rational& r, long e);

// p-adic valuation value: an integer or +infinity (for 0).
struct PadicVal {
    bool infinite = true;
    long v = 0;

    static PadicVal infinity() { return PadicVal{}; }
    static PadicVal of(long k) { return PadicVal{false, k}; }

    bool operator==(const PadicVal& o) const {
        return infinite == o.infinite && (infinite || v == o.v);
    }
    bool operator<(const PadicVal& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return v < o.v;
    }
    PadicVal operator+(const PadicVal& o) const {
        if (infinite || o.infinite) return infinity();
        return of(v + o.v);
    }
    friend PadicVal min(const PadicVal& a, const PadicVal& b) { return a < b ? a : b; }

    // v >= k, with +infinity >= everything
    bool at_least(long k) const { return infinite || v >= k; }
};

long val_p_mpz(const mpz_class& n, unsigned long p);
PadicVal val_p(const Rational& r, unsigned long p);

// p^e as an exact rational, e of either sign.
Rational q_pow(unsigned long p, long e);

bool is_prime(unsigned long p);

// Least nonnegative residue of r mod p; requires val_p(r, p) >= 0.
unsigned long residue_mod_p(const Rational& r, unsigned long p);

} // namespace gspingj
