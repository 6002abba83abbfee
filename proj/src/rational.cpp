#include "gspingj/rational.hpp"

namespace gspingj {

Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("rational_from_string: bad literal '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

Rational rational_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0) {
        if (e < 0) throw std::invalid_argument("rational_pow: 0 to a negative power");
        return Rational(0);
    }
    Rational base = e > 0 ? r : Rational(1) / r;
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

long val_p_mpz(const mpz_class& n, unsigned long p) {
    if (n == 0) throw std::invalid_argument("val_p_mpz: zero input");
    mpz_class rem, pz(static_cast<unsigned long>(p));
    return static_cast<long>(mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

PadicVal val_p(const Rational& r, unsigned long p) {
    if (r == 0) return PadicVal::infinity();
    return PadicVal::of(val_p_mpz(r.get_num(), p) - val_p_mpz(r.get_den(), p));
}

Rational q_pow(unsigned long p, long e) {
    Rational base(static_cast<unsigned long>(p));
    return rational_pow(base, e);
}

bool is_prime(unsigned long p) {
    mpz_class n(static_cast<unsigned long>(p));
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

unsigned long residue_mod_p(const Rational& r, unsigned long p) {
    if (!val_p(r, p).at_least(0))
        throw std::invalid_argument("residue_mod_p: negative valuation");
    unsigned long num = mpz_fdiv_ui(r.get_num().get_mpz_t(), p);
    unsigned long den = mpz_fdiv_ui(r.get_den().get_mpz_t(), p);
    if (den == 0) throw std::logic_error("residue_mod_p: denominator divisible by p");
    // den^(p-2) mod p inverts den
    unsigned long inv = 1, base = den % p, k = p - 2;
    while (k) {
        if (k & 1) inv = (inv * base) % p;
        base = (base * base) % p;
        k >>= 1;
    }
    return (num % p) * inv % p;
}

} // namespace gspingj
