#pragma once

#include "gspingj/quadspace.hpp"
#include "gspingj/series.hpp"

#include <vector>

namespace gspingj {

// Unramified principal-series data on the maximal torus: values of the
// character on m_i(pi) (the a_i) and on the E-part of the center
// (b of size 1 for E = F and E unramified, b = (b1, b2) split).
// omega is the value on the central z(pi).
struct SatakeData {
    int n = 0;
    EKind ekind = EKind::Field;
    std::vector<Rational> a;
    std::vector<Rational> b;

    Rational omega() const;
};

SatakeData make_satake(const QSpace& s, std::vector<Rational> a, std::vector<Rational> b);

int h_of_dim(int dimV);

// Series (1 - c q^{(e2 - d h)/2} x^d)^{-1} and its numerator polynomial, in the
// variable x = q^{h/2} X, X = q^{-s}. e2 is twice the q-exponent riding on X^d,
// so half-integer exponents stay exact; (e2 - d h) must be even.
TruncSeries geometric_x(const Rational& c, long e2, long d, int h, int M, unsigned long p);
TruncSeries one_minus_x(const Rational& c, long e2, long d, int h, int M, unsigned long p);

// L(pi, Std, s) as a series in X (no shift): the E-part times
// prod_i (1 - a_i X)^{-1} (1 - (omega/a_i) X)^{-1}.
TruncSeries standard_L_plain(const SatakeData& sd, int M, unsigned long p);

// L(pi, Std, s + 1 - dimV/2) as a series in x = q^{h/2} X.
TruncSeries standard_L_shifted_x(const SatakeData& sd, int dimV, int M, unsigned long p);

// d^V(s) as a series in x: prod over even 2 <= j <= dimV-2 of zeta(omega, 2s-j),
// and the empty-product conventions: 1 for dimV in {2,3}, the polynomial
// zeta(omega, 2s)^{-1} for dimV = 1.
TruncSeries dV_x(int dimV, const Rational& omega, int M, unsigned long p);

// Coefficients p_{V,N}(q) of the expansion of d^V: sum_N p_{V,N} Y^N =
// prod_{j even, 2 <= j <= dimV-2} (1 - q^j Y)^{-1}, evaluated at q = p.
// The primed variant includes j = 0, so its coefficients are partial sums.
std::vector<Rational> basic_coeffs(int dimV, int M, unsigned long p);
std::vector<Rational> basic_coeffs_prime(int dimV, int M, unsigned long p);

} // namespace gspingj
