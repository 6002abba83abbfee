#include "gspingj/lfun.hpp"

#include <stdexcept>

namespace gspingj {

Rational SatakeData::omega() const {
    switch (ekind) {
        case EKind::Field: return b.at(0);
        case EKind::Split: return b.at(0) * b.at(1);
        case EKind::UnramifiedField: return b.at(0);
    }
    throw std::logic_error("unreachable");
}

SatakeData make_satake(const QSpace& s, std::vector<Rational> a, std::vector<Rational> b) {
    SatakeData sd;
    sd.n = s.n;
    sd.ekind = s.e.kind;
    if (static_cast<int>(a.size()) != s.n)
        throw std::invalid_argument("need one a_i per hyperbolic pair");
    size_t nb = s.e.kind == EKind::Split ? 2 : 1;
    if (b.size() != nb) throw std::invalid_argument("E-part has the wrong size");
    for (const auto& v : a)
        if (v == 0) throw std::invalid_argument("a_i must be nonzero");
    for (const auto& v : b)
        if (v == 0) throw std::invalid_argument("b must be nonzero");
    sd.a = std::move(a);
    sd.b = std::move(b);
    return sd;
}

int h_of_dim(int dimV) { return dimV & 1; }

static Rational coeff_x(const Rational& c, long e2, long d, int h, unsigned long p) {
    long num = e2 - d * h;
    if (num % 2 != 0) throw std::invalid_argument("half-integer exponent does not cancel");
    return c * q_pow(p, num / 2);
}

TruncSeries geometric_x(const Rational& c, long e2, long d, int h, int M, unsigned long p) {
    return TruncSeries::geometric(coeff_x(c, e2, d, h, p), d, M);
}

TruncSeries one_minus_x(const Rational& c, long e2, long d, int h, int M, unsigned long p) {
    TruncSeries r = TruncSeries::one(M);
    if (d <= M) r += TruncSeries::monomial(M, d, -coeff_x(c, e2, d, h, p));
    return r;
}

static TruncSeries l_product(const SatakeData& sd, long e2, int h, int M, unsigned long p) {
    TruncSeries r = TruncSeries::one(M);
    Rational om = sd.omega();
    for (const auto& ai : sd.a) {
        r = r * geometric_x(ai, e2, 1, h, M, p);
        r = r * geometric_x(om / ai, e2, 1, h, M, p);
    }
    switch (sd.ekind) {
        case EKind::Field:
            break;
        case EKind::Split:
            r = r * geometric_x(sd.b[0], e2, 1, h, M, p);
            r = r * geometric_x(sd.b[1], e2, 1, h, M, p);
            break;
        case EKind::UnramifiedField:
            r = r * geometric_x(sd.b[0], 2 * e2, 2, h, M, p);
            break;
    }
    return r;
}

TruncSeries standard_L_plain(const SatakeData& sd, int M, unsigned long p) {
    return l_product(sd, 0, 0, M, p);
}

TruncSeries standard_L_shifted_x(const SatakeData& sd, int dimV, int M, unsigned long p) {
    return l_product(sd, dimV - 2, h_of_dim(dimV), M, p);
}

TruncSeries dV_x(int dimV, const Rational& omega, int M, unsigned long p) {
    int h = h_of_dim(dimV);
    if (dimV == 1) return one_minus_x(omega, 0, 2, h, M, p);
    TruncSeries r = TruncSeries::one(M);
    for (int j = 2; j <= dimV - 2; j += 2)
        r = r * geometric_x(omega, 2 * j, 2, h, M, p);
    return r;
}

static std::vector<Rational> dv_series_in_y(int dimV, int M, unsigned long p, bool with_j0) {
    if (dimV < 2) throw std::invalid_argument("basic-function coefficients need dim V >= 2");
    TruncSeries r = TruncSeries::one(M);
    if (with_j0) r = r * TruncSeries::geometric(Rational(1), 1, M);
    for (int j = 2; j <= dimV - 2; j += 2)
        r = r * TruncSeries::geometric(q_pow(p, j), 1, M);
    std::vector<Rational> out(M + 1);
    for (int i = 0; i <= M; ++i) out[i] = r.coeff(i);
    return out;
}

std::vector<Rational> basic_coeffs(int dimV, int M, unsigned long p) {
    return dv_series_in_y(dimV, M, p, false);
}

std::vector<Rational> basic_coeffs_prime(int dimV, int M, unsigned long p) {
    return dv_series_in_y(dimV, M, p, true);
}

} // namespace gspingj
