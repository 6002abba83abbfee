#pragma once

#include "gspingj/gspin.hpp"
#include "gspingj/lfun.hpp"
#include "gspingj/series.hpp"

#include <vector>

namespace gspingj {

// The additive character psi is fixed unramified (conductor O); only T varies.
struct FourierConfig {
    LatticeVector T;
};

struct IntegralResult {
    TruncSeries series;
    long cells_visited = 0;
    bool stability_certificate = false;
};

// meas{x in V : x y in Clif(Lambda)} for y in GSpin(V), with V the quasisplit
// space attached to alg (standing in the V_1 role). Computed from the Smith
// data of the right-multiplication matrix; the closed form is
// ||y||^{2 - dim V} |nu(y)|^{-1}.
Rational measure_Uy(const Algebra& alg, const CliffordElement& y);
Rational measure_Uy_closed_form(const Algebra& alg, const CliffordElement& y);

// S_T(Phi)(m(lam, y)) = int psi((T,x)) Phi(n(x) m(lam,y)) dx, evaluated
// exactly: the support is the lattice {x : x y integral} (scaled by the
// conditions on y and lam y), and a psi-integral over a lattice is its
// measure times the indicator that (T, .) is integral on it.
Rational fourier_ST(const Algebra& alg, const Rational& lam, const CliffordElement& y,
                    const FourierConfig& cfg);
// The predicted value |nu(y)|^{-1} 1(val y = 0) 1(lam in O) 1(T.y in dual),
// valid for T in the dual lattice but not p times it.
Rational fourier_ST_predicted(const Algebra& alg, const Rational& lam,
                              const CliffordElement& y, const FourierConfig& cfg);

// Both sides of: n(x) m(lam, y) integral <=> y, lam y, x y all integral.
// x is a vector of the full space supported on the V_1 block, y an element of
// Clif(V_1) inside Clif(V). Returns whether the two sides agree.
bool check_support_claim(const Algebra& alg, const std::vector<Rational>& x,
                         const Rational& lam, const CliffordElement& y);

// I(alpha, s) = int phi_alpha(g) Phi(g) |nu(g)|^s dg as a series in
// x = q^{h/2} X, X = q^{-s}, through degree M, by direct Iwasawa summation:
// cells t over T(F)/T(O) weighted by delta_B^{1/2}(t) alpha(t) X^{val nu(t)},
// and the N-integral summed over unipotent coordinate grids refined until the
// value is stable. The certificate reruns everything with strictly deeper
// grids and wider cell boxes and compares. Supports n <= 2.
IntegralResult gj_series_direct(const SatakeData& sd, const QSpace& S, int M,
                                int dim_cap = 6);

// The same series by the rank recursion
// I_V(alpha, s) = zeta(a_1, s - dimV_1/2) zeta(omega/a_1, s - dimV_1/2)
//                 zeta(omega, 2s-2)^{-1} I_{V_1}(tau, s-1),
// with the Tate series over E^x as the base case.
TruncSeries gj_series_recursive(const SatakeData& sd, const QSpace& S, int M);

// Checks sum_N p_{V,N}(q) omega^N X^{2N} * I(alpha, s) = L(pi, Std, s+1-dimV/2)
// as series in x through degree M (the center-translation resummation of the
// basic-function identity).
bool exact_basic_function_check(const SatakeData& sd, const QSpace& S, int M);

// Theorem-level bundle: both routes, the expected quotient L/dV, and the
// comparison verdicts.
struct Theorem1Report {
    TruncSeries direct;
    TruncSeries recursive;
    TruncSeries expected; // L(pi, Std, s+1-dimV/2) / dV(s)
    bool ok_direct = false;    // direct * dV == L and certificate
    bool ok_routes = false;    // direct == recursive
    long cells_visited = 0;
    bool stability_certificate = false;
};

Theorem1Report theorem1_check(const SatakeData& sd, const QSpace& S, int M);

} // namespace gspingj
