#pragma once

#include "gspingj/gspin.hpp"
#include "gspingj/spinor.hpp"

#include <memory>
#include <vector>

namespace gspingj {

// W = V (+) V0^-: the doubled quadratic space with gram block-diag(G, -G0),
// a chosen maximal isotropic X of half the dimension, and the spinor module
// S_X = Clif(W) / X Clif(W).
struct DoublingSetup {
    QSpace S;
    std::unique_ptr<Algebra> algV;   // Clif(V), space attached
    std::unique_ptr<Algebra> algV0m; // Clif(V0^-) on its own
    std::unique_ptr<Algebra> algW;   // Clif(W)
    int dimV = 0;
    int dimV0 = 0;
    std::vector<int> posV;
    std::vector<int> posV0;
    SpinorModule spinor;
};

// V0 = V_E, X = diagonal V_E plus every f_i: the section-pullback setup.
DoublingSetup make_pullback_setup(const QSpace& S);
// V0 = V, X = diagonal V: the doubling-composition setup.
DoublingSetup make_doubling_setup(const QSpace& S);
// V0 = V_1, X = diagonal V_1 plus (f_1, 0): the one-variable-family setup.
DoublingSetup make_ks_setup(const QSpace& S);

CliffordElement embed_first(const DoublingSetup& d, const CliffordElement& a);
CliffordElement embed_second(const DoublingSetup& d, const CliffordElement& a);

// Phi_X(1_X g): integrality of the reduced spinor class of g against the
// image of Clif(Lambda(W)).
bool phi_X(const DoublingSetup& d, const CliffordElement& gW);

// Phi_X(1_X (1,h)) == Phi_{Lambda(V0^-)}(h), with h given in Clif(V0^-).
bool pullback_phi_check(const DoublingSetup& d, const CliffordElement& h);

// Phi_X(1_X (g,1)) == Phi_Lambda(g), with g given in Clif(V).
bool doubling_composition_check(const DoublingSetup& d, const CliffordElement& g);

// Generators of the stabilizer P_X of X in GSpin(W):
// y_i x_i + t x_i y_i,  1 + c x_i y_j (i != j),  1 + c x_i x_j (i < j).
CliffordElement px_torus(const DoublingSetup& d, int i, const Rational& t);
CliffordElement px_levi(const DoublingSetup& d, int i, int j, const Rational& c);
CliffordElement px_unip(const DoublingSetup& d, int i, int j, const Rational& c);

// 1_X p = alpha(p) 1_X and alpha(p)^2 / nu(p) = det(action on W/X)^{-1}.
// Throws invalid_argument when 1_X p is not proportional to 1_X.
bool eis_section_character_check(const DoublingSetup& d, const CliffordElement& pW);

// In the one-variable setup: the classes of 1_X m(lam,y) and 1_X y agree
// exactly, and char(T.y) Phi_X(1_X m(lam,y)) = char(y) char(T.y).
bool chary_check(const DoublingSetup& d, const Rational& lam, const CliffordElement& y,
                 const LatticeVector& T);

// beta_T(m(lam,y)) = psi-weighted measure of the transverse coordinates x with
// T n(x) m(lam,y) in the lattice, evaluated by an exact coset computation and
// compared against |lam| 1(lam in O) 1(T.y in Lambda_1).
bool betaT_check(const Algebra& algV, const Rational& lam, const CliffordElement& y,
                 const LatticeVector& T);

} // namespace gspingj
