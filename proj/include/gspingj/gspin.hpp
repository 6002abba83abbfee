#pragma once

#include "gspingj/clifford.hpp"

#include <vector>

namespace gspingj {

// Elements of GSpin(V) are invertible even Clifford elements g with
// g* g = nu(g) a scalar and g^{-1} V g = V. The right action on vectors is
// v.g = g^{-1} v g, an isometry of determinant 1.

Rational gspin_norm(const Algebra& alg, const CliffordElement& g);
CliffordElement gspin_inverse(const Algebra& alg, const CliffordElement& g);
std::vector<Rational> vector_action(const Algebra& alg, const std::vector<Rational>& v,
                                    const CliffordElement& g);
// columns = images of the basis vectors, so coords map by v -> A v
Matrix action_matrix(const Algebra& alg, const CliffordElement& g);
bool is_gspin(const Algebra& alg, const CliffordElement& g);

// Builders; all require an algebra with an attached quasisplit space.
CliffordElement elt_z(const Algebra& alg, const Rational& t);
// t e_i f_i + f_i e_i: e_i -> t^{-1} e_i, f_i -> t f_i, nu = t
CliffordElement elt_m(const Algebra& alg, int i, const Rational& t);
// e_i f_i + lam f_i e_i: e_i -> lam e_i, f_i -> lam^{-1} f_i, nu = lam
CliffordElement elt_m_star(const Algebra& alg, int i, const Rational& lam);
// iota0(lam) for lam in E^x; nu = Norm(lam)
CliffordElement elt_zE(const Algebra& alg, const std::vector<Rational>& lam);
// 1 + f_j x for x in V_j (coords over V, supported on positions j..dim-1-j)
CliffordElement elt_n(const Algebra& alg, int j, const std::vector<Rational>& x);
// 1 + e_j x, the opposite unipotent
CliffordElement elt_n_opp(const Algebra& alg, int j, const std::vector<Rational>& x);
// 1 + c f_j e_i with i != j: f_i -> f_i - c f_j, e_j -> e_j + c e_i
CliffordElement elt_levi_unip(const Algebra& alg, int i, int j, const Rational& c);
// prod_{i in U} m_i*(t)
CliffordElement elt_hU(const Algebra& alg, const std::vector<int>& U, const Rational& t);

// The perp space V_j as its own quasisplit space (strip e_1..e_j, f_1..f_j),
// and the transport of its Clifford elements into Clif(V).
QSpace perp_space(const QSpace& s, int j);
std::vector<int> perp_posmap(const QSpace& s, int j);

// m(lam, y) = m_1*(lam) y with y a GSpin(V_1) element already inside Clif(V)
CliffordElement elt_m_levi(const Algebra& alg, const Rational& lam,
                           const CliffordElement& y);

} // namespace gspingj
