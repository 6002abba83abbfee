#include "gspingj/doubling.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gspingj {

namespace {

// W = V (+) V0^- with V0 the slice of V at positions v0pos. X columns are the
// diagonal copies (b, b^-) of the slice basis plus any extra columns, all in
// full W coordinates.
DoublingSetup make_setup(const QSpace& S, const std::vector<int>& v0pos,
                         const std::vector<std::vector<Rational>>& extra) {
    DoublingSetup d;
    d.S = S;
    d.dimV = S.dim;
    d.dimV0 = static_cast<int>(v0pos.size());
    int dimW = d.dimV + d.dimV0;

    Matrix g0(d.dimV0, std::vector<Rational>(d.dimV0, Rational(0)));
    for (int r = 0; r < d.dimV0; ++r)
        for (int c = 0; c < d.dimV0; ++c) g0[r][c] = -S.gram[v0pos[r]][v0pos[c]];

    Matrix gw(dimW, std::vector<Rational>(dimW, Rational(0)));
    for (int r = 0; r < d.dimV; ++r)
        for (int c = 0; c < d.dimV; ++c) gw[r][c] = S.gram[r][c];
    for (int r = 0; r < d.dimV0; ++r)
        for (int c = 0; c < d.dimV0; ++c) gw[d.dimV + r][d.dimV + c] = g0[r][c];

    d.algV = std::make_unique<Algebra>(S);
    d.algV0m = std::make_unique<Algebra>(g0, S.p);
    d.algW = std::make_unique<Algebra>(gw, S.p);
    for (int i = 0; i < d.dimV; ++i) d.posV.push_back(i);
    for (int r = 0; r < d.dimV0; ++r) d.posV0.push_back(d.dimV + r);

    std::vector<std::vector<Rational>> xb;
    for (int r = 0; r < d.dimV0; ++r) {
        std::vector<Rational> col(dimW, Rational(0));
        col[v0pos[r]] = 1;
        col[d.dimV + r] = 1;
        xb.push_back(std::move(col));
    }
    for (const auto& col : extra) xb.push_back(col);

    d.spinor = build_spinor(*d.algW, xb);
    return d;
}

} // namespace

DoublingSetup make_pullback_setup(const QSpace& S) {
    std::vector<int> v0pos;
    for (int j = 0; j < S.dimE(); ++j) v0pos.push_back(S.vE_pos(j));
    int dimW = S.dim + S.dimE();
    std::vector<std::vector<Rational>> extra;
    for (int i = 1; i <= S.n; ++i) {
        std::vector<Rational> col(dimW, Rational(0));
        col[S.f_pos(i)] = 1;
        extra.push_back(std::move(col));
    }
    return make_setup(S, v0pos, extra);
}

DoublingSetup make_doubling_setup(const QSpace& S) {
    std::vector<int> v0pos;
    for (int pos = 0; pos < S.dim; ++pos) v0pos.push_back(pos);
    return make_setup(S, v0pos, {});
}

DoublingSetup make_ks_setup(const QSpace& S) {
    if (S.n < 1) throw std::invalid_argument("make_ks_setup: the space needs n >= 1");
    std::vector<int> v0pos;
    for (int pos = 1; pos + 1 < S.dim; ++pos) v0pos.push_back(pos);
    int dimW = 2 * S.dim - 2;
    std::vector<Rational> f1(dimW, Rational(0));
    f1[S.f_pos(1)] = 1;
    return make_setup(S, v0pos, {f1});
}

CliffordElement embed_first(const DoublingSetup& d, const CliffordElement& a) {
    return embed_elem(*d.algV, a, *d.algW, d.posV);
}

CliffordElement embed_second(const DoublingSetup& d, const CliffordElement& a) {
    return embed_elem(*d.algV0m, a, *d.algW, d.posV0);
}

bool phi_X(const DoublingSetup& d, const CliffordElement& gW) {
    return spinor_in_image_lattice(d.spinor, spinor_reduce(d.spinor, gW));
}

bool pullback_phi_check(const DoublingSetup& d, const CliffordElement& h) {
    return phi_X(d, embed_second(d, h)) == d.algV0m->is_integral(h);
}

bool doubling_composition_check(const DoublingSetup& d, const CliffordElement& g) {
    return phi_X(d, embed_first(d, g)) == d.algV->is_integral(g);
}

CliffordElement px_torus(const DoublingSetup& d, int i, const Rational& t) {
    const SpinorModule& sp = d.spinor;
    if (i < 0 || i >= sp.m) throw std::invalid_argument("px_torus: index out of range");
    if (t == 0) throw std::invalid_argument("px_torus: t must be nonzero");
    CliffordElement xi = d.algW->vector_elem(sp.xbasis[i]);
    CliffordElement yi = d.algW->vector_elem(sp.ybasis[i]);
    return clif_add(d.algW->mul(yi, xi), clif_scale(t, d.algW->mul(xi, yi)));
}

CliffordElement px_levi(const DoublingSetup& d, int i, int j, const Rational& c) {
    const SpinorModule& sp = d.spinor;
    if (i < 0 || i >= sp.m || j < 0 || j >= sp.m || i == j)
        throw std::invalid_argument("px_levi: needs distinct indices in range");
    CliffordElement xi = d.algW->vector_elem(sp.xbasis[i]);
    CliffordElement yj = d.algW->vector_elem(sp.ybasis[j]);
    return clif_add(d.algW->one(), clif_scale(c, d.algW->mul(xi, yj)));
}

CliffordElement px_unip(const DoublingSetup& d, int i, int j, const Rational& c) {
    const SpinorModule& sp = d.spinor;
    if (i < 0 || i >= sp.m || j < 0 || j >= sp.m || i == j)
        throw std::invalid_argument("px_unip: needs distinct indices in range");
    CliffordElement xi = d.algW->vector_elem(sp.xbasis[i]);
    CliffordElement xj = d.algW->vector_elem(sp.xbasis[j]);
    return clif_add(d.algW->one(), clif_scale(c, d.algW->mul(xi, xj)));
}

bool eis_section_character_check(const DoublingSetup& d, const CliffordElement& pW) {
    const SpinorModule& sp = d.spinor;
    std::vector<Rational> red = spinor_reduce(sp, pW);
    for (std::size_t w = 1; w < red.size(); ++w)
        if (red[w] != 0)
            throw std::invalid_argument(
                "eis_section_character_check: 1_X p is not proportional to 1_X");
    Rational alpha = red[0];
    Rational nu = gspin_norm(*d.algW, pW);

    // matrix of the right action on W/X in the y-class basis: the y-component
    // of the image of y_j is read off by pairing against the x_i
    Matrix act = action_matrix(*d.algW, pW);
    const Matrix& G = d.algW->gram();
    int m = sp.m;
    Matrix D(m, std::vector<Rational>(m, Rational(0)));
    for (int j = 0; j < m; ++j) {
        std::vector<Rational> u = mat_apply(act, sp.ybasis[j]);
        std::vector<Rational> Gu = mat_apply(G, u);
        for (int i = 0; i < m; ++i) {
            Rational b(0);
            for (std::size_t r = 0; r < Gu.size(); ++r) b += Gu[r] * sp.xbasis[i][r];
            D[i][j] = b;
        }
    }
    return alpha * alpha * mat_det(D) == nu;
}

bool chary_check(const DoublingSetup& d, const Rational& lam, const CliffordElement& y,
                 const LatticeVector& T) {
    const Algebra& algV = *d.algV;
    CliffordElement m = elt_m_levi(algV, lam, y);
    std::vector<Rational> rm = spinor_reduce(d.spinor, embed_first(d, m));
    std::vector<Rational> ry = spinor_reduce(d.spinor, embed_first(d, y));
    if (rm != ry) return false;

    std::vector<Rational> Ty = vector_action(algV, T.coords, y);
    bool cTy = in_lattice(d.S, lattice_vector(d.S, Ty));
    bool phi = spinor_in_image_lattice(d.spinor, rm);
    bool cy = algV.is_integral(y);
    return (cTy && phi) == (cTy && cy);
}

bool betaT_check(const Algebra& algV, const Rational& lam, const CliffordElement& y,
                 const LatticeVector& T) {
    if (!algV.has_space())
        throw std::invalid_argument("betaT_check: the algebra needs an attached space");
    const QSpace& s = algV.space();
    unsigned long p = s.p;
    if (lam == 0) throw std::invalid_argument("betaT_check: lam must be nonzero");

    // transverse direction: a V_1 lattice basis vector pairing to a unit with T
    int dir = -1;
    for (int pos = 1; pos + 1 < s.dim && dir < 0; ++pos) {
        std::vector<Rational> b(s.dim, Rational(0));
        b[pos] = 1;
        Rational c = bilinear(s, T, lattice_vector(s, b));
        if (c != 0 && val_p(c, p) == PadicVal::of(0)) dir = pos;
    }
    if (dir < 0)
        throw std::invalid_argument("betaT_check: T is not primitive against the V_1 lattice");
    std::vector<Rational> x0(s.dim, Rational(0));
    x0[dir] = 1;
    Rational cpair = bilinear(s, T, lattice_vector(s, x0));

    CliffordElement m = elt_m_levi(algV, lam, y);
    auto tvec = [&](const Rational& sc) {
        std::vector<Rational> x(s.dim, Rational(0));
        x[dir] = sc;
        return vector_action(algV, T.coords, algV.mul(elt_n(algV, 1, x), m));
    };
    // T n(s x0) m is affine in s; certify with three sample points
    std::vector<Rational> A = tvec(Rational(0));
    std::vector<Rational> A1 = tvec(Rational(1));
    std::vector<Rational> Ap = tvec(Rational(static_cast<long>(p)));
    std::vector<Rational> B(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) B[i] = A1[i] - A[i];
    for (std::size_t i = 0; i < A.size(); ++i)
        if (Ap[i] != A[i] + Rational(static_cast<long>(p)) * B[i])
            throw std::logic_error("betaT_check: the transverse family is not affine");

    // {s : A + s B integral} as a coset s0 + p^k O, or empty
    bool empty = false;
    bool have = false;
    Rational s0(0);
    long k = 0;
    for (std::size_t i = 0; i < A.size() && !empty; ++i) {
        if (B[i] == 0) {
            if (!val_p(A[i], p).at_least(0)) empty = true;
            continue;
        }
        Rational ci = -A[i] / B[i];
        long ki = -val_p(B[i], p).v;
        if (!have) {
            s0 = ci;
            k = ki;
            have = true;
            continue;
        }
        long kmin = std::min(k, ki);
        if (!val_p(s0 - ci, p).at_least(kmin)) {
            empty = true;
            break;
        }
        if (ki > k) {
            k = ki;
            s0 = ci;
        }
    }

    Rational lhs(0);
    if (!empty) {
        if (!have)
            throw std::logic_error("betaT_check: the transverse coordinate is unconstrained");
        long vc = val_p(cpair, p).v;
        // integral of psi(cpair s) over s0 + p^k O
        if (vc + k >= 0) {
            if (!val_p(cpair * s0, p).at_least(0))
                throw std::runtime_error("betaT_check: nontrivial character phase");
            lhs = q_pow(p, -k);
        }
    }

    std::vector<Rational> Ty = vector_action(algV, T.coords, y);
    bool cond = val_p(lam, p).at_least(0) && in_lattice(s, lattice_vector(s, Ty));
    Rational rhs = cond ? q_pow(p, -val_p(lam, p).v) : Rational(0);
    return lhs == rhs;
}

} // namespace gspingj
