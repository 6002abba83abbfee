#include "gspingj/gspin.hpp"

#include <stdexcept>

namespace gspingj {

Rational gspin_norm(const Algebra& alg, const CliffordElement& g) {
    CliffordElement prod = alg.mul(alg.star(g), g);
    if (prod.terms.size() > 1 || (!prod.is_zero() && prod.terms.begin()->first != 0))
        throw std::invalid_argument("g* g is not a scalar");
    Rational nu = alg.scalar_part(prod);
    if (nu == 0) throw std::invalid_argument("similitude norm vanishes");
    return nu;
}

CliffordElement gspin_inverse(const Algebra& alg, const CliffordElement& g) {
    Rational nu = gspin_norm(alg, g);
    return clif_scale(1 / nu, alg.star(g));
}

std::vector<Rational> vector_action(const Algebra& alg, const std::vector<Rational>& v,
                                    const CliffordElement& g) {
    Rational nu = gspin_norm(alg, g);
    CliffordElement img = alg.mul(alg.mul(alg.star(g), alg.vector_elem(v)), g);
    img = clif_scale(1 / nu, img);
    if (!alg.is_vector(img))
        throw std::invalid_argument("conjugation does not preserve V");
    return alg.vector_part(img);
}

Matrix action_matrix(const Algebra& alg, const CliffordElement& g) {
    int d = alg.dim();
    Rational nu = gspin_norm(alg, g);
    CliffordElement gs = alg.star(g);
    Matrix a(d, std::vector<Rational>(d, Rational(0)));
    for (int j = 0; j < d; ++j) {
        CliffordElement img = alg.mul(alg.mul(gs, alg.gen(j)), g);
        img = clif_scale(1 / nu, img);
        if (!alg.is_vector(img))
            throw std::invalid_argument("conjugation does not preserve V");
        auto col = alg.vector_part(img);
        for (int i = 0; i < d; ++i) a[i][j] = col[i];
    }
    return a;
}

bool is_gspin(const Algebra& alg, const CliffordElement& g) {
    if (g.is_zero() || !alg.is_even(g)) return false;
    CliffordElement prod = alg.mul(alg.star(g), g);
    for (const auto& [bl, c] : prod.terms)
        if (bl != 0) return false;
    if (alg.scalar_part(prod) == 0) return false;
    Matrix a;
    try {
        a = action_matrix(alg, g);
    } catch (const std::invalid_argument&) {
        return false;
    }
    const Matrix& gr = alg.gram();
    if (mat_mul(mat_transpose(a), mat_mul(gr, a)) != gr) return false;
    return mat_det(a) == 1;
}

static const QSpace& need_space(const Algebra& alg) { return alg.space(); }

CliffordElement elt_z(const Algebra& alg, const Rational& t) {
    if (t == 0) throw std::invalid_argument("central element needs t != 0");
    return alg.scalar(t);
}

CliffordElement elt_m(const Algebra& alg, int i, const Rational& t) {
    const QSpace& s = need_space(alg);
    if (t == 0) throw std::invalid_argument("torus element needs t != 0");
    CliffordElement e = alg.gen(s.e_pos(i));
    CliffordElement f = alg.gen(s.f_pos(i));
    return clif_add(clif_scale(t, alg.mul(e, f)), alg.mul(f, e));
}

CliffordElement elt_m_star(const Algebra& alg, int i, const Rational& lam) {
    const QSpace& s = need_space(alg);
    if (lam == 0) throw std::invalid_argument("torus element needs lam != 0");
    CliffordElement e = alg.gen(s.e_pos(i));
    CliffordElement f = alg.gen(s.f_pos(i));
    return clif_add(alg.mul(e, f), clif_scale(lam, alg.mul(f, e)));
}

CliffordElement elt_zE(const Algebra& alg, const std::vector<Rational>& lam) {
    const QSpace& s = need_space(alg);
    if (e_norm(s, lam) == 0) throw std::invalid_argument("E-torus element needs norm != 0");
    return iota0(alg, lam);
}

static void check_perp_support(const QSpace& s, int j, const std::vector<Rational>& x) {
    if (j < 1 || j > s.n) throw std::invalid_argument("flag level out of range");
    if (static_cast<int>(x.size()) != s.dim)
        throw std::invalid_argument("coordinate count does not match dim V");
    for (int pos = 0; pos < s.dim; ++pos)
        if (x[pos] != 0 && (pos < j || pos > s.dim - 1 - j))
            throw std::invalid_argument("vector is not supported on the perp space");
}

CliffordElement elt_n(const Algebra& alg, int j, const std::vector<Rational>& x) {
    const QSpace& s = need_space(alg);
    check_perp_support(s, j, x);
    CliffordElement fx = alg.mul(alg.gen(s.f_pos(j)), alg.vector_elem(x));
    return clif_add(alg.one(), fx);
}

CliffordElement elt_n_opp(const Algebra& alg, int j, const std::vector<Rational>& x) {
    const QSpace& s = need_space(alg);
    check_perp_support(s, j, x);
    CliffordElement ex = alg.mul(alg.gen(s.e_pos(j)), alg.vector_elem(x));
    return clif_add(alg.one(), ex);
}

CliffordElement elt_levi_unip(const Algebra& alg, int i, int j, const Rational& c) {
    const QSpace& s = need_space(alg);
    if (i == j) throw std::invalid_argument("Levi unipotent needs i != j");
    CliffordElement fe = alg.mul(alg.gen(s.f_pos(j)), alg.gen(s.e_pos(i)));
    return clif_add(alg.one(), clif_scale(c, fe));
}

CliffordElement elt_hU(const Algebra& alg, const std::vector<int>& U, const Rational& t) {
    CliffordElement r = alg.one();
    for (int i : U) r = alg.mul(r, elt_m_star(alg, i, t));
    return r;
}

QSpace perp_space(const QSpace& s, int j) {
    if (j < 0 || j > s.n) throw std::invalid_argument("flag level out of range");
    return build_space(s.n - j, s.e, s.p);
}

std::vector<int> perp_posmap(const QSpace& s, int j) {
    std::vector<int> map;
    for (int pos = j; pos <= s.dim - 1 - j; ++pos) map.push_back(pos);
    return map;
}

CliffordElement elt_m_levi(const Algebra& alg, const Rational& lam,
                           const CliffordElement& y) {
    return alg.mul(elt_m_star(alg, 1, lam), y);
}

} // namespace gspingj
