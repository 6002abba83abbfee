#include "gspingj/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace gspingj {

long Sampler::uniform(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng);
}

bool Sampler::coin() { return uniform(0, 1) == 1; }

Rational random_small_nonzero(Sampler& smp) {
    long num = 0;
    while (num == 0) num = smp.uniform(-9, 9);
    return make_rational(num, smp.uniform(1, 9));
}

Rational random_small_int(Sampler& smp, long lo, long hi) {
    return Rational(smp.uniform(lo, hi));
}

Rational random_unit(Sampler& smp, unsigned long p) {
    for (;;) {
        long v = smp.uniform(-9, 9);
        if (v != 0 && v % static_cast<long>(p) != 0) return Rational(v);
    }
}

Rational random_with_val(Sampler& smp, unsigned long p, long v) {
    return random_unit(smp, p) * q_pow(p, v);
}

SatakeData random_satake(Sampler& smp, const QSpace& S) {
    std::vector<Rational> a, b;
    for (int i = 0; i < S.n; ++i) a.push_back(random_small_nonzero(smp));
    int nb = S.e.kind == EKind::Split ? 2 : 1;
    for (int i = 0; i < nb; ++i) b.push_back(random_small_nonzero(smp));
    return make_satake(S, std::move(a), std::move(b));
}

std::vector<Rational> random_coords(Sampler& smp, const QSpace& S, long lo, long hi) {
    std::vector<Rational> c(S.dim);
    for (int i = 0; i < S.dim; ++i) c[i] = Rational(smp.uniform(lo, hi));
    return c;
}

std::vector<Rational> random_vj_coords(Sampler& smp, const QSpace& S, int j, long lo,
                                       long hi) {
    std::vector<Rational> c(S.dim, Rational(0));
    for (int pos = j; pos <= S.dim - 1 - j; ++pos) c[pos] = Rational(smp.uniform(lo, hi));
    return c;
}

namespace {

// lam in E with unit norm, in iota0 coordinates
std::vector<Rational> random_zE_units(Sampler& smp, const QSpace& s) {
    if (s.dimE() == 1) return {random_unit(smp, s.p)};
    if (s.e.kind == EKind::Split)
        return {random_unit(smp, s.p), random_unit(smp, s.p)};
    for (;;) {
        long a = smp.uniform(-4, 4);
        long b = smp.uniform(-4, 4);
        long pl = static_cast<long>(s.p);
        if (a % pl == 0 && b % pl == 0) continue;
        std::vector<Rational> lam{Rational(a), Rational(b)};
        Rational nrm = e_norm(s, lam);
        if (nrm != 0 && val_p(nrm, s.p) == PadicVal::of(0)) return lam;
    }
}

bool contains(const std::vector<int>& I, int i) {
    return std::find(I.begin(), I.end(), i) != I.end();
}

// V_j coordinates with the e_i (i in I) components forced to zero
std::vector<Rational> vj_coords_off_eI(Sampler& smp, const QSpace& S, int j,
                                       const std::vector<int>& I) {
    std::vector<Rational> x = random_vj_coords(smp, S, j, -2, 2);
    for (int i : I) {
        int pos = S.e_pos(i);
        if (pos >= j && pos <= S.dim - 1 - j) x[pos] = 0;
    }
    return x;
}

} // namespace

CliffordElement random_unit_pair(Sampler& smp, const Algebra& alg) {
    auto pick = [&]() -> CliffordElement {
        for (int tries = 0; tries < 500; ++tries) {
            std::vector<Rational> c(alg.dim());
            for (int i = 0; i < alg.dim(); ++i) c[i] = Rational(smp.uniform(-2, 2));
            CliffordElement v = alg.vector_elem(c);
            Rational qv = alg.scalar_part(alg.mul(v, v));
            if (qv != 0 && val_p(qv, alg.p()) == PadicVal::of(0)) return v;
        }
        throw std::logic_error("random_unit_pair: no unit-norm vector found");
    };
    return alg.mul(pick(), pick());
}

CliffordElement random_k_word(Sampler& smp, const Algebra& alg, int len) {
    const QSpace& s = alg.space();
    CliffordElement g = alg.one();
    for (int w = 0; w < len; ++w) {
        int kind = static_cast<int>(smp.uniform(0, 6));
        CliffordElement f = alg.one();
        switch (kind) {
        case 0:
            f = s.n >= 1 ? elt_m(alg, static_cast<int>(smp.uniform(1, s.n)),
                                 random_unit(smp, s.p))
                         : elt_z(alg, random_unit(smp, s.p));
            break;
        case 1:
            f = s.n >= 1 ? elt_m_star(alg, static_cast<int>(smp.uniform(1, s.n)),
                                      random_unit(smp, s.p))
                         : elt_z(alg, random_unit(smp, s.p));
            break;
        case 2:
            f = elt_zE(alg, random_zE_units(smp, s));
            break;
        case 3:
            if (s.n >= 1) {
                int j = static_cast<int>(smp.uniform(1, s.n));
                f = elt_n(alg, j, random_vj_coords(smp, s, j, -2, 2));
            }
            break;
        case 4:
            if (s.n >= 1) {
                int j = static_cast<int>(smp.uniform(1, s.n));
                f = elt_n_opp(alg, j, random_vj_coords(smp, s, j, -2, 2));
            }
            break;
        case 5:
            if (s.n >= 2) {
                int i = static_cast<int>(smp.uniform(1, s.n));
                int j = i;
                while (j == i) j = static_cast<int>(smp.uniform(1, s.n));
                f = elt_levi_unip(alg, i, j, random_small_int(smp, -2, 2));
            }
            break;
        default:
            f = random_unit_pair(smp, alg);
            break;
        }
        g = alg.mul(g, f);
    }
    return g;
}

CliffordElement random_k_word_scaled(Sampler& smp, const Algebra& alg, int len, long v) {
    return clif_scale(q_pow(alg.p(), v), random_k_word(smp, alg, len));
}

CliffordElement random_gspin_word(Sampler& smp, const Algebra& alg, int len, long vlo,
                                  long vhi) {
    const QSpace& s = alg.space();
    CliffordElement g = random_k_word(smp, alg, len);
    if (s.n >= 1 && smp.coin()) {
        int i = static_cast<int>(smp.uniform(1, s.n));
        g = alg.mul(g, elt_m(alg, i, random_with_val(smp, s.p, smp.uniform(0, 2))));
    }
    return clif_scale(q_pow(s.p, smp.uniform(vlo, vhi)), g);
}

CliffordElement random_gspin_v1(Sampler& smp, const Algebra& alg, int len, long vlo,
                                long vhi) {
    const QSpace& s = alg.space();
    if (s.n < 1) throw std::invalid_argument("random_gspin_v1: the space needs n >= 1");
    QSpace s1 = perp_space(s, 1);
    Algebra a1(s1);
    CliffordElement y1 = random_gspin_word(smp, a1, len, vlo, vhi);
    return embed_elem(a1, y1, alg, perp_posmap(s, 1));
}

LatticeVector random_primitive_T(Sampler& smp, const QSpace& S) {
    if (S.dim < 3)
        throw std::invalid_argument("random_primitive_T: the space has no V_1 block");
    for (int tries = 0; tries < 500; ++tries) {
        std::vector<Rational> c(S.dim, Rational(0));
        for (int pos = 1; pos + 1 < S.dim; ++pos) c[pos] = Rational(smp.uniform(-3, 3));
        LatticeVector T = lattice_vector(S, c);
        for (int pos = 1; pos + 1 < S.dim; ++pos) {
            std::vector<Rational> b(S.dim, Rational(0));
            b[pos] = 1;
            Rational pr = bilinear(S, T, lattice_vector(S, b));
            if (pr != 0 && val_p(pr, S.p) == PadicVal::of(0)) return T;
        }
    }
    throw std::logic_error("random_primitive_T: sampling failed");
}

Blade u_plus_mask(const QSpace& S, const std::vector<int>& I) {
    Blade m = 0;
    for (int i : I) m |= Blade(1) << S.e_pos(i);
    return m;
}

Blade u_minus_mask(const QSpace& S, const std::vector<int>& I) {
    Blade m = 0;
    for (int i : I) m |= Blade(1) << S.f_pos(i);
    return m;
}

CliffordElement random_pu_word(Sampler& smp, const Algebra& alg,
                               const std::vector<int>& I, int len) {
    const QSpace& s = alg.space();
    if (I.empty()) throw std::invalid_argument("random_pu_word: I must be nonempty");
    std::vector<int> comp;
    for (int i = 1; i <= s.n; ++i)
        if (!contains(I, i)) comp.push_back(i);

    CliffordElement g = alg.one();
    for (int w = 0; w < len; ++w) {
        int kind = static_cast<int>(smp.uniform(0, 5));
        CliffordElement f = alg.one();
        switch (kind) {
        case 0:
            f = elt_m(alg, static_cast<int>(smp.uniform(1, s.n)), random_unit(smp, s.p));
            break;
        case 1:
            f = elt_m_star(alg, static_cast<int>(smp.uniform(1, s.n)),
                           random_unit(smp, s.p));
            break;
        case 2:
            f = elt_zE(alg, random_zE_units(smp, s));
            break;
        case 3: {
            int j = I[smp.uniform(0, static_cast<long>(I.size()) - 1)];
            f = elt_n(alg, j, random_vj_coords(smp, s, j, -2, 2));
            break;
        }
        case 4:
            if (!comp.empty()) {
                int j = comp[smp.uniform(0, static_cast<long>(comp.size()) - 1)];
                std::vector<Rational> x = vj_coords_off_eI(smp, s, j, I);
                f = smp.coin() ? elt_n(alg, j, x) : elt_n_opp(alg, j, x);
            }
            break;
        default:
            if (s.n >= 2) {
                // 1 + c f_j e_i keeps U stable unless i is in I and j is not
                for (int tries = 0; tries < 50; ++tries) {
                    int i = static_cast<int>(smp.uniform(1, s.n));
                    int j = static_cast<int>(smp.uniform(1, s.n));
                    if (i == j || (contains(I, i) && !contains(I, j))) continue;
                    f = elt_levi_unip(alg, i, j, random_small_int(smp, -2, 2));
                    break;
                }
            }
            break;
        }
        g = alg.mul(g, f);
    }
    return g;
}

CliffordElement random_nu_word(Sampler& smp, const Algebra& alg,
                               const std::vector<int>& I, int len) {
    const QSpace& s = alg.space();
    if (I.empty()) throw std::invalid_argument("random_nu_word: I must be nonempty");
    std::vector<int> comp;
    for (int i = 1; i <= s.n; ++i)
        if (!contains(I, i)) comp.push_back(i);

    CliffordElement g = alg.one();
    for (int w = 0; w < len; ++w) {
        CliffordElement f = alg.one();
        if (!comp.empty() && smp.coin()) {
            int i = comp[smp.uniform(0, static_cast<long>(comp.size()) - 1)];
            int j = I[smp.uniform(0, static_cast<long>(I.size()) - 1)];
            f = elt_levi_unip(alg, i, j, random_small_int(smp, -2, 2));
        } else {
            int j = I[smp.uniform(0, static_cast<long>(I.size()) - 1)];
            f = elt_n(alg, j, vj_coords_off_eI(smp, s, j, I));
        }
        g = alg.mul(g, f);
    }
    return g;
}

} // namespace gspingj
