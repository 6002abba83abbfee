#include "gspingj/spinor.hpp"

#include <bit>
#include <stdexcept>

namespace gspingj {

static Rational pair_w(const Matrix& gram, const std::vector<Rational>& v,
                       const std::vector<Rational>& w) {
    Rational acc = 0;
    size_t d = gram.size();
    for (size_t i = 0; i < d; ++i) {
        if (v[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) acc += v[i] * gram[i][j] * w[j];
    }
    return acc;
}

static std::vector<Rational> reduce_blade(const SpinorModule& S, Blade b);

// state * generator g, in y-word coordinates: the Y-component of g appends
// (with anticommutation signs), the X-component contracts against matching
// y factors; a leading x_i dies in the quotient.
static std::vector<Rational> rmul_gen(const SpinorModule& S,
                                      const std::vector<Rational>& coords, int g) {
    size_t nsub = coords.size();
    std::vector<Rational> r(nsub, Rational(0));
    for (size_t s = 0; s < nsub; ++s) {
        if (coords[s] == 0) continue;
        for (int j = 0; j < S.m; ++j) {
            const Rational& bj = S.gen_y[g][j];
            if (bj == 0 || (s & (size_t(1) << j))) continue;
            int flips = std::popcount(static_cast<unsigned long long>(s >> (j + 1)));
            Rational contrib = coords[s] * bj;
            r[s | (size_t(1) << j)] += (flips % 2) ? -contrib : contrib;
        }
        for (int i = 0; i < S.m; ++i) {
            const Rational& ai = S.gen_x[g][i];
            if (ai == 0 || !(s & (size_t(1) << i))) continue;
            int flips = std::popcount(static_cast<unsigned long long>(s >> (i + 1)));
            Rational contrib = coords[s] * ai;
            r[s ^ (size_t(1) << i)] += (flips % 2) ? -contrib : contrib;
        }
    }
    return r;
}

static std::vector<Rational> reduce_blade(const SpinorModule& S, Blade b) {
    auto it = S.memo.find(b);
    if (it != S.memo.end()) return it->second;
    std::vector<Rational> res;
    if (b == 0) {
        res.assign(size_t(1) << S.m, Rational(0));
        res[0] = 1;
    } else {
        int g = std::bit_width(b) - 1;
        res = rmul_gen(S, reduce_blade(S, b ^ (Blade(1) << g)), g);
    }
    S.memo.emplace(b, res);
    return res;
}

SpinorModule build_spinor(const Algebra& alg,
                          const std::vector<std::vector<Rational>>& xbasis) {
    SpinorModule S;
    S.alg = &alg;
    S.m = static_cast<int>(xbasis.size());
    S.xbasis = xbasis;
    int d = alg.dim();
    if (d != 2 * S.m)
        throw std::invalid_argument("X must have half the dimension of W");
    const Matrix& G = alg.gram();
    for (int i = 0; i < S.m; ++i) {
        if (static_cast<int>(xbasis[i].size()) != d)
            throw std::invalid_argument("X basis vector has wrong length");
        for (int j = 0; j <= i; ++j)
            if (pair_w(G, xbasis[i], xbasis[j]) != 0)
                throw std::invalid_argument("X is not totally isotropic");
    }

    // dual family: first (x_i, w_j) = delta_ij, then isotropic correction
    Matrix P(S.m, std::vector<Rational>(d, Rational(0)));
    for (int i = 0; i < S.m; ++i)
        P[i] = mat_apply(G, xbasis[i]);
    std::vector<std::vector<Rational>> w(S.m);
    for (int j = 0; j < S.m; ++j) {
        std::vector<Rational> rhs(S.m, Rational(0));
        rhs[j] = 1;
        auto sol = mat_solve(P, rhs);
        if (!sol) throw std::runtime_error("X basis is degenerate");
        w[j] = *sol;
    }
    S.ybasis.assign(S.m, std::vector<Rational>(d, Rational(0)));
    for (int j = 0; j < S.m; ++j) {
        S.ybasis[j] = w[j];
        for (int i = 0; i < S.m; ++i) {
            Rational c = pair_w(G, w[j], w[i]) / 2;
            for (int k = 0; k < d; ++k) S.ybasis[j][k] -= c * xbasis[i][k];
        }
    }
    for (int i = 0; i < S.m; ++i)
        for (int j = 0; j < S.m; ++j) {
            if (pair_w(G, S.ybasis[i], S.ybasis[j]) != 0)
                throw std::runtime_error("dual family is not isotropic");
            Rational pr = pair_w(G, xbasis[i], S.ybasis[j]);
            if (pr != Rational(i == j ? 1 : 0))
                throw std::runtime_error("dual family pairing is off");
        }

    S.gen_x.assign(d, std::vector<Rational>(S.m, Rational(0)));
    S.gen_y.assign(d, std::vector<Rational>(S.m, Rational(0)));
    for (int g = 0; g < d; ++g) {
        std::vector<Rational> ug(d, Rational(0));
        ug[g] = 1;
        std::vector<Rational> recon(d, Rational(0));
        for (int i = 0; i < S.m; ++i) {
            S.gen_x[g][i] = pair_w(G, S.ybasis[i], ug);
            S.gen_y[g][i] = pair_w(G, xbasis[i], ug);
            for (int k = 0; k < d; ++k) {
                recon[k] += S.gen_x[g][i] * xbasis[i][k];
                recon[k] += S.gen_y[g][i] * S.ybasis[i][k];
            }
        }
        if (recon != ug) throw std::runtime_error("hyperbolic decomposition failed");
    }

    // image of the integral Clifford algebra: span of the reductions of all
    // integral blades
    size_t nsub = size_t(1) << S.m;
    size_t nblades = size_t(1) << d;
    Matrix cols(nsub, std::vector<Rational>(nblades, Rational(0)));
    for (size_t b = 0; b < nblades; ++b) {
        auto red = reduce_blade(S, static_cast<Blade>(b));
        for (size_t r = 0; r < nsub; ++r) cols[r][b] = red[r];
    }
    S.image_lattice = lattice_span_basis(cols, alg.p());
    if (S.image_lattice.size() != nsub || S.image_lattice[0].size() != nsub)
        throw std::runtime_error("image lattice does not have full rank");
    return S;
}

std::vector<Rational> spinor_reduce(const SpinorModule& S, const CliffordElement& a) {
    std::vector<Rational> r(size_t(1) << S.m, Rational(0));
    for (const auto& [bl, c] : a.terms) {
        auto red = reduce_blade(S, bl);
        for (size_t i = 0; i < r.size(); ++i) r[i] += c * red[i];
    }
    return r;
}

std::vector<Rational> spinor_one(const SpinorModule& S) {
    return reduce_blade(S, 0);
}

bool spinor_in_image_lattice(const SpinorModule& S, const std::vector<Rational>& coords) {
    return lattice_contains(S.image_lattice, coords, S.alg->p());
}

bool spinor_is_zero(const std::vector<Rational>& coords) {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

} // namespace gspingj
