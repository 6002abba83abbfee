#include "gspingj/clifford.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace gspingj {

Rational CliffordElement::coeff(Blade b) const {
    auto it = terms.find(b);
    return it == terms.end() ? Rational(0) : it->second;
}

CliffordElement clif_zero() { return {}; }

static void add_term(CliffordElement& a, Blade b, const Rational& c) {
    if (c == 0) return;
    auto it = a.terms.find(b);
    if (it == a.terms.end()) {
        a.terms.emplace(b, c);
    } else {
        it->second += c;
        if (it->second == 0) a.terms.erase(it);
    }
}

CliffordElement clif_add(const CliffordElement& a, const CliffordElement& b) {
    CliffordElement r = a;
    for (const auto& [bl, c] : b.terms) add_term(r, bl, c);
    return r;
}

CliffordElement clif_sub(const CliffordElement& a, const CliffordElement& b) {
    CliffordElement r = a;
    for (const auto& [bl, c] : b.terms) add_term(r, bl, -c);
    return r;
}

CliffordElement clif_scale(const Rational& c, const CliffordElement& a) {
    CliffordElement r;
    if (c == 0) return r;
    for (const auto& [bl, v] : a.terms) r.terms.emplace(bl, c * v);
    return r;
}

bool clif_eq(const CliffordElement& a, const CliffordElement& b) {
    return a.terms == b.terms;
}

Algebra::Algebra(Matrix gram, unsigned long p) : gram_(std::move(gram)), p_(p) {
    dim_ = static_cast<int>(gram_.size());
    if (dim_ > 30) throw std::invalid_argument("algebra dimension too large for blade masks");
    for (int i = 0; i < dim_; ++i) {
        if (static_cast<int>(gram_[i].size()) != dim_)
            throw std::invalid_argument("gram matrix must be square");
        for (int j = 0; j < i; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw std::invalid_argument("gram matrix must be symmetric");
    }
}

Algebra::Algebra(const QSpace& s) : Algebra(s.gram, s.p) { space_ = s; }

const QSpace& Algebra::space() const {
    if (!space_) throw std::runtime_error("algebra has no attached quadratic space");
    return *space_;
}

CliffordElement Algebra::one() const { return scalar(1); }

CliffordElement Algebra::scalar(const Rational& c) const {
    CliffordElement r;
    if (c != 0) r.terms.emplace(0, c);
    return r;
}

CliffordElement Algebra::gen(int pos) const {
    if (pos < 0 || pos >= dim_) throw std::invalid_argument("generator out of range");
    CliffordElement r;
    r.terms.emplace(Blade(1) << pos, Rational(1));
    return r;
}

CliffordElement Algebra::blade_elem(Blade b) const {
    if (b >> dim_) throw std::invalid_argument("blade out of range");
    CliffordElement r;
    r.terms.emplace(b, Rational(1));
    return r;
}

CliffordElement Algebra::vector_elem(const std::vector<Rational>& coords) const {
    if (static_cast<int>(coords.size()) != dim_)
        throw std::invalid_argument("coordinate count does not match algebra dim");
    CliffordElement r;
    for (int i = 0; i < dim_; ++i) add_term(r, Blade(1) << i, coords[i]);
    return r;
}

// blade * single generator, by the rewriting
//   b_k b_g = -b_g b_k + (b_k, b_g)   for k > g,   b_g b_g = q(b_g).
const CliffordElement& Algebra::blade_times_gen(Blade a, int g) const {
    std::uint64_t key = (std::uint64_t(a) << 5) | std::uint64_t(g);
    auto it = mul_memo_.find(key);
    if (it != mul_memo_.end()) return it->second;

    CliffordElement res;
    if (a == 0) {
        res.terms.emplace(Blade(1) << g, Rational(1));
    } else {
        int ik = std::bit_width(a) - 1; // top occupied position
        Blade rest = a ^ (Blade(1) << ik);
        if (ik < g) {
            res.terms.emplace(a | (Blade(1) << g), Rational(1));
        } else if (ik == g) {
            add_term(res, rest, gram_[g][g] / 2);
        } else {
            const CliffordElement& rec = blade_times_gen(rest, g);
            for (const auto& [bl, c] : rec.terms)
                add_term(res, bl | (Blade(1) << ik), -c);
            add_term(res, rest, gram_[ik][g]);
        }
    }
    return mul_memo_.emplace(key, std::move(res)).first->second;
}

CliffordElement Algebra::elem_times_gen(const CliffordElement& a, int g) const {
    CliffordElement r;
    for (const auto& [bl, c] : a.terms) {
        const CliffordElement& part = blade_times_gen(bl, g);
        for (const auto& [bl2, c2] : part.terms) add_term(r, bl2, c * c2);
    }
    return r;
}

CliffordElement Algebra::mul(const CliffordElement& a, const CliffordElement& b) const {
    CliffordElement r;
    for (const auto& [bl, c] : b.terms) {
        CliffordElement cur = a;
        for (int g = 0; g < dim_; ++g)
            if (bl & (Blade(1) << g)) cur = elem_times_gen(cur, g);
        for (const auto& [bl2, c2] : cur.terms) add_term(r, bl2, c * c2);
    }
    return r;
}

CliffordElement Algebra::star(const CliffordElement& a) const {
    CliffordElement r;
    for (const auto& [bl, c] : a.terms) {
        CliffordElement cur = one();
        for (int g = dim_ - 1; g >= 0; --g)
            if (bl & (Blade(1) << g)) cur = elem_times_gen(cur, g);
        for (const auto& [bl2, c2] : cur.terms) add_term(r, bl2, c * c2);
    }
    return r;
}

Rational Algebra::scalar_part(const CliffordElement& a) const { return a.coeff(0); }

std::vector<Rational> Algebra::vector_part(const CliffordElement& a) const {
    std::vector<Rational> v(dim_, Rational(0));
    for (int i = 0; i < dim_; ++i) v[i] = a.coeff(Blade(1) << i);
    return v;
}

bool Algebra::is_vector(const CliffordElement& a) const {
    for (const auto& [bl, c] : a.terms)
        if (std::popcount(bl) != 1) return false;
    return true;
}

bool Algebra::is_even(const CliffordElement& a) const {
    for (const auto& [bl, c] : a.terms)
        if (std::popcount(bl) % 2 != 0) return false;
    return true;
}

PadicVal Algebra::val_clif(const CliffordElement& a) const {
    PadicVal v = PadicVal::infinity();
    for (const auto& [bl, c] : a.terms) v = min(v, val_p(c, p_));
    return v;
}

bool Algebra::is_integral(const CliffordElement& a) const {
    return val_clif(a).at_least(0);
}

std::string Algebra::to_string(const CliffordElement& a) const {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [bl, c] : a.terms) {
        if (!first) os << " + ";
        first = false;
        os << rational_to_string(c);
        for (int i = 0; i < dim_; ++i)
            if (bl & (Blade(1) << i)) {
                os << "*";
                if (space_) os << space_->label(i);
                else os << "b" << i;
            }
    }
    return os.str();
}

CliffordElement iota0(const Algebra& alg, const std::vector<Rational>& lam) {
    const QSpace& s = alg.space();
    if (static_cast<int>(lam.size()) != s.dimE())
        throw std::invalid_argument("iota0 argument size does not match dim E");
    if (s.dimE() == 1) return alg.scalar(lam[0]);
    CliffordElement w1w2 = alg.mul(alg.gen(s.vE_pos(0)), alg.gen(s.vE_pos(1)));
    if (s.e.kind == EKind::Split)
        return clif_add(alg.scalar(lam[0]), clif_scale(lam[1] - lam[0], w1w2));
    return clif_add(alg.scalar(lam[0]), clif_scale(lam[1], w1w2));
}

Rational e_norm(const QSpace& s, const std::vector<Rational>& lam) {
    if (static_cast<int>(lam.size()) != s.dimE())
        throw std::invalid_argument("norm argument size does not match dim E");
    switch (s.e.kind) {
        case EKind::Field: return lam[0] * lam[0];
        case EKind::Split: return lam[0] * lam[1];
        case EKind::UnramifiedField: return lam[0] * lam[0] - s.e.u * lam[1] * lam[1];
    }
    throw std::logic_error("unreachable");
}

long blade_weight(Blade b, Blade plus_mask, Blade minus_mask) {
    return std::popcount(b & plus_mask) - std::popcount(b & minus_mask);
}

std::optional<long> filtration_degree(const CliffordElement& a, Blade plus_mask,
                                      Blade minus_mask) {
    std::optional<long> deg;
    for (const auto& [bl, c] : a.terms) {
        long w = blade_weight(bl, plus_mask, minus_mask);
        if (!deg || w > *deg) deg = w;
    }
    return deg;
}

CliffordElement embed_elem(const Algebra& src, const CliffordElement& a,
                           const Algebra& dst, const std::vector<int>& posmap) {
    if (static_cast<int>(posmap.size()) != src.dim())
        throw std::invalid_argument("posmap size does not match source dim");
    for (int i = 0; i < src.dim(); ++i) {
        if (posmap[i] < 0 || posmap[i] >= dst.dim())
            throw std::invalid_argument("posmap target out of range");
        if (i > 0 && posmap[i] <= posmap[i - 1])
            throw std::invalid_argument("posmap must be strictly increasing");
        for (int j = 0; j <= i; ++j)
            if (src.gram()[i][j] != dst.gram()[posmap[i]][posmap[j]])
                throw std::invalid_argument("posmap does not preserve the gram matrix");
    }
    CliffordElement r;
    for (const auto& [bl, c] : a.terms) {
        Blade img = 0;
        for (int i = 0; i < src.dim(); ++i)
            if (bl & (Blade(1) << i)) img |= Blade(1) << posmap[i];
        r.terms.emplace(img, c);
    }
    return r;
}

} // namespace gspingj
