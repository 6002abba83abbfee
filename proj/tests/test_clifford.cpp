#include "doctest.h"

#include "gspingj/clifford.hpp"
#include "gspingj/sampling.hpp"

#include <map>
#include <vector>

using namespace gspingj;

namespace {

// Independent multiplication oracle: elements as linear combinations of words
// of generator positions, multiplied by concatenation and reduced to sorted
// blades with the rewriting v_a v_b = (v_a, v_b) - v_b v_a (a > b) and
// v_a v_a = q(v_a). Shares no code with the blade kernel.
using Word = std::vector<int>;
using WordElem = std::map<Word, Rational>;

void word_add(WordElem& acc, const Word& w, const Rational& c) {
    if (c == 0) return;
    auto it = acc.find(w);
    if (it == acc.end())
        acc.emplace(w, c);
    else {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

WordElem reduce_words(const Matrix& gram, const WordElem& in) {
    WordElem pending = in, done;
    while (!pending.empty()) {
        auto it = pending.begin();
        Word w = it->first;
        Rational c = it->second;
        pending.erase(it);
        bool rewritten = false;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            int a = w[i], b = w[i + 1];
            if (a == b) {
                Word rest(w.begin(), w.begin() + i);
                rest.insert(rest.end(), w.begin() + i + 2, w.end());
                word_add(pending, rest, c * gram[a][a] / 2);
                rewritten = true;
                break;
            }
            if (a > b) {
                Word swapped = w;
                std::swap(swapped[i], swapped[i + 1]);
                Word rest(w.begin(), w.begin() + i);
                rest.insert(rest.end(), w.begin() + i + 2, w.end());
                word_add(pending, rest, c * gram[a][b]);
                word_add(pending, swapped, -c);
                rewritten = true;
                break;
            }
        }
        if (!rewritten) word_add(done, w, c);
    }
    return done;
}

WordElem to_words(const CliffordElement& a) {
    WordElem out;
    for (const auto& [bl, c] : a.terms) {
        Word w;
        for (int i = 0; i < 32; ++i)
            if (bl & (Blade(1) << i)) w.push_back(i);
        out.emplace(w, c);
    }
    return out;
}

WordElem word_mul(const Matrix& gram, const WordElem& a, const WordElem& b) {
    WordElem prod;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            word_add(prod, w, ca * cb);
        }
    return reduce_words(gram, prod);
}

CliffordElement random_elem(Sampler& smp, const Algebra& alg, int nterms) {
    CliffordElement a;
    for (int t = 0; t < nterms; ++t) {
        Blade b = 0;
        for (int i = 0; i < alg.dim(); ++i)
            if (smp.coin()) b |= Blade(1) << i;
        a = clif_add(a, clif_scale(random_small_int(smp, -3, 3), alg.blade_elem(b)));
    }
    return a;
}

std::vector<QSpace> sample_spaces() {
    return {build_space(1, EInfo{EKind::Field, 0}, 3),
            build_space(1, EInfo{EKind::Split, 0}, 3),
            build_space(1, EInfo{EKind::UnramifiedField, Rational(2)}, 5),
            build_space(2, EInfo{EKind::Field, 0}, 3)};
}

} // namespace

TEST_CASE("element helpers") {
    QSpace s = build_space(1, EInfo{EKind::Field, 0}, 3);
    Algebra alg(s);
    CHECK(alg.one().coeff(0) == Rational(1));
    CHECK(alg.scalar(Rational(5)).coeff(0) == Rational(5));
    CHECK(clif_eq(clif_sub(alg.one(), alg.one()), clif_zero()));
    CliffordElement v = alg.vector_elem({Rational(1), Rational(2), Rational(-1)});
    CHECK(alg.is_vector(v));
    CHECK(alg.vector_part(v)[1] == Rational(2));
    CHECK_FALSE(alg.is_even(v));
    CHECK(alg.is_even(alg.mul(v, v)));
    CHECK(alg.scalar_part(alg.one()) == Rational(1));
}

TEST_CASE("generator relations v*w + w*v = (v,w)") {
    for (const QSpace& s : sample_spaces()) {
        Algebra alg(s);
        for (int a = 0; a < s.dim; ++a)
            for (int b = 0; b < s.dim; ++b) {
                CliffordElement lhs = clif_add(alg.mul(alg.gen(a), alg.gen(b)),
                                               alg.mul(alg.gen(b), alg.gen(a)));
                CHECK(clif_eq(lhs, alg.scalar(s.gram[a][b])));
            }
    }
}

TEST_CASE("v^2 = q(v) on random vectors") {
    Sampler smp(101);
    for (const QSpace& s : sample_spaces()) {
        Algebra alg(s);
        for (int t = 0; t < 40; ++t) {
            std::vector<Rational> c(s.dim);
            for (auto& x : c) x = random_small_int(smp, -4, 4);
            CliffordElement v = alg.vector_elem(c);
            Rational qv = quad_form(s, lattice_vector(s, c));
            CHECK(clif_eq(alg.mul(v, v), alg.scalar(qv)));
        }
    }
}

TEST_CASE("blade kernel agrees with the word-rewriting oracle") {
    Sampler smp(202);
    for (const QSpace& s : sample_spaces()) {
        Algebra alg(s);
        for (int t = 0; t < 25; ++t) {
            CliffordElement a = random_elem(smp, alg, 3);
            CliffordElement b = random_elem(smp, alg, 3);
            CliffordElement kernel = alg.mul(a, b);
            WordElem oracle = word_mul(s.gram, to_words(a), to_words(b));
            CHECK(to_words(kernel) == oracle);
        }
    }
}

TEST_CASE("associativity") {
    Sampler smp(303);
    for (const QSpace& s : sample_spaces()) {
        Algebra alg(s);
        for (int t = 0; t < 15; ++t) {
            CliffordElement a = random_elem(smp, alg, 2);
            CliffordElement b = random_elem(smp, alg, 2);
            CliffordElement c = random_elem(smp, alg, 2);
            CHECK(clif_eq(alg.mul(alg.mul(a, b), c), alg.mul(a, alg.mul(b, c))));
        }
    }
}

TEST_CASE("star is an anti-involution fixing vectors") {
    Sampler smp(404);
    for (const QSpace& s : sample_spaces()) {
        Algebra alg(s);
        std::vector<Rational> c(s.dim);
        for (auto& x : c) x = random_small_int(smp, -4, 4);
        CliffordElement v = alg.vector_elem(c);
        CHECK(clif_eq(alg.star(v), v));
        for (int t = 0; t < 15; ++t) {
            CliffordElement a = random_elem(smp, alg, 3);
            CliffordElement b = random_elem(smp, alg, 3);
            CHECK(clif_eq(alg.star(alg.mul(a, b)), alg.mul(alg.star(b), alg.star(a))));
            CHECK(clif_eq(alg.star(alg.star(a)), a));
        }
    }
}

TEST_CASE("iota0 norms and structure") {
    QSpace sF = build_space(1, EInfo{EKind::Field, 0}, 3);
    Algebra aF(sF);
    CliffordElement zF = iota0(aF, {Rational(7)});
    CHECK(clif_eq(zF, aF.scalar(Rational(7))));
    CHECK(clif_eq(aF.mul(zF, aF.star(zF)), aF.scalar(e_norm(sF, {Rational(7)}))));
    CHECK(e_norm(sF, {Rational(7)}) == Rational(49));

    QSpace sS = build_space(0, EInfo{EKind::Split, 0}, 3);
    Algebra aS(sS);
    std::vector<Rational> lamS{Rational(2), Rational(-5)};
    CliffordElement zS = iota0(aS, lamS);
    CHECK(clif_eq(aS.mul(zS, aS.star(zS)), aS.scalar(Rational(-10))));
    // w1w2 is idempotent in the split case
    CliffordElement w12 = aS.mul(aS.gen(0), aS.gen(1));
    CHECK(clif_eq(aS.mul(w12, w12), w12));
    // iota0 is multiplicative: iota0(lam * mu) componentwise
    std::vector<Rational> muS{Rational(3), Rational(4)};
    CHECK(clif_eq(aS.mul(zS, iota0(aS, muS)), iota0(aS, {Rational(6), Rational(-20)})));

    QSpace sU = build_space(0, EInfo{EKind::UnramifiedField, Rational(2)}, 5);
    Algebra aU(sU);
    std::vector<Rational> lamU{Rational(3), Rational(1)};
    CliffordElement zU = iota0(aU, lamU);
    CHECK(clif_eq(aU.mul(zU, aU.star(zU)), aU.scalar(Rational(7)))); // 9 - 2*1
    CHECK(e_norm(sU, lamU) == Rational(7));
    CliffordElement wu = aU.mul(aU.gen(0), aU.gen(1));
    CHECK(clif_eq(aU.mul(wu, wu), aU.scalar(Rational(2))));
}

TEST_CASE("valuation and integrality") {
    QSpace s = build_space(1, EInfo{EKind::Field, 0}, 3);
    Algebra alg(s);
    CliffordElement a = clif_add(alg.scalar(make_rational(1, 3)),
                                 clif_scale(Rational(9), alg.gen(0)));
    CHECK(alg.val_clif(a) == PadicVal::of(-1));
    CHECK_FALSE(alg.is_integral(a));
    CHECK(alg.is_integral(alg.one()));
    CHECK(alg.val_clif(clif_zero()).infinite);
}

TEST_CASE("filtration degree") {
    QSpace s = build_space(2, EInfo{EKind::Field, 0}, 3);
    Algebra alg(s);
    Blade plus = (Blade(1) << s.e_pos(1)) | (Blade(1) << s.e_pos(2));
    Blade minus = (Blade(1) << s.f_pos(1)) | (Blade(1) << s.f_pos(2));

    CHECK(filtration_degree(alg.gen(s.f_pos(1)), plus, minus) == -1);
    CHECK(filtration_degree(alg.gen(s.e_pos(1)), plus, minus) == 1);
    CHECK(filtration_degree(alg.one(), plus, minus) == 0);
    CHECK_FALSE(filtration_degree(clif_zero(), plus, minus).has_value());

    CliffordElement mixed = clif_add(alg.gen(s.f_pos(1)), alg.gen(s.e_pos(2)));
    CHECK(filtration_degree(mixed, plus, minus) == 1);

    // weights multiply along products
    CliffordElement fe = alg.mul(alg.gen(s.f_pos(1)), alg.gen(s.f_pos(2)));
    CHECK(filtration_degree(fe, plus, minus) == -2);

    // with U = span(f_1) only, f_2 and e_2 have weight 0
    Blade plus1 = Blade(1) << s.e_pos(1);
    Blade minus1 = Blade(1) << s.f_pos(1);
    CHECK(filtration_degree(alg.gen(s.f_pos(2)), plus1, minus1) == 0);
    CHECK(blade_weight(Blade(1) << s.f_pos(1), plus1, minus1) == -1);
}

TEST_CASE("filtration is submultiplicative on random pairs") {
    Sampler smp(505);
    QSpace s = build_space(2, EInfo{EKind::Split, 0}, 3);
    Algebra alg(s);
    Blade plus = (Blade(1) << s.e_pos(1)) | (Blade(1) << s.e_pos(2));
    Blade minus = (Blade(1) << s.f_pos(1)) | (Blade(1) << s.f_pos(2));
    for (int t = 0; t < 30; ++t) {
        CliffordElement a = random_elem(smp, alg, 2);
        CliffordElement b = random_elem(smp, alg, 2);
        CliffordElement ab = alg.mul(a, b);
        auto da = filtration_degree(a, plus, minus);
        auto db = filtration_degree(b, plus, minus);
        auto dab = filtration_degree(ab, plus, minus);
        if (da && db && dab) CHECK(*dab <= *da + *db);
    }
}

TEST_CASE("embed_elem transports products") {
    QSpace big = build_space(2, EInfo{EKind::Field, 0}, 3);
    QSpace small = build_space(1, EInfo{EKind::Field, 0}, 3);
    Algebra ab(big), as(small);
    // V_1 of the big space matches the small space: positions 1,2,3
    std::vector<int> posmap{1, 2, 3};
    Sampler smp(606);
    for (int t = 0; t < 10; ++t) {
        CliffordElement a = random_elem(smp, as, 2);
        CliffordElement b = random_elem(smp, as, 2);
        CHECK(clif_eq(embed_elem(as, as.mul(a, b), ab, posmap),
                      ab.mul(embed_elem(as, a, ab, posmap), embed_elem(as, b, ab, posmap))));
    }
    // gram mismatch is rejected
    CHECK_THROWS_AS(embed_elem(as, as.one(), ab, std::vector<int>{0, 1, 2}),
                    std::invalid_argument);
}
