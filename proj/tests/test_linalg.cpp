#include "doctest.h"

#include "gspingj/linalg.hpp"

#include <random>

using namespace gspingj;

namespace {

// Brute-force Haar measure of {x : Mx integral} by counting digit
// representatives of p^{-a}O^k modulo p^a O^k. Valid when p^a M is integral
// and every elementary divisor valuation is at most a; the caller guarantees
// that by construction.
Rational brute_preimage_measure(const Matrix& m, unsigned long p, long a) {
    size_t k = m[0].size();
    long box = 1;
    for (long i = 0; i < 2 * a; ++i) box *= static_cast<long>(p);
    std::vector<long> digit(k, 0);
    long count = 0;
    for (;;) {
        std::vector<Rational> x(k);
        for (size_t i = 0; i < k; ++i) x[i] = Rational(digit[i]) * q_pow(p, -a);
        std::vector<Rational> y = mat_apply(m, x);
        bool ok = true;
        for (const Rational& c : y)
            if (!val_p(c, p).at_least(0)) {
                ok = false;
                break;
            }
        if (ok) ++count;
        size_t j = 0;
        while (j < k) {
            if (++digit[j] < box) break;
            digit[j] = 0;
            ++j;
        }
        if (j == k) break;
    }
    return Rational(count) * q_pow(p, -a * static_cast<long>(k));
}

long sum_divisors(const LocalSnf& s) {
    long t = 0;
    for (long d : s.divisor_vals) t += d;
    return t;
}

} // namespace

TEST_CASE("matrix basics") {
    Matrix a{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
    Matrix b{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    Matrix ab = mat_mul(a, b);
    CHECK(ab[0][0] == Rational(2));
    CHECK(ab[0][1] == Rational(1));
    CHECK(ab[1][0] == Rational(4));
    CHECK(ab[1][1] == Rational(3));
    CHECK(mat_mul(a, mat_identity(2)) == a);
    CHECK(mat_transpose(a)[0][1] == Rational(3));
    std::vector<Rational> v{Rational(1), Rational(-1)};
    std::vector<Rational> av = mat_apply(a, v);
    CHECK(av[0] == Rational(-1));
    CHECK(av[1] == Rational(-1));
}

TEST_CASE("determinant") {
    Matrix a{{Rational(2), Rational(0), Rational(1)},
             {Rational(1), Rational(1), Rational(0)},
             {Rational(0), Rational(3), make_rational(1, 2)}};
    CHECK(mat_det(a) == Rational(4));
    Matrix sing{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(mat_det(sing) == Rational(0));
    CHECK(mat_det(mat_identity(4)) == Rational(1));
}

TEST_CASE("mat_solve") {
    Matrix a{{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
    std::vector<Rational> b{Rational(3), Rational(1)};
    auto x = mat_solve(a, b);
    REQUIRE(x.has_value());
    CHECK(mat_apply(a, *x) == b);

    Matrix sing{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
    CHECK_FALSE(mat_solve(sing, {Rational(1), Rational(2)}).has_value());
    // consistent singular system still solvable
    auto y = mat_solve(sing, {Rational(2), Rational(2)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] + (*y)[1] == Rational(2));
}

TEST_CASE("local_snf explicit fixtures") {
    unsigned long p = 3;
    Matrix id = mat_identity(3);
    CHECK(lattice_preimage_measure(id, p) == Rational(1));

    Matrix pid{{Rational(3), Rational(0)}, {Rational(0), Rational(3)}};
    CHECK(lattice_preimage_measure(pid, p) == Rational(9));

    Matrix mixed{{Rational(3), Rational(0)}, {Rational(0), make_rational(1, 3)}};
    LocalSnf s = local_snf(mixed, p);
    CHECK(sum_divisors(s) == 0);
    CHECK(lattice_preimage_measure(mixed, p) == Rational(1));

    // unimodular transforms do not change the measure
    Matrix u{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
    CHECK(lattice_preimage_measure(mat_mul(u, pid), p) == Rational(9));
    CHECK(lattice_preimage_measure(mat_mul(pid, u), p) == Rational(9));
}

TEST_CASE("local_snf preimage basis properties") {
    unsigned long p = 3;
    Matrix m{{Rational(3), Rational(1), Rational(0)},
             {Rational(0), make_rational(1, 3), Rational(1)},
             {Rational(1), Rational(0), Rational(2)}};
    LocalSnf s = local_snf(m, p);
    size_t k = 3;
    REQUIRE(s.preimage_basis.size() == k);
    REQUIRE(s.preimage_basis[0].size() == k);
    // every basis column maps into O^m
    for (size_t j = 0; j < k; ++j) {
        std::vector<Rational> col(k);
        for (size_t r = 0; r < k; ++r) col[r] = s.preimage_basis[r][j];
        for (const Rational& c : mat_apply(m, col)) CHECK(val_p(c, p).at_least(0));
    }
    // covolume of the preimage lattice matches the divisor sum
    Matrix b = s.preimage_basis;
    CHECK(val_p(mat_det(b), p) == PadicVal::of(-sum_divisors(s)));
}

TEST_CASE("local_snf vs brute-force measure on random integral matrices") {
    unsigned long p = 3;
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> d(-2, 2);
    int done = 0;
    while (done < 10) {
        Matrix m(2, std::vector<Rational>(2));
        for (auto& row : m)
            for (auto& e : row) e = Rational(d(rng));
        Rational det = mat_det(m);
        if (det == 0 || !val_p(det, p).at_least(0) || val_p(det, p).v > 2) continue;
        CHECK(lattice_preimage_measure(m, p) == brute_preimage_measure(m, p, 2));
        ++done;
    }
}

TEST_CASE("brute-force measure with fractional entries") {
    unsigned long p = 3;
    Matrix m{{make_rational(1, 3), Rational(1)}, {Rational(0), Rational(3)}};
    CHECK(lattice_preimage_measure(m, p) == brute_preimage_measure(m, p, 2));
    Matrix m2{{make_rational(2, 3), make_rational(1, 3)}, {Rational(1), Rational(2)}};
    CHECK(lattice_preimage_measure(m2, p) == brute_preimage_measure(m2, p, 2));
}

TEST_CASE("rank-deficient input is rejected") {
    Matrix m{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK_THROWS_AS(local_snf(m, 3), std::invalid_argument);
}

TEST_CASE("lattice span and membership") {
    unsigned long p = 3;
    Matrix cols{{Rational(1), Rational(1)}, {Rational(0), Rational(3)}};
    Matrix basis = lattice_span_basis(cols, p);
    CHECK(lattice_contains(basis, {Rational(1), Rational(0)}, p));
    CHECK(lattice_contains(basis, {Rational(0), Rational(3)}, p));
    CHECK_FALSE(lattice_contains(basis, {Rational(0), Rational(1)}, p));
    CHECK_FALSE(lattice_contains(basis, {make_rational(1, 3), Rational(0)}, p));
}
