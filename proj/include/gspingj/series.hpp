#pragma once

#include "gspingj/rational.hpp"

#include <vector>

namespace gspingj {

// Truncated power series with exact rational coefficients, indices 0..degree.
// All binary operations require matching truncation degrees.
class TruncSeries {
public:
    TruncSeries() = default;
    explicit TruncSeries(size_t degree) : c_(degree + 1, Rational(0)) {}
    TruncSeries(size_t degree, std::vector<Rational> coeffs);

    static TruncSeries one(size_t degree);
    static TruncSeries monomial(size_t degree, size_t k, const Rational& c);

    // (1 - a X^d)^{-1} truncated, d >= 1.
    static TruncSeries geometric(const Rational& a, size_t d, size_t degree);

    size_t degree() const { return c_.size() - 1; }
    const Rational& coeff(size_t k) const;
    Rational& coeff(size_t k);
    const std::vector<Rational>& coeffs() const { return c_; }

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries operator*(const Rational& c) const;
    bool operator==(const TruncSeries& o) const { return c_ == o.c_; }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    // Multiplicative inverse; requires a nonzero constant term.
    TruncSeries inverse() const;

    // Substitute X -> c X (coefficient k scales by c^k).
    TruncSeries scale_variable(const Rational& c) const;

    std::string to_string() const;

private:
    std::vector<Rational> c_{Rational(0)};
    void check_match(const TruncSeries& o) const;
};

} // namespace gspingj
