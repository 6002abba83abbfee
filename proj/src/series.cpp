#include "gspingj/series.hpp"

#include <sstream>

namespace gspingj {

TruncSeries::TruncSeries(size_t degree, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.size() != degree + 1)
        throw std::invalid_argument("TruncSeries: coefficient count does not match degree");
}

TruncSeries TruncSeries::one(size_t degree) {
    TruncSeries s(degree);
    s.c_[0] = 1;
    return s;
}

TruncSeries TruncSeries::monomial(size_t degree, size_t k, const Rational& c) {
    TruncSeries s(degree);
    if (k <= degree) s.c_[k] = c;
    return s;
}

TruncSeries TruncSeries::geometric(const Rational& a, size_t d, size_t degree) {
    if (d == 0) throw std::invalid_argument("TruncSeries::geometric: d must be >= 1");
    TruncSeries s(degree);
    Rational pow(1);
    for (size_t k = 0; k <= degree; k += d) {
        s.c_[k] = pow;
        pow *= a;
    }
    return s;
}

const Rational& TruncSeries::coeff(size_t k) const {
    if (k >= c_.size()) throw std::out_of_range("TruncSeries::coeff");
    return c_[k];
}

Rational& TruncSeries::coeff(size_t k) {
    if (k >= c_.size()) throw std::out_of_range("TruncSeries::coeff");
    return c_[k];
}

void TruncSeries::check_match(const TruncSeries& o) const {
    if (c_.size() != o.c_.size())
        throw std::invalid_argument("TruncSeries: mismatched truncation degrees");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    check_match(o);
    TruncSeries r(degree());
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    check_match(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    check_match(o);
    TruncSeries r(degree());
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    check_match(o);
    TruncSeries r(degree());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; i + j < c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

TruncSeries TruncSeries::operator*(const Rational& c) const {
    TruncSeries r(degree());
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] * c;
    return r;
}

TruncSeries TruncSeries::inverse() const {
    if (c_[0] == 0)
        throw std::invalid_argument("TruncSeries::inverse: constant term is zero");
    TruncSeries r(degree());
    Rational inv0 = Rational(1) / c_[0];
    r.c_[0] = inv0;
    for (size_t k = 1; k < c_.size(); ++k) {
        Rational acc(0);
        for (size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
        r.c_[k] = -inv0 * acc;
    }
    return r;
}

TruncSeries TruncSeries::scale_variable(const Rational& c) const {
    TruncSeries r(degree());
    Rational pow(1);
    for (size_t k = 0; k < c_.size(); ++k) {
        r.c_[k] = c_[k] * pow;
        pow *= c;
    }
    return r;
}

std::string TruncSeries::to_string() const {
    std::ostringstream os;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (k) os << ", ";
        os << c_[k].get_str();
    }
    return os.str();
}

} // namespace gspingj
