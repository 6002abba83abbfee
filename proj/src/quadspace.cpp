#include "gspingj/quadspace.hpp"

#include <sstream>
#include <stdexcept>

namespace gspingj {

int QSpace::e_pos(int i) const {
    if (i < 1 || i > n) throw std::invalid_argument("e index out of range");
    return i - 1;
}

int QSpace::f_pos(int i) const {
    if (i < 1 || i > n) throw std::invalid_argument("f index out of range");
    return n + dimE() + (n - i);
}

int QSpace::vE_pos(int j) const {
    if (j < 0 || j >= dimE()) throw std::invalid_argument("V_E index out of range");
    return n + j;
}

int QSpace::hyperbolic_index(int pos) const {
    if (pos < 0 || pos >= dim) throw std::invalid_argument("position out of range");
    if (pos < n) return pos + 1;
    if (pos >= n + dimE()) return n - (pos - n - dimE());
    throw std::invalid_argument("position lies in V_E");
}

std::string QSpace::label(int pos) const {
    if (pos < 0 || pos >= dim) throw std::invalid_argument("position out of range");
    std::ostringstream os;
    if (pos < n) {
        os << "e" << pos + 1;
    } else if (pos < n + dimE()) {
        if (dimE() == 1) os << "w";
        else os << "w" << pos - n + 1;
    } else {
        os << "f" << hyperbolic_index(pos);
    }
    return os.str();
}

int QSpace::pos_of_label(const std::string& lab) const {
    for (int pos = 0; pos < dim; ++pos)
        if (label(pos) == lab) return pos;
    throw std::invalid_argument("unknown basis label: " + lab);
}

Rational QSpace::basis_q(int pos) const {
    if (pos < 0 || pos >= dim) throw std::invalid_argument("position out of range");
    return gram[pos][pos] / 2;
}

std::string QSpace::descriptor() const {
    std::ostringstream os;
    os << "n=" << n << ",E=";
    switch (e.kind) {
        case EKind::Field: os << "F"; break;
        case EKind::Split: os << "split"; break;
        case EKind::UnramifiedField: os << "unram:u=" << rational_to_string(e.u); break;
    }
    os << ",p=" << p;
    return os.str();
}

static bool is_square_mod_p(const Rational& u, unsigned long p) {
    unsigned long r = residue_mod_p(u, p);
    for (unsigned long t = 0; t < p; ++t)
        if ((t * t) % p == r) return true;
    return false;
}

QSpace build_space(int n, EInfo e, unsigned long p) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (e.kind == EKind::UnramifiedField) {
        if (val_p(e.u, p) != PadicVal::of(0))
            throw std::invalid_argument("u must be a p-adic unit");
        if (is_square_mod_p(e.u, p))
            throw std::invalid_argument("u must be a nonsquare mod p");
    } else {
        e.u = 0;
    }

    QSpace s;
    s.n = n;
    s.e = e;
    s.p = p;
    s.dim = 2 * n + e.dim();
    s.gram = Matrix(s.dim, std::vector<Rational>(s.dim, Rational(0)));

    for (int i = 1; i <= n; ++i) {
        s.gram[s.e_pos(i)][s.f_pos(i)] = 1;
        s.gram[s.f_pos(i)][s.e_pos(i)] = 1;
    }
    switch (e.kind) {
        case EKind::Field:
            s.gram[s.vE_pos(0)][s.vE_pos(0)] = 2;
            break;
        case EKind::Split:
            s.gram[s.vE_pos(0)][s.vE_pos(1)] = 1;
            s.gram[s.vE_pos(1)][s.vE_pos(0)] = 1;
            break;
        case EKind::UnramifiedField:
            s.gram[s.vE_pos(0)][s.vE_pos(0)] = 2;
            s.gram[s.vE_pos(1)][s.vE_pos(1)] = -2 * e.u;
            break;
    }

    if (val_p(mat_det(s.gram), p) != PadicVal::of(0))
        throw std::runtime_error("gram determinant is not a unit");
    return s;
}

QSpace parse_space(const std::string& descriptor) {
    int n = -1;
    EInfo e;
    bool have_e = false;
    long p = -1;

    std::stringstream ss(descriptor);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad space descriptor token: " + tok);
        std::string key = tok.substr(0, eq);
        std::string val = tok.substr(eq + 1);
        if (key == "n") {
            n = std::stoi(val);
        } else if (key == "E") {
            have_e = true;
            if (val == "F") {
                e.kind = EKind::Field;
            } else if (val == "split") {
                e.kind = EKind::Split;
            } else if (val.rfind("unram:u", 0) == 0) {
                e.kind = EKind::UnramifiedField;
                auto ueq = val.find('=');
                if (ueq == std::string::npos) throw std::invalid_argument("unram needs u=<int>");
                e.u = rational_from_string(val.substr(ueq + 1));
            } else {
                throw std::invalid_argument("unknown E kind: " + val);
            }
        } else if (key == "p") {
            p = std::stol(val);
        } else {
            throw std::invalid_argument("unknown space descriptor key: " + key);
        }
    }
    if (n < 0 || !have_e || p <= 0)
        throw std::invalid_argument("space descriptor must set n, E, p");
    return build_space(n, e, static_cast<unsigned long>(p));
}

LatticeVector lattice_vector(const QSpace& s, std::vector<Rational> coords) {
    if (static_cast<int>(coords.size()) != s.dim)
        throw std::invalid_argument("coordinate count does not match dim V");
    return LatticeVector{std::move(coords)};
}

bool in_lattice(const QSpace& s, const LatticeVector& v) {
    for (const auto& c : v.coords)
        if (!val_p(c, s.p).at_least(0)) return false;
    return true;
}

Rational quad_form(const QSpace& s, const LatticeVector& v) {
    Rational acc = 0;
    for (int i = 0; i < s.dim; ++i)
        for (int j = 0; j < s.dim; ++j)
            acc += v.coords[i] * s.gram[i][j] * v.coords[j];
    return acc / 2;
}

Rational bilinear(const QSpace& s, const LatticeVector& v, const LatticeVector& w) {
    Rational acc = 0;
    for (int i = 0; i < s.dim; ++i)
        for (int j = 0; j < s.dim; ++j)
            acc += v.coords[i] * s.gram[i][j] * w.coords[j];
    return acc;
}

bool dual_membership(const QSpace& s, const LatticeVector& v) {
    auto img = mat_apply(s.gram, v.coords);
    for (const auto& c : img)
        if (!val_p(c, s.p).at_least(0)) return false;
    return true;
}

} // namespace gspingj
