#pragma once

#include "gspingj/linalg.hpp"
#include "gspingj/rational.hpp"

#include <string>
#include <vector>

namespace gspingj {

// Etale algebra type for the anisotropic-or-split kernel V_E.
enum class EKind { Field, Split, UnramifiedField };

struct EInfo {
    EKind kind = EKind::Field;
    Rational u = 0; // nonsquare unit for UnramifiedField, unused otherwise

    int dim() const { return kind == EKind::Field ? 1 : 2; }
};

// Quasisplit quadratic space V = U^dual + V_E + U over a p-adic field, with the
// distinguished basis e_1..e_n, V_E basis, f_n..f_1 (in that global order) and
// the maximal lattice Lambda = O-span of the basis.
//
// Position layout: e_i at i-1, the V_E basis at n..n+dimE-1, f_j at
// n + dimE + (n - j). The middle slice [j, dim-1-j] is the perp space V_j.
struct QSpace {
    int n = 0;
    EInfo e;
    unsigned long p = 3;
    int dim = 0;
    Matrix gram;

    int e_pos(int i) const;  // 1-based i in 1..n
    int f_pos(int i) const;
    int vE_pos(int j) const; // 0-based j in 0..dimE-1
    int dimE() const { return e.dim(); }

    bool is_e_pos(int pos) const { return pos < n; }
    bool is_f_pos(int pos) const { return pos >= n + dimE(); }
    // index i of e_i / f_i at a position, 1-based
    int hyperbolic_index(int pos) const;

    std::string label(int pos) const;
    int pos_of_label(const std::string& lab) const;

    // q(b) for a basis vector, = gram[pos][pos] / 2
    Rational basis_q(int pos) const;

    std::string descriptor() const;
};

QSpace build_space(int n, EInfo e, unsigned long p);

// Descriptor grammar: "n=<int>,E=<F|split|unram:u=<int>>,p=<prime>"
QSpace parse_space(const std::string& descriptor);

// Vector in V in distinguished-basis coordinates.
struct LatticeVector {
    std::vector<Rational> coords;
};

LatticeVector lattice_vector(const QSpace& s, std::vector<Rational> coords);
bool in_lattice(const QSpace& s, const LatticeVector& v);

// q(v) and the bilinear pairing (v, w) = q(v+w) - q(v) - q(w).
Rational quad_form(const QSpace& s, const LatticeVector& v);
Rational bilinear(const QSpace& s, const LatticeVector& v, const LatticeVector& w);

// Membership in the dual lattice: (v, Lambda) in O, i.e. gram * v integral.
bool dual_membership(const QSpace& s, const LatticeVector& v);

} // namespace gspingj
