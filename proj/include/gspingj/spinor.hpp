#pragma once

#include "gspingj/clifford.hpp"

#include <unordered_map>
#include <vector>

namespace gspingj {

// Quotient module Clif(W) / X Clif(W) for a maximal isotropic X of half the
// dimension of W, together with the lattice image of Clif(Lambda(W)).
//
// Internally a totally isotropic complement Y with (x_i, y_j) = delta_ij is
// constructed; classes of the ordered products y^S form a basis, and the
// reduction of a blade is computed by right-multiplying generator by
// generator, contracting every X-component to the left.
struct SpinorModule {
    const Algebra* alg = nullptr;
    int m = 0; // dim X
    std::vector<std::vector<Rational>> xbasis;
    std::vector<std::vector<Rational>> ybasis;
    // generator g decomposed as sum_i gen_x[g][i] x_i + sum_j gen_y[g][j] y_j
    std::vector<std::vector<Rational>> gen_x, gen_y;
    Matrix image_lattice; // columns: O-basis of the image of Clif(Lambda(W))
    mutable std::unordered_map<Blade, std::vector<Rational>> memo;
};

SpinorModule build_spinor(const Algebra& alg,
                          const std::vector<std::vector<Rational>>& xbasis);

// Image of a in the y-word basis; kernel is exactly X Clif(W).
std::vector<Rational> spinor_reduce(const SpinorModule& S, const CliffordElement& a);

// Image of 1 (the class 1_X).
std::vector<Rational> spinor_one(const SpinorModule& S);

// Membership of a reduced class in the image of Clif(Lambda(W)).
bool spinor_in_image_lattice(const SpinorModule& S, const std::vector<Rational>& coords);

bool spinor_is_zero(const std::vector<Rational>& coords);

} // namespace gspingj
