#pragma once

#include "gspingj/rational.hpp"

#include <optional>
#include <vector>

namespace gspingj {

using Matrix = std::vector<std::vector<Rational>>;

Matrix mat_identity(size_t n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_transpose(const Matrix& a);
std::vector<Rational> mat_apply(const Matrix& a, const std::vector<Rational>& v);
Rational mat_det(Matrix a);

// One solution of A x = b over the rationals, if any.
std::optional<std::vector<Rational>> mat_solve(Matrix a, std::vector<Rational> b);

// Local Smith data of a full-column-rank matrix at p: valuations d_i of the
// elementary divisors, and a column basis of the lattice {x : M x integral at p}.
struct LocalSnf {
    std::vector<long> divisor_vals;
    Matrix preimage_basis; // columns span {x : M x in O^m}
};

LocalSnf local_snf(const Matrix& m, unsigned long p);

// Haar measure of {x in F^k : M x in O^m} with meas(O^k) = 1. Requires full
// column rank; equals q^{sum d_i}.
Rational lattice_preimage_measure(const Matrix& m, unsigned long p);

// Column basis (at p) of the O-span of the given columns; the result is a
// square invertible matrix when the columns span the ambient space.
Matrix lattice_span_basis(const Matrix& columns, unsigned long p);

// Membership of v in the O-lattice spanned by the columns of basis.
bool lattice_contains(const Matrix& basis, const std::vector<Rational>& v, unsigned long p);

} // namespace gspingj
