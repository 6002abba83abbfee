#pragma once

#include "gspingj/gspin.hpp"
#include "gspingj/lfun.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace gspingj {

// Deterministic source for all randomized harness inputs.
struct Sampler {
    std::mt19937_64 rng;
    explicit Sampler(std::uint64_t seed) : rng(seed) {}

    long uniform(long lo, long hi); // inclusive bounds
    bool coin();
};

// nonzero rational a/b with a in [-9,9]\{0}, b in [1,9]
Rational random_small_nonzero(Sampler& smp);
// integer in [lo,hi]
Rational random_small_int(Sampler& smp, long lo, long hi);
// p-adic unit integer from [-9,9]
Rational random_unit(Sampler& smp, unsigned long p);
// unit * p^v
Rational random_with_val(Sampler& smp, unsigned long p, long v);

SatakeData random_satake(Sampler& smp, const QSpace& S);

// integer coordinate vector over the full basis
std::vector<Rational> random_coords(Sampler& smp, const QSpace& S, long lo, long hi);
// integer coordinates supported on the middle block V_j
std::vector<Rational> random_vj_coords(Sampler& smp, const QSpace& S, int j, long lo,
                                       long hi);

// word in integral generators of the lattice stabilizer K: torus units, z_E
// units, unipotents n_j / opposite, Levi unipotents, unit-norm vector pairs
CliffordElement random_k_word(Sampler& smp, const Algebra& alg, int len);
// K word scaled by p^v, so val_clif = v and nu has valuation 2v
CliffordElement random_k_word_scaled(Sampler& smp, const Algebra& alg, int len, long v);
// K word times optional m_i(p^e) factors and a p-power scalar: generic GSpin
// element with mixed blade and similitude valuations in roughly [vlo, vhi]
CliffordElement random_gspin_word(Sampler& smp, const Algebra& alg, int len, long vlo,
                                  long vhi);
// product of two integral vectors with unit norms (works without a space)
CliffordElement random_unit_pair(Sampler& smp, const Algebra& alg);
// GSpin(V_1) element transported into Clif(V)
CliffordElement random_gspin_v1(Sampler& smp, const Algebra& alg, int len, long vlo,
                                long vhi);

// primitive vector of the V_1 lattice: some lattice direction pairs to a unit
LatticeVector random_primitive_T(Sampler& smp, const QSpace& S);

// filtration masks for U = span{f_i : i in I}, I a subset of 1..n
Blade u_plus_mask(const QSpace& S, const std::vector<int>& I);
Blade u_minus_mask(const QSpace& S, const std::vector<int>& I);

// word in generators of the stabilizer P_U of U = span{f_i : i in I}
CliffordElement random_pu_word(Sampler& smp, const Algebra& alg,
                               const std::vector<int>& I, int len);
// word in generators of the unipotent radical N_U
CliffordElement random_nu_word(Sampler& smp, const Algebra& alg,
                               const std::vector<int>& I, int len);

} // namespace gspingj
