#pragma once

#include "gspingj/quadspace.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gspingj {

// Basis blade of a Clifford algebra as a bitmask over generator positions.
// Bit i set means the basis vector at position i occurs; the blade is the
// ordered product of its generators by increasing position.
using Blade = std::uint32_t;

// Sparse element: blade -> nonzero coefficient.
struct CliffordElement {
    std::map<Blade, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    Rational coeff(Blade b) const;
};

CliffordElement clif_zero();
CliffordElement clif_add(const CliffordElement& a, const CliffordElement& b);
CliffordElement clif_sub(const CliffordElement& a, const CliffordElement& b);
CliffordElement clif_scale(const Rational& c, const CliffordElement& a);
bool clif_eq(const CliffordElement& a, const CliffordElement& b);

// Clifford algebra of a symmetric gram matrix over Q, with the relations
// v*w + w*v = (v,w) and v*v = q(v) = (v,v)/2. Multiplication is by a
// blade-times-generator rewriting kernel, memoized per algebra.
class Algebra {
  public:
    Algebra(Matrix gram, unsigned long p);
    explicit Algebra(const QSpace& s);

    int dim() const { return dim_; }
    unsigned long p() const { return p_; }
    const Matrix& gram() const { return gram_; }
    bool has_space() const { return space_.has_value(); }
    const QSpace& space() const;

    CliffordElement one() const;
    CliffordElement scalar(const Rational& c) const;
    CliffordElement gen(int pos) const;
    CliffordElement blade_elem(Blade b) const;
    CliffordElement vector_elem(const std::vector<Rational>& coords) const;

    CliffordElement mul(const CliffordElement& a, const CliffordElement& b) const;
    // The main anti-involution: identity on vectors, reverses products.
    CliffordElement star(const CliffordElement& a) const;

    // Component extraction
    Rational scalar_part(const CliffordElement& a) const;
    std::vector<Rational> vector_part(const CliffordElement& a) const;
    bool is_vector(const CliffordElement& a) const;
    bool is_even(const CliffordElement& a) const;

    PadicVal val_clif(const CliffordElement& a) const;
    bool is_integral(const CliffordElement& a) const;

    std::string to_string(const CliffordElement& a) const;

  private:
    Matrix gram_;
    unsigned long p_;
    int dim_;
    std::optional<QSpace> space_;
    mutable std::unordered_map<std::uint64_t, CliffordElement> mul_memo_;

    CliffordElement elem_times_gen(const CliffordElement& a, int g) const;
    const CliffordElement& blade_times_gen(Blade a, int g) const;
};

// The even embedding iota0 of the quadratic algebra E attached to V_E:
// E = F         -> lam[0] * 1
// E split       -> lam[0] + (lam[1]-lam[0]) * w1w2, with (w1w2)^2 = w1w2
// E unramified  -> lam[0] + lam[1] * w1w2, with (w1w2)^2 = u
// In each case iota0(lam) * star(iota0(lam)) = Norm_{E/F}(lam).
CliffordElement iota0(const Algebra& alg, const std::vector<Rational>& lam);
Rational e_norm(const QSpace& s, const std::vector<Rational>& lam);

// Filtration weight: for a blade B, #(bits in plus_mask) - #(bits in minus_mask);
// degree of an element is the max over its blades. Zero element has no degree.
long blade_weight(Blade b, Blade plus_mask, Blade minus_mask);
std::optional<long> filtration_degree(const CliffordElement& a, Blade plus_mask,
                                      Blade minus_mask);

// Transport along a generator renumbering src position i -> dst position
// posmap[i]. posmap must be strictly increasing and preserve gram entries.
CliffordElement embed_elem(const Algebra& src, const CliffordElement& a,
                           const Algebra& dst, const std::vector<int>& posmap);

} // namespace gspingj
