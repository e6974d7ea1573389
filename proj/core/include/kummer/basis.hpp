#ifndef KUMMER_BASIS_HPP_
#define KUMMER_BASIS_HPP_

#include <array>
#include <vector>

#include "kummer/element.hpp"
#include "kummer/gaussian.hpp"

namespace kummer {

/*
 * Normalized integral basis
 *   { 1, (a0 + a)/d1, (b0 + b1 a + a^2)/d2, (c0 + c1 a + c2 a^2 + a^3)/d3 }
 * of O_N over Z[i].
 */
struct NormalizedBasis {
    std::array<GaussianInt, 3> d{GaussianInt(1), GaussianInt(1), GaussianInt(1)};
    GaussianInt a0;
    std::array<GaussianInt, 2> b;  // b0, b1
    std::array<GaussianInt, 3> c;  // c0, c1, c2

    GaussianInt const& denominator(int degree) const { return d.at(degree - 1); }

    /* Ascending numerator of the degree-k element, monic term included. */
    std::vector<GaussianInt> numerator(int degree) const;
    void set_numerator(int degree, std::vector<GaussianInt> lower_coeffs);

    QuarticElement element(GaussianInt const& m, int degree) const;
    std::array<QuarticElement, 4> elements(GaussianInt const& m) const;

    /* Every coefficient reduced to its canonical residue modulo its denominator. */
    NormalizedBasis reduced() const;

    friend bool operator==(NormalizedBasis const&, NormalizedBasis const&) = default;
};

/* Denominators agree up to units. */
bool same_denominators(NormalizedBasis const& x, NormalizedBasis const& y);

}  // namespace kummer

#endif  // KUMMER_BASIS_HPP_
