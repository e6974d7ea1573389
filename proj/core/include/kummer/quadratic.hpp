#ifndef KUMMER_QUADRATIC_HPP_
#define KUMMER_QUADRATIC_HPP_

#include <string_view>
#include <vector>

#include "kummer/gaussian.hpp"

namespace kummer {

/* Residue-class rows for M = K(sqrt(fh)); see quadratic_basis. */
enum class QuadraticRow {
    OneMod4,          // fh = 1 (mod 4)
    MinusOneMod4,     // fh = -1 (mod 4)
    OnePlus2iMod4,    // fh = 1+2i (mod 4)
    MinusOnePlus2iMod4,  // fh = -1+2i (mod 4)
    NonSquareMod2,    // fh = i (mod 2) or fh = 0 (mod 1+i)
};

std::string_view to_string(QuadraticRow row);

/* Integral basis {1, (a + sqrt(fh))/d1} of O_M over Z[i], disc(M/K) = 4 fh / d1^2. */
struct QuadraticBasis {
    QuadraticRow row;
    GaussianInt a;
    GaussianInt d1;
    GaussianInt disc;  // canonical associate
};

QuadraticRow classify_quadratic(GaussianInt const& fh);

/* Throws Error{SquareFree} for non-square-free fh and Error{Degenerate}
 * when fh is a unit square (M = K). */
QuadraticBasis quadratic_basis(GaussianInt const& fh);

/* Is x0 + x1 sqrt(fh) integral over Z[i]? Trace 2 x0 and norm
 * x0^2 - x1^2 fh must both lie in Z[i]. */
bool is_integral_quadratic(GaussianRational const& x0, GaussianRational const& x1, GaussianInt const& fh);

/* Numerators a for the row's denominator that the row table and the
 * prose disagree on; both are returned for verification (see the
 * MinusOnePlus2iMod4 row). First entry is the one quadratic_basis emits. */
std::vector<GaussianInt> quadratic_numerator_candidates(QuadraticRow row);

/* True if no (a' + sqrt(fh))/((1+i) d1) is integral for any residue a' mod (1+i) d1. */
bool quadratic_denominator_is_maximal(QuadraticBasis const& basis, GaussianInt const& fh);

}  // namespace kummer

#endif  // KUMMER_QUADRATIC_HPP_
