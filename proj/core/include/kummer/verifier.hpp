#ifndef KUMMER_VERIFIER_HPP_
#define KUMMER_VERIFIER_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "kummer/basis.hpp"
#include "kummer/element.hpp"
#include "kummer/gaussian.hpp"

namespace kummer {

/* Monic quartic over Q(i), coefficients ascending (coeffs[4] == 1). */
struct CharPoly {
    std::array<GaussianRational, 5> coeffs;

    bool is_integral() const;
    friend bool operator==(CharPoly const&, CharPoly const&) = default;
};

/* det(X I - A) for the multiplication-by-x matrix A in the power basis,
 * in closed form through the tower N / M / K. */
CharPoly char_poly(QuarticElement const& x);

/* The same polynomial by Faddeev-LeVerrier on A; slower, kept as a cross-check. */
CharPoly char_poly_faddeev(QuarticElement const& x);

/* x is in O_N iff its characteristic polynomial has Z[i] coefficients. */
bool is_algebraic_integer(QuarticElement const& x);

/* As is_algebraic_integer, but only at the primes above pi. */
bool is_integral_at(QuarticElement const& x, GaussianInt const& pi);

/*
 * Relative trace and norm down the tower N / M / K with M = K(a^2).
 * Elements of M are pairs (u, v) = u + v a^2.
 */
struct TraceNorm {
    std::array<GaussianRational, 2> tr_nm;
    std::array<GaussianRational, 2> nm_nm;
    GaussianRational tr_nk;
    GaussianRational nm_nk;
};
TraceNorm rel_trace_norm(QuarticElement const& x);

/* det [ Tr_{N/K}(x_i x_j) ] */
GaussianRational trace_form_disc(std::span<QuarticElement const> family);

struct SearchOptions {
    std::uint64_t budget = 10'000'000;  // integrality tests per degree
};

/* Thrown when a denominator search exhausts its budget; carries the
 * part of the denominator established so far. */
class BudgetExceeded : public Error {
    GaussianInt partial_;

  public:
    BudgetExceeded(GaussianInt partial, std::uint64_t tests);
    GaussianInt const& partial() const { return partial_; }
};

struct DenominatorSearch {
    GaussianInt d;                       // canonical
    std::vector<GaussianInt> coeffs;     // c_0 .. c_{degree-1}, canonical residues mod d
    std::uint64_t tests = 0;             // integrality tests performed
};

/* prod over pi | disc(a) of pi^floor(v_pi(disc(a)) / 2) */
GaussianInt oracle_search_bound(Radicand const& r);

/*
 * The largest divisor d of `bound` (under divisibility) for which some
 * (c_0 + ... + c_{k-1} a^{k-1} + a^k)/d is integral, k = degree. Each
 * prime of `bound` is searched on its own by lifting witnesses one power
 * of the prime at a time; prime parts are glued by CRT. `lower` must
 * divide the answer (d_i d_j | d_{i+j}); a search that falls short of it
 * raises Error{Internal}. `known` are integral elements used only to prune
 * lifts: Tr(y s) must be integral for every integral s.
 */
DenominatorSearch max_denominator(Radicand const& r, int degree, GaussianInt const& bound,
                                  SearchOptions const& options = {}, GaussianInt const& lower = 1,
                                  std::span<QuarticElement const> known = {});

/* Normalized basis built only from max_denominator at degrees 1, 2, 3. */
NormalizedBasis normalized_basis_oracle(Radicand const& r, SearchOptions const& options = {});

// --- checks on a candidate basis -------------------------------------------------

bool basis_is_integral(Radicand const& r, NormalizedBasis const& basis);

/* No monic degree-k element with denominator pi * d_k is integral, for
 * the given prime. Enumerates (f_k + d_k z)/(pi d_k) over z in the span of
 * the lower basis elements mod pi. Assumes the lower degrees are maximal. */
bool denominator_is_maximal_at(Radicand const& r, NormalizedBasis const& basis, int degree,
                               GaussianInt const& pi);

/* denominator_is_maximal_at for every degree and every prime of 2 f g h. */
bool basis_is_maximal(Radicand const& r, NormalizedBasis const& basis);

struct TheoremOneChecks {
    bool integral = false;         // every element in O_N
    bool replaceable = false;      // (1): shifting numerators by d_k keeps integrality
    bool maximal = false;          // (2): q | d_k for every admissible q
    bool divisibility = false;     // (3): d1^2 | d2, d1 d2 | d3
    bool discriminant = false;     // (4): (d1 d2 d3)^2 disc(basis) = disc(a)
    bool d1_power = false;         // (5): d1^12 | disc(a)
    bool lemma2 = false;           // disc(a) | m_j^2 for every coefficient of disc(a) * x
    bool all() const {
        return integral && replaceable && maximal && divisibility && discriminant && d1_power && lemma2;
    }
};
TheoremOneChecks check_theorem_one(Radicand const& r, NormalizedBasis const& basis);

}  // namespace kummer

#endif  // KUMMER_VERIFIER_HPP_
