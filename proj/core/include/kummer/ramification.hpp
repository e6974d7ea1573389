#ifndef KUMMER_RAMIFICATION_HPP_
#define KUMMER_RAMIFICATION_HPP_

#include <string>
#include <vector>

#include <gmpxx.h>

#include "kummer/gaussian.hpp"
#include "kummer/quartic.hpp"

namespace kummer {

using Rational = mpq_class;

/*
 * Lower-numbered ramification filtration |G_0| >= |G_1| >= ... of a
 * cyclic 2-group, terminating at 1. A missing trailing 1 is implied.
 */
class Filtration {
    std::vector<unsigned> orders_;

  public:
    /* Throws Domain unless the orders are non-increasing powers of 2 and the
     * lower breaks at index >= 1 are congruent mod 2. */
    explicit Filtration(std::vector<unsigned> orders);

    /* Totally ramified cyclic group of order 2^n with lower breaks b_1 < ... < b_n. */
    static Filtration from_lower_breaks(std::vector<long> const& breaks);
    static Filtration trivial() { return Filtration({1}); }

    std::vector<unsigned> const& orders() const { return orders_; }
    /* |G_i|, 1 past the end */
    unsigned order(std::size_t i) const { return i < orders_.size() ? orders_[i] : 1; }
    /* Indices i with |G_i| > |G_{i+1}|, ascending (repeated for jumps of more than one step). */
    std::vector<long> lower_breaks() const;

    friend bool operator==(Filtration const&, Filtration const&) = default;
};

struct BreakData {
    unsigned p = 2;
    unsigned n = 0;
    std::vector<long> lower;
    std::vector<Rational> upper;
    unsigned e_abs = 2;
};

/* phi(u) = integral_0^u dt / [G_0 : G_t]; Domain error for u < 0. */
Rational herbrand_phi(Filtration const& f, Rational const& u);
/* Inverse of herbrand_phi. */
Rational herbrand_psi(Filtration const& f, Rational const& v);

/* b_1 = b^1, b_k = b_{k-1} + p^{k-1} (b^k - b^{k-1}); Domain error unless strictly increasing. */
std::vector<long> lower_from_upper(std::vector<long> const& upper, unsigned p, unsigned e_abs);
std::vector<Rational> upper_from_lower(Filtration const& f);

/* b^i = b^1 + (i-1) e'; Error{Hypothesis} unless b1 > e'/(p-1). */
std::vector<long> wyman_upper_breaks(long b1, unsigned e_abs, unsigned n, unsigned p);

/* sum_i (|G_i| - 1) */
long different_exponent(Filtration const& f);

/* floor(e/(p-1)): G_i = 1 for every i beyond it. */
long vanishing_bound(long e_abs, unsigned p);

bool is_tame(long e, unsigned p);

/* N_{M/K}(disc(N/M)) * disc(M/K)^2 */
GaussianInt disc_tower(GaussianInt const& disc_nm_norm, GaussianInt const& disc_mk);

/* Local picture at 1+i for one radicand. */
struct CaseRamification {
    CaseRow row;
    std::string label;          // "1(a)", "2(b)", "3(a)", ... or "unramified"
    unsigned e = 1;             // ramification index of 1+i in N/K
    unsigned multiplicity = 1;  // n/e: total residue degree times number of primes
    Filtration filtration = Filtration::trivial();  // of the inertia group at a prime above 1+i
    BreakData breaks;
    long different = 0;         // v_Q of the local different
    long disc_valuation = 0;    // v_{1+i}(disc(N/K)) = multiplicity * different
    std::string note;
};

CaseRamification ramification_case(Radicand const& r);

/* The predicted v_{1+i}(disc(N/K)); Unclassified propagates. */
long disc_valuation_case(Radicand const& r);

}  // namespace kummer

#endif  // KUMMER_RAMIFICATION_HPP_
