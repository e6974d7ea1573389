#ifndef KUMMER_ELEMENT_HPP_
#define KUMMER_ELEMENT_HPP_

#include <array>
#include <span>
#include <string>

#include "kummer/gaussian.hpp"

namespace kummer {

/*
 * Element c0 + c1 a + c2 a^2 + c3 a^3 of N = K(a), a^4 = m, with Q(i)
 * coefficients. Elements over different m do not mix.
 */
class QuarticElement {
    std::array<GaussianRational, 4> c_;
    GaussianInt m_;

  public:
    explicit QuarticElement(GaussianInt m) : m_(std::move(m)) {}
    QuarticElement(GaussianInt m, std::array<GaussianRational, 4> coeffs)
        : c_(std::move(coeffs)), m_(std::move(m)) {}

    static QuarticElement constant(GaussianInt m, GaussianRational v);
    /* a^k, reduced with a^4 = m */
    static QuarticElement alpha_power(GaussianInt m, unsigned k);
    /* (sum_j numerator[j] a^j) / den, numerator ascending with at most 4 entries */
    static QuarticElement from_numerator(GaussianInt m, std::span<GaussianInt const> numerator,
                                         GaussianInt const& den);

    GaussianInt const& m() const { return m_; }
    GaussianRational const& coeff(std::size_t k) const { return c_.at(k); }
    std::array<GaussianRational, 4> const& coeffs() const { return c_; }

    QuarticElement& operator+=(QuarticElement const& o);
    QuarticElement& operator-=(QuarticElement const& o);
    QuarticElement& operator*=(GaussianRational const& s);

    friend QuarticElement operator+(QuarticElement a, QuarticElement const& b) { return a += b; }
    friend QuarticElement operator-(QuarticElement a, QuarticElement const& b) { return a -= b; }
    friend QuarticElement operator*(QuarticElement a, GaussianRational const& s) { return a *= s; }
    friend bool operator==(QuarticElement const& a, QuarticElement const& b) {
        return a.m_ == b.m_ && a.c_ == b.c_;
    }

    std::string to_string() const;
};

/* Product with a^4 -> m reduction. Throws Error{Domain} if the radicands differ. */
QuarticElement mul(QuarticElement const& x, QuarticElement const& y);
inline QuarticElement operator*(QuarticElement const& x, QuarticElement const& y) { return mul(x, y); }

}  // namespace kummer

#endif  // KUMMER_ELEMENT_HPP_
