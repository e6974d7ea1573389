#ifndef KUMMER_GAUSSIAN_HPP_
#define KUMMER_GAUSSIAN_HPP_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kummer/error.hpp"

namespace kummer {

using Integer = mpz_class;

/* Element a+bi of Z[i] with arbitrary-precision components. */
class GaussianInt {
    Integer re_;
    Integer im_;

  public:
    GaussianInt() = default;
    GaussianInt(long re, long im = 0) : re_(re), im_(im) {}  // NOLINT
    GaussianInt(Integer re, Integer im = 0)                  // NOLINT
        : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianInt i() { return {0, 1}; }
    static GaussianInt one_plus_i() { return {1, 1}; }

    /* Accepts "a", "bi", "a+bi", "a-bi" (whitespace allowed, b may be
     * omitted before i). Throws Error{Parse} on malformed input. */
    static GaussianInt parse(std::string_view text);

    Integer const& re() const { return re_; }
    Integer const& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_unit() const;
    GaussianInt conj() const { return {re_, -im_}; }

    GaussianInt operator-() const { return {-re_, -im_}; }
    GaussianInt& operator+=(GaussianInt const& o);
    GaussianInt& operator-=(GaussianInt const& o);
    GaussianInt& operator*=(GaussianInt const& o);

    friend GaussianInt operator+(GaussianInt a, GaussianInt const& b) { return a += b; }
    friend GaussianInt operator-(GaussianInt a, GaussianInt const& b) { return a -= b; }
    friend GaussianInt operator*(GaussianInt a, GaussianInt const& b) { return a *= b; }
    friend bool operator==(GaussianInt const& a, GaussianInt const& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /* "3+2i", "-i", "0", ... ; parse(to_string()) is the identity. */
    std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, GaussianInt const& z);

/* re^2 + im^2 */
Integer norm(GaussianInt const& z);

/* First-quadrant associate: re > 0, im >= 0 (zero maps to zero). */
GaussianInt canonical(GaussianInt const& z);

/* The unit u with z = u * canonical(z). */
GaussianInt unit_part(GaussianInt const& z);

bool associates(GaussianInt const& a, GaussianInt const& b);

GaussianInt pow(GaussianInt const& z, unsigned long e);

/* Euclidean division with rounded quotient: z = q*d + r, norm(r) <= norm(d)/2. */
std::pair<GaussianInt, GaussianInt> divmod(GaussianInt const& z, GaussianInt const& d);

bool divides(GaussianInt const& d, GaussianInt const& z);

/* z/d, which must be exact; throws Error{Domain} otherwise. */
GaussianInt divexact(GaussianInt const& z, GaussianInt const& d);

/* Canonical generator of the ideal (z, w). */
GaussianInt gcd(GaussianInt const& z, GaussianInt const& w);

/* g = s*z + t*w with g = gcd(z, w) up to the sign conventions of canonical(). */
struct Bezout {
    GaussianInt g;
    GaussianInt s;
    GaussianInt t;
};
Bezout xgcd(GaussianInt const& z, GaussianInt const& w);

/* Largest k with pi^k | z. */
unsigned valuation(GaussianInt const& z, GaussianInt const& pi);

/*
 * Residues modulo a nonzero modulus. The representative of a class is
 * the element of least norm; ties go to the larger real part, then the
 * larger imaginary part. residue(3+2i, 2) == 1, residue(5, 4) == 1.
 */
GaussianInt residue(GaussianInt const& z, GaussianInt const& modulus);
bool congruent(GaussianInt const& a, GaussianInt const& b, GaussianInt const& modulus);

/* Strict weak order used for every residue enumeration. */
bool residue_order_less(GaussianInt const& a, GaussianInt const& b);

/* A complete residue system mod `modulus`, canonical representatives,
 * sorted by residue_order_less. Has norm(modulus) entries. */
std::vector<GaussianInt> residue_system(GaussianInt const& modulus);

struct PrimePower {
    GaussianInt prime;  // canonical
    unsigned exponent;
    friend bool operator==(PrimePower const&, PrimePower const&) = default;
};

struct Factorization {
    GaussianInt unit;
    std::vector<PrimePower> factors;  // sorted by norm, then (re, im)

    GaussianInt value() const;
};

Factorization factor(GaussianInt const& z);

bool is_prime(GaussianInt const& z);
bool is_squarefree(GaussianInt const& z);

/* Is z = t^k for some t in Z[i] (exactly, no unit slack)? */
bool is_perfect_power(GaussianInt const& z, unsigned k);

/* z = odd * even with even = (1+i)^k and gcd(odd, 1+i) = 1. */
struct OddEvenSplit {
    GaussianInt odd;
    GaussianInt even;
};
OddEvenSplit odd_even_split(GaussianInt const& z);

GaussianInt odd_part(GaussianInt const& z);
bool is_even(GaussianInt const& z);  // divisible by 1+i

/* Element of Q(i) as num/den, den > 0 and gcd(num.re, num.im, den) = 1. */
class GaussianRational {
    GaussianInt num_;
    Integer den_{1};

    void reduce();

  public:
    GaussianRational() = default;
    GaussianRational(GaussianInt num) : num_(std::move(num)) {}  // NOLINT
    GaussianRational(long v) : num_(v) {}                        // NOLINT
    GaussianRational(GaussianInt num, Integer den);
    /* z / w for Gaussian w != 0 */
    static GaussianRational quotient(GaussianInt const& z, GaussianInt const& w);

    GaussianInt const& num() const { return num_; }
    Integer const& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == 1; }
    GaussianRational conj() const { return {num_.conj(), den_}; }

    GaussianRational operator-() const { return {-num_, den_}; }
    GaussianRational& operator+=(GaussianRational const& o);
    GaussianRational& operator-=(GaussianRational const& o);
    GaussianRational& operator*=(GaussianRational const& o);
    GaussianRational& operator/=(GaussianRational const& o);

    friend GaussianRational operator+(GaussianRational a, GaussianRational const& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, GaussianRational const& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, GaussianRational const& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, GaussianRational const& b) { return a /= b; }
    friend bool operator==(GaussianRational const& a, GaussianRational const& b) {
        return a.den_ == b.den_ && a.num_ == b.num_;
    }

    std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, GaussianRational const& q);

/*
 * Radicand m = f g^2 h^3 with f, g, h pairwise coprime and square-free.
 * Units produced by normalization live in f; g and h are canonical.
 */
class Radicand {
    GaussianInt f_, g_, h_, m_;

    Radicand(GaussianInt f, GaussianInt g, GaussianInt h, GaussianInt m)
        : f_(std::move(f)), g_(std::move(g)), h_(std::move(h)), m_(std::move(m)) {}
    friend Radicand make_radicand(GaussianInt const&, GaussianInt const&, GaussianInt const&);

  public:
    GaussianInt const& f() const { return f_; }
    GaussianInt const& g() const { return g_; }
    GaussianInt const& h() const { return h_; }
    GaussianInt const& m() const { return m_; }

    GaussianInt fh() const { return f_ * h_; }
    GaussianInt gh() const { return g_ * h_; }
    GaussianInt gh2() const { return g_ * h_ * h_; }

    friend bool operator==(Radicand const& a, Radicand const& b) {
        return a.f_ == b.f_ && a.g_ == b.g_ && a.h_ == b.h_;
    }
};

/*
 * Validates and normalizes (f, g, h): units of g and h move into f.
 * Errors: SquareFree, Coprime, Degenerate (m a unit times a fourth
 * power, or m a square, i.e. [N:K] < 4).
 */
Radicand make_radicand(GaussianInt const& f, GaussianInt const& g, GaussianInt const& h);

struct RadicandDecomposition {
    Radicand radicand;
    GaussianInt fourth_root;  // t with m = t^4 * f g^2 h^3
    GaussianInt unit;         // unit of factor(m), absorbed into f
};

RadicandDecomposition decompose_radicand(GaussianInt const& m);

}  // namespace kummer

#endif  // KUMMER_GAUSSIAN_HPP_
