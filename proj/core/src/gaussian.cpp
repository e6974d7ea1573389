#include "kummer/gaussian.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "integer_factor.hpp"

namespace kummer {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::Domain: return "DOMAIN";
        case ErrorCode::Parse: return "PARSE";
        case ErrorCode::SquareFree: return "SQUAREFREE";
        case ErrorCode::Coprime: return "COPRIME";
        case ErrorCode::Degenerate: return "DEGENERATE";
        case ErrorCode::Unclassified: return "UNCLASSIFIED";
        case ErrorCode::Internal: return "INTERNAL";
        case ErrorCode::Budget: return "BUDGET";
        case ErrorCode::Hypothesis: return "HYPOTHESIS";
    }
    return "UNKNOWN";
}

namespace {

std::array<GaussianInt, 4> const kUnits{GaussianInt(1), GaussianInt(0, 1), GaussianInt(-1),
                                         GaussianInt(0, -1)};

/* round(a/n) for n > 0, halves rounded up */
Integer round_div(Integer const& a, Integer const& n) {
    Integer num = 2 * a + n;
    Integer den = 2 * n;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Integer floor_div(Integer const& a, Integer const& n) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return q;
}

bool parse_integer(std::string const& s, Integer& out) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t k = start; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    std::string digits = s[0] == '+' ? s.substr(1) : s;
    return out.set_str(digits, 10) == 0;
}

}  // namespace

GaussianInt GaussianInt::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(ErrorCode::Parse, "empty Gaussian integer");

    auto fail = [&]() -> GaussianInt {
        throw Error(ErrorCode::Parse, "malformed Gaussian integer '" + std::string(text) + "'");
    };

    if (s.back() != 'i') {
        Integer re;
        if (!parse_integer(s, re)) return fail();
        return {re, 0};
    }
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    std::string re_text = split == std::string::npos ? "" : s.substr(0, split);
    std::string im_text = split == std::string::npos ? s : s.substr(split);
    Integer re = 0, im;
    if (!re_text.empty() && !parse_integer(re_text, re)) return fail();
    if (im_text.empty() || im_text == "+")
        im = 1;
    else if (im_text == "-")
        im = -1;
    else if (!parse_integer(im_text, im))
        return fail();
    return {re, im};
}

bool GaussianInt::is_unit() const {
    return (abs(re_) == 1 && im_ == 0) || (re_ == 0 && abs(im_) == 1);
}

GaussianInt& GaussianInt::operator+=(GaussianInt const& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianInt& GaussianInt::operator-=(GaussianInt const& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianInt& GaussianInt::operator*=(GaussianInt const& o) {
    Integer re = re_ * o.re_ - im_ * o.im_;
    Integer im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string GaussianInt::to_string() const {
    if (im_ == 0) return re_.get_str();
    std::string out;
    if (re_ != 0) out = re_.get_str();
    if (im_ > 0 && re_ != 0) out += '+';
    if (im_ == 1)
        out += "i";
    else if (im_ == -1)
        out += "-i";
    else
        out += im_.get_str() + "i";
    return out;
}

std::ostream& operator<<(std::ostream& os, GaussianInt const& z) { return os << z.to_string(); }

Integer norm(GaussianInt const& z) { return z.re() * z.re() + z.im() * z.im(); }

GaussianInt canonical(GaussianInt const& z) {
    if (z.is_zero()) return z;
    for (auto const& u : kUnits) {
        GaussianInt w = z * u;
        if (w.re() > 0 && w.im() >= 0) return w;
    }
    return z;  // unreachable
}

GaussianInt unit_part(GaussianInt const& z) {
    if (z.is_zero()) throw Error(ErrorCode::Domain, "unit_part of zero");
    // z = u * c  <=>  u = z * conj(c) / norm(c)
    GaussianInt c = canonical(z);
    return divexact(z, c);
}

bool associates(GaussianInt const& a, GaussianInt const& b) { return canonical(a) == canonical(b); }

GaussianInt pow(GaussianInt const& z, unsigned long e) {
    GaussianInt result(1), base = z;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::pair<GaussianInt, GaussianInt> divmod(GaussianInt const& z, GaussianInt const& d) {
    if (d.is_zero()) throw Error(ErrorCode::Domain, "division by zero");
    Integer n = norm(d);
    GaussianInt x = z * d.conj();
    GaussianInt q(round_div(x.re(), n), round_div(x.im(), n));
    return {q, z - q * d};
}

bool divides(GaussianInt const& d, GaussianInt const& z) {
    if (d.is_zero()) return z.is_zero();
    Integer n = norm(d);
    GaussianInt x = z * d.conj();
    return mpz_divisible_p(x.re().get_mpz_t(), n.get_mpz_t()) &&
           mpz_divisible_p(x.im().get_mpz_t(), n.get_mpz_t());
}

GaussianInt divexact(GaussianInt const& z, GaussianInt const& d) {
    if (d.is_zero()) throw Error(ErrorCode::Domain, "division by zero");
    Integer n = norm(d);
    GaussianInt x = z * d.conj();
    if (!mpz_divisible_p(x.re().get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(x.im().get_mpz_t(), n.get_mpz_t()))
        throw Error(ErrorCode::Domain, d.to_string() + " does not divide " + z.to_string());
    Integer re, im;
    mpz_divexact(re.get_mpz_t(), x.re().get_mpz_t(), n.get_mpz_t());
    mpz_divexact(im.get_mpz_t(), x.im().get_mpz_t(), n.get_mpz_t());
    return {re, im};
}

GaussianInt gcd(GaussianInt const& z, GaussianInt const& w) {
    if (z.is_zero() && w.is_zero()) throw Error(ErrorCode::Domain, "gcd(0, 0)");
    GaussianInt a = z, b = w;
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return canonical(a);
}

Bezout xgcd(GaussianInt const& z, GaussianInt const& w) {
    if (z.is_zero() && w.is_zero()) throw Error(ErrorCode::Domain, "xgcd(0, 0)");
    GaussianInt a = z, b = w;
    GaussianInt s0(1), s1(0), t0(0), t1(1);
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        GaussianInt s2 = s0 - q * s1;
        GaussianInt t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    GaussianInt u = unit_part(a);
    GaussianInt uinv = u.conj();
    return {a * uinv, s0 * uinv, t0 * uinv};
}

unsigned valuation(GaussianInt const& z, GaussianInt const& pi) {
    if (z.is_zero()) throw Error(ErrorCode::Domain, "valuation of zero");
    if (pi.is_zero() || pi.is_unit())
        throw Error(ErrorCode::Domain, "valuation at non-prime " + pi.to_string());
    unsigned k = 0;
    GaussianInt x = z;
    while (divides(pi, x)) {
        x = divexact(x, pi);
        ++k;
    }
    return k;
}

bool residue_order_less(GaussianInt const& a, GaussianInt const& b) {
    Integer na = norm(a), nb = norm(b);
    if (na != nb) return na < nb;
    if (a.re() != b.re()) return a.re() > b.re();
    return a.im() > b.im();
}

GaussianInt residue(GaussianInt const& z, GaussianInt const& modulus) {
    if (modulus.is_zero()) throw Error(ErrorCode::Domain, "residue modulo zero");
    Integer n = norm(modulus);
    GaussianInt x = z * modulus.conj();
    Integer re0 = floor_div(x.re(), n), im0 = floor_div(x.im(), n);
    GaussianInt best;
    bool have = false;
    for (int dr = 0; dr <= 1; ++dr)
        for (int di = 0; di <= 1; ++di) {
            GaussianInt q(re0 + dr, im0 + di);
            GaussianInt r = z - q * modulus;
            if (!have || residue_order_less(r, best)) {
                best = std::move(r);
                have = true;
            }
        }
    return best;
}

bool congruent(GaussianInt const& a, GaussianInt const& b, GaussianInt const& modulus) {
    if (modulus.is_zero()) throw Error(ErrorCode::Domain, "congruence modulo zero");
    return divides(modulus, a - b);
}

std::vector<GaussianInt> residue_system(GaussianInt const& modulus) {
    if (modulus.is_zero()) throw Error(ErrorCode::Domain, "residue system modulo zero");
    Integer n = norm(modulus);
    Integer g = gcd(modulus.re(), modulus.im());
    Integer width = n / g;
    std::vector<GaussianInt> out;
    out.reserve(n.get_ui());
    for (Integer y = 0; y < g; ++y)
        for (Integer x = 0; x < width; ++x) out.push_back(residue(GaussianInt(x, y), modulus));
    std::sort(out.begin(), out.end(), residue_order_less);
    return out;
}

GaussianInt Factorization::value() const {
    GaussianInt v = unit;
    for (auto const& pp : factors) v *= pow(pp.prime, pp.exponent);
    return v;
}

Factorization factor(GaussianInt const& z) {
    if (z.is_zero()) throw Error(ErrorCode::Domain, "factor(0)");
    Factorization out;
    GaussianInt rest = z;
    for (auto const& [p, e] : detail::factor_integer(norm(z))) {
        std::vector<GaussianInt> primes;
        if (p == 2) {
            primes.push_back(GaussianInt::one_plus_i());
        } else if (p % 4 == 3) {
            primes.push_back(GaussianInt(p));
        } else {
            Integer s = detail::sqrt_minus_one(p);
            GaussianInt pi = gcd(GaussianInt(p), GaussianInt(s, 1));
            primes.push_back(pi);
            primes.push_back(canonical(pi.conj()));
        }
        for (auto const& pi : primes) {
            unsigned k = valuation(rest, pi);
            if (k == 0) continue;
            rest = divexact(rest, pow(pi, k));
            out.factors.push_back({pi, k});
        }
    }
    if (!rest.is_unit()) throw Error(ErrorCode::Internal, "factorization left cofactor " + rest.to_string());
    out.unit = rest;
    std::sort(out.factors.begin(), out.factors.end(), [](PrimePower const& a, PrimePower const& b) {
        Integer na = norm(a.prime), nb = norm(b.prime);
        if (na != nb) return na < nb;
        if (a.prime.re() != b.prime.re()) return a.prime.re() < b.prime.re();
        return a.prime.im() < b.prime.im();
    });
    return out;
}

bool is_prime(GaussianInt const& z) {
    if (z.is_zero() || z.is_unit()) return false;
    Integer n = norm(z);
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) return true;
    // inert rational prime p = 3 (mod 4), up to unit
    GaussianInt c = canonical(z);
    return c.im() == 0 && c.re() % 4 == 3 && mpz_probab_prime_p(c.re().get_mpz_t(), 30);
}

bool is_squarefree(GaussianInt const& z) {
    if (z.is_zero()) return false;
    auto fz = factor(z);
    return std::all_of(fz.factors.begin(), fz.factors.end(),
                       [](PrimePower const& pp) { return pp.exponent == 1; });
}

bool is_perfect_power(GaussianInt const& z, unsigned k) {
    if (k == 0) return z == GaussianInt(1);
    if (z.is_zero()) return true;
    auto fz = factor(z);
    GaussianInt root(1);
    for (auto const& pp : fz.factors) {
        if (pp.exponent % k) return false;
        root *= pow(pp.prime, pp.exponent / k);
    }
    // z = unit * root^k ; need unit = w^k for a unit w
    return std::any_of(kUnits.begin(), kUnits.end(),
                       [&](GaussianInt const& w) { return pow(w, k) == fz.unit; });
}

OddEvenSplit odd_even_split(GaussianInt const& z) {
    if (z.is_zero()) throw Error(ErrorCode::Domain, "odd/even split of zero");
    unsigned k = valuation(z, GaussianInt::one_plus_i());
    GaussianInt even = pow(GaussianInt::one_plus_i(), k);
    return {divexact(z, even), even};
}

GaussianInt odd_part(GaussianInt const& z) { return odd_even_split(z).odd; }

bool is_even(GaussianInt const& z) { return divides(GaussianInt::one_plus_i(), z); }

GaussianRational::GaussianRational(GaussianInt num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw Error(ErrorCode::Domain, "zero denominator");
    reduce();
}

GaussianRational GaussianRational::quotient(GaussianInt const& z, GaussianInt const& w) {
    if (w.is_zero()) throw Error(ErrorCode::Domain, "division by zero");
    return {z * w.conj(), norm(w)};
}

void GaussianRational::reduce() {
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    Integer g = gcd(gcd(num_.re(), num_.im()), den_);
    if (g != 1) {
        Integer re, im;
        mpz_divexact(re.get_mpz_t(), num_.re().get_mpz_t(), g.get_mpz_t());
        mpz_divexact(im.get_mpz_t(), num_.im().get_mpz_t(), g.get_mpz_t());
        num_ = GaussianInt(re, im);
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

GaussianRational& GaussianRational::operator+=(GaussianRational const& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * GaussianInt(o.den_) + o.num_ * GaussianInt(den_);
        den_ *= o.den_;
    }
    reduce();
    return *this;
}

GaussianRational& GaussianRational::operator-=(GaussianRational const& o) { return *this += -o; }

GaussianRational& GaussianRational::operator*=(GaussianRational const& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

GaussianRational& GaussianRational::operator/=(GaussianRational const& o) {
    if (o.is_zero()) throw Error(ErrorCode::Domain, "division by zero");
    // (a/b) / (c/d) = a d conj(c) / (b |c|^2)
    num_ = num_ * GaussianInt(o.den_) * o.num_.conj();
    den_ *= norm(o.num_);
    reduce();
    return *this;
}

std::string GaussianRational::to_string() const {
    if (den_ == 1) return num_.to_string();
    std::string n = num_.to_string();
    bool compound = num_.re() != 0 && num_.im() != 0;
    return (compound ? "(" + n + ")" : n) + "/" + den_.get_str();
}

std::ostream& operator<<(std::ostream& os, GaussianRational const& q) { return os << q.to_string(); }

Radicand make_radicand(GaussianInt const& f, GaussianInt const& g, GaussianInt const& h) {
    if (f.is_zero() || g.is_zero() || h.is_zero())
        throw Error(ErrorCode::Degenerate, "radicand has a zero factor");
    auto coprime = [](GaussianInt const& a, GaussianInt const& b) { return gcd(a, b) == GaussianInt(1); };
    if (!coprime(f, g) || !coprime(f, h) || !coprime(g, h))
        throw Error(ErrorCode::Coprime, "f, g, h are not pairwise coprime: (" + f.to_string() + ", " +
                                            g.to_string() + ", " + h.to_string() + ")");
    for (auto const* z : {&f, &g, &h})
        if (!is_squarefree(*z)) throw Error(ErrorCode::SquareFree, z->to_string() + " is not square-free");

    GaussianInt ug = unit_part(g), uh = unit_part(h);
    GaussianInt fn = f * ug * ug * uh * uh * uh;
    GaussianInt gn = canonical(g), hn = canonical(h);
    GaussianInt m = fn * gn * gn * hn * hn * hn;

    if (f.is_unit() && g.is_unit() && h.is_unit())
        throw Error(ErrorCode::Degenerate, "m = " + m.to_string() + " is a unit times a fourth power");
    // f, h units and f in {1, -1}: m = (+-1) g^2 is a square, so [N:K] = 2
    if (f.is_unit() && h.is_unit() && fn.im() == 0)
        throw Error(ErrorCode::Degenerate, "m = " + m.to_string() + " is a square in Z[i]");
    return {fn, gn, hn, m};
}

RadicandDecomposition decompose_radicand(GaussianInt const& m) {
    if (m.is_zero()) throw Error(ErrorCode::Degenerate, "m = 0");
    auto fm = factor(m);
    GaussianInt t(1), f(1), g(1), h(1);
    for (auto const& [pi, e] : fm.factors) {
        t *= pow(pi, e / 4);
        switch (e % 4) {
            case 1: f *= pi; break;
            case 2: g *= pi; break;
            case 3: h *= pi; break;
            default: break;
        }
    }
    Radicand r = make_radicand(fm.unit * f, g, h);
    if (pow(t, 4) * r.m() != m)
        throw Error(ErrorCode::Internal, "radicand decomposition does not reproduce " + m.to_string());
    return {r, t, fm.unit};
}

}  // namespace kummer
