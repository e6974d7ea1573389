#include "integer_factor.hpp"

#include <algorithm>
#include <map>

namespace kummer::detail {

namespace {

bool is_probable_prime(mpz_class const& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

/* Brent's variant; c walks deterministically so results are reproducible. */
mpz_class pollard_brent(mpz_class const& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, x, ys, q = 1, g = 1;
        unsigned long r = 1;
        unsigned long const m = 128;
        auto step = [&](mpz_class& v) {
            v = v * v + c;
            v %= n;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) step(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    step(y);
                    mpz_class diff = x - y;
                    q = (q * abs(diff)) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                step(ys);
                mpz_class diff = x - ys;
                g = gcd(abs(diff), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(mpz_class const& n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_brent(n);
    split(d, out);
    split(n / d, out);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n) {
    std::map<mpz_class, unsigned> found;
    if (n < 0) n = -n;
    if (n == 0) return {};
    for (unsigned long p : {2UL, 3UL, 5UL}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++found[mpz_class(p)];
            n /= p;
        }
    }
    // wheel over 7..10^4
    for (unsigned long p = 7; p < 10000 && mpz_class(p) * p <= n; p += 2) {
        if (p % 3 == 0 || p % 5 == 0) continue;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++found[mpz_class(p)];
            n /= p;
        }
    }
    split(n, found);
    return {found.begin(), found.end()};
}

mpz_class sqrt_minus_one(mpz_class const& p) {
    mpz_class const e = (p - 1) / 4;
    mpz_class s;
    for (unsigned long c = 2;; ++c) {
        mpz_class base = c;
        mpz_powm(s.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        if ((s * s + 1) % p == 0) return s;
    }
}

}  // namespace kummer::detail
