#include <doctest.h>

#include "generators.hpp"
#include "kummer/gaussian.hpp"
#include "kummer/quadratic.hpp"
#include "kummer/quartic.hpp"

using namespace kummer;
using kummer::testing::Gen;
using kummer::testing::kPropertyChecks;

namespace {

bool int_prime(Integer const& n) {
    if (n < 2) return false;
    for (Integer d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Gaussian primes: norm a rational prime, or an associate of a rational prime 3 mod 4
bool gaussian_prime_by_norm(GaussianInt const& z) {
    Integer const n = norm(z);
    if (int_prime(n)) return true;
    GaussianInt const c = canonical(z);
    return c.im() == 0 && int_prime(c.re()) && c.re() % 4 == 3;
}

}  // namespace

TEST_CASE("norm is multiplicative") {
    Gen gen(1);
    for (int k = 0; k < kPropertyChecks; ++k) {
        auto z = gen.gaussian(1'000'000), w = gen.gaussian(1'000'000);
        REQUIRE(norm(z * w) == norm(z) * norm(w));
    }
}

TEST_CASE("gcd laws") {
    Gen gen(2);
    for (int k = 0; k < kPropertyChecks; ++k) {
        auto c = gen.nonzero(40);
        auto z = c * gen.gaussian(200), w = c * gen.nonzero(200);
        auto g = gcd(z, w);
        REQUIRE(g == canonical(g));
        REQUIRE(divides(g, z));
        REQUIRE(divides(g, w));
        REQUIRE(divides(c, g));
        REQUIRE(gcd(divexact(z, g), divexact(w, g)) == 1);
        REQUIRE(gcd(w, z) == g);
        REQUIRE(gcd(z * gen.unit(), w) == g);
        auto b = xgcd(z, w);
        REQUIRE(b.g == g);
        REQUIRE(b.s * z + b.t * w == g);
    }
}

TEST_CASE("factor round trip") {
    Gen gen(3);
    for (int k = 0; k < kPropertyChecks; ++k) {
        auto z = gen.nonzero(10'000);  // norm <= 2e8
        auto fz = factor(z);
        REQUIRE(fz.unit.is_unit());
        REQUIRE(fz.value() == z);
        for (std::size_t j = 0; j < fz.factors.size(); ++j) {
            auto const& [p, e] = fz.factors[j];
            REQUIRE(e >= 1);
            REQUIRE(p == canonical(p));
            REQUIRE(gaussian_prime_by_norm(p));
            if (j > 0) REQUIRE_FALSE(associates(p, fz.factors[j - 1].prime));
        }
    }
}

TEST_CASE("residue congruence laws") {
    Gen gen(4);
    for (int k = 0; k < kPropertyChecks; ++k) {
        auto n = gen.nonzero(60);
        auto a = gen.gaussian(5000), b = gen.gaussian(5000);
        auto ra = residue(a, n);
        REQUIRE(congruent(ra, a, n));
        REQUIRE(2 * norm(ra) <= norm(n));
        REQUIRE(residue(a + n * gen.gaussian(100), n) == ra);
        REQUIRE(residue(a, n * gen.unit()) == ra);
        REQUIRE(residue(ra, n) == ra);
        REQUIRE(congruent(residue(a + b, n), ra + residue(b, n), n));
        REQUIRE(congruent(residue(a * b, n), ra * residue(b, n), n));
    }
}

TEST_CASE("residue systems are complete") {
    Gen gen(5);
    for (int k = 0; k < 300; ++k) {
        auto n = gen.nonzero(6);
        auto sys = residue_system(n);
        REQUIRE(Integer(static_cast<unsigned long>(sys.size())) == norm(n));
        for (std::size_t x = 0; x < sys.size(); ++x) {
            REQUIRE(residue(sys[x], n) == sys[x]);
            for (std::size_t y = x + 1; y < sys.size(); ++y) REQUIRE_FALSE(congruent(sys[x], sys[y], n));
        }
    }
}

TEST_CASE("valuation is additive") {
    Gen gen(6);
    GaussianInt const primes[] = {GaussianInt(1, 1), GaussianInt(2, 1), GaussianInt(1, 2), 3, GaussianInt(3, 2)};
    for (int k = 0; k < kPropertyChecks; ++k) {
        auto z = gen.nonzero(3000), w = gen.nonzero(3000);
        auto const& p = primes[gen.uniform(0, 4)];
        REQUIRE(valuation(z * w, p) == valuation(z, p) + valuation(w, p));
        auto const v = valuation(z, p);
        REQUIRE(divides(pow(p, v), z));
        REQUIRE_FALSE(divides(pow(p, v + 1), z));
    }
}

TEST_CASE("decompose_radicand invariants") {
    Gen gen(7);
    int decomposed = 0;
    for (int k = 0; k < kPropertyChecks; ++k) {
        auto m = gen.nonzero(40) * gen.nonzero(40);
        if (gen.coin()) m *= pow(gen.nonzero(3), 4);
        RadicandDecomposition d{make_radicand(3, 1, 1), 1, 1};
        try {
            d = decompose_radicand(m);
        } catch (Error const& e) {
            REQUIRE(e.code() == ErrorCode::Degenerate);
            continue;
        }
        ++decomposed;
        auto const& r = d.radicand;
        REQUIRE(pow(d.fourth_root, 4) * r.f() * r.g() * r.g() * pow(r.h(), 3) == m);
        REQUIRE(r.g() == canonical(r.g()));
        REQUIRE(r.h() == canonical(r.h()));
        REQUIRE(gcd(r.f(), r.g()) == 1);
        REQUIRE(gcd(r.f(), r.h()) == 1);
        REQUIRE(gcd(r.g(), r.h()) == 1);
        for (auto const* z : {&r.f(), &r.g(), &r.h()}) REQUIRE((z->is_unit() || is_squarefree(*z)));
    }
    CHECK(decomposed > kPropertyChecks / 2);
}

TEST_CASE("quadratic basis is integral and maximal on random fh") {
    Gen gen(8);
    int seen[5] = {};
    for (int k = 0; k < kPropertyChecks; ++k) {
        auto fh = gen.squarefree(80);
        auto q = quadratic_basis(fh);
        ++seen[static_cast<int>(q.row)];
        REQUIRE(is_integral_quadratic(GaussianRational::quotient(q.a, q.d1), GaussianRational::quotient(1, q.d1), fh));
        // residues a' mod (1+i) d1 enumerated here, not by the library
        GaussianInt const den = GaussianInt(1, 1) * q.d1;
        for (auto const& a : residue_system(den))
            REQUIRE_FALSE(is_integral_quadratic(GaussianRational::quotient(a, den), GaussianRational::quotient(1, den), fh));
        REQUIRE(associates(q.disc * q.d1 * q.d1, 4 * fh));
    }
    for (int row : seen) CHECK(row > 0);
}

TEST_CASE("every random radicand is classified") {
    Gen gen(9);
    int seen[kCaseRowCount + 1] = {};
    for (int k = 0; k < kPropertyChecks; ++k) {
        auto f = gen.squarefree(30), g = gen.coin() ? GaussianInt(1) : gen.squarefree(10),
             h = gen.coin() ? GaussianInt(1) : gen.squarefree(10);
        if (gen.coin()) f *= gen.unit();
        Radicand r = make_radicand(3, 1, 1);
        try {
            r = make_radicand(f, g, h);
        } catch (Error const& e) {
            REQUIRE(e.code() != ErrorCode::Internal);
            continue;
        }
        auto const rows = matching_rows(r);
        REQUIRE_FALSE(rows.empty());
        auto const row = classify_case(r);
        REQUIRE(std::find(rows.begin(), rows.end(), row) != rows.end());
        ++seen[row_number(row)];
    }
    for (int n = 1; n <= kCaseRowCount; ++n) CHECK_MESSAGE(seen[n] > 0, "row ", n);
}
