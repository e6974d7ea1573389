#include <doctest.h>

#include <cmath>
#include <complex>

#include "generators.hpp"
#include "kummer/quartic.hpp"
#include "kummer/samples.hpp"
#include "kummer/verifier.hpp"

using namespace kummer;
using kummer::testing::Gen;

namespace {

using C = std::complex<long double>;

GaussianInt G(char const* s) { return GaussianInt::parse(s); }

QuarticElement elem(GaussianInt const& m, std::vector<GaussianInt> num, GaussianInt const& den = 1) {
    return QuarticElement::from_numerator(m, num, den);
}

C to_c(GaussianRational const& q) {
    long double const d = q.den().get_d();
    return {q.num().re().get_d() / d, q.num().im().get_d() / d};
}

// prod_k (X - x(i^k a)) over the four conjugates a of a fixed 4th root of m
std::array<C, 5> numeric_char_poly(QuarticElement const& x) {
    C const root = std::pow(to_c(GaussianRational(x.m())), 0.25L);
    std::array<C, 5> poly{1, 0, 0, 0, 0};  // ascending, starts as the constant 1
    C ik = 1;
    for (int k = 0; k < 4; ++k, ik *= C(0, 1)) {
        C const a = ik * root;
        C v = 0, ap = 1;
        for (std::size_t j = 0; j < 4; ++j, ap *= a) v += to_c(x.coeff(j)) * ap;
        std::array<C, 5> next{};
        for (int j = 0; j < 4; ++j) {
            next[j + 1] += poly[j];
            next[j] -= v * poly[j];
        }
        poly = next;
    }
    return poly;
}

GaussianRational random_rational(Gen& gen) {
    static GaussianInt const dens[] = {1, 2, GaussianInt(1, 1), GaussianInt(2, 2), 3, GaussianInt(2, 1)};
    return GaussianRational::quotient(gen.gaussian(6), dens[gen.uniform(0, 5)]);
}

}  // namespace

TEST_CASE("multiplication") {
    GaussianInt const m = 3;
    auto const a = QuarticElement::alpha_power(m, 1);
    CHECK(a * QuarticElement::alpha_power(m, 3) == QuarticElement::constant(m, m));
    auto x = elem(m, {1, 2, G("i"), 5}, G("1+i"));
    CHECK(x * QuarticElement::constant(m, 1) == x);
    CHECK(elem(m, {1, 1}) * elem(m, {1, -1}) == elem(m, {1, 0, -1}));
    CHECK_THROWS_AS(mul(a, QuarticElement::alpha_power(5, 1)), Error);
}

TEST_CASE("characteristic polynomial examples") {
    auto p = char_poly(QuarticElement::alpha_power(3, 1));
    CHECK(p.coeffs == std::array<GaussianRational, 5>{-3, 0, 0, 0, 1});
    GaussianInt const m = G("2+i");
    auto q = char_poly(QuarticElement::alpha_power(m, 2));
    CHECK(q.coeffs == std::array<GaussianRational, 5>{m * m, 0, -2 * m, 0, 1});
    CHECK(char_poly(elem(5, {1, 1}, G("1+i"))).is_integral());
}

TEST_CASE("closed form agrees with Faddeev-LeVerrier and with the complex embeddings") {
    Gen gen(11);
    for (int k = 0; k < 2000; ++k) {
        auto const m = gen.squarefree(12) * (gen.coin() ? GaussianInt(1) : gen.nonzero(3));
        std::array<GaussianRational, 4> c;
        for (auto& v : c) v = random_rational(gen);
        QuarticElement const x(m, c);
        auto const p = char_poly(x);
        REQUIRE(p == char_poly_faddeev(x));
        if (k % 10 == 0) {
            auto const num = numeric_char_poly(x);
            for (std::size_t j = 0; j < 5; ++j) {
                C const exact = to_c(p.coeffs[j]);
                REQUIRE(std::abs(num[j] - exact) <= 1e-9L * (1 + std::abs(exact)));
            }
        }
    }
}

TEST_CASE("integrality") {
    CHECK_FALSE(is_algebraic_integer(elem(3, {1, 1}, 2)));
    CHECK(is_algebraic_integer(QuarticElement::alpha_power(3, 1)));
    for (auto const& s : case_samples()) {
        auto const r = s.radicand();
        CHECK(is_algebraic_integer(elem(r.m(), {0, 0, 0, 1}, r.gh2())));
        CHECK(is_algebraic_integer(elem(r.m(), {0, 0, 1}, r.gh())));
    }
    auto const y = elem(3, {1, 1}, 2);
    CHECK(is_integral_at(y, 3));
    CHECK_FALSE(is_integral_at(y, G("1+i")));
}

TEST_CASE("relative trace and norm") {
    GaussianInt const m = G("-5-2i");
    auto tn = rel_trace_norm(QuarticElement::alpha_power(m, 1));
    CHECK(tn.tr_nk == 0);
    // beta = (c0 + c1 a + c2 a^2 + a^3)/d has Tr_{N/M} = 2 (c0 + c2 a^2)/d
    GaussianInt const d = G("2+2i");
    auto b = rel_trace_norm(elem(m, {1, G("i"), 3, 1}, d));
    CHECK(b.tr_nm[0] == GaussianRational::quotient(2, d));
    CHECK(b.tr_nm[1] == GaussianRational::quotient(6, d));
    // beta = (b0 + b1 a + a^2)/d has N_{N/M} = ((b0^2 + m) + (2 b0 - b1^2) a^2)/d^2
    GaussianInt const b0 = G("1+i"), b1 = 3;
    auto n = rel_trace_norm(elem(m, {b0, b1, 1}, 2));
    CHECK(n.nm_nm[0] == GaussianRational::quotient(b0 * b0 + m, 4));
    CHECK(n.nm_nm[1] == GaussianRational::quotient(2 * b0 - b1 * b1, 4));

    // transitivity: Tr_{N/K} = Tr_{M/K} Tr_{N/M}, N_{N/K} = N_{M/K} N_{N/M}
    Gen gen(12);
    for (int k = 0; k < 500; ++k) {
        auto const mm = gen.squarefree(20);
        std::array<GaussianRational, 4> c;
        for (auto& v : c) v = random_rational(gen);
        auto const t = rel_trace_norm(QuarticElement(mm, c));
        REQUIRE(t.tr_nk == 2 * t.tr_nm[0]);
        REQUIRE(t.nm_nk == t.nm_nm[0] * t.nm_nm[0] - t.nm_nm[1] * t.nm_nm[1] * mm);
        REQUIRE(t.nm_nk == char_poly(QuarticElement(mm, c)).coeffs[0]);
    }
}

TEST_CASE("trace form discriminant") {
    for (auto const& s : case_samples()) {
        CAPTURE(s.label());
        auto const r = s.radicand();
        std::array<QuarticElement, 4> power{QuarticElement::alpha_power(r.m(), 0), QuarticElement::alpha_power(r.m(), 1),
                                            QuarticElement::alpha_power(r.m(), 2), QuarticElement::alpha_power(r.m(), 3)};
        auto const dp = trace_form_disc(power);
        REQUIRE(dp.is_integral());
        // disc(a) = N(4 a^3) = 256 m^3 up to sign
        CHECK(associates(dp.num(), 256 * pow(r.m(), 3)));
        auto const basis = build_basis(r).elements(r.m());
        auto const db = trace_form_disc(basis);
        REQUIRE(db.is_integral());
        CHECK(associates(db.num(), field_discriminant(r)));
    }
    auto const a = QuarticElement::alpha_power(3, 1);
    std::array<QuarticElement, 2> dependent{a, a * GaussianRational(5)};
    CHECK(trace_form_disc(dependent).is_zero());
}

TEST_CASE("denominator search") {
    auto const r3 = make_radicand(3, 1, 1);
    CHECK(max_denominator(r3, 1, oracle_search_bound(r3)).d == 1);
    auto const r5 = make_radicand(5, 1, 1);
    auto const d1 = max_denominator(r5, 1, oracle_search_bound(r5));
    CHECK(d1.d == G("1+i"));
    CHECK(d1.coeffs == std::vector<GaussianInt>{1});
    CHECK(max_denominator(r5, 3, oracle_search_bound(r5)).d == G("2+2i"));
    CHECK_THROWS_AS(max_denominator(r5, 3, oracle_search_bound(r5), SearchOptions{2}), BudgetExceeded);
}

TEST_CASE("oracle basis") {
    CHECK(normalized_basis_oracle(make_radicand(G("2+i"), 1, 1)).d == std::array<GaussianInt, 3>{1, 1, 1});
    CHECK(normalized_basis_oracle(make_radicand(3, 1, 1)).d == std::array<GaussianInt, 3>{1, 2, 2});
    CHECK(normalized_basis_oracle(make_radicand(5, 1, 1)).d == std::array<GaussianInt, 3>{G("1+i"), 2, G("2+2i")});
    for (auto const* f : {"-5-2i", "1+2i", "-1+2i"}) {
        CAPTURE(f);
        auto const r = make_radicand(G(f), G(f) == G("-1+2i") ? G("1+i") : GaussianInt(1), 1);
        auto const ob = normalized_basis_oracle(r);
        CHECK(check_theorem_one(r, ob).all());
        CHECK(same_denominators(ob, build_basis(r)));
    }
}

TEST_CASE("Theorem 1 checks reject a non-maximal basis") {
    auto const r = make_radicand(5, 1, 1);
    NormalizedBasis power;
    auto const t = check_theorem_one(r, power);
    CHECK(t.integral);
    CHECK_FALSE(t.maximal);
    CHECK_FALSE(basis_is_maximal(r, power));
    NormalizedBasis bad = build_basis(r);
    bad.d[0] = 2;
    CHECK_FALSE(basis_is_integral(r, bad));
}
