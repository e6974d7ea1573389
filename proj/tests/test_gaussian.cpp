#include <doctest.h>

#include "kummer/gaussian.hpp"

using namespace kummer;

namespace {

GaussianInt G(char const* s) { return GaussianInt::parse(s); }

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (Error const& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("parse and print") {
    CHECK(G("3+2i") == GaussianInt(3, 2));
    CHECK(G("-i") == GaussianInt(0, -1));
    CHECK(G(" 4 - 7i ") == GaussianInt(4, -7));
    CHECK(G("5i") == GaussianInt(0, 5));
    CHECK(G("-12") == GaussianInt(-12));
    for (char const* s : {"0", "1", "-1", "i", "-i", "3+2i", "-5-2i", "7i", "12345678901234567890-3i"})
        CHECK(G(s).to_string() == s);
    for (char const* bad : {"", "3+", "i3", "2ii", "x", "1+2j", "--1"})
        CHECK(code_of([&] { G(bad); }) == ErrorCode::Parse);
}

TEST_CASE("norm") {
    CHECK(norm(G("1+i")) == 2);
    CHECK(norm(0) == 0);
    CHECK(norm(G("3+2i")) == 13);
}

TEST_CASE("canonical associates") {
    for (GaussianInt z : {G("3+2i"), G("-3-2i"), G("2-3i"), G("-2+3i")}) {
        CHECK(canonical(z) == G("3+2i"));
        CHECK(unit_part(z) * canonical(z) == z);
    }
    CHECK(canonical(G("-5")) == 5);
    CHECK(canonical(G("-4i")) == 4);
    CHECK(associates(G("1-i"), G("1+i")));
    CHECK_FALSE(associates(G("2+i"), G("2-i")));
}

TEST_CASE("division") {
    auto [q, r] = divmod(G("7+5i"), G("2+i"));
    CHECK(q * G("2+i") + r == G("7+5i"));
    CHECK(2 * norm(r) <= norm(G("2+i")));
    CHECK(divexact(5, G("2+i")) == G("2-i"));
    CHECK(code_of([] { divexact(3, G("1+i")); }) == ErrorCode::Domain);
    CHECK(code_of([] { divmod(3, 0); }) == ErrorCode::Domain);
}

TEST_CASE("gcd") {
    CHECK(gcd(G("3+2i"), 0) == G("3+2i"));
    CHECK(gcd(G("-3-2i"), 0) == G("3+2i"));
    CHECK(gcd(2, G("1+i")) == G("1+i"));
    CHECK(gcd(5, G("2+i")) == G("2+i"));
    CHECK(gcd(3, G("2+i")) == 1);
    CHECK(code_of([] { gcd(0, 0); }) == ErrorCode::Domain);
    auto b = xgcd(G("11+3i"), G("1+8i"));
    CHECK(b.s * G("11+3i") + b.t * G("1+8i") == b.g);
}

TEST_CASE("factor") {
    auto two = factor(2);
    CHECK(two.unit == G("-i"));
    REQUIRE(two.factors.size() == 1);
    CHECK(two.factors[0] == PrimePower{G("1+i"), 2});

    auto five = factor(5);
    REQUIRE(five.factors.size() == 2);
    CHECK(five.factors[0].exponent == 1);
    CHECK(five.factors[1].exponent == 1);
    CHECK(associates(five.factors[0].prime * five.factors[1].prime, 5));
    CHECK(five.value() == 5);

    auto nine = factor(9);
    REQUIRE(nine.factors.size() == 1);
    CHECK(nine.factors[0] == PrimePower{3, 2});
    CHECK(nine.unit == 1);

    CHECK(code_of([] { factor(0); }) == ErrorCode::Domain);

    // a norm beyond 64 bits still factors when its primes are small
    GaussianInt big = pow(G("2+i"), 20) * pow(G("1+4i"), 15) * 7;
    CHECK(factor(big).value() == big);
}

TEST_CASE("primality and square-freeness") {
    CHECK(is_prime(G("1+i")));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(5));
    CHECK(is_prime(G("2+i")));
    CHECK_FALSE(is_prime(1));
    CHECK(is_squarefree(G("1+i")));
    CHECK_FALSE(is_squarefree(2));
    CHECK_FALSE(is_squarefree(9));
    CHECK(is_squarefree(15));
    CHECK(is_perfect_power(G("-4"), 4));  // (1+i)^4
    CHECK_FALSE(is_perfect_power(4, 4));
    CHECK(is_perfect_power(pow(G("2+i"), 4), 4));
}

TEST_CASE("odd/even split") {
    auto a = odd_even_split(3);
    CHECK(a.odd == 3);
    CHECK(a.even == 1);
    auto b = odd_even_split(2);
    CHECK(b.odd == G("-i"));
    CHECK(b.even == pow(G("1+i"), 2));
    auto c = odd_even_split(G("6+6i"));
    CHECK(c.odd * c.even == G("6+6i"));
    CHECK(c.even == pow(G("1+i"), 3));
    CHECK(associates(c.odd, 3));
    CHECK(code_of([] { odd_even_split(0); }) == ErrorCode::Domain);
}

TEST_CASE("valuation") {
    CHECK(valuation(4, G("1+i")) == 4);
    CHECK(valuation(3, G("1+i")) == 0);
    CHECK(valuation(pow(G("1+i"), 16) * pow(GaussianInt(3), 9), G("1+i")) == 16);
    CHECK(valuation(pow(G("1+i"), 16) * pow(GaussianInt(3), 9), 3) == 9);
    CHECK(code_of([] { valuation(0, 3); }) == ErrorCode::Domain);
    CHECK(code_of([] { valuation(3, G("i")); }) == ErrorCode::Domain);
}

TEST_CASE("residue") {
    CHECK(residue(5, 4) == 1);
    CHECK(residue(G("3+2i"), 2) == 1);
    CHECK(residue(G("3+2i") + 2, 2) == residue(G("3+2i"), 2));
    CHECK(residue(G("1+i"), G("1+i")) == 0);
    CHECK(residue_system(G("1+i")) == std::vector<GaussianInt>{0, 1});
    CHECK(residue_system(2).size() == 4);
    CHECK(residue_system(G("2+2i")).size() == 8);
    CHECK(code_of([] { residue(3, 0); }) == ErrorCode::Domain);
}

TEST_CASE("rationals") {
    auto q = GaussianRational::quotient(1, G("1+i"));
    CHECK(q == GaussianRational(G("1-i"), 2));
    CHECK(q * G("1+i") == GaussianRational(1));
    CHECK(GaussianRational(G("2+4i"), 6) == GaussianRational(G("1+2i"), 3));
    CHECK((q + q.conj()) == GaussianRational(1));
    CHECK(code_of([] { GaussianRational(1, 0); }) == ErrorCode::Domain);
}

TEST_CASE("make_radicand") {
    auto r = make_radicand(3, 1, 1);
    CHECK(r.m() == 3);
    CHECK(code_of([] { make_radicand(2, 2, 1); }) == ErrorCode::Coprime);
    CHECK(code_of([] { make_radicand(4, 1, 1); }) == ErrorCode::SquareFree);
    CHECK(code_of([] { make_radicand(1, 1, 1); }) == ErrorCode::Degenerate);
    CHECK(code_of([] { make_radicand(G("i"), 1, 1); }) == ErrorCode::Degenerate);
    CHECK(code_of([] { make_radicand(1, 3, 1); }) == ErrorCode::Degenerate);  // m = 9 is a square
    CHECK(code_of([] { make_radicand(0, 1, 1); }) == ErrorCode::Degenerate);

    // units of g and h move into f
    auto s = make_radicand(3, G("-1-i"), G("-i"));
    CHECK(s.g() == G("1+i"));
    CHECK(s.h() == 1);
    CHECK(s.m() == 3 * pow(G("-1-i"), 2) * pow(G("-i"), 3));
}

TEST_CASE("decompose_radicand") {
    auto three = decompose_radicand(3);
    CHECK(three.radicand.f() == 3);
    CHECK(three.radicand.g() == 1);
    CHECK(three.radicand.h() == 1);
    CHECK(three.fourth_root == 1);

    auto twelve = decompose_radicand(12);
    CHECK(twelve.radicand.f() == -3);
    CHECK(twelve.radicand.g() == 1);
    CHECK(twelve.radicand.h() == 1);
    CHECK(associates(twelve.fourth_root, G("1+i")));
    CHECK(pow(twelve.fourth_root, 4) * twelve.radicand.m() == 12);

    auto fifty = decompose_radicand(50);
    CHECK(fifty.radicand.f().is_unit());
    CHECK(associates(fifty.radicand.g(), G("5+5i")));
    CHECK(fifty.radicand.h() == 1);

    CHECK(code_of([] { decompose_radicand(16); }) == ErrorCode::Degenerate);
    CHECK(code_of([] { decompose_radicand(0); }) == ErrorCode::Degenerate);
}
