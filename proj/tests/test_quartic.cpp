#include <doctest.h>

#include "kummer/quartic.hpp"
#include "kummer/samples.hpp"
#include "kummer/verifier.hpp"

using namespace kummer;

namespace {

GaussianInt G(char const* s) { return GaussianInt::parse(s); }

GaussianInt pow_disc(Radicand const& r) {
    return pow(GaussianInt(1, 1), 16) * pow(r.f(), 3) * pow(r.g(), 6) * pow(r.h(), 9);
}

}  // namespace

TEST_CASE("classification tags") {
    CHECK(to_string(classify_case(make_radicand(3, 1, 1))) == "m≡3 mod 4");
    CHECK(to_string(classify_case(make_radicand(5, 1, 1))) == "m≡5 or 5+4i mod 8");
    CHECK(to_string(classify_case(make_radicand(G("1+i"), 1, 1))) == "f even/h even/m≡i mod 2");
    for (int n = 1; n <= kCaseRowCount; ++n) CHECK(row_number(case_row_from_number(n)) == n);
}

TEST_CASE("samples land in their rows") {
    int per_row[kCaseRowCount + 1] = {};
    for (auto const& s : case_samples()) {
        CAPTURE(s.label());
        CHECK(classify_case(s.radicand()) == s.row);
        ++per_row[row_number(s.row)];
    }
    for (int n = 1; n <= kCaseRowCount; ++n) CHECK(per_row[n] >= 2);
}

TEST_CASE("m = 3") {
    auto r = make_radicand(3, 1, 1);
    auto b = build_basis(r);
    CHECK(b.d == std::array<GaussianInt, 3>{1, 2, 2});
    CHECK(b.numerator(2) == std::vector<GaussianInt>{G("i"), 0, 1});
    CHECK(b.numerator(3) == std::vector<GaussianInt>{G("i"), G("i"), 1, 1});
    CHECK(disc_alpha(r) == GaussianInt(256 * 27));
    CHECK(associates(field_discriminant(r), pow(GaussianInt(1, 1), 8) * pow(GaussianInt(3), 3)));
}

TEST_CASE("m = 5") {
    auto b = build_basis(make_radicand(5, 1, 1));
    CHECK(b.d == std::array<GaussianInt, 3>{G("1+i"), 2, G("2+2i")});
    CHECK(b.numerator(1) == std::vector<GaussianInt>{1, 1});
    CHECK(b.numerator(2) == std::vector<GaussianInt>{1, 0, 1});
    CHECK(b.numerator(3) == std::vector<GaussianInt>{1, 1, 1, 1});
}

TEST_CASE("m = 2+i is the power basis") {
    auto r = make_radicand(G("2+i"), 1, 1);
    auto b = build_basis(r);
    CHECK(b == NormalizedBasis{});
    CHECK(field_discriminant(r) == disc_alpha(r));
}

TEST_CASE("disc_alpha valuations") {
    auto r = make_radicand(G("1+i"), 1, 1);
    CHECK(associates(disc_alpha(r), pow(GaussianInt(1, 1), 19)));
    for (auto const& s : case_samples()) {
        auto const rr = s.radicand();
        auto const d = disc_alpha(rr);
        CHECK(associates(d, pow_disc(rr)));
        for (auto const& pp : factor(d).factors) {
            auto const& p = pp.prime;
            unsigned const expect = 3 * valuation(rr.f(), p) + 6 * valuation(rr.g(), p) + 9 * valuation(rr.h(), p) +
                                    (associates(p, GaussianInt(1, 1)) ? 16 : 0);
            CHECK(pp.exponent == expect);
        }
    }
}

TEST_CASE("every table transcription verifies on the samples") {
    for (auto const& s : case_samples()) {
        CAPTURE(s.label());
        auto const r = s.radicand();
        auto const built = build_basis_detailed(r);
        CHECK(built.row == s.row);
        REQUIRE_FALSE(built.outcomes.empty());
        CHECK(built.source == built.outcomes.front().source);
        for (auto const& o : built.outcomes) {
            CAPTURE(o.source);
            CHECK(o.integral);
            CHECK(o.maximal);
        }
        auto const& b = built.basis;
        for (auto const& x : b.elements(r.m())) CHECK(is_algebraic_integer(x));
        GaussianInt const dd = b.d[0] * b.d[1] * b.d[2];
        CHECK(associates(dd * dd * field_discriminant(r, b), pow_disc(r)));
        CHECK(divides(b.d[0] * b.d[0], b.d[1]));
        CHECK(divides(b.d[0] * b.d[1], b.d[2]));
    }
}

TEST_CASE("Proposition 3") {
    for (auto const& s : case_samples()) {
        CAPTURE(s.label());
        auto const items = prop3_expectations(s.radicand());
        CHECK(items.size() == 6);
        for (auto const& it : items) {
            CAPTURE(it.item);
            CAPTURE(it.detail);
            CHECK((!it.applicable || it.holds));
        }
    }
    auto item5 = [](GaussianInt m) {
        for (auto const& it : prop3_expectations(make_radicand(m, 1, 1)))
            if (it.item == 5) return it;
        return Prop3Item{};
    };
    CHECK(item5(5).holds);
    CHECK(item5(3).holds);
    CHECK(build_basis(make_radicand(3, 1, 1)).d[0] == 1);
}
