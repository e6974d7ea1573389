#include "kummer/quartic.hpp"

#include <array>
#include <sstream>

#include "kummer/verifier.hpp"

namespace kummer {

namespace {

constexpr std::array<std::string_view, kCaseRowCount> kTags = {
    "m≡1 mod 8",
    "m≡1+4i mod 8",
    "m≡2i mod 4 & fh≡1 mod 4",
    "m≡2i mod 4 & fh≡-1 mod 4",
    "m≡2i mod 4 & fh≡±1 mod 2(1+i) & f·conj(h)≡1 mod 2(1+i)",
    "m≡2i mod 4 & fh≡±1 mod 2(1+i) & f·conj(h)≡-1 mod 2(1+i)",
    "m≡3+2i mod 4",
    "m≡1+2i mod 4",
    "m≡3 mod 4",
    "m≡5 or 5+4i mod 8",
    "f even/h even/m≡i mod 2",
    "fh≡i mod 2 & g even",
};

GaussianInt const kTwo{2};
GaussianInt const kFour{4};
GaussianInt const kEight{8};
GaussianInt const kI = GaussianInt::i();
GaussianInt const kPi = GaussianInt::one_plus_i();
GaussianInt const kTwoPi = GaussianInt(2) * GaussianInt::one_plus_i();

bool cong(GaussianInt const& a, GaussianInt const& b, GaussianInt const& mod) { return congruent(a, b, mod); }

bool holds(Radicand const& r, CaseRow row) {
    GaussianInt const& m = r.m();
    GaussianInt const fh = r.fh();
    bool const g_even = is_even(r.g());
    bool const m_2i = cong(m, 2 * kI, kFour);
    bool const fh_pm1 = cong(fh, 1, kTwoPi) || cong(fh, -1, kTwoPi);
    GaussianInt const fhbar = r.f() * r.h().conj();
    switch (row) {
        case CaseRow::OneMod8: return cong(m, 1, kEight);
        case CaseRow::OnePlus4iMod8: return cong(m, {1, 4}, kEight);
        case CaseRow::GEvenFhOneMod4: return m_2i && cong(fh, 1, kFour);
        case CaseRow::GEvenFhMinusOneMod4: return m_2i && cong(fh, -1, kFour);
        case CaseRow::GEvenFConjHOne: return m_2i && fh_pm1 && cong(fhbar, 1, kTwoPi);
        case CaseRow::GEvenFConjHMinusOne: return m_2i && fh_pm1 && cong(fhbar, -1, kTwoPi);
        case CaseRow::ThreePlus2iMod4: return cong(m, {3, 2}, kFour);
        case CaseRow::OnePlus2iMod4: return cong(m, {1, 2}, kFour);
        case CaseRow::ThreeMod4: return cong(m, 3, kFour);
        case CaseRow::FiveMod8: return cong(m, 5, kEight) || cong(m, {5, 4}, kEight);
        case CaseRow::FOrHEvenOrIMod2: return is_even(r.f()) || is_even(r.h()) || cong(m, kI, kTwo);
        case CaseRow::FhIMod2GEven: return g_even && cong(fh, kI, kTwo);
    }
    return false;
}

// Precedence: mod 8, then mod 4, then mod 2(1+i), then mod 2, then parity.
constexpr std::array<CaseRow, kCaseRowCount> kPrecedence = {
    CaseRow::OneMod8,        CaseRow::OnePlus4iMod8,       CaseRow::FiveMod8,
    CaseRow::GEvenFhOneMod4, CaseRow::GEvenFhMinusOneMod4, CaseRow::ThreePlus2iMod4,
    CaseRow::OnePlus2iMod4,  CaseRow::ThreeMod4,           CaseRow::GEvenFConjHOne,
    CaseRow::GEvenFConjHMinusOne, CaseRow::FhIMod2GEven,   CaseRow::FOrHEvenOrIMod2,
};

/* Small expression language for transcribing table entries. */
struct Expr {
    GaussianInt m;

    QuarticElement a(unsigned k) const { return QuarticElement::alpha_power(m, k); }
    QuarticElement c(GaussianInt v) const { return QuarticElement::constant(m, GaussianRational(std::move(v))); }
    static GaussianRational inv(GaussianInt const& z) { return GaussianRational::quotient(1, z); }
};

/* (d, lower numerator) of an element whose top nonzero coefficient is at `degree`
 * and is 1/d for some d in Z[i]. */
std::pair<GaussianInt, std::vector<GaussianInt>> normalize(QuarticElement const& x, int degree) {
    for (int k = degree + 1; k < 4; ++k)
        if (!x.coeff(k).is_zero()) throw Error(ErrorCode::Internal, "transcribed element has wrong degree");
    GaussianRational const lead = x.coeff(degree);
    if (lead.is_zero()) throw Error(ErrorCode::Internal, "transcribed element has wrong degree");
    GaussianRational const d = GaussianRational(1) / lead;
    if (!d.is_integral()) throw Error(ErrorCode::Internal, "leading coefficient is not 1/d: " + x.to_string());
    std::vector<GaussianInt> lower;
    for (int k = 0; k < degree; ++k) {
        GaussianRational const v = x.coeff(k) * d;
        if (!v.is_integral()) throw Error(ErrorCode::Internal, "numerator not integral: " + x.to_string());
        lower.push_back(v.num());
    }
    return {d.num(), lower};
}

NormalizedBasis assemble(QuarticElement const& e1, QuarticElement const& e2, QuarticElement const& e3) {
    NormalizedBasis out;
    QuarticElement const* es[] = {&e1, &e2, &e3};
    for (int k = 1; k <= 3; ++k) {
        auto [d, lower] = normalize(*es[k - 1], k);
        // a unit multiple of a basis element is as good; keep d canonical
        out.d[k - 1] = canonical(d);
        out.set_numerator(k, std::move(lower));
    }
    return out;
}

}  // namespace

std::string_view to_string(CaseRow row) { return kTags.at(row_number(row) - 1); }

int row_number(CaseRow row) { return static_cast<int>(row); }

CaseRow case_row_from_number(int n) {
    if (n < 1 || n > kCaseRowCount) throw Error(ErrorCode::Domain, "row number out of range");
    return static_cast<CaseRow>(n);
}

std::vector<CaseRow> matching_rows(Radicand const& r) {
    std::vector<CaseRow> out;
    for (int n = 1; n <= kCaseRowCount; ++n)
        if (holds(r, case_row_from_number(n))) out.push_back(case_row_from_number(n));
    return out;
}

CaseRow classify_case(Radicand const& r) {
    for (CaseRow row : kPrecedence)
        if (holds(r, row)) return row;
    throw Error(ErrorCode::Unclassified, "no table row matches m = " + r.m().to_string());
}

std::vector<BasisCandidate> table_candidates(Radicand const& r, CaseRow row) {
    Expr const x{r.m()};
    GaussianInt const G = r.gh();
    GaussianInt const G2 = r.gh2();
    GaussianInt const nG = G * G.conj();     // |gh|^2
    GaussianInt const nG2 = G2 * G2.conj();  // |gh^2|^2
    auto const inv = Expr::inv;
    auto const a = [&](unsigned k) { return x.a(k); };
    auto const c = [&](GaussianInt v) { return x.c(std::move(v)); };

    // e1 shared by most rows
    QuarticElement const e1_alpha = a(1);
    QuarticElement const e1_half = (c(1) + a(1)) * inv(kPi);

    std::vector<BasisCandidate> out;
    auto add = [&](std::string source, QuarticElement const& e1, QuarticElement const& e2,
                   QuarticElement const& e3) { out.push_back({std::move(source), assemble(e1, e2, e3)}); };

    switch (row) {
        case CaseRow::OneMod8:
            add("table-2", e1_half, ((c(kI) + a(1) * GaussianRational(kPi)) * GaussianRational(nG) + a(2)) * inv(2 * kPi * G),
                ((c(1) + a(1) + a(2)) * GaussianRational(nG2) + a(3)) * inv(4 * G2));
            break;
        case CaseRow::OnePlus4iMod8:
            add("table-2", e1_half, ((c(-kI) + a(1) * GaussianRational(kPi)) * GaussianRational(nG) + a(2)) * inv(2 * kPi * G),
                ((c({2, -1}) + a(1) + a(2) * GaussianRational(kI)) * GaussianRational(nG2) + a(3)) * inv(4 * G2));
            break;
        case CaseRow::GEvenFhOneMod4:
            add("table-2", e1_alpha, (c(G) + a(2)) * inv(2 * G), (a(1) + a(3) * inv(G2)) * inv(2));
            add("table-3", e1_alpha, (c(G) + a(2)) * inv(2 * G), (a(1) * GaussianRational(G2) + a(3)) * inv(2 * G2));
            break;
        case CaseRow::GEvenFhMinusOneMod4:
            add("table-2", e1_alpha, (c(kI * G) + a(2)) * inv(2 * G),
                (a(1) * GaussianRational(kI) + a(3) * inv(G2)) * inv(2));
            add("table-3", e1_alpha, (c(kI * G) + a(2)) * inv(2 * G),
                (a(1) * GaussianRational(G2 * kI) + a(3)) * inv(2 * G2));
            break;
        case CaseRow::GEvenFConjHOne:
            add("table-2", e1_alpha, (c(G) + a(2)) * inv(kPi * G), (a(1) + a(3) * inv(G2)) * inv(2));
            add("table-3", e1_alpha, (c(G) + a(2)) * inv(kPi * G), (a(1) * GaussianRational(G2) + a(3)) * inv(2 * G2));
            break;
        case CaseRow::GEvenFConjHMinusOne:
            add("table-2", e1_alpha, (c(G) + a(2)) * inv(kPi * G),
                (a(1) * GaussianRational(kI) + a(3) * inv(G2)) * inv(2));
            add("table-3", e1_alpha, (c(G) + a(2)) * inv(kPi * G),
                (a(1) * GaussianRational(G2 * kI) + a(3)) * inv(2 * G2));
            break;
        case CaseRow::ThreePlus2iMod4:
            for (char const* src : {"table-2", "table-3"})
                add(src, e1_alpha, (c(nG) + a(2)) * inv(kPi * G),
                    ((c(1) + a(1) + a(2)) * GaussianRational(nG2) + a(3)) * inv(2 * G2));
            break;
        case CaseRow::OnePlus2iMod4:
            for (char const* src : {"table-2", "table-3"})
                add(src, e1_alpha, ((c(1) + a(1) * GaussianRational(kPi)) * GaussianRational(nG) + a(2)) * inv(2 * G),
                    ((a(1) + a(2) * GaussianRational(kPi)) * GaussianRational(nG2) + a(3)) * inv(2 * G2));
            break;
        case CaseRow::ThreeMod4:
            for (char const* src : {"table-2", "table-3"})
                add(src, e1_alpha, (c(kI * nG) + a(2)) * inv(2 * G),
                    ((c(kI) + a(1) * GaussianRational(kI) + a(2)) * GaussianRational(nG2) + a(3)) * inv(2 * G2));
            break;
        case CaseRow::FiveMod8:
            for (char const* src : {"table-2", "table-3"})
                add(src, e1_half, (c(nG) + a(2)) * inv(2 * G),
                    ((c(1) + a(1) + a(2)) * GaussianRational(nG2) + a(3)) * inv(2 * kPi * G2));
            break;
        case CaseRow::FOrHEvenOrIMod2:
            for (char const* src : {"table-2", "table-3"}) add(src, e1_alpha, a(2) * inv(G), a(3) * inv(G2));
            break;
        case CaseRow::FhIMod2GEven:
            add("table-2", e1_alpha, a(2) * inv(G), (a(1) * GaussianRational(kI) + a(3) * inv(G2)) * inv(kPi));
            add("table-3", e1_alpha, a(2) * inv(G), (a(1) * GaussianRational(G2 * kI) + a(3)) * inv(kPi * G2));
            break;
    }
    return out;
}

BuiltBasis build_basis_detailed(Radicand const& r) {
    CaseRow const row = classify_case(r);
    auto candidates = table_candidates(r, row);
    BuiltBasis built{row, {}, {}, {}};
    bool found = false;
    for (auto const& cand : candidates) {
        CandidateOutcome outcome{cand.source};
        outcome.integral = basis_is_integral(r, cand.basis);
        outcome.maximal = outcome.integral && basis_is_maximal(r, cand.basis);
        built.outcomes.push_back(outcome);
        if (!found && outcome.integral && outcome.maximal) {
            found = true;
            built.basis = cand.basis;
            built.source = cand.source;
        }
    }
    if (!found) {
        std::ostringstream msg;
        msg << "no transcription of row " << row_number(row) << " verifies for m = " << r.m() << ":";
        for (std::size_t k = 0; k < candidates.size(); ++k)
            msg << " [" << candidates[k].source << " integral=" << built.outcomes[k].integral
                << " maximal=" << built.outcomes[k].maximal << "]";
        throw Error(ErrorCode::Internal, msg.str());
    }
    return built;
}

NormalizedBasis build_basis(Radicand const& r) { return build_basis_detailed(r).basis; }

GaussianInt disc_alpha(Radicand const& r) {
    return canonical(pow(kPi, 16) * pow(r.f(), 3) * pow(r.g(), 6) * pow(r.h(), 9));
}

GaussianInt field_discriminant(Radicand const& r, NormalizedBasis const& basis) {
    GaussianInt const dd = basis.d[0] * basis.d[1] * basis.d[2];
    GaussianInt const sq = dd * dd;
    GaussianInt const da = disc_alpha(r);
    if (!divides(sq, da)) throw Error(ErrorCode::Internal, "(d1 d2 d3)^2 does not divide disc(a)");
    return canonical(divexact(da, sq));
}

GaussianInt field_discriminant(Radicand const& r) { return field_discriminant(r, build_basis(r)); }

std::vector<Prop3Item> prop3_expectations(Radicand const& r, NormalizedBasis const& basis) {
    GaussianInt const disc = field_discriminant(r, basis);
    auto const& d = basis.d;
    std::vector<Prop3Item> out;

    {  // (1) d1 is a power of 1+i; (1+i)^2 | d1 only if 1+i | h
        bool ok = odd_part(d[0]).is_unit();
        if (!is_even(r.h())) ok = ok && valuation(d[0], kPi) <= 1;
        out.push_back({1, true, ok, "d1 = " + canonical(d[0]).to_string()});
    }
    Factorization const fac = factor(r.f() * r.g() * r.h());
    {  // (2) every prime of fgh ramifies
        bool ok = true;
        for (auto const& pp : fac.factors) ok = ok && valuation(disc, pp.prime) > 0;
        out.push_back({2, !fac.factors.empty(), ok, "disc = " + disc.to_string()});
    }
    {  // (3) odd prime exponents of disc: 3 over fh, 2 over g
        bool ok = true;
        bool any = false;
        for (auto const& pp : fac.factors) {
            if (associates(pp.prime, kPi)) continue;
            any = true;
            unsigned const want = divides(pp.prime, r.g()) ? 2 : 3;
            ok = ok && valuation(disc, pp.prime) == want;
        }
        out.push_back({3, any, ok, "odd primes of fgh"});
    }
    {  // (4) odd parts of d2, d3 are gh, gh^2
        bool const ok = divides(r.gh(), d[1]) && divides(r.gh2(), d[2]) &&
                        associates(odd_part(d[1]), odd_part(r.gh())) &&
                        associates(odd_part(d[2]), odd_part(r.gh2()));
        out.push_back({4, true, ok, "d2 = " + canonical(d[1]).to_string() + ", d3 = " + canonical(d[2]).to_string()});
    }
    {  // (5) delta1 | 1+i, with equality iff m = 1 mod 4
        GaussianInt const delta1 = odd_even_split(d[0]).even;
        bool const big = valuation(delta1, kPi) == 1;
        bool const ok = valuation(delta1, kPi) <= 1 && big == congruent(r.m(), 1, kFour);
        out.push_back({5, true, ok, "delta1 = " + canonical(delta1).to_string()});
    }
    {  // (6) m odd: delta3 | 4, equal iff 1+i unramified
        bool const odd = !is_even(r.m());
        GaussianInt const delta3 = odd_even_split(d[2]).even;
        bool ok = true;
        if (odd) {
            unsigned const v = valuation(delta3, kPi);
            ok = v <= 4 && ((v == 4) == (valuation(disc, kPi) == 0));
        }
        out.push_back({6, odd, ok, "delta3 = " + canonical(delta3).to_string()});
    }
    return out;
}

std::vector<Prop3Item> prop3_expectations(Radicand const& r) { return prop3_expectations(r, build_basis(r)); }

}  // namespace kummer
