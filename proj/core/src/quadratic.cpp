#include "kummer/quadratic.hpp"

namespace kummer {

std::string_view to_string(QuadraticRow row) {
    switch (row) {
        case QuadraticRow::OneMod4: return "fh≡1 mod 4";
        case QuadraticRow::MinusOneMod4: return "fh≡-1 mod 4";
        case QuadraticRow::OnePlus2iMod4: return "fh≡1+2i mod 4";
        case QuadraticRow::MinusOnePlus2iMod4: return "fh≡-1+2i mod 4";
        case QuadraticRow::NonSquareMod2: return "fh≡i mod 2 or fh≡0 mod 1+i";
    }
    return "?";
}

QuadraticRow classify_quadratic(GaussianInt const& fh) {
    GaussianInt const four(4);
    if (congruent(fh, 1, four)) return QuadraticRow::OneMod4;
    if (congruent(fh, -1, four)) return QuadraticRow::MinusOneMod4;
    if (congruent(fh, {1, 2}, four)) return QuadraticRow::OnePlus2iMod4;
    if (congruent(fh, {-1, 2}, four)) return QuadraticRow::MinusOnePlus2iMod4;
    return QuadraticRow::NonSquareMod2;
}

std::vector<GaussianInt> quadratic_numerator_candidates(QuadraticRow row) {
    switch (row) {
        case QuadraticRow::OneMod4: return {1};
        case QuadraticRow::MinusOneMod4: return {GaussianInt::i()};
        case QuadraticRow::OnePlus2iMod4: return {1};
        // table row: i + sqrt(fh); prose (for 3+2i): -1 + sqrt(fh)
        case QuadraticRow::MinusOnePlus2iMod4: return {GaussianInt::i(), -1};
        case QuadraticRow::NonSquareMod2: return {0};
    }
    return {};
}

namespace {

GaussianInt row_denominator(QuadraticRow row) {
    switch (row) {
        case QuadraticRow::OneMod4:
        case QuadraticRow::MinusOneMod4: return 2;
        case QuadraticRow::OnePlus2iMod4:
        case QuadraticRow::MinusOnePlus2iMod4: return GaussianInt::one_plus_i();
        case QuadraticRow::NonSquareMod2: return 1;
    }
    return 1;
}

}  // namespace

bool is_integral_quadratic(GaussianRational const& x0, GaussianRational const& x1, GaussianInt const& fh) {
    GaussianRational trace = x0 * GaussianRational(2);
    GaussianRational nrm = x0 * x0 - x1 * x1 * GaussianRational(fh);
    return trace.is_integral() && nrm.is_integral();
}

QuadraticBasis quadratic_basis(GaussianInt const& fh) {
    if (!is_squarefree(fh)) throw Error(ErrorCode::SquareFree, fh.to_string() + " is not square-free");
    if (fh == GaussianInt(1) || fh == GaussianInt(-1))
        throw Error(ErrorCode::Degenerate, fh.to_string() + " is a square; M = K");
    QuadraticRow row = classify_quadratic(fh);
    GaussianInt d1 = row_denominator(row);
    for (auto const& a : quadratic_numerator_candidates(row)) {
        GaussianRational x0 = GaussianRational::quotient(a, d1);
        GaussianRational x1 = GaussianRational::quotient(1, d1);
        if (!is_integral_quadratic(x0, x1, fh)) continue;
        // disc = 4 fh / d1^2
        GaussianInt disc = canonical(divexact(GaussianInt(4) * fh, d1 * d1));
        return {row, a, d1, disc};
    }
    throw Error(ErrorCode::Internal, "no quadratic numerator candidate is integral for fh = " + fh.to_string());
}

bool quadratic_denominator_is_maximal(QuadraticBasis const& basis, GaussianInt const& fh) {
    GaussianInt q = GaussianInt::one_plus_i() * basis.d1;
    GaussianRational x1 = GaussianRational::quotient(1, q);
    for (auto const& a : residue_system(q))
        if (is_integral_quadratic(GaussianRational::quotient(a, q), x1, fh)) return false;
    return true;
}

}  // namespace kummer
