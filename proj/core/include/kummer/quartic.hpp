#ifndef KUMMER_QUARTIC_HPP_
#define KUMMER_QUARTIC_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "kummer/basis.hpp"
#include "kummer/gaussian.hpp"

namespace kummer {

/* The twelve residue-class rows of the integral basis table, in table order. */
enum class CaseRow {
    OneMod8 = 1,              // m = 1 (mod 8)
    OnePlus4iMod8,            // m = 1+4i (mod 8)
    GEvenFhOneMod4,           // m = 2i (mod 4), fh = 1 (mod 4)
    GEvenFhMinusOneMod4,      // m = 2i (mod 4), fh = -1 (mod 4)
    GEvenFConjHOne,           // m = 2i (mod 4), fh = +-1, f conj(h) = 1 (mod 2(1+i))
    GEvenFConjHMinusOne,      // m = 2i (mod 4), fh = +-1, f conj(h) = -1 (mod 2(1+i))
    ThreePlus2iMod4,          // m = 3+2i (mod 4)
    OnePlus2iMod4,            // m = 1+2i (mod 4)
    ThreeMod4,                // m = 3 (mod 4)
    FiveMod8,                 // m = 5 or 5+4i (mod 8)
    FOrHEvenOrIMod2,          // f even, h even, or m = i (mod 2)
    FhIMod2GEven,             // fh = i (mod 2), g even
};

inline constexpr int kCaseRowCount = 12;

std::string_view to_string(CaseRow row);
int row_number(CaseRow row);
CaseRow case_row_from_number(int n);

/* Raw table conditions that hold for r (several may, before precedence). */
std::vector<CaseRow> matching_rows(Radicand const& r);

/* The matching row under precedence mod 8 > mod 4 > mod 2(1+i) > mod 2 > parity.
 * Throws Error{Unclassified} if no row applies. */
CaseRow classify_case(Radicand const& r);

/* One transcription of a table row, normalized to monic numerators. */
struct BasisCandidate {
    std::string source;  // "table-2" or "table-3"
    NormalizedBasis basis;
};

/* Every textual variant of the row's basis (one per table that lists the row). */
std::vector<BasisCandidate> table_candidates(Radicand const& r, CaseRow row);

struct CandidateOutcome {
    std::string source;
    bool integral = false;
    bool maximal = false;
};

struct BuiltBasis {
    CaseRow row;
    NormalizedBasis basis;
    std::string source;                       // which transcription was emitted
    std::vector<CandidateOutcome> outcomes;   // one per candidate, in order
};

/* Classifies, transcribes the row and emits the first candidate whose
 * elements are integral with maximal denominators. Throws Unclassified,
 * or Internal when no candidate verifies. */
BuiltBasis build_basis_detailed(Radicand const& r);
NormalizedBasis build_basis(Radicand const& r);

/* (1+i)^16 f^3 g^6 h^9, canonical */
GaussianInt disc_alpha(Radicand const& r);

/* disc_alpha / (d1 d2 d3)^2, canonical; Internal if not exact. */
GaussianInt field_discriminant(Radicand const& r, NormalizedBasis const& basis);
GaussianInt field_discriminant(Radicand const& r);

struct Prop3Item {
    int item;
    bool applicable;
    bool holds;
    std::string detail;
};

/* Items (1)-(6) about d1, d2, d3 and the discriminant, evaluated on `basis`. */
std::vector<Prop3Item> prop3_expectations(Radicand const& r, NormalizedBasis const& basis);
std::vector<Prop3Item> prop3_expectations(Radicand const& r);

}  // namespace kummer

#endif  // KUMMER_QUARTIC_HPP_
