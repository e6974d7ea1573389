#include "kummer/samples.hpp"

namespace kummer {

Radicand CaseSample::radicand() const {
    return make_radicand(GaussianInt::parse(f), GaussianInt::parse(g), GaussianInt::parse(h));
}

std::string CaseSample::label() const { return "f=" + f + ",g=" + g + ",h=" + h; }

std::vector<CaseSample> const& case_samples() {
    using R = CaseRow;
    static std::vector<CaseSample> const samples = {
        {"17", "1", "1", R::OneMod8},
        {"-7", "1", "1", R::OneMod8},
        {"-5", "1", "3", R::OneMod8},
        {"1+4i", "1", "1", R::OnePlus4iMod8},
        {"-5", "2+3i", "1", R::OnePlus4iMod8},
        {"5", "1+i", "1", R::GEvenFhOneMod4},
        {"-3-2i", "1+i", "1+2i", R::GEvenFhOneMod4},
        {"3", "1+i", "1", R::GEvenFhMinusOneMod4},
        {"-5-2i", "1+i", "1+2i", R::GEvenFhMinusOneMod4},
        {"-1+2i", "1+i", "1", R::GEvenFConjHOne},
        {"-5-2i", "1+3i", "1", R::GEvenFConjHOne},
        {"1+2i", "1+i", "1", R::GEvenFConjHMinusOne},
        {"-4+i", "1+i", "2+i", R::GEvenFConjHMinusOne},
        {"3+2i", "1", "1", R::ThreePlus2iMod4},
        {"-5-2i", "3", "1", R::ThreePlus2iMod4},
        {"1+2i", "1", "1", R::OnePlus2iMod4},
        {"-5-2i", "1", "3", R::OnePlus2iMod4},
        {"3", "1", "1", R::ThreeMod4},
        {"3", "1", "5", R::ThreeMod4},
        {"-5-2i", "1", "1+2i", R::ThreeMod4},
        {"5", "1", "1", R::FiveMod8},
        {"5+4i", "1", "1", R::FiveMod8},
        {"-3-2i", "1", "1+2i", R::FiveMod8},
        {"2+i", "1", "1", R::FOrHEvenOrIMod2},
        {"1+i", "1", "1", R::FOrHEvenOrIMod2},
        {"1", "1", "1+i", R::FOrHEvenOrIMod2},
        {"-6-i", "1", "1+2i", R::FOrHEvenOrIMod2},
        {"2+i", "3", "1+i", R::FOrHEvenOrIMod2},
        {"i", "1+i", "1", R::FhIMod2GEven},
        {"2+i", "1+i", "1", R::FhIMod2GEven},
        {"-6-i", "1+i", "1+2i", R::FhIMod2GEven},
    };
    return samples;
}

}  // namespace kummer
