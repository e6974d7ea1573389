#ifndef KUMMER_SAMPLES_HPP_
#define KUMMER_SAMPLES_HPP_

#include <string>
#include <vector>

#include "kummer/gaussian.hpp"
#include "kummer/quartic.hpp"

namespace kummer {

/* A small radicand known to land in a given table row. */
struct CaseSample {
    std::string f, g, h;
    CaseRow row;

    Radicand radicand() const;
    std::string label() const;  // "f=..,g=..,h=.."
};

/* At least two samples per row, one of them with odd primes in g or h. */
std::vector<CaseSample> const& case_samples();

}  // namespace kummer

#endif  // KUMMER_SAMPLES_HPP_
