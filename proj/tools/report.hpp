#ifndef KUMMER_TOOLS_REPORT_HPP_
#define KUMMER_TOOLS_REPORT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kummer/basis.hpp"
#include "kummer/gaussian.hpp"
#include "kummer/verifier.hpp"

namespace kummer::cli {

using json = nlohmann::ordered_json;

enum class VerifyLevel { None, Fast, Full };
VerifyLevel parse_verify_level(std::string_view text);

json to_json(GaussianInt const& z);
GaussianInt gaussian_from_json(json const& j);
json to_json(NormalizedBasis const& b);
NormalizedBasis basis_from_json(json const& j);

struct Input {
    Radicand radicand;
    std::optional<RadicandDecomposition> decomposition;  // set when given as --m
};
Input input_from_fgh(std::string_view f, std::string_view g, std::string_view h);
Input input_from_m(std::string_view m);
json input_json(Input const& in);
Radicand radicand_from_json(json const& input);

/* Named pass/fail results, in emission order. */
using Checks = std::vector<std::pair<std::string, bool>>;
json to_json(Checks const& checks);
bool all_pass(Checks const& checks);

/* fast: per-element integrality and the trace-form main equation;
 * full adds Theorem 1 properties, maximality and oracle agreement. */
Checks verify_basis(Radicand const& r, NormalizedBasis const& basis, VerifyLevel level, SearchOptions const& options);

struct Report {
    json doc;
    int exit_code = 0;
};

Report basis_report(Input const& in, VerifyLevel level, SearchOptions const& options);
Report oracle_report(Input const& in, SearchOptions const& options);
Report ramify_report(Input const& in);
Report quadratic_report(GaussianInt const& fh);
Report selftest_report(SearchOptions const& options);

/* Aligned "key  value" lines; nested objects flattened with dots. */
std::string render_text(json const& doc);

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitVerify = 4;
inline constexpr int kExitBudget = 5;

int exit_code_for(ErrorCode code);

}  // namespace kummer::cli

#endif  // KUMMER_TOOLS_REPORT_HPP_
