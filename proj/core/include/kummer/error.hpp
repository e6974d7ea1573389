#ifndef KUMMER_ERROR_HPP_
#define KUMMER_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace kummer {

enum class ErrorCode {
    Domain,
    Parse,
    SquareFree,
    Coprime,
    Degenerate,
    Unclassified,
    Internal,
    Budget,
    Hypothesis,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
    ErrorCode code_;

  public:
    Error(ErrorCode code, std::string const& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
};

}  // namespace kummer

#endif  // KUMMER_ERROR_HPP_
