#pragma once

#include <stdexcept>
#include <string>

namespace gmsdi {

// Error categories. Values are stable: they double as C API status codes and
// CLI exit codes (0 is success, 1 is reserved for generic shell failure).
enum class ErrorCode : int {
    config = 2,      // invalid configuration or parameters
    vocabulary = 3,  // unknown label
    dimension = 4,   // tensor shape mismatch
    format = 5,      // malformed file content
    io = 6,          // filesystem failure
    training = 7,    // training diverged (non-finite loss)
    divergence = 8,  // sampler produced non-finite state
    metric = 9,      // undefined metric (e.g. silent reference)
    degenerate = 10, // degenerate density / covariance
    internal = 12,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace gmsdi
