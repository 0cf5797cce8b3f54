#pragma once
#include <stdexcept>
#include <string>

namespace matdec {

// Thrown when an exhaustive operation is asked to run past its hard size cap.
// Distinct from std::domain_error so callers can tell "input malformed" from
// "input too large for this algorithm".
struct size_guard_error : std::runtime_error {
    explicit size_guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed instance text; line numbers are 1-based.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

}  // namespace matdec
