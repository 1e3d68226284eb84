#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace laundry {

// Input text could not be parsed. Positions are 1-based; 0 means unknown.
struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_ = 0, int column_ = 0)
        : std::runtime_error(msg), line(line_), column(column_) {}
};

// A move's pattern is absent or its parameters are out of range.
struct MoveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A matrix failed validation where a valid linking matrix is required.
struct ValidationError : std::runtime_error {
    std::vector<std::string> violations;
    explicit ValidationError(std::vector<std::string> v)
        : std::runtime_error(v.empty() ? "invalid matrix" : v.front()),
          violations(std::move(v)) {}
};

// A consistency check that should be unreachable failed; always a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace laundry
