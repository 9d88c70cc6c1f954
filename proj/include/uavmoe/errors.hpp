#pragma once

#include <stdexcept>
#include <string>

namespace uavmoe {

// Error hierarchy maps onto CLI exit codes: ConfigError -> 1, ParseError and
// DataError -> 2, anything else -> 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

// Malformed input text; message carries a 1-based line number.
struct ParseError : Error {
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    std::size_t line_number;
};

struct DataError : Error {
    using Error::Error;
};

}  // namespace uavmoe
