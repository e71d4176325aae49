#pragma once

#include <stdexcept>
#include <string>

namespace approxrs {

// Error taxonomy shared by the library and the CLI exit codes:
// validation/parameter problems are caller bugs at build time, range and
// not-found are query-time conditions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data (unsorted positions, value out of declared width, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Structural parameter out of range (delta, width, window capacity, ...).
class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& msg) : Error(msg) {}
};

// Query index outside the valid domain.
class RangeError : public Error {
public:
    explicit RangeError(const std::string& msg) : Error(msg) {}
};

// Query asks for an occurrence that does not exist (select past the last
// one, search past the total sum, too few ones in a window).
class NotFoundError : public Error {
public:
    explicit NotFoundError(const std::string& msg) : Error(msg) {}
};

}  // namespace approxrs
