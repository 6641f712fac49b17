#pragma once

#include <stdexcept>
#include <string>

namespace dio {

enum class ErrorCode {
    argument = 1,
    range = 2,
    resource = 3,
    parse = 4,
    internal = 5,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct ArgumentError : Error {
    explicit ArgumentError(const std::string& what) : Error(ErrorCode::argument, what) {}
};

struct RangeError : Error {
    explicit RangeError(const std::string& what) : Error(ErrorCode::range, what) {}
};

struct ResourceError : Error {
    explicit ResourceError(const std::string& what) : Error(ErrorCode::resource, what) {}
};

// Parse failures carry a 1-based line and column of the offending input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(ErrorCode::parse,
                what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(ErrorCode::internal, what) {}
};

} // namespace dio
