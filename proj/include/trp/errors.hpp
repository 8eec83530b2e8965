#pragma once

#include <stdexcept>
#include <string>

namespace trp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed curve, pencil or certificate document.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class SingularCurveError : public Error {
public:
    SingularCurveError() : Error("curve is singular") {}
};

/// Raised when random changes of coordinates fail to reach generic position.
class GenericPositionError : public Error {
public:
    explicit GenericPositionError(const std::string& where)
        : Error("generic-position failure: " + where) {}
};

class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace trp
