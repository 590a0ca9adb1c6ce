#pragma once

#include <stdexcept>
#include <string>

namespace wsidiag {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Structural mismatch: wrong class list, incompatible shapes, bad channel count.
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& msg) : Error(msg) {}
};

/// Invalid parameter value (thresholds, factors, sizes, quantiles, ...).
class ParamError : public Error {
public:
    explicit ParamError(const std::string& msg) : Error(msg) {}
};

/// Aggregate requested over a region with zero valid tissue cells.
class NoTissueError : public Error {
public:
    explicit NoTissueError(const std::string& msg) : Error(msg) {}
};

/// Malformed input file; carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, const std::string& path, long line)
        : Error(path + ":" + std::to_string(line) + ": " + msg), line_(line) {}
    explicit ParseError(const std::string& msg) : Error(msg), line_(0) {}

    long line() const { return line_; }

private:
    long line_;
};

/// Filesystem-level failure (missing file, unwritable path).
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace wsidiag
