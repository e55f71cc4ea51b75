#pragma once

#include <stdexcept>
#include <string>

namespace ifreward {

// Base class for all library errors so callers can catch one type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed JSON or JSONL input. Carries 1-based line/column when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(what), line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Unknown constraint type tag, or a tag bound under the wrong kind.
class RegistryError : public Error {
public:
    RegistryError(const std::string& what, std::string tag)
        : Error(what), tag_(std::move(tag)) {}
    const std::string& tag() const noexcept { return tag_; }

private:
    std::string tag_;
};

// Record violates a schema or type invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A hard constraint was passed where a soft one was required, or vice versa.
class KindError : public Error {
public:
    using Error::Error;
};

// Numeric argument outside its admissible range.
class DomainError : public Error {
public:
    using Error::Error;
};

// Group too small for the requested statistic.
class SizeError : public Error {
public:
    using Error::Error;
};

// Training data contains only one label class.
class DegenerateDataError : public Error {
public:
    using Error::Error;
};

// Exact score ties where a strict ordering is required.
class TieError : public Error {
public:
    using Error::Error;
};

// Responses refer to a different instruction than the one being scored.
class MismatchError : public Error {
public:
    using Error::Error;
};

// Remote peer answered, but with a malformed or out-of-contract payload.
class ProtocolError : public Error {
public:
    using Error::Error;
};

// Remote peer unreachable after the configured retries.
class UnavailableError : public Error {
public:
    using Error::Error;
};

} // namespace ifreward
