#pragma once

#include <stdexcept>
#include <string>

namespace cdsl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid level, non-unit residue, inverse of zero, ...
class DomainError : public Error {
public:
    using Error::Error;
};

class ContextMismatch : public Error {
public:
    using Error::Error;
};

class NotInYError : public Error {
public:
    using Error::Error;
};

// Coefficient requested beyond the truncation degree.
class TruncationError : public Error {
public:
    using Error::Error;
};

class ResourceError : public Error {
public:
    using Error::Error;
};

enum class ParseErrorKind {
    malformed_json,
    missing_field,
    unknown_alphabet,
    bad_level,
    letter_out_of_range,
    coefficient_length,
    bad_rational,
};

inline const char* to_string(ParseErrorKind k)
{
    switch (k) {
    case ParseErrorKind::malformed_json: return "malformed_json";
    case ParseErrorKind::missing_field: return "missing_field";
    case ParseErrorKind::unknown_alphabet: return "unknown_alphabet";
    case ParseErrorKind::bad_level: return "bad_level";
    case ParseErrorKind::letter_out_of_range: return "letter_out_of_range";
    case ParseErrorKind::coefficient_length: return "coefficient_length";
    case ParseErrorKind::bad_rational: return "bad_rational";
    }
    return "unknown";
}

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, const std::string& what)
        : Error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ParseErrorKind kind() const noexcept { return kind_; }

private:
    ParseErrorKind kind_;
};

} // namespace cdsl
