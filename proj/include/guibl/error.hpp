#pragma once

#include <stdexcept>
#include <string>

namespace guibl {

// Bad or unreadable input data (files, traces, reports). CLI exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed JSON or text that could not be parsed.
class ParseError : public InputError {
public:
    using InputError::InputError;
};

// Well-formed input that violates a documented invariant.
class ValidationError : public InputError {
public:
    using InputError::InputError;
};

// Unknown key in a lookup (fingerprint, path, ...).
class LookupError : public InputError {
public:
    using InputError::InputError;
};

// Invalid option, enumeration value or parameter. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace guibl
