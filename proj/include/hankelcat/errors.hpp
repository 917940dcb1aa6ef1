#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hankelcat {

// Base class for every error this library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Determinant requested on a non-square matrix.
class NotSquare : public Error {
public:
    using Error::Error;
};

// Laplace expansion requested beyond its hard size cap.
class DimensionCapExceeded : public Error {
public:
    using Error::Error;
};

// A division that must be exact left a remainder. Signals an implementation
// bug, never a bad input.
class InternalExactDivisionViolation : public Error {
public:
    using Error::Error;
};

// Malformed token while reading a sequence. position() is the 1-based token
// number for inline input and the 1-based line number for file input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A sequence source yielded no terms at all.
class EmptySequence : public Error {
public:
    using Error::Error;
};

// Sequence source could not be read.
class IoError : public Error {
public:
    using Error::Error;
};

// An explicit sequence lacks a term the requested Hankel instance needs.
// missing_index() is the highest required sequence index.
class SequenceTooShort : public Error {
public:
    explicit SequenceTooShort(std::size_t missing_index)
        : Error("sequence too short: need a_" + std::to_string(missing_index)),
          missing_index_(missing_index) {}

    std::size_t missing_index() const { return missing_index_; }

private:
    std::size_t missing_index_;
};

// Evaluation method not applicable to the given sequence (the Cigler and
// closed-form routes exist only for the builtin Catalan sequence).
class MethodUnavailable : public Error {
public:
    using Error::Error;
};

}  // namespace hankelcat
