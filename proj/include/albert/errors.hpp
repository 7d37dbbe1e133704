#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace albert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
public:
    FieldMismatch() : Error("operands live over different fields") {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

class InvalidField : public Error {
public:
    using Error::Error;
};

/// Characteristic 2 is rejected wherever a field is constructed.
class Char2Field : public InvalidField {
public:
    Char2Field() : InvalidField("characteristic 2 fields are not supported") {}
};

class Singular : public Error {
public:
    explicit Singular(const std::string& what = "matrix is singular") : Error(what) {}
};

class SingularOperator : public Singular {
public:
    explicit SingularOperator(const std::string& what = "isotope operator is not invertible")
        : Singular(what) {}
};

class UnsupportedCharacteristic : public Error {
public:
    using Error::Error;
};

class SearchBudgetExceeded : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class AlgebraMismatch : public Error {
public:
    AlgebraMismatch() : Error("elements belong to different algebras") {}
};

class SquareRootUnavailable : public DomainError {
public:
    using DomainError::DomainError;
};

class NonSimple : public DomainError {
public:
    using DomainError::DomainError;
};

class NilRank3 : public DomainError {
public:
    using DomainError::DomainError;
};

class DependentNils : public DomainError {
public:
    using DomainError::DomainError;
};

class NotUnital : public DomainError {
public:
    using DomainError::DomainError;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DuplicateEntry : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace albert
