#pragma once

#include <stdexcept>
#include <string>

namespace qsum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A denominator factor vanished. Carries enough context to locate it.
class PoleError : public Error {
public:
    PoleError(std::string parameter, long index, std::string factor)
        : Error("pole: factor " + factor + " vanishes (parameter " + parameter +
                ", index " + std::to_string(index) + ")"),
          parameter_(std::move(parameter)),
          index_(index),
          factor_(std::move(factor)) {}

    const std::string& parameter() const noexcept { return parameter_; }
    long index() const noexcept { return index_; }
    const std::string& factor() const noexcept { return factor_; }

private:
    std::string parameter_;
    long index_;
    std::string factor_;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class PrecisionMismatch : public Error {
public:
    using Error::Error;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

class ConstraintUnsatisfiable : public Error {
public:
    using Error::Error;
};

class MissingParam : public Error {
public:
    using Error::Error;
};

class SubstitutionError : public Error {
public:
    using Error::Error;
};

class SweepFailure : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace qsum
