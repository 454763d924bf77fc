#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbiclass {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class NotReal : public Error {
public:
    using Error::Error;
};

/// A subspace was expected to be invariant and is not; carries the offending
/// basis vector index.
class NotInvariant : public Error {
public:
    NotInvariant(const std::string& what, std::size_t witness)
        : Error(what), witness_(witness) {}
    std::size_t witness() const { return witness_; }

private:
    std::size_t witness_;
};

class CapExceeded : public Error {
public:
    explicit CapExceeded(std::size_t cap)
        : Error("group closure exceeded cap of " + std::to_string(cap) + " elements"), cap_(cap) {}
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

class NonOrthogonalGenerator : public Error {
public:
    explicit NonOrthogonalGenerator(std::size_t index)
        : Error("generator " + std::to_string(index) + " is not a real orthogonal matrix"),
          index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class InvalidComplex : public Error {
public:
    using Error::Error;
};

class InvalidAction : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Never expected in practice.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace orbiclass
