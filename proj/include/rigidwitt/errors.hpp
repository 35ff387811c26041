#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rigidwitt {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different field models.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class UnitClassError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class IsotropicInput : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class IsotropicSum : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotASubform : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class HyperbolicResidue : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotInIdeal : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class SquareClassIsOne : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// The Pfister-number search hit its depth cap without a certificate.
class DepthCapExceeded : public Error {
public:
    DepthCapExceeded(int cap, const std::string& what)
        : Error(what), cap_(cap) {}
    int cap() const noexcept { return cap_; }

private:
    int cap_;
};

/// A witness that a theorem guarantees was not found. Always an implementation bug.
class InternalContradiction : public Error {
public:
    using Error::Error;
};

/// Syntax error in a field, class or form literal.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace rigidwitt
