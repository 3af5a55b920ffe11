#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bellalg {

/// Base class for all errors raised by the kernel.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Division by the zero scalar.
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

/// Exact division requested but the divisor does not divide the dividend.
struct NotDivisible : Error {
    NotDivisible() : Error("exact division failed: divisor does not divide dividend") {}
};

/// Operands live over different variable sets.
struct VarSetMismatch : Error {
    explicit VarSetMismatch(const std::string& what) : Error("variable set mismatch: " + what) {}
};

/// A precondition on operation inputs was violated (bad sizes, non-members, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Lexical or syntactic error in text input. `pos` is a 0-based byte offset
/// pointing at the first offending token.
struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
};

} // namespace bellalg
