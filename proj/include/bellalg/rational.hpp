#pragma once

#include <gmpxx.h>

#include <string>

namespace bellalg {

using Rational = mpq_class;

/// Renders `p/q` in lowest terms, or just `p` for integers.
std::string rational_to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws DomainError on malformed input or zero denominator.
Rational rational_from_string(const std::string& text);

} // namespace bellalg
