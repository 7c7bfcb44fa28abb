#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace k3cubic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for inputs outside the mathematical domain of an operation
/// (unstable pair, degenerate configuration, odd lattice, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a finite quadratic form comparison falls outside the
/// group structures the isometry test can decide.
class UndecidedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed textual input (bad rational, wrong arity).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "num/den" or "num" (optional sign, surrounding whitespace allowed).
Rational parse_rational(std::string_view text);

/// Parses a comma separated list of rationals.
std::vector<Rational> parse_rational_list(std::string_view text, char sep = ',');

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Representative of value modulo `modulus` in [0, modulus).
Rational reduce_mod(const Rational& value, const Rational& modulus);

inline Rational mod2(const Rational& value) { return reduce_mod(value, Rational(2)); }
inline Rational mod1(const Rational& value) { return reduce_mod(value, Rational(1)); }

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace k3cubic
