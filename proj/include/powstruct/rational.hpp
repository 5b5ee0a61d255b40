#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace powstruct {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base of every error the library reports for a violated mathematical precondition.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class AlphabetMismatch : public DomainError {
public:
  using DomainError::DomainError;
};

class InexactDivision : public DomainError {
public:
  using DomainError::DomainError;
};

class BoundExceeded : public DomainError {
public:
  using DomainError::DomainError;
};

class NotInvertible : public DomainError {
public:
  using DomainError::DomainError;
};

/// Malformed text input.
class ParseError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Parses "n" or "n/d" (optional sign, decimal digits). Throws DomainError on junk or d == 0.
Rational parse_rational(std::string_view text);

/// "num/den", den omitted when 1.
std::string to_string(const Rational& q);

/// num/den in lowest terms (mpq_class's two-argument constructor does not reduce).
inline Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace powstruct
