#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "powstruct/rational.hpp"

namespace powstruct {

using Alphabet = std::vector<std::string>;
using Exponent = std::vector<int>;

/// Multivariate Laurent polynomial over Q in a fixed, ordered alphabet.
///
/// Terms are kept in a map keyed by exponent tuple, so two equal polynomials
/// always iterate (and serialize) identically. Zero coefficients are never stored.
/// Values with different alphabets never mix: every binary operation checks.
class LaurentPoly {
public:
  using TermMap = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(Alphabet vars);

  static LaurentPoly from_constant(Alphabet vars, const Rational& c);
  static LaurentPoly variable(Alphabet vars, const std::string& name, int power = 1);
  static LaurentPoly monomial(Alphabet vars, Exponent e, const Rational& c);

  LaurentPoly constant(const Rational& c) const { return from_constant(vars_, c); }

  const Alphabet& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of the all-zero exponent).
  Rational constant_term() const;
  Rational coefficient(const Exponent& e) const;

  bool has_negative_exponents() const;
  bool has_integer_coefficients() const;
  /// Exponent of `name` in each term, max over terms; throws on unknown name or zero poly.
  int max_degree(const std::string& name) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Drops terms whose exponent for `name` exceeds `max_exp`.
  LaurentPoly truncate_degree(const std::string& name, int max_exp) const;

private:
  void check_alphabet(const LaurentPoly& other) const;
  void add_term(const Exponent& e, const Rational& c);

  Alphabet vars_;
  TermMap terms_;
};

LaurentPoly pow(const LaurentPoly& base, int exponent);

/// Exact quotient a / b in the Laurent ring; throws InexactDivision if b does not divide a.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Replaces each variable of p by the mapped polynomial. All images must share
/// one alphabet, which becomes the alphabet of the result. A variable raised to
/// a negative power may only be mapped to a unit monomial.
LaurentPoly substitute(const LaurentPoly& p, const std::map<std::string, LaurentPoly>& images);

/// Psi_k: every exponent multiplied by k.
LaurentPoly adams(const LaurentPoly& p, int k);

/// Inverse exists exactly for nonzero monomials.
std::optional<LaurentPoly> try_inverse(const LaurentPoly& p);

/// Same polynomial viewed in a larger alphabet (which must contain every variable of p).
LaurentPoly embed(const LaurentPoly& p, const Alphabet& target);

}  // namespace powstruct
