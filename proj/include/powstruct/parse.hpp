#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "powstruct/graded.hpp"
#include "powstruct/laurent_poly.hpp"
#include "powstruct/series.hpp"
#include "powstruct/symfunc.hpp"

namespace powstruct {

/// Polynomial over Q in free-form symbols, the intermediate result of parsing.
/// Symbols are user variables, the series variable "t", and power sums "p[k]".
class ParsedExpr {
public:
  using Monomial = std::map<std::string, int>;
  using TermMap = std::map<Monomial, Rational>;

  const TermMap& terms() const { return terms_; }
  /// Order hint from a trailing "O(t^k)" (k - 1), if one was written.
  std::optional<int> order_hint() const { return order_hint_; }

  /// User variables, excluding t and power sums, sorted.
  std::set<std::string> variables() const;
  bool uses_power_sums() const;
  bool uses_t() const;
  int max_power_sum_index() const;
  int max_t_degree() const;

private:
  friend class ExprParser;
  TermMap terms_;
  std::optional<int> order_hint_;
};

/// Grammar: sums and products of rationals, identifiers, p[a,b,...] (power-sum
/// products), s[a,b,...] (Schur functions, expanded in p), parentheses, integer
/// powers "^n" (negative n only on monomials), division by nonzero constants,
/// and an optional trailing "+ O(t^k)". Throws DomainError with a position on bad input.
ParsedExpr parse_expression(std::string_view text);

/// Converters into concrete rings. Any symbol outside the allowed set is an error.
LaurentPoly to_laurent(const ParsedExpr& e, const Alphabet& vars);
SymFunc to_symfunc(const ParsedExpr& e, const Alphabet& vars, int bound);
/// Graded element: the symbol "g" stands for a degree-1 generator.
GradedElement to_graded(const ParsedExpr& e);

/// Splits by powers of t (terms past `order` are dropped) and converts each coefficient.
TruncSeries<LaurentPoly> to_laurent_series(const ParsedExpr& e, const Alphabet& vars, int order);
TruncSeries<SymFunc> to_symfunc_series(const ParsedExpr& e, const Alphabet& vars, int bound, int order);

inline LaurentPoly parse_laurent(std::string_view text, const Alphabet& vars) {
  return to_laurent(parse_expression(text), vars);
}

inline SymFunc parse_symfunc(std::string_view text, const Alphabet& vars, int bound) {
  return to_symfunc(parse_expression(text), vars, bound);
}

}  // namespace powstruct
