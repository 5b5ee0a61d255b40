#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "powstruct/graded.hpp"
#include "powstruct/laurent_poly.hpp"
#include "powstruct/series.hpp"
#include "powstruct/symfunc.hpp"

namespace powstruct {

using Json = nlohmann::json;

// Canonical text forms. Laurent terms are written from the largest exponent
// tuple down ("L^5 - L^2"); symmetric-function terms in partition order
// ("1/2*p[1,1] + 1/2*p[2]").
std::string to_text(const LaurentPoly& p);
std::string to_text(const SymFunc& f);
std::string to_text(const GradedElement& x);
std::string to_text(const Partition& lambda, char basis = 'p');
std::string schur_to_text(const std::map<Partition, LaurentPoly>& expansion);

Json to_json(const LaurentPoly& p);
Json to_json(const SymFunc& f);
Json to_json(const GradedElement& x);
Json schur_to_json(const std::map<Partition, LaurentPoly>& expansion);

LaurentPoly laurent_from_json(const Json& j);
SymFunc symfunc_from_json(const Json& j);
GradedElement graded_from_json(const Json& j);

namespace detail {

/// A coefficient as it appears in a sum: sign, and text of its magnitude
/// (parenthesized when it is itself a sum). "1" means the bare basis word.
struct SignedText {
  bool negative = false;
  std::string magnitude;
};

SignedText signed_text(const LaurentPoly& p);
SignedText signed_text(const SymFunc& f);
SignedText signed_text(const GradedElement& x);

/// Joins (coefficient, basis word) pairs into "a*w1 + b*w2 - ..."; empty basis word = scalar.
std::string join_terms(const std::vector<std::pair<SignedText, std::string>>& terms);

}  // namespace detail

template <LambdaRing R>
std::string to_text(const TruncSeries<R>& s) {
  std::vector<std::pair<detail::SignedText, std::string>> terms;
  for (int n = 0; n <= s.order(); ++n) {
    if (s[n].is_zero()) continue;
    std::string word = n == 0 ? "" : n == 1 ? "t" : "t^" + std::to_string(n);
    terms.emplace_back(detail::signed_text(s[n]), std::move(word));
  }
  const std::string tail = "O(t^" + std::to_string(s.order() + 1) + ")";
  if (terms.empty()) return tail;
  return detail::join_terms(terms) + " + " + tail;
}

template <LambdaRing R>
Json to_json(const TruncSeries<R>& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

/// Decodes {"order":N,"coeffs":[...]} with the given coefficient decoder.
template <LambdaRing R, typename Decode>
TruncSeries<R> series_from_json(const Json& j, Decode decode) {
  const int order = j.at("order").get<int>();
  const auto& arr = j.at("coeffs");
  if (!arr.is_array() || static_cast<int>(arr.size()) != order + 1)
    throw DomainError("series JSON: expected order+1 coefficients");
  std::vector<R> coeffs;
  for (const auto& c : arr) coeffs.push_back(decode(c));
  return TruncSeries<R>(std::move(coeffs));
}

}  // namespace powstruct
