#include "powstruct/serialize.hpp"

namespace powstruct {

namespace {

std::string monomial_text(const Alphabet& vars, const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

// Coefficient c times word, as a signed piece.
detail::SignedText scaled_word(const Rational& c, const std::string& word) {
  detail::SignedText t;
  t.negative = c < 0;
  const Rational mag = abs(c);
  if (word.empty()) t.magnitude = to_string(mag);
  else if (mag == 1) t.magnitude = word;
  else t.magnitude = to_string(mag) + "*" + word;
  return t;
}

Json partition_json(const Partition& lambda) { return Json(lambda.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("partition JSON must be an array of positive integers");
  return Partition(j.get<std::vector<int>>());
}

std::string graded_word(int degree) {
  if (degree == 0) return "";
  return degree == 1 ? "g" : "g^" + std::to_string(degree);
}

}  // namespace

namespace detail {

std::string join_terms(const std::vector<std::pair<SignedText, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [coeff, word] = terms[i];
    std::string piece;
    if (word.empty()) piece = coeff.magnitude;
    else if (coeff.magnitude == "1") piece = word;
    else piece = coeff.magnitude + "*" + word;
    if (i == 0) out += (coeff.negative ? "-" : "") + piece;
    else out += (coeff.negative ? " - " : " + ") + piece;
  }
  return out;
}

SignedText signed_text(const LaurentPoly& p) {
  if (p.size() == 1) {
    const auto& [e, c] = *p.terms().begin();
    return scaled_word(c, monomial_text(p.vars(), e));
  }
  return {false, "(" + to_text(p) + ")"};
}

SignedText signed_text(const SymFunc& f) {
  if (f.terms().size() == 1) {
    const auto& [lambda, c] = *f.terms().begin();
    if (lambda.empty()) return signed_text(c);
    if (c.size() == 1) {
      SignedText t = signed_text(c);
      t.magnitude = t.magnitude == "1" ? to_text(lambda) : t.magnitude + "*" + to_text(lambda);
      return t;
    }
  }
  return {false, "(" + to_text(f) + ")"};
}

SignedText signed_text(const GradedElement& x) {
  if (x.components().size() == 1) {
    const auto& [d, c] = *x.components().begin();
    return scaled_word(c, graded_word(d));
  }
  return {false, "(" + to_text(x) + ")"};
}

}  // namespace detail

std::string to_text(const LaurentPoly& p) {
  std::vector<std::pair<detail::SignedText, std::string>> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.emplace_back(scaled_word(it->second, monomial_text(p.vars(), it->first)), "");
  return detail::join_terms(terms);
}

std::string to_text(const Partition& lambda, char basis) {
  std::string out(1, basis);
  out += "[";
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) out += (i ? "," : "") + std::to_string(lambda.parts()[i]);
  return out + "]";
}

std::string to_text(const SymFunc& f) {
  std::vector<std::pair<detail::SignedText, std::string>> terms;
  for (const auto& [lambda, c] : f.terms())
    terms.emplace_back(detail::signed_text(c), lambda.empty() ? "" : to_text(lambda));
  return detail::join_terms(terms);
}

std::string schur_to_text(const std::map<Partition, LaurentPoly>& expansion) {
  std::vector<std::pair<detail::SignedText, std::string>> terms;
  for (const auto& [lambda, c] : expansion) terms.emplace_back(detail::signed_text(c), lambda.empty() ? "" : to_text(lambda, 's'));
  return detail::join_terms(terms);
}

std::string to_text(const GradedElement& x) {
  std::vector<std::pair<detail::SignedText, std::string>> terms;
  for (const auto& [d, c] : x.components()) terms.emplace_back(scaled_word(c, graded_word(d)), "");
  return detail::join_terms(terms);
}

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(Json{{"e", it->first}, {"c", to_string(it->second)}});
  return Json{{"vars", p.vars()}, {"terms", std::move(terms)}};
}

Json to_json(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms()) terms.push_back(Json{{"p", partition_json(lambda)}, {"c", to_json(c)}});
  return Json{{"vars", f.coeff_vars()}, {"bound", f.bound()}, {"terms", std::move(terms)}};
}

Json to_json(const GradedElement& x) {
  Json comps = Json::array();
  for (const auto& [d, c] : x.components()) comps.push_back(Json{{"degree", d}, {"c", to_string(c)}});
  return Json{{"graded", std::move(comps)}};
}

Json schur_to_json(const std::map<Partition, LaurentPoly>& expansion) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : expansion) terms.push_back(Json{{"s", partition_json(lambda)}, {"c", to_json(c)}});
  return terms;
}

LaurentPoly laurent_from_json(const Json& j) {
  try {
    const auto vars = j.at("vars").get<Alphabet>();
    LaurentPoly p(vars);
    for (const auto& t : j.at("terms"))
      p += LaurentPoly::monomial(vars, t.at("e").get<Exponent>(), parse_rational(t.at("c").get<std::string>()));
    return p;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

SymFunc symfunc_from_json(const Json& j) {
  try {
    const auto vars = j.at("vars").get<Alphabet>();
    const int bound = j.at("bound").get<int>();
    SymFunc f(vars, bound);
    for (const auto& t : j.at("terms"))
      f += SymFunc::from_partition(vars, bound, partition_from_json(t.at("p")), laurent_from_json(t.at("c")));
    return f;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed symmetric function JSON: ") + e.what());
  }
}

GradedElement graded_from_json(const Json& j) {
  try {
    GradedElement x;
    for (const auto& c : j.at("graded"))
      x += GradedElement::homogeneous(c.at("degree").get<int>(), parse_rational(c.at("c").get<std::string>()));
    return x;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed graded element JSON: ") + e.what());
  }
}

}  // namespace powstruct
