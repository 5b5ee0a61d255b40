#include "powstruct/laurent_poly.hpp"

#include <algorithm>

namespace powstruct {

namespace {

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponent sub_exponents(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::string join(const Alphabet& vars) {
  std::string s = "[";
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
  return s + "]";
}

std::size_t index_of(const Alphabet& vars, const std::string& name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw AlphabetMismatch("variable '" + name + "' not in alphabet " + join(vars));
  return static_cast<std::size_t>(it - vars.begin());
}

}  // namespace

LaurentPoly::LaurentPoly(Alphabet vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw AlphabetMismatch("duplicate variable '" + vars_[i] + "'");
}

LaurentPoly LaurentPoly::from_constant(Alphabet vars, const Rational& c) {
  LaurentPoly p(std::move(vars));
  p.add_term(Exponent(p.vars_.size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(Alphabet vars, const std::string& name, int power) {
  LaurentPoly p(std::move(vars));
  Exponent e(p.vars_.size(), 0);
  e[index_of(p.vars_, name)] = power;
  p.add_term(e, 1);
  return p;
}

LaurentPoly LaurentPoly::monomial(Alphabet vars, Exponent e, const Rational& c) {
  LaurentPoly p(std::move(vars));
  if (e.size() != p.vars_.size()) throw AlphabetMismatch("exponent length does not match alphabet " + join(p.vars_));
  p.add_term(e, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational LaurentPoly::constant_term() const { return coefficient(Exponent(vars_.size(), 0)); }

Rational LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentPoly::has_negative_exponents() const {
  for (const auto& [e, c] : terms_)
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) return true;
  return false;
}

bool LaurentPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_integer(t.second); });
}

int LaurentPoly::max_degree(const std::string& name) const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial");
  const auto i = index_of(vars_, name);
  int best = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) best = std::max(best, e[i]);
  return best;
}

void LaurentPoly::check_alphabet(const LaurentPoly& other) const {
  if (vars_ != other.vars_) throw AlphabetMismatch("alphabet mismatch: " + join(vars_) + " vs " + join(other.vars_));
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_alphabet(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_alphabet(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_alphabet(b);
  LaurentPoly r(a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::truncate_degree(const std::string& name, int max_exp) const {
  const auto i = index_of(vars_, name);
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_)
    if (e[i] <= max_exp) r.terms_.emplace(e, c);
  return r;
}

LaurentPoly pow(const LaurentPoly& base, int exponent) {
  if (exponent < 0) {
    auto inv = try_inverse(base);
    if (!inv) throw NotInvertible("negative power of a non-monomial");
    return pow(*inv, -exponent);
  }
  LaurentPoly result = base.constant(1);
  LaurentPoly square = base;
  while (exponent > 0) {
    if (exponent & 1) result *= square;
    exponent >>= 1;
    if (exponent) square = square * square;
  }
  return result;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars() != b.vars()) throw AlphabetMismatch("alphabet mismatch: " + join(a.vars()) + " vs " + join(b.vars()));
  if (b.is_zero()) throw InexactDivision("division by the zero polynomial");
  LaurentPoly quotient(a.vars());
  if (a.is_zero()) return quotient;

  // In an exact quotient every variable's exponent range is pinned by the ranges
  // of a and b, so a quotient term outside that box proves b does not divide a.
  const std::size_t nv = a.vars().size();
  Exponent lo(nv), hi(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    int amin = a.terms().begin()->first[i], amax = amin;
    for (const auto& [e, c] : a.terms()) amin = std::min(amin, e[i]), amax = std::max(amax, e[i]);
    int bmin = b.terms().begin()->first[i], bmax = bmin;
    for (const auto& [e, c] : b.terms()) bmin = std::min(bmin, e[i]), bmax = std::max(bmax, e[i]);
    lo[i] = amin - bmin;
    hi[i] = amax - bmax;
  }

  const auto& [blead_e, blead_c] = *b.terms().rbegin();
  LaurentPoly rem = a;
  while (!rem.is_zero()) {
    const auto& [rlead_e, rlead_c] = *rem.terms().rbegin();
    Exponent qe = sub_exponents(rlead_e, blead_e);
    for (std::size_t i = 0; i < nv; ++i)
      if (qe[i] < lo[i] || qe[i] > hi[i]) throw InexactDivision("polynomial division is not exact");
    LaurentPoly qterm = LaurentPoly::monomial(a.vars(), qe, rlead_c / blead_c);
    rem -= qterm * b;
    quotient += qterm;
  }
  return quotient;
}

LaurentPoly substitute(const LaurentPoly& p, const std::map<std::string, LaurentPoly>& images) {
  const Alphabet& vars = p.vars();
  std::vector<const LaurentPoly*> image(vars.size());
  const Alphabet* target = nullptr;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = images.find(vars[i]);
    if (it == images.end()) throw AlphabetMismatch("no substitution given for variable '" + vars[i] + "'");
    image[i] = &it->second;
    if (target && *target != it->second.vars())
      throw AlphabetMismatch("substituted values use different alphabets");
    target = &it->second.vars();
  }
  if (!target) {
    if (!images.empty()) target = &images.begin()->second.vars();
    else return p;
  }

  // Powers of each image are reused across terms.
  std::vector<std::map<int, LaurentPoly>> cache(vars.size());
  auto power_of = [&](std::size_t i, int e) -> const LaurentPoly& {
    auto it = cache[i].find(e);
    if (it != cache[i].end()) return it->second;
    if (e < 0 && !try_inverse(*image[i]))
      throw NotInvertible("cannot substitute a non-monomial into a negative power of '" + vars[i] + "'");
    return cache[i].emplace(e, pow(*image[i], e)).first->second;
  };

  LaurentPoly result(*target);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::from_constant(*target, c);
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (e[i] != 0) term *= power_of(i, e[i]);
    result += term;
  }
  return result;
}

LaurentPoly adams(const LaurentPoly& p, int k) {
  if (k < 1) throw DomainError("Adams operation index must be >= 1");
  if (k == 1) return p;
  LaurentPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    Exponent scaled = e;
    for (auto& x : scaled) x *= k;
    r += LaurentPoly::monomial(p.vars(), std::move(scaled), c);
  }
  return r;
}

std::optional<LaurentPoly> try_inverse(const LaurentPoly& p) {
  if (p.size() != 1) return std::nullopt;
  const auto& [e, c] = *p.terms().begin();
  Exponent neg = e;
  for (auto& x : neg) x = -x;
  return LaurentPoly::monomial(p.vars(), std::move(neg), 1 / c);
}

LaurentPoly embed(const LaurentPoly& p, const Alphabet& target) {
  if (p.vars() == target) return p;
  std::vector<std::size_t> where(p.vars().size());
  for (std::size_t i = 0; i < p.vars().size(); ++i) where[i] = index_of(target, p.vars()[i]);
  LaurentPoly r(target);
  for (const auto& [e, c] : p.terms()) {
    Exponent te(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) te[where[i]] = e[i];
    r += LaurentPoly::monomial(target, std::move(te), c);
  }
  return r;
}

}  // namespace powstruct
