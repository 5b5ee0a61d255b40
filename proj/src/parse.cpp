#include "powstruct/parse.hpp"

#include <cctype>

namespace powstruct {

namespace {

bool is_power_sum(const std::string& sym) { return sym.size() > 2 && sym[0] == 'p' && sym[1] == '['; }

int power_sum_index(const std::string& sym) { return std::stoi(sym.substr(2, sym.size() - 3)); }

std::string power_sum_symbol(int k) { return "p[" + std::to_string(k) + "]"; }

}  // namespace

class ExprParser {
public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ParsedExpr parse() {
    ParsedExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    e.order_hint_ = order_hint_;
    return e;
  }

private:
  using Monomial = ParsedExpr::Monomial;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at position " + std::to_string(pos_) + " in '" + std::string(text_) + "': " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static ParsedExpr constant(const Rational& c) {
    ParsedExpr e;
    if (c != 0) e.terms_.emplace(Monomial{}, c);
    return e;
  }

  static ParsedExpr symbol(const std::string& name) {
    ParsedExpr e;
    e.terms_.emplace(Monomial{{name, 1}}, 1);
    return e;
  }

  static void add_into(ParsedExpr& acc, const ParsedExpr& b, const Rational& sign) {
    for (const auto& [m, c] : b.terms_) {
      auto [it, inserted] = acc.terms_.try_emplace(m, c * sign);
      if (inserted) continue;
      it->second += c * sign;
      if (it->second == 0) acc.terms_.erase(it);
    }
  }

  static ParsedExpr multiply(const ParsedExpr& a, const ParsedExpr& b) {
    ParsedExpr r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (const auto& [s, k] : mb)
          if ((m[s] += k) == 0) m.erase(s);
        ParsedExpr single;
        single.terms_.emplace(std::move(m), ca * cb);
        add_into(r, single, 1);
      }
    return r;
  }

  ParsedExpr raise(const ParsedExpr& base, int n) {
    if (n < 0) {
      if (base.terms_.size() != 1) fail("negative power of a non-monomial");
      const auto& [m, c] = *base.terms_.begin();
      Monomial inv;
      for (const auto& [s, k] : m) inv[s] = -k;
      ParsedExpr r;
      r.terms_.emplace(std::move(inv), 1 / c);
      return raise(r, -n);
    }
    ParsedExpr r = constant(1);
    for (int i = 0; i < n; ++i) r = multiply(r, base);
    return r;
  }

  ParsedExpr expr() {
    ParsedExpr acc;
    bool first = true;
    while (true) {
      Rational sign = 1;
      if (first) {
        if (accept('-')) sign = -1;
        else accept('+');
      } else if (accept('+')) {
      } else if (accept('-')) {
        sign = -1;
      } else {
        break;
      }
      first = false;
      if (try_order_term()) continue;
      add_into(acc, term(), sign);
    }
    return acc;
  }

  // Recognizes "O(t^k)" and records the order hint.
  bool try_order_term() {
    skip_space();
    if (pos_ + 1 >= text_.size() || text_[pos_] != 'O' || text_[pos_ + 1] != '(') return false;
    pos_ += 2;
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != 't') fail("expected t in O(...)");
    ++pos_;
    int k = 1;
    if (accept('^')) k = integer();
    expect(')');
    if (k < 1) fail("O(t^k) needs k >= 1");
    order_hint_ = k - 1;
    return true;
  }

  ParsedExpr term() {
    ParsedExpr acc = factor();
    while (true) {
      if (accept('*')) {
        acc = multiply(acc, factor());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        ParsedExpr d = factor();
        if (d.terms_.size() != 1 || !d.terms_.begin()->first.empty()) {
          pos_ = at;
          fail("division is only allowed by a nonzero constant");
        }
        acc = multiply(acc, constant(1 / d.terms_.begin()->second));
      } else {
        break;
      }
    }
    return acc;
  }

  ParsedExpr factor() {
    if (accept('-')) return multiply(constant(-1), factor());
    ParsedExpr base = atom();
    if (accept('^')) {
      bool negative = accept('-');
      int n = integer();
      base = raise(base, negative ? -n : n);
    }
    return base;
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::vector<int> index_list() {
    std::vector<int> parts;
    expect('[');
    if (accept(']')) return parts;
    do {
      parts.push_back(integer());
    } while (accept(','));
    expect(']');
    return parts;
  }

  ParsedExpr atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      ParsedExpr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if ((name == "p" || name == "s") && pos_ < text_.size() && text_[pos_] == '[') {
        std::vector<int> parts = index_list();
        for (int k : parts)
          if (k < 1) fail("indices must be positive");
        if (name == "p") {
          ParsedExpr r = constant(1);
          for (int k : parts) r = multiply(r, symbol(power_sum_symbol(k)));
          return r;
        }
        return schur_expr(Partition(parts));
      }
      return symbol(name);
    }
    fail("expected a number, identifier, or '('");
  }

  static ParsedExpr schur_expr(const Partition& lambda) {
    const SymFunc s = schur(lambda, std::max(lambda.weight(), 1));
    ParsedExpr r;
    for (const auto& [mu, c] : s.terms()) {
      ParsedExpr term = constant(c.constant_term());
      for (int k : mu.parts()) term = multiply(term, symbol(power_sum_symbol(k)));
      add_into(r, term, 1);
    }
    return r;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<int> order_hint_;
};

ParsedExpr parse_expression(std::string_view text) { return ExprParser(text).parse(); }

std::set<std::string> ParsedExpr::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [s, k] : m)
      if (s != "t" && !is_power_sum(s)) out.insert(s);
  return out;
}

bool ParsedExpr::uses_power_sums() const { return max_power_sum_index() > 0; }

bool ParsedExpr::uses_t() const { return max_t_degree() > 0; }

int ParsedExpr::max_power_sum_index() const {
  int best = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [s, k] : m)
      if (is_power_sum(s)) best = std::max(best, power_sum_index(s));
  return best;
}

int ParsedExpr::max_t_degree() const {
  int best = 0;
  for (const auto& [m, c] : terms_)
    if (auto it = m.find("t"); it != m.end()) best = std::max(best, it->second);
  return best;
}

namespace {

// One monomial of a ParsedExpr, split into (t-degree, partition, coefficient-ring exponent).
struct SplitMonomial {
  int t_degree = 0;
  std::vector<int> p_parts;
  Exponent exponent;
};

SplitMonomial split(const ParsedExpr::Monomial& m, const Alphabet& vars, bool allow_t, bool allow_p) {
  SplitMonomial out;
  out.exponent.assign(vars.size(), 0);
  for (const auto& [s, k] : m) {
    if (s == "t") {
      if (!allow_t) throw DomainError("unexpected series variable t");
      if (k < 0) throw DomainError("negative power of t");
      out.t_degree = k;
    } else if (is_power_sum(s)) {
      if (!allow_p) throw DomainError("unexpected power sum " + s);
      if (k < 0) throw DomainError("negative power of " + s);
      out.p_parts.insert(out.p_parts.end(), static_cast<std::size_t>(k), power_sum_index(s));
    } else {
      auto it = std::find(vars.begin(), vars.end(), s);
      if (it == vars.end()) throw AlphabetMismatch("variable '" + s + "' not in the declared alphabet");
      out.exponent[static_cast<std::size_t>(it - vars.begin())] = k;
    }
  }
  return out;
}

}  // namespace

LaurentPoly to_laurent(const ParsedExpr& e, const Alphabet& vars) {
  LaurentPoly p(vars);
  for (const auto& [m, c] : e.terms()) p += LaurentPoly::monomial(vars, split(m, vars, false, false).exponent, c);
  return p;
}

SymFunc to_symfunc(const ParsedExpr& e, const Alphabet& vars, int bound) {
  SymFunc f(vars, bound);
  for (const auto& [m, c] : e.terms()) {
    auto sm = split(m, vars, false, true);
    f += SymFunc::from_partition(vars, bound, Partition(sm.p_parts), LaurentPoly::monomial(vars, sm.exponent, c));
  }
  return f;
}

GradedElement to_graded(const ParsedExpr& e) {
  GradedElement x;
  for (const auto& [m, c] : e.terms()) {
    int degree = 0;
    for (const auto& [s, k] : m) {
      if (s != "g") throw DomainError("graded elements use the single generator symbol g");
      if (k < 0) throw DomainError("negative power of g");
      degree = k;
    }
    x += GradedElement::homogeneous(degree, c);
  }
  return x;
}

TruncSeries<LaurentPoly> to_laurent_series(const ParsedExpr& e, const Alphabet& vars, int order) {
  TruncSeries<LaurentPoly> s(order, LaurentPoly(vars));
  for (const auto& [m, c] : e.terms()) {
    auto sm = split(m, vars, true, false);
    if (sm.t_degree > order) continue;
    s.set(sm.t_degree, s[sm.t_degree] + LaurentPoly::monomial(vars, sm.exponent, c));
  }
  return s;
}

TruncSeries<SymFunc> to_symfunc_series(const ParsedExpr& e, const Alphabet& vars, int bound, int order) {
  TruncSeries<SymFunc> s(order, SymFunc(vars, bound));
  for (const auto& [m, c] : e.terms()) {
    auto sm = split(m, vars, true, true);
    if (sm.t_degree > order) continue;
    s.set(sm.t_degree, s[sm.t_degree] + SymFunc::from_partition(vars, bound, Partition(sm.p_parts),
                                                               LaurentPoly::monomial(vars, sm.exponent, c)));
  }
  return s;
}

}  // namespace powstruct
