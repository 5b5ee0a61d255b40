#include "powstruct/power_structure.hpp"

#include <numeric>

#include "powstruct/laurent_poly.hpp"
#include "powstruct/serialize.hpp"

namespace powstruct {

namespace {

using QSeries = TruncSeries<LaurentPoly>;

std::string monomial_word(const Alphabet& vars, const Exponent& e) {
  return to_text(LaurentPoly::monomial(vars, e, 1));
}

IdentityReport compare(const std::string& name, const QSeries& lhs, const QSeries& rhs) {
  IdentityReport report{name, lhs.order(), true, std::nullopt};
  for (int n = 0; n <= lhs.order(); ++n) {
    const LaurentPoly diff = lhs[n] - rhs[n];
    if (diff.is_zero()) continue;
    const Exponent& e = diff.terms().begin()->first;
    report.holds = false;
    report.first_discrepancy =
        Discrepancy{n, monomial_word(diff.vars(), e), to_string(lhs[n].coefficient(e)), to_string(rhs[n].coefficient(e))};
    break;
  }
  return report;
}

QSeries exp_of_t_series(int order, const std::vector<int>& support) {
  const LaurentPoly q0(Alphabet{});
  QSeries b(order, q0);
  for (int n : support)
    if (n <= order) b.set(n, q0.constant(1));
  return series_exp(b);
}

// e^t = prod_n (1 - t^n)^{-mu(n)/n}
IdentityReport check_exp_moebius(int order) {
  const LaurentPoly q0(Alphabet{});
  const QSeries lhs = exp_of_t_series(order, {1});
  QSeries rhs = QSeries::one(order, q0);
  for (int n = 1; n <= order; ++n)
    if (mobius(n) != 0) rhs = rhs * lambda_factor(q0.constant(ratio(mobius(n), n)), n, order);
  return compare("exp_moebius", lhs, rhs);
}

// prod_k (1 - t^k)^{-phi(k)/k} = e^{t/(1-t)}
IdentityReport check_euler_phi(int order) {
  const LaurentPoly q0(Alphabet{});
  QSeries lhs = QSeries::one(order, q0);
  for (int k = 1; k <= order; ++k) lhs = lhs * lambda_factor(q0.constant(ratio(euler_phi(k), k)), k, order);
  std::vector<int> all(static_cast<std::size_t>(order));
  std::iota(all.begin(), all.end(), 1);
  const QSeries rhs = exp_of_t_series(order, all);
  return compare("euler_phi", lhs, rhs);
}

QSeries truncate_y(const QSeries& s, int max_y) {
  QSeries r = s;
  for (int n = 0; n <= s.order(); ++n) r.set(n, s[n].truncate_degree("y", max_y));
  return r;
}

// prod_{gcd(k,m)=1} (1 - x^k y^m)^{1/k} against (1-x)^{y/(1-y)}. The series variable
// is x; y lives in the coefficient ring and both sides are cut at y-degree `order`.
// Left powers are usual powers, the right one is the polynomial-ring power structure.
IdentityReport check_gcd_product(int order) {
  const Alphabet ys{"y"};
  const LaurentPoly one = LaurentPoly::from_constant(ys, 1);
  QSeries lhs = QSeries::one(order, one);
  for (int k = 1; k <= order; ++k)
    for (int m = 1; m <= order; ++m) {
      if (std::gcd(k, m) != 1) continue;
      const QSeries factor = QSeries::binomial(order, -LaurentPoly::variable(ys, "y", m), k);
      lhs = truncate_y(lhs * truncate_y(usual_power(factor, Rational(1, k)), order), order);
    }
  LaurentPoly y_over_1my(ys);
  for (int m = 1; m <= order; ++m) y_over_1my += LaurentPoly::variable(ys, "y", m);
  const QSeries base = QSeries::binomial(order, -one, 1);
  const QSeries rhs = truncate_y(power(base, y_over_1my), order);
  return compare("gcd_product", lhs, rhs);
}

}  // namespace

std::vector<std::string> identity_names() { return {"exp_moebius", "euler_phi", "gcd_product"}; }

IdentityReport verify_identity(const std::string& name, int order) {
  if (order < 0) throw DomainError("identity order must be >= 0");
  if (name == "exp_moebius") return check_exp_moebius(order);
  if (name == "euler_phi") return check_euler_phi(order);
  if (name == "gcd_product") return check_gcd_product(order);
  throw DomainError("unknown identity '" + name + "'");
}

}  // namespace powstruct
