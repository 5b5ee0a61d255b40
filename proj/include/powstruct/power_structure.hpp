#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powstruct/numtheory.hpp"
#include "powstruct/series.hpp"

namespace powstruct {

/// lambda_t(X) = (1-t)^{-X} = exp(sum_{n>=1} Psi_n(X) t^n / n), the unique series
/// with constant term 1 whose logarithmic derivative is sum Psi_n(X) t^{n-1}.
/// Only Psi_1..Psi_order are evaluated.
template <LambdaRing R>
TruncSeries<R> lambda_t(const R& x, int order) {
  TruncSeries<R> logs(order, x);
  for (int n = 1; n <= order; ++n) logs.set(n, adams(x, n) * Rational(1, n));
  return series_exp(logs);
}

/// Exponents B_1..B_N of A(t) = prod_k (1 - t^k)^{-B_k}; exponents[k-1] holds B_k.
template <LambdaRing R>
struct FactorizationResult {
  std::vector<R> exponents;

  const R& operator[](int k) const { return exponents.at(static_cast<std::size_t>(k - 1)); }
  int size() const { return static_cast<int>(exponents.size()); }
  friend bool operator==(const FactorizationResult&, const FactorizationResult&) = default;
};

enum class FactorizeAlgorithm { iterative, moebius };
enum class PowerAlgorithm { factorize_route, theorem2 };

/// (1 - t^k)^{-B} as a series of the given order.
template <LambdaRing R>
TruncSeries<R> lambda_factor(const R& b, int k, int order) {
  return spread(lambda_t(b, order / k), k, order);
}

namespace detail {

template <LambdaRing R>
void require_unit_constant(const TruncSeries<R>& a, const char* what) {
  if (!a.has_unit_constant()) throw DomainError(std::string(what) + " requires a series with constant term 1");
}

template <LambdaRing R>
FactorizationResult<R> factorize_iterative(const TruncSeries<R>& a) {
  const int n = a.order();
  FactorizationResult<R> out;
  TruncSeries<R> rest = a;
  for (int k = 1; k <= n; ++k) {
    R b = rest[k];
    if (!b.is_zero()) rest = rest / lambda_factor(b, k, n);
    out.exponents.push_back(std::move(b));
  }
  return out;
}

template <LambdaRing R>
FactorizationResult<R> factorize_moebius(const TruncSeries<R>& a) {
  const std::vector<R> c = log_derivative(a);
  FactorizationResult<R> out;
  for (int n = 1; n <= a.order(); ++n) {
    R acc = zero_like(a.proto());
    for (int d : divisors(n)) {
      const int mu = mobius(d);
      if (mu == 0) continue;
      const R& cn = c[static_cast<std::size_t>(n / d - 1)];
      if (cn.is_zero()) continue;
      const R term = adams(cn, d);
      acc = mu > 0 ? acc + term : acc - term;
    }
    out.exponents.push_back(acc * Rational(1, n));
  }
  return out;
}

/// (1/n) sum_{m|n} mu(n/m) Psi_m(X)
template <LambdaRing R>
R necklace_exponent(const R& x, int n) {
  R acc = zero_like(x);
  for (int m : divisors(n)) {
    const int mu = mobius(n / m);
    if (mu == 0) continue;
    const R term = adams(x, m);
    acc = mu > 0 ? acc + term : acc - term;
  }
  return acc * Rational(1, n);
}

}  // namespace detail

/// Decomposition of A (constant term 1) into prod_{k<=N} (1 - t^k)^{-B_k}.
/// `iterative` divides off one factor at a time; `moebius` uses
/// n B_n = sum_{d|n} mu(d) Psi_d(C_{n/d}) with C the logarithmic derivative.
template <LambdaRing R>
FactorizationResult<R> factorize(const TruncSeries<R>& a, FactorizeAlgorithm algorithm = FactorizeAlgorithm::moebius) {
  detail::require_unit_constant(a, "factorize");
  return algorithm == FactorizeAlgorithm::iterative ? detail::factorize_iterative(a) : detail::factorize_moebius(a);
}

/// prod_k (1 - t^k)^{-B_k} to the given order; exponents beyond the order are ignored.
template <LambdaRing R>
TruncSeries<R> recompose(const FactorizationResult<R>& b, int order, const R& proto) {
  TruncSeries<R> out = TruncSeries<R>::one(order, proto);
  for (int k = 1; k <= std::min(order, b.size()); ++k)
    if (!b[k].is_zero()) out = out * lambda_factor(b[k], k, order);
  return out;
}

template <LambdaRing R>
TruncSeries<R> recompose(const FactorizationResult<R>& b, int order) {
  if (b.exponents.empty()) throw DomainError("recompose of an empty factorization needs a ring prototype");
  return recompose(b, order, b.exponents.front());
}

/// A(t)^X in the power structure induced by the lambda-structure of R.
///
/// factorize_route: prod_k (1 - t^k)^{-B_k X} over the factorization of A.
/// theorem2: prod_n (Psi_n(A))(t^n)^{(1/n) sum_{m|n} mu(n/m) Psi_m(X)} with usual powers.
template <LambdaRing R>
TruncSeries<R> power(const TruncSeries<R>& a, const R& x, PowerAlgorithm algorithm = PowerAlgorithm::factorize_route) {
  detail::require_unit_constant(a, "power");
  const int order = a.order();
  TruncSeries<R> out = TruncSeries<R>::one(order, a.proto());
  if (algorithm == PowerAlgorithm::factorize_route) {
    const auto b = factorize(a);
    for (int k = 1; k <= order; ++k) {
      if (b[k].is_zero()) continue;
      const R bx = b[k] * x;
      if (!bx.is_zero()) out = out * lambda_factor(bx, k, order);
    }
    return out;
  }
  for (int n = 1; n <= order; ++n) {
    const R e = detail::necklace_exponent(x, n);
    if (e.is_zero()) continue;
    const auto twisted = spread(adams_coeffs(a.truncated(order / n), n), n, order);
    out = out * usual_power(twisted, e);
  }
  return out;
}

/// (1 + a t)^X as the closed-form product prod_n (1 + Psi_n(a) t^n)^{(1/n) sum_{m|n} mu(n/m) Psi_m(X)}.
template <LambdaRing R>
TruncSeries<R> binomial_power(const R& a, const R& x, int order) {
  TruncSeries<R> out = TruncSeries<R>::one(order, a);
  for (int n = 1; n <= order; ++n) {
    const R e = detail::necklace_exponent(x, n);
    if (e.is_zero()) continue;
    out = out * usual_power(TruncSeries<R>::binomial(order, adams(a, n), n), e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named identity checks

struct Discrepancy {
  int t_power = 0;
  std::string term;  // monomial of the coefficient ring where the two sides differ
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string name;
  int order = 0;
  bool holds = false;
  std::optional<Discrepancy> first_discrepancy;
};

/// Registered names: exp_moebius, euler_phi, gcd_product.
std::vector<std::string> identity_names();

/// Throws DomainError for an unknown name.
IdentityReport verify_identity(const std::string& name, int order);

}  // namespace powstruct
