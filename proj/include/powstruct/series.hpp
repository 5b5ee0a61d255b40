#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "powstruct/lambda_ring.hpp"

namespace powstruct {

/// a_0 + a_1 t + ... + a_N t^N + O(t^{N+1}) over a lambda-ring R.
///
/// The coefficient vector always holds exactly order()+1 entries, so every
/// series carries a prototype for building constants of its ring.
template <LambdaRing R>
class TruncSeries {
public:
  /// Series with the given coefficients; the order is coeffs.size() - 1.
  explicit TruncSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("a truncated series needs at least one coefficient");
  }

  /// Zero series of the given order over the ring of `proto`.
  TruncSeries(int order, const R& proto) {
    if (order < 0) throw DomainError("series order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, zero_like(proto));
  }

  static TruncSeries one(int order, const R& proto) {
    TruncSeries s(order, proto);
    s.coeffs_[0] = one_like(proto);
    return s;
  }

  /// 1 + c t^k (truncated; just 1 when k > order).
  static TruncSeries binomial(int order, const R& c, int k = 1) {
    TruncSeries s = one(order, c);
    if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<R>& coeffs() const { return coeffs_; }
  const R& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  void set(int n, R value) { coeffs_.at(static_cast<std::size_t>(n)) = std::move(value); }
  const R& proto() const { return coeffs_.front(); }

  bool has_unit_constant() const { return coeffs_.front() == one_like(coeffs_.front()); }

  TruncSeries truncated(int order) const {
    if (order > this->order()) throw DomainError("cannot extend a truncated series beyond its order");
    return TruncSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<R> c;
    c.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c.push_back(a[i] + b[i]);
    return TruncSeries(std::move(c));
  }

  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<R> c;
    c.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c.push_back(a[i] - b[i]);
    return TruncSeries(std::move(c));
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncSeries r(n, a.proto());
    for (int i = 0; i <= n; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (b[j].is_zero()) continue;
        r.coeffs_[static_cast<std::size_t>(i + j)] = r[i + j] + a[i] * b[j];
      }
    }
    return r;
  }

  friend TruncSeries operator*(const TruncSeries& a, const R& c) {
    std::vector<R> out;
    out.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) out.push_back(x * c);
    return TruncSeries(std::move(out));
  }

  friend TruncSeries operator*(const TruncSeries& a, const Rational& c) {
    std::vector<R> out;
    out.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) out.push_back(x * c);
    return TruncSeries(std::move(out));
  }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
  std::vector<R> coeffs_;
};

/// a / b; the constant term of b must be invertible in R.
template <LambdaRing R>
TruncSeries<R> divide(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  const auto inv = try_inverse(b[0]);
  if (!inv) throw NotInvertible("series division: leading coefficient is not invertible");
  const int n = std::min(a.order(), b.order());
  TruncSeries<R> q(n, a.proto());
  for (int i = 0; i <= n; ++i) {
    R acc = a[i];
    for (int k = 1; k <= i; ++k)
      if (!b[k].is_zero() && !q[i - k].is_zero()) acc = acc - b[k] * q[i - k];
    q.set(i, acc * *inv);
  }
  return q;
}

template <LambdaRing R>
TruncSeries<R> operator/(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  return divide(a, b);
}

/// log A for a_0 = 1, from n l_n = n a_n - sum_{k<n} k l_k a_{n-k}.
template <LambdaRing R>
TruncSeries<R> series_log(const TruncSeries<R>& a) {
  if (!a.has_unit_constant()) throw DomainError("series logarithm requires constant term 1");
  const int n = a.order();
  TruncSeries<R> l(n, a.proto());
  for (int m = 1; m <= n; ++m) {
    R acc = a[m] * Rational(m);
    for (int k = 1; k < m; ++k)
      if (!l[k].is_zero() && !a[m - k].is_zero()) acc = acc - l[k] * a[m - k] * Rational(k);
    l.set(m, acc * Rational(1, m));
  }
  return l;
}

/// exp B for b_0 = 0, from n e_n = sum_{k=1}^{n} k b_k e_{n-k}.
template <LambdaRing R>
TruncSeries<R> series_exp(const TruncSeries<R>& b) {
  if (!b[0].is_zero()) throw DomainError("series exponential requires constant term 0");
  const int n = b.order();
  TruncSeries<R> e = TruncSeries<R>::one(n, b.proto());
  for (int m = 1; m <= n; ++m) {
    R acc = zero_like(b.proto());
    for (int k = 1; k <= m; ++k)
      if (!b[k].is_zero() && !e[m - k].is_zero()) acc = acc + b[k] * e[m - k] * Rational(k);
    e.set(m, acc * Rational(1, m));
  }
  return e;
}

/// C_1..C_N with A^{-1} dA/dt = sum_n C_n t^{n-1}; index 0 of the result holds C_1.
template <LambdaRing R>
std::vector<R> log_derivative(const TruncSeries<R>& a) {
  const TruncSeries<R> l = series_log(a);
  std::vector<R> c;
  c.reserve(static_cast<std::size_t>(a.order()));
  for (int n = 1; n <= a.order(); ++n) c.push_back(l[n] * Rational(n));
  return c;
}

/// A(t^k): a_j moves to position jk, positions past the order are dropped.
template <LambdaRing R>
TruncSeries<R> substitute_tk(const TruncSeries<R>& a, int k) {
  if (k < 1) throw DomainError("substitute_tk requires k >= 1");
  TruncSeries<R> r(a.order(), a.proto());
  for (int j = 0; j * k <= a.order(); ++j) r.set(j * k, a[j]);
  return r;
}

/// Like substitute_tk, but the result has order `order` (a may be shorter).
template <LambdaRing R>
TruncSeries<R> spread(const TruncSeries<R>& a, int k, int order) {
  if (k < 1) throw DomainError("spread requires k >= 1");
  TruncSeries<R> r(order, a.proto());
  for (int j = 0; j <= a.order() && j * k <= order; ++j) r.set(j * k, a[j]);
  return r;
}

/// Psi_k applied coefficientwise (t untouched).
template <LambdaRing R>
TruncSeries<R> adams_coeffs(const TruncSeries<R>& a, int k) {
  std::vector<R> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) out.push_back(adams(c, k));
  return TruncSeries<R>(std::move(out));
}

/// exp(e log A), the "usual" power over a Q-algebra.
template <LambdaRing R>
TruncSeries<R> usual_power(const TruncSeries<R>& a, const R& e) {
  return series_exp(series_log(a) * e);
}

template <LambdaRing R>
TruncSeries<R> usual_power(const TruncSeries<R>& a, const Rational& e) {
  return series_exp(series_log(a) * e);
}

}  // namespace powstruct
