#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "powstruct/lambda_ring.hpp"
#include "powstruct/laurent_poly.hpp"

namespace powstruct {

/// Weakly decreasing list of positive parts.
class Partition {
public:
  Partition() = default;
  /// Sorts the parts; throws DomainError on a non-positive part.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Canonical order: by weight, then lexicographically on the parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of n in canonical order.
std::vector<Partition> partitions_of(int n);

/// Union of two partitions (multiset union of parts).
Partition merge(const Partition& a, const Partition& b);

/// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of cycle type lambda.
Integer z_lambda(const Partition& lambda);

/// Symmetric function in the power-sum basis: sum over partitions lambda of
/// c_lambda * p_lambda, coefficients Laurent polynomials in a fixed alphabet.
/// Every stored p-index is at most the generator bound.
class SymFunc {
public:
  using TermMap = std::map<Partition, LaurentPoly>;

  SymFunc() = default;
  SymFunc(Alphabet coeff_vars, int bound);

  static SymFunc power_sum(Alphabet coeff_vars, int bound, int index);
  static SymFunc from_partition(Alphabet coeff_vars, int bound, const Partition& lambda, const LaurentPoly& coeff);
  /// Lifts a coefficient-ring value to a constant symmetric function.
  static SymFunc lift(const LaurentPoly& c, int bound);

  SymFunc constant(const Rational& c) const;
  SymFunc constant(const LaurentPoly& c) const;

  const Alphabet& coeff_vars() const { return coeff_vars_; }
  int bound() const { return bound_; }
  const TermMap& terms() const { return terms_; }
  LaurentPoly coefficient(const Partition& lambda) const;

  bool is_zero() const { return terms_.empty(); }
  /// Every stored coefficient is a constant polynomial.
  bool has_constant_coefficients() const;
  int max_index() const;
  /// Weight n if every term has weight n (0 for the zero function), nullopt otherwise.
  std::optional<int> homogeneous_weight() const;

  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const Rational& c);
  SymFunc& operator*=(const LaurentPoly& c);

  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
  friend SymFunc operator*(SymFunc a, const LaurentPoly& c) { return a *= c; }
  SymFunc operator-() const;

  friend bool operator==(const SymFunc&, const SymFunc&) = default;

private:
  void check_compatible(const SymFunc& other) const;
  void add_term(const Partition& lambda, const LaurentPoly& c);

  Alphabet coeff_vars_;
  int bound_ = 0;
  TermMap terms_;
};

/// p_m -> p_{km}, coefficients by Psi_k; BoundExceeded if some k*m passes the bound.
SymFunc adams(const SymFunc& f, int k);
std::optional<SymFunc> try_inverse(const SymFunc& f);

enum class Basis { h, e, s };

/// Complete homogeneous h_k, elementary e_k, or Schur s_lambda expanded in p.
SymFunc complete_h(int k, int bound, const Alphabet& coeff_vars = {});
SymFunc elementary_e(int k, int bound, const Alphabet& coeff_vars = {});
SymFunc schur(const Partition& lambda, int bound, const Alphabet& coeff_vars = {});
SymFunc basis_in_p(Basis basis, const Partition& index, int bound, const Alphabet& coeff_vars = {});

/// Schur expansion of a homogeneous f: the coefficient of every s_lambda, lambda |- weight,
/// zero coefficients omitted.
std::map<Partition, LaurentPoly> p_to_schur(const SymFunc& f);

enum class Specialization { invariants, sign, ordered };

LaurentPoly specialize(const SymFunc& f, Specialization mode);

/// f o X: p_k -> Psi_k(X), extended as a ring map. f must have constant coefficients.
template <LambdaRing R>
R plethysm_apply(const SymFunc& f, const R& x) {
  if (!f.has_constant_coefficients()) throw DomainError("plethysm requires constant coefficients in f");
  std::map<int, R> adams_cache;
  auto psi = [&](int k) -> const R& {
    auto it = adams_cache.find(k);
    if (it == adams_cache.end()) it = adams_cache.emplace(k, adams(x, k)).first;
    return it->second;
  };
  R result = zero_like(x);
  for (const auto& [lambda, c] : f.terms()) {
    R term = x.constant(c.constant_term());
    for (int part : lambda.parts()) term = term * psi(part);
    result = result + term;
  }
  return result;
}

}  // namespace powstruct
