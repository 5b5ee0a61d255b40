#pragma once

#include <map>
#include <utility>
#include <vector>

#include "powstruct/laurent_poly.hpp"
#include "powstruct/serialize.hpp"
#include "powstruct/series.hpp"
#include "powstruct/symfunc.hpp"

namespace powstruct {

// --- Irreducible polynomials -----------------------------------------------

/// Class of the projectivized space of degree-N polynomials in n_vars variables,
/// (L^{D(N)} - L^{D(N-1)}) / (L - 1) with D(M) = C(n_vars + M, n_vars).
LaurentPoly class_PN(int n_vars, int degree);

/// P(L, t) = 1 + sum_{N>=1} [P_N] t^N to the given order.
TruncSeries<LaurentPoly> projective_series(int n_vars, int order);

/// [Irr_n] from n [Irr_n] = sum_{d|n} mu(d) C_{n/d}(L^d). Throws DomainError if the
/// result is not an integral polynomial in L.
LaurentPoly irr_class(int n_vars, int n);

enum class IrrTarget { hodge_deligne, euler };

LaurentPoly irr_specialize(int n_vars, int n, IrrTarget target);

/// L -> u v.
LaurentPoly hodge_deligne_image(const LaurentPoly& class_in_L);

/// L -> 1.
LaurentPoly euler_image(const LaurentPoly& class_in_L);

// --- Configuration spaces ---------------------------------------------------

/// (1 + p_1 t)^{e_X} in the power structure over Lambda (x) Q[vars of e_X];
/// the coefficient of t^n is the S_n-equivariant Hodge-Deligne character of F(X, n).
TruncSeries<SymFunc> config_space_series(const LaurentPoly& e_x, int order);

struct UnorderedConfig {
  TruncSeries<LaurentPoly> power_structure;  // (1+t)^{P(X)}, or (1-u)^{P(X)} at u = -t
  TruncSeries<LaurentPoly> product;          // explicit product over Betti numbers
  bool agree = false;
};

/// P(X) = sum_k (-1)^k b_k q^k. The sign-twisted variant is the sign-representation series.
UnorderedConfig unordered_config_product(const std::vector<long>& betti, int order, bool sign_twisted = false);

// --- Quotients by finite groups -------------------------------------------

struct ConjugacyClassData {
  int size = 1;
  bool identity = false;
  std::map<int, long> orbit_euler;  // k -> chi(X_k(g))
};

struct GroupActionData {
  int group_order = 1;
  std::vector<ConjugacyClassData> classes;

  /// Throws DomainError unless sizes sum to the order and exactly one identity class
  /// is supported at k = 1.
  void validate() const;
  /// chi(X) read off the identity class.
  long euler_characteristic() const;

  static GroupActionData from_json(const Json& j);
  Json to_json() const;
};

/// (1/|G|) sum_g prod_k (1 + p_k t^k)^{chi(X_k(g))/k}, usual rational powers.
TruncSeries<SymFunc> quotient_euler(const GroupActionData& action, int order);

/// (1/|G|) ((1+t)^{chi(X)} + sum_{g != e} (1+t)^{chi(X_1(g))}) over Q.
TruncSeries<LaurentPoly> quotient_euler_exp(const GroupActionData& action, int order);

// --- Moduli -------------------------------------------------------------------

/// Coefficient of t^{2g+2} in (1+t)^{1+L}, divided exactly by [PGL_2] = L^3 - L.
LaurentPoly hyperelliptic_class(int genus);

struct ModuliStratum {
  Rational prefactor;
  std::vector<std::pair<int, int>> factors;  // (k, e): (1 + p_k t^k)^e
};

/// The ten strata of the genus-2 generating function.
const std::vector<ModuliStratum>& moduli_g2_strata();

/// sum_n t^n chi^{S_n}(M_{2,n}) to the given order.
TruncSeries<SymFunc> moduli_g2_series(int order);

/// chi_orb(M_{g,n}) = (-1)^n (2g-3+n)! (2g-1) / (2g)! * B_{2g}.
Rational harer_zagier(int genus, int points);

}  // namespace powstruct
