// Acceptance suite: one PASS/FAIL line per criterion, exact comparison throughout.
// Oracles here are computed independently of the library routines under test.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <string>

#include "character_oracle.hpp"
#include "powstruct/applications.hpp"
#include "powstruct/graded.hpp"
#include "powstruct/power_structure.hpp"
#include "powstruct/serialize.hpp"
#include "support.hpp"

using namespace powstruct;
using namespace testing_support;

namespace {

using Series = TruncSeries<LaurentPoly>;

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

// Oracle arithmetic functions by trial division.
int mu_oracle(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

int phi_oracle(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

Integer fact(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  return fact(n) / (fact(k) * fact(n - k));
}

Series exp_t(int order) {
  std::vector<LaurentPoly> c;
  for (int n = 0; n <= order; ++n) c.push_back(qc(ratio(1, fact(n))));
  return Series(c);
}

// 1. exp(t) factorization exponents mu(n)/n and recomposition.
void criterion1() {
  const int N = 12;
  const Series e = exp_t(N);
  for (auto algo : {FactorizeAlgorithm::moebius, FactorizeAlgorithm::iterative}) {
    const auto f = factorize(e, algo);
    for (int n = 1; n <= N; ++n)
      require(f[n] == qc(ratio(mu_oracle(n), n)), "B_" + std::to_string(n) + " = " + to_text(f[n]));
    require(recompose(f, N) == e, "recompose differs from exp(t)");
  }
}

// 2. prod (1-t^k)^{-phi(k)/k} = exp(t/(1-t)); oracle coefficients sum_j C(m-1, j-1)/j!.
void criterion2() {
  const int N = 12;
  FactorizationResult<LaurentPoly> b;
  for (int k = 1; k <= N; ++k) b.exponents.push_back(qc(ratio(phi_oracle(k), k)));
  const Series lhs = recompose(b, N);
  for (int m = 0; m <= N; ++m) {
    Rational expected = m == 0 ? Rational(1) : Rational(0);
    for (int j = 1; j <= m; ++j) expected += ratio(choose(m - 1, j - 1), fact(j));
    require(lhs[m] == qc(expected), "t^" + std::to_string(m) + ": " + to_text(lhs[m]) + " vs " + to_string(expected));
  }
}

// 3. (1+t)^{1+L} coefficients and hyperelliptic classes.
void criterion3() {
  const int N = 12;
  const Series s = power(Series::binomial(N, lc(1), 1), lc(1) + L());
  for (int k = 4; k <= N; ++k)
    require(s[k] == L(k) - L(k - 2), "t^" + std::to_string(k) + ": " + to_text(s[k]));
  for (int g = 2; g <= 6; ++g) {
    const LaurentPoly cls = hyperelliptic_class(g);
    require(cls == L(2 * g - 1), "g=" + std::to_string(g) + ": " + to_text(cls));
  }
}

// Symmetric square of a sum of monomials with positive integer multiplicities, by enumerating multisets.
LaurentPoly symmetric_square(const std::vector<std::pair<int, int>>& monomials) {
  std::vector<int> expanded;
  for (const auto& [e, mult] : monomials)
    for (int i = 0; i < mult; ++i) expanded.push_back(e);
  LaurentPoly out(kL);
  for (std::size_t i = 0; i < expanded.size(); ++i)
    for (std::size_t j = i; j < expanded.size(); ++j) out += L(expanded[i] + expanded[j]);
  return out;
}

// 4. Irreducible-polynomial classes.
void criterion4() {
  for (int n_vars = 1; n_vars <= 3; ++n_vars) {
    const LaurentPoly e1 = irr_specialize(n_vars, 1, IrrTarget::euler);
    require(e1 == qc(n_vars), "chi(Irr_1) for n_vars=" + std::to_string(n_vars) + ": " + to_text(e1));
    for (int i = 2; i <= 6; ++i) {
      const LaurentPoly ei = irr_specialize(n_vars, i, IrrTarget::euler);
      require(ei.is_zero(), "chi(Irr_" + std::to_string(i) + ") for n_vars=" + std::to_string(n_vars) + ": " + to_text(ei));
    }
  }
  for (int n = 2; n <= 6; ++n) require(irr_class(1, n).is_zero(), "[Irr_n] in one variable, n=" + std::to_string(n));
  // [P_2] for binary forms of degree <= 2: (L^6 - L^3)/(L - 1), expanded by hand
  const LaurentPoly p2 = L(5) + L(4) + L(3);
  const LaurentPoly irr1 = L(2) + L();
  const LaurentPoly oracle = p2 - symmetric_square({{2, 1}, {1, 1}});
  require(oracle == L(5) - L(2), "set-difference oracle");
  require(irr_class(2, 1) == irr1, "[Irr_1] for two variables");
  require(irr_class(2, 2) == oracle, "[Irr_2] = " + to_text(irr_class(2, 2)));
}

// 5. Genus-2 generating function through t^4.
void criterion5() {
  const int N = 4;
  const auto m = moduli_g2_series(N);
  const SymFunc one = SymFunc({}, N).constant(1);
  require(m[0] == one, "t^0: " + to_text(m[0]));
  require(m[1] == p(1, N) * Rational(2), "t^1: " + to_text(m[1]));
  require(m[2] == p_part({1, 1}, N), "t^2: " + to_text(m[2]));
  require(m[3].is_zero(), "t^3: " + to_text(m[3]));
  const SymFunc t4 = p_part({4}, N, ratio(1, 2)) + p_part({3, 1}, N, ratio(2, 3)) - p_part({1, 1, 1, 1}, N, ratio(1, 6));
  require(m[4] == t4, "t^4: " + to_text(m[4]));
}

// 6. Harer-Zagier.
void criterion6() {
  const Rational v = harer_zagier(2, 0);
  require(v == ratio(-1, 240), "chi_orb(M_{2,0}) = " + to_string(v));
}

// 7. Power-structure axioms on random inputs, plus agreement of both algorithm pairs.
void criterion7() {
  std::mt19937_64 rng(20240601);
  const int N = 8;
  std::uniform_int_distribution<int> pick_k(2, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const Series a = random_unit_series(rng, kL, N, 2), b = random_unit_series(rng, kL, N, 2);
    const LaurentPoly m = random_int_poly(rng, kL, 2, 2), n = random_int_poly(rng, kL, 2, 2);
    const std::string tag = "case " + std::to_string(trial) + ": ";
    const Series am = power(a, m), an = power(a, n);
    require(power(a, LaurentPoly(kL)) == Series::one(N, L()), tag + "A^0 = 1");
    require(power(a, lc(1)) == a, tag + "A^1 = A");
    require(power(a * b, m) == am * power(b, m), tag + "(AB)^m = A^m B^m");
    require(power(a, m + n) == am * an, tag + "A^{m+n} = A^m A^n");
    require(power(a, m * n) == power(an, m), tag + "A^{mn} = (A^n)^m");
    const Series lin = power(Series::binomial(N, lc(1), 1), m);
    require(lin[0] == lc(1) && lin[1] == m, tag + "(1+t)^m = 1 + mt + ...");
    const int k = pick_k(rng);
    require(power(substitute_tk(a, k), m) == substitute_tk(am, k), tag + "A(t^k)^m = A^m(t^k)");
    require(power(a, m, PowerAlgorithm::theorem2) == am, tag + "power algorithms disagree");
    require(factorize(a, FactorizeAlgorithm::iterative) == factorize(a, FactorizeAlgorithm::moebius),
            tag + "factorize algorithms disagree");
  }
}

// 8. Adams/lambda coherence on every ring.
void criterion8() {
  std::mt19937_64 rng(8);
  const Alphabet uv{"u", "v"};
  for (int trial = 0; trial < 10; ++trial) {
    const LaurentPoly x = random_poly(rng, uv, 1, 3, -1), y = random_poly(rng, uv, 1, 3);
    const auto c = log_derivative(lambda_t(x, 10));
    for (int n = 1; n <= 10; ++n) {
      // Psi_n on a Laurent polynomial by direct monomial rescaling
      LaurentPoly psi(uv);
      for (const auto& [e, coeff] : x.terms()) {
        Exponent scaled = e;
        for (int& v : scaled) v *= n;
        psi += LaurentPoly::monomial(uv, scaled, coeff);
      }
      require(c[n - 1] == psi, "log derivative of lambda_t at n=" + std::to_string(n));
    }
    require(lambda_t(x + y, 8) == lambda_t(x, 8) * lambda_t(y, 8), "lambda_t additivity");
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        require(adams(adams(x, i), j) == adams(x, i * j), "poly Psi_i Psi_j");
        require(adams(x * y, i) == adams(x, i) * adams(y, i), "poly multiplicativity");
      }
  }
  for (int trial = 0; trial < 10; ++trial) {
    GradedElement a, b;
    for (int d = 0; d <= 3; ++d) {
      a += GradedElement::homogeneous(d, random_rational(rng, 5));
      b += GradedElement::homogeneous(d, random_rational(rng, 5));
    }
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        require(adams(adams(a, i), j) == adams(a, i * j), "graded Psi_i Psi_j");
        require(adams(a * b, i) == adams(a, i) * adams(b, i), "graded multiplicativity");
      }
    const auto c = log_derivative(lambda_t(a, 6));
    for (int n = 1; n <= 6; ++n) require(c[n - 1] == adams(a, n), "graded log derivative");
  }
  const Alphabet u{"u"};
  const int K = 32;
  for (int trial = 0; trial < 5; ++trial) {
    SymFunc f(u, K), g(u, K);
    for (int n = 0; n <= 2; ++n)
      for (const auto& lambda : partitions_of(n)) {
        f += SymFunc::from_partition(u, K, lambda, random_poly(rng, u, 1));
        g += SymFunc::from_partition(u, K, lambda, random_poly(rng, u, 1));
      }
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        require(adams(adams(f, i), j) == adams(f, i * j), "symfunc Psi_i Psi_j");
        require(adams(f * g, i) == adams(f, i) * adams(g, i), "symfunc multiplicativity");
      }
  }
}

// 9. Configuration-space specializations for e_X = 1 + q.
void criterion9() {
  const int N = 8;
  const Alphabet qs{"q"};
  const LaurentPoly one = LaurentPoly::from_constant(qs, 1), q = var(qs, "q");
  const LaurentPoly ex = one + q;
  const auto conf = config_space_series(ex, N);
  const Series inv = power(Series::binomial(N, one, 1), ex);
  const Series sgn = power(Series::binomial(N, -one, 1), ex);
  for (int n = 0; n <= N; ++n) {
    const std::string tag = "t^" + std::to_string(n) + ": ";
    require(specialize(conf[n], Specialization::invariants) == inv[n], tag + "invariants");
    require(specialize(conf[n], Specialization::sign) == (n % 2 ? -sgn[n] : sgn[n]), tag + "sign");
    // falling factorial e_X (e_X - 1) ... (e_X - n + 1) = n! * binomial coefficient
    LaurentPoly falling = one;
    for (int i = 0; i < n; ++i) falling = falling * (ex - one * Rational(i));
    require(specialize(conf[n], Specialization::ordered) == falling, tag + "ordered");
  }
}

// 10. sum_k (h_k o X) t^k = lambda_t(X); h_k assembled here from p_lambda / z_lambda.
void criterion10() {
  const int N = 8;
  std::vector<SymFunc> h;
  for (int k = 0; k <= N; ++k) {
    const int bound = std::max(k, 1);
    SymFunc hk({}, bound);
    for (const auto& mu : character_oracle::partitions(k)) {
      Integer z = 1;
      std::map<int, int> mult;
      for (int part : mu) ++mult[part];
      for (const auto& [part, m] : mult) {
        for (int i = 0; i < m; ++i) z *= part;
        z *= fact(m);
      }
      hk += SymFunc::from_partition({}, bound, Partition(mu), qc(ratio(1, z)));
    }
    h.push_back(hk);
  }
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const LaurentPoly x = random_int_poly(rng, kL, 3, 3);
    const Series lam = lambda_t(x, N);
    for (int k = 0; k <= N; ++k)
      require(plethysm_apply(h[k], x) == lam[k], "trial " + std::to_string(trial) + ", k=" + std::to_string(k));
  }
}

// 11. Schur expansion against characters from the Frobenius formula.
void criterion11() {
  for (int n = 1; n <= 5; ++n) {
    const auto parts = character_oracle::partitions(n);
    for (const auto& mu : parts) {
      const auto expansion = p_to_schur(SymFunc::from_partition({}, n, Partition(mu), qc(1)));
      for (const auto& lambda : parts) {
        const auto it = expansion.find(Partition(lambda));
        const Rational got = it == expansion.end() ? Rational(0) : it->second.constant_term();
        require(got == character_oracle::character(lambda, mu),
                "chi^" + to_text(Partition(lambda), 's') + "(" + to_text(Partition(mu)) + ")");
      }
    }
  }
  // a non-basis input: f = sum_mu f_mu p_mu maps to sum_lambda (sum_mu f_mu chi^lambda(mu)) s_lambda
  const auto m = moduli_g2_series(4);
  const auto expansion = p_to_schur(m[4]);
  for (const auto& lambda : character_oracle::partitions(4)) {
    Rational expected = 0;
    for (const auto& [mu, c] : m[4].terms()) expected += c.constant_term() * character_oracle::character(lambda, mu.parts());
    const auto it = expansion.find(Partition(lambda));
    const Rational got = it == expansion.end() ? Rational(0) : it->second.constant_term();
    require(got == expected, "t^4 coefficient of the genus-2 series");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria{
      {"exp(t) factorization", criterion1},
      {"Euler phi product", criterion2},
      {"(1+t)^{1+L} and hyperelliptic classes", criterion3},
      {"irreducible polynomials", criterion4},
      {"genus-2 generating function", criterion5},
      {"Harer-Zagier", criterion6},
      {"power-structure axioms", criterion7},
      {"Adams/lambda coherence", criterion8},
      {"configuration-space specializations", criterion9},
      {"plethysm and lambda_t", criterion10},
      {"Schur expansion vs character table", criterion11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string status = "PASS", detail;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      status = "FAIL";
      detail = f.what;
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (status == "FAIL") ++failures;
    std::cout << status << " " << (i + 1) << " " << criteria[i].first << " (" << ms << " ms)";
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
  }

  // 12 is diagnostic only.
  try {
    const auto r = verify_identity("gcd_product", 6);
    std::cout << "INFO 12 gcd-product identity (diagnostic, not scored): " << (r.holds ? "holds" : "differs");
    if (r.first_discrepancy) {
      const auto& d = *r.first_discrepancy;
      std::cout << " at t^" << d.t_power << " * " << d.term << ": lhs " << d.lhs << ", rhs " << d.rhs;
    }
    std::cout << "\n";
  } catch (const std::exception& e) {
    std::cout << "INFO 12 gcd-product identity (diagnostic, not scored): exception: " << e.what() << "\n";
  }

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
