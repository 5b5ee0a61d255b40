#include "powstruct/numtheory.hpp"

namespace powstruct {

int mobius(int n) {
  if (n < 1) throw DomainError("mobius: n must be positive");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

int euler_phi(int n) {
  if (n < 1) throw DomainError("euler_phi: n must be positive");
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<int> divisors(int n) {
  if (n < 1) throw DomainError("divisors: n must be positive");
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

Integer factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational bernoulli(int n) {
  if (n < 0) throw DomainError("bernoulli: index must be non-negative");
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  return b[static_cast<std::size_t>(n)];
}

}  // namespace powstruct
