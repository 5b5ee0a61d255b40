#pragma once

#include <random>
#include <vector>

#include "powstruct/laurent_poly.hpp"
#include "powstruct/series.hpp"
#include "powstruct/symfunc.hpp"

namespace testing_support {

using namespace powstruct;

inline const Alphabet kL{"L"};
inline const Alphabet kQ{};

inline LaurentPoly L(int e = 1) { return LaurentPoly::variable(kL, "L", e); }
inline LaurentPoly lc(const Rational& c, const Alphabet& vars = kL) { return LaurentPoly::from_constant(vars, c); }
inline LaurentPoly qc(const Rational& c) { return LaurentPoly::from_constant(kQ, c); }

inline LaurentPoly var(const Alphabet& vars, const std::string& name, int e = 1) {
  return LaurentPoly::variable(vars, name, e);
}

inline Rational random_rational(std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  return ratio(num(rng), den(rng));
}

// Dense random polynomial with every exponent in [lo, hi] for each variable.
inline LaurentPoly random_poly(std::mt19937_64& rng, const Alphabet& vars, int hi, int range = 3, int lo = 0) {
  LaurentPoly out(vars);
  Exponent e(vars.size(), lo);
  while (true) {
    out += LaurentPoly::monomial(vars, e, random_rational(rng, range));
    std::size_t i = 0;
    while (i < e.size() && e[i] == hi) e[i++] = lo;
    if (i == e.size()) break;
    ++e[i];
  }
  return out;
}

inline LaurentPoly random_int_poly(std::mt19937_64& rng, const Alphabet& vars, int hi, int range = 3) {
  LaurentPoly out(vars);
  std::uniform_int_distribution<int> coef(-range, range);
  Exponent e(vars.size(), 0);
  while (true) {
    out += LaurentPoly::monomial(vars, e, coef(rng));
    std::size_t i = 0;
    while (i < e.size() && e[i] == hi) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  return out;
}

inline TruncSeries<LaurentPoly> random_unit_series(std::mt19937_64& rng, const Alphabet& vars, int order, int deg) {
  std::vector<LaurentPoly> c{LaurentPoly::from_constant(vars, 1)};
  for (int n = 1; n <= order; ++n) c.push_back(random_int_poly(rng, vars, deg, 2));
  return TruncSeries<LaurentPoly>(std::move(c));
}

template <typename R>
TruncSeries<R> series(std::vector<R> coeffs) {
  return TruncSeries<R>(std::move(coeffs));
}

inline SymFunc p(int k, int bound, const Alphabet& vars = {}) { return SymFunc::power_sum(vars, bound, k); }

inline SymFunc p_part(std::vector<int> parts, int bound, const Rational& c = 1) {
  return SymFunc::from_partition({}, bound, Partition(std::move(parts)), LaurentPoly::from_constant({}, c));
}

}  // namespace testing_support
