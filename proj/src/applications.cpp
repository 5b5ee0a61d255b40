#include "powstruct/applications.hpp"

#include "powstruct/numtheory.hpp"
#include "powstruct/power_structure.hpp"

namespace powstruct {

namespace {

const Alphabet kL{"L"};
const Alphabet kUV{"u", "v"};

LaurentPoly L_power(int k) { return LaurentPoly::variable(kL, "L", k); }

int coefficient_dimension(int n_vars, int degree) {
  const Integer d = binomial(n_vars + degree, n_vars);
  if (!d.fits_sint_p()) throw DomainError("coefficient-space dimension too large");
  return static_cast<int>(d.get_si());
}

}  // namespace

LaurentPoly class_PN(int n_vars, int degree) {
  if (n_vars < 1 || degree < 1) throw DomainError("class_PN needs n_vars >= 1 and degree >= 1");
  const LaurentPoly numerator = L_power(coefficient_dimension(n_vars, degree)) - L_power(coefficient_dimension(n_vars, degree - 1));
  return exact_div(numerator, L_power(1) - L_power(0));
}

TruncSeries<LaurentPoly> projective_series(int n_vars, int order) {
  TruncSeries<LaurentPoly> p = TruncSeries<LaurentPoly>::one(order, L_power(0));
  for (int n = 1; n <= order; ++n) p.set(n, class_PN(n_vars, n));
  return p;
}

LaurentPoly irr_class(int n_vars, int n) {
  if (n_vars < 1 || n < 1) throw DomainError("irr_class needs n_vars >= 1 and n >= 1");
  const auto c = log_derivative(projective_series(n_vars, n));
  LaurentPoly sum(kL);
  for (int d : divisors(n)) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    const LaurentPoly term = adams(c[static_cast<std::size_t>(n / d - 1)], d);
    sum = mu > 0 ? sum + term : sum - term;
  }
  LaurentPoly result = sum * Rational(1, n);
  if (!result.has_integer_coefficients() || result.has_negative_exponents())
    throw DomainError("integrality failure: [Irr_" + std::to_string(n) + "] is not an integral polynomial in L");
  return result;
}

LaurentPoly hodge_deligne_image(const LaurentPoly& class_in_L) {
  return substitute(class_in_L, {{"L", LaurentPoly::variable(kUV, "u") * LaurentPoly::variable(kUV, "v")}});
}

LaurentPoly euler_image(const LaurentPoly& class_in_L) {
  return substitute(class_in_L, {{"L", LaurentPoly::from_constant({}, 1)}});
}

LaurentPoly irr_specialize(int n_vars, int n, IrrTarget target) {
  const LaurentPoly cls = irr_class(n_vars, n);
  return target == IrrTarget::hodge_deligne ? hodge_deligne_image(cls) : euler_image(cls);
}

TruncSeries<SymFunc> config_space_series(const LaurentPoly& e_x, int order) {
  const int bound = std::max(order, 1);
  const SymFunc p1 = SymFunc::power_sum(e_x.vars(), bound, 1);
  const auto base = TruncSeries<SymFunc>::binomial(order, p1, 1);
  return power(base, SymFunc::lift(e_x, bound));
}

UnorderedConfig unordered_config_product(const std::vector<long>& betti, int order, bool sign_twisted) {
  const Alphabet qs{"q"};
  const LaurentPoly one = LaurentPoly::from_constant(qs, 1);
  LaurentPoly poincare(qs);
  for (std::size_t k = 0; k < betti.size(); ++k)
    poincare += LaurentPoly::variable(qs, "q", static_cast<int>(k)) * Rational(k % 2 ? -betti[k] : betti[k]);

  using Series = TruncSeries<LaurentPoly>;
  UnorderedConfig out{Series(order, one), Series::one(order, one), false};
  if (sign_twisted) {
    Series s = power(Series::binomial(order, -one, 1), poincare);
    for (int n = 1; n <= order; n += 2) s.set(n, -s[n]);
    out.power_structure = s;
  } else {
    out.power_structure = power(Series::binomial(order, one, 1), poincare);
  }

  for (std::size_t k = 0; k < betti.size(); ++k) {
    const long e = k % 2 ? -betti[k] : betti[k];
    if (e == 0) continue;
    const LaurentPoly qk = LaurentPoly::variable(qs, "q", static_cast<int>(k));
    if (sign_twisted) {
      out.product = out.product * usual_power(Series::binomial(order, qk, 1), Rational(e));
    } else {
      out.product = out.product * usual_power(Series::binomial(order, -qk, 2), Rational(e)) /
                    usual_power(Series::binomial(order, -qk, 1), Rational(e));
    }
  }
  out.agree = out.power_structure == out.product;
  return out;
}

void GroupActionData::validate() const {
  if (group_order < 1) throw DomainError("group order must be positive");
  long total = 0;
  int identities = 0;
  for (const auto& c : classes) {
    if (c.size < 1) throw DomainError("conjugacy class sizes must be positive");
    total += c.size;
    for (const auto& [k, chi] : c.orbit_euler)
      if (k < 1) throw DomainError("orbit lengths must be positive");
    if (c.identity) {
      ++identities;
      if (c.size != 1) throw DomainError("the identity class has size 1");
      for (const auto& [k, chi] : c.orbit_euler)
        if (k != 1 && chi != 0) throw DomainError("the identity class only has orbits of length 1");
    }
  }
  if (total != group_order) throw DomainError("class sizes do not sum to the group order");
  if (identities != 1) throw DomainError("exactly one class must be marked as the identity");
}

long GroupActionData::euler_characteristic() const {
  for (const auto& c : classes)
    if (c.identity) {
      auto it = c.orbit_euler.find(1);
      return it == c.orbit_euler.end() ? 0 : it->second;
    }
  throw DomainError("no identity class");
}

GroupActionData GroupActionData::from_json(const Json& j) {
  try {
    GroupActionData g;
    g.group_order = j.at("group_order").get<int>();
    for (const auto& cj : j.at("classes")) {
      ConjugacyClassData c;
      c.size = cj.at("size").get<int>();
      c.identity = cj.value("identity", false);
      for (const auto& [key, value] : cj.at("orbit_euler").items()) {
        std::size_t used = 0;
        const int k = std::stoi(key, &used);
        if (used != key.size()) throw DomainError("orbit length key '" + key + "' is not an integer");
        c.orbit_euler[k] = value.get<long>();
      }
      g.classes.push_back(std::move(c));
    }
    g.validate();
    return g;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed group action JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw DomainError("orbit length keys must be integers");
  }
}

Json GroupActionData::to_json() const {
  Json classes_json = Json::array();
  for (const auto& c : classes) {
    Json orbits = Json::object();
    for (const auto& [k, chi] : c.orbit_euler) orbits[std::to_string(k)] = chi;
    Json cj{{"size", c.size}, {"orbit_euler", orbits}};
    if (c.identity) cj["identity"] = true;
    classes_json.push_back(std::move(cj));
  }
  return Json{{"group_order", group_order}, {"classes", std::move(classes_json)}};
}

TruncSeries<SymFunc> quotient_euler(const GroupActionData& action, int order) {
  action.validate();
  const int bound = std::max(order, 1);
  const SymFunc zero({}, bound);
  TruncSeries<SymFunc> total(order, zero);
  for (const auto& c : action.classes) {
    auto term = TruncSeries<SymFunc>::one(order, zero);
    for (const auto& [k, chi] : c.orbit_euler) {
      if (chi == 0 || k > order) continue;
      const auto factor = TruncSeries<SymFunc>::binomial(order, SymFunc::power_sum({}, bound, k), k);
      term = term * usual_power(factor, ratio(chi, k));
    }
    total = total + term * Rational(c.size);
  }
  return total * Rational(1, action.group_order);
}

TruncSeries<LaurentPoly> quotient_euler_exp(const GroupActionData& action, int order) {
  action.validate();
  const LaurentPoly one = LaurentPoly::from_constant({}, 1);
  const auto base = TruncSeries<LaurentPoly>::binomial(order, one, 1);
  TruncSeries<LaurentPoly> total(order, one);
  for (const auto& c : action.classes) {
    auto it = c.orbit_euler.find(1);
    const long fixed = it == c.orbit_euler.end() ? 0 : it->second;
    total = total + usual_power(base, Rational(fixed)) * Rational(c.size);
  }
  return total * Rational(1, action.group_order);
}

LaurentPoly hyperelliptic_class(int genus) {
  if (genus < 2) throw DomainError("hyperelliptic_class needs genus >= 2");
  const int points = 2 * genus + 2;
  const LaurentPoly one = L_power(0);
  const auto tuples = power(TruncSeries<LaurentPoly>::binomial(points, one, 1), one + L_power(1));
  return exact_div(tuples[points], L_power(3) - L_power(1));
}

const std::vector<ModuliStratum>& moduli_g2_strata() {
  static const std::vector<ModuliStratum> strata{
      {Rational(-1, 240), {{1, -2}}},
      {Rational(-1, 240), {{1, 6}, {2, -4}}},
      {Rational(2, 5), {{1, 3}, {5, -1}}},
      {Rational(2, 5), {{1, 1}, {2, 1}, {5, 1}, {10, -1}}},
      {Rational(1, 6), {{1, 2}, {2, 1}, {6, -1}}},
      {Rational(-1, 12), {{1, 4}, {3, -2}}},
      {Rational(-1, 12), {{2, 2}, {3, 2}, {6, -2}}},
      {Rational(1, 12), {{1, 2}, {2, -2}}},
      {Rational(1, 4), {{1, 2}, {4, 1}, {8, -1}}},
      {Rational(-1, 8), {{1, 2}, {2, 2}, {4, -2}}},
  };
  return strata;
}

TruncSeries<SymFunc> moduli_g2_series(int order) {
  const int bound = std::max(order, 1);
  const SymFunc zero({}, bound);
  TruncSeries<SymFunc> total(order, zero);
  for (const auto& stratum : moduli_g2_strata()) {
    auto term = TruncSeries<SymFunc>::one(order, zero);
    for (const auto& [k, e] : stratum.factors) {
      if (k > order) continue;
      const auto factor = TruncSeries<SymFunc>::binomial(order, SymFunc::power_sum({}, bound, k), k);
      term = term * usual_power(factor, Rational(e));
    }
    total = total + term * stratum.prefactor;
  }
  return total;
}

Rational harer_zagier(int genus, int points) {
  if (genus < 1 || points < 0 || 2 * genus - 3 + points < 0)
    throw DomainError("harer_zagier needs g >= 1, n >= 0 and 2g - 3 + n >= 0");
  Rational value = ratio(factorial(2 * genus - 3 + points) * (2 * genus - 1), factorial(2 * genus));
  value *= bernoulli(2 * genus);
  return points % 2 ? Rational(-value) : value;
}

}  // namespace powstruct
