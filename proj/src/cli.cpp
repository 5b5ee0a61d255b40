#include "powstruct/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "powstruct/applications.hpp"
#include "powstruct/parse.hpp"
#include "powstruct/power_structure.hpp"
#include "powstruct/reproduce.hpp"
#include "powstruct/serialize.hpp"

namespace powstruct {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Options shared by every subcommand.
struct Common {
  int order = 10;
  std::string format = "text";
  std::string input;
  std::string alphabet;
  std::string ring = "auto";
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--order", common.order, "truncation order N")->check(CLI::NonNegativeNumber);
  sub->add_option("--output-format", common.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--input", common.input, "JSON file supplying parameters or data");
  sub->add_option("--alphabet", common.alphabet, "comma-separated coefficient variables (default: inferred)");
}

struct Output {
  std::string text;
  Json json;
};

// --- parameter resolution --------------------------------------------------

Json load_input(const Common& common) {
  if (common.input.empty()) return Json::object();
  std::ifstream in(common.input);
  if (!in) throw UsageError("cannot open input file '" + common.input + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("input file is not valid JSON: ") + e.what());
  }
}

std::string coefficient_text_from_json(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.contains("graded")) return to_text(graded_from_json(j));
  if (j.contains("bound")) return to_text(symfunc_from_json(j));
  return to_text(laurent_from_json(j));
}

// A JSON-encoded ring element or series, re-expressed in the text grammar.
std::string text_from_json(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (!j.is_object()) throw UsageError("expected a string or an encoded ring element");
  if (j.contains("coeffs")) {
    std::string out;
    const auto& coeffs = j.at("coeffs");
    for (std::size_t n = 0; n < coeffs.size(); ++n)
      out += "(" + coefficient_text_from_json(coeffs[n]) + ")*t^" + std::to_string(n) + " + ";
    return out + "O(t^" + std::to_string(j.at("order").get<int>() + 1) + ")";
  }
  return coefficient_text_from_json(j);
}

std::string resolve(const std::string& key, const std::string& flag, const Json& input) {
  if (!flag.empty()) return flag;
  if (input.contains(key)) return text_from_json(input.at(key));
  throw UsageError("missing --" + key + " (or \"" + key + "\" in the input file)");
}

Alphabet alphabet_for(const Common& common, const std::vector<const ParsedExpr*>& exprs) {
  Alphabet vars;
  if (!common.alphabet.empty()) {
    std::stringstream ss(common.alphabet);
    std::string name;
    while (std::getline(ss, name, ','))
      if (!name.empty()) vars.push_back(name);
    return vars;
  }
  std::set<std::string> names;
  for (const auto* e : exprs) {
    auto v = e->variables();
    names.insert(v.begin(), v.end());
  }
  return Alphabet(names.begin(), names.end());
}

enum class RingKind { poly, sym, graded };

RingKind ring_for(const Common& common, const std::vector<const ParsedExpr*>& exprs) {
  if (common.ring == "graded") return RingKind::graded;
  if (common.ring == "sym") return RingKind::sym;
  if (common.ring == "poly") return RingKind::poly;
  const bool sym = std::any_of(exprs.begin(), exprs.end(), [](const ParsedExpr* e) { return e->uses_power_sums(); });
  return sym ? RingKind::sym : RingKind::poly;
}

// Large enough that Psi_k for k <= order stays inside the generator bound.
int bound_for(const Common& common, const std::vector<const ParsedExpr*>& exprs) {
  int idx = 1;
  for (const auto* e : exprs) idx = std::max(idx, e->max_power_sum_index());
  return std::max(common.order, 1) * idx;
}

template <typename T>
Output render(const T& value) {
  return {to_text(value), to_json(value)};
}

Specialization parse_mode(const std::string& mode) {
  if (mode == "invariants") return Specialization::invariants;
  if (mode == "sign") return Specialization::sign;
  if (mode == "ordered") return Specialization::ordered;
  throw UsageError("unknown specialization mode '" + mode + "'");
}

template <LambdaRing R>
Output render_factorization(const FactorizationResult<R>& f) {
  Output o;
  Json exps = Json::array();
  for (int k = 1; k <= f.size(); ++k) {
    o.text += "B_" + std::to_string(k) + " = " + to_text(f[k]) + "\n";
    exps.push_back(to_json(f[k]));
  }
  if (!o.text.empty()) o.text.pop_back();
  o.json = Json{{"exponents", std::move(exps)}};
  return o;
}

Output render_schur(const std::map<Partition, LaurentPoly>& expansion) {
  return {schur_to_text(expansion), schur_to_json(expansion)};
}

template <LambdaRing R>
TruncSeries<LaurentPoly> specialize_series(const TruncSeries<R>& s, Specialization mode) {
  std::vector<LaurentPoly> out;
  for (const auto& c : s.coeffs()) out.push_back(specialize(c, mode));
  return TruncSeries<LaurentPoly>(std::move(out));
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power structures over lambda-rings: exact generating-function computations"};
  app.require_subcommand(1);

  Common common;
  std::string element, base, exponent, series, f_text, mode, identity, algorithm, target, ex;
  std::string specialize_mode = "none";
  int k = 1, n_vars = 1, degree = 1, genus = 2, points = 0;
  bool exponential = false, schur_flag = false;

  auto* lambda_cmd = app.add_subcommand("lambda", "lambda_t(X) = (1-t)^{-X}");
  lambda_cmd->add_option("--element", element, "ring element X");
  lambda_cmd->add_option("--ring", common.ring, "auto, poly, sym or graded")->check(CLI::IsMember({"auto", "poly", "sym", "graded"}));

  auto* pow_cmd = app.add_subcommand("pow", "A(t)^X in the power structure");
  pow_cmd->add_option("--base", base, "series A(t) with constant term 1");
  pow_cmd->add_option("--exponent", exponent, "ring element X");
  pow_cmd->add_option("--algorithm", algorithm, "factorize or theorem2")->check(CLI::IsMember({"factorize", "theorem2"}));

  auto* fact_cmd = app.add_subcommand("factorize", "A(t) = prod (1-t^k)^{-B_k}");
  fact_cmd->add_option("--series", series, "series A(t) with constant term 1");
  fact_cmd->add_option("--algorithm", algorithm, "moebius or iterative")->check(CLI::IsMember({"moebius", "iterative"}));

  auto* adams_cmd = app.add_subcommand("adams", "Adams operation Psi_k");
  adams_cmd->add_option("--element", element, "ring element");
  adams_cmd->add_option("--k", k, "index k >= 1")->check(CLI::PositiveNumber);
  adams_cmd->add_option("--ring", common.ring, "auto, poly, sym or graded")->check(CLI::IsMember({"auto", "poly", "sym", "graded"}));

  auto* pleth_cmd = app.add_subcommand("plethysm", "f o X");
  pleth_cmd->add_option("--f", f_text, "symmetric function with constant coefficients");
  pleth_cmd->add_option("--element", element, "ring element X");
  pleth_cmd->add_option("--ring", common.ring, "ring of X: auto, poly, sym or graded")->check(CLI::IsMember({"auto", "poly", "sym", "graded"}));

  auto* schur_cmd = app.add_subcommand("schur", "Schur expansion of a homogeneous symmetric function");
  schur_cmd->add_option("--f", f_text, "symmetric function");

  auto* spec_cmd = app.add_subcommand("specialize", "character specializations");
  spec_cmd->add_option("--f", f_text, "symmetric function");
  spec_cmd->add_option("--mode", mode, "invariants, sign or ordered")->required();

  auto* irr_cmd = app.add_subcommand("irr", "classes of irreducible polynomials");
  irr_cmd->add_option("--vars", n_vars, "number of variables")->check(CLI::PositiveNumber);
  irr_cmd->add_option("--degree", degree, "degree n")->check(CLI::PositiveNumber);
  irr_cmd->add_option("--target", target, "class, hodge_deligne or euler")->check(CLI::IsMember({"class", "hodge_deligne", "euler"}));

  auto* config_cmd = app.add_subcommand("config", "equivariant configuration-space series (1+p_1 t)^{e_X}");
  config_cmd->add_option("--ex", ex, "Hodge-Deligne polynomial e_X");
  config_cmd->add_option("--specialize", specialize_mode, "none, invariants, sign or ordered")
      ->check(CLI::IsMember({"none", "invariants", "sign", "ordered"}));

  auto* quot_cmd = app.add_subcommand("quotient", "equivariant Euler characteristics of F(X,n)/G");
  quot_cmd->add_flag("--exponential", exponential, "exponential generating function of chi(F(X,n)/G)");

  auto* hyper_cmd = app.add_subcommand("hyperelliptic", "class of the hyperelliptic moduli space");
  hyper_cmd->add_option("--genus", genus, "genus g >= 2");
  hyper_cmd->add_option("--target", target, "class or hodge_deligne")->check(CLI::IsMember({"class", "hodge_deligne"}));

  auto* moduli_cmd = app.add_subcommand("moduli-g2", "S_n-equivariant Euler characteristics of M_{2,n}");
  moduli_cmd->add_flag("--schur", schur_flag, "print every coefficient in the Schur basis");

  auto* hz_cmd = app.add_subcommand("harer-zagier", "orbifold Euler characteristic of M_{g,n}");
  hz_cmd->add_option("--genus", genus, "g >= 1")->required();
  hz_cmd->add_option("--points", points, "n >= 0");

  auto* verify_cmd = app.add_subcommand("verify", "check a named generating-function identity");
  verify_cmd->add_option("--identity", identity, "exp_moebius, euler_phi or gcd_product")->required();

  auto* repro_cmd = app.add_subcommand("reproduce", "run the full identity suite");

  for (auto* sub : app.get_subcommands({})) add_common(sub, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::usage_error;
  }

  const bool json = common.format == "json";
  auto emit = [&](const Output& o) {
    if (json) out << o.json.dump(2) << "\n";
    else out << o.text << "\n";
  };

  try {
    const Json input = load_input(common);
    const int order = common.order;

    if (lambda_cmd->parsed()) {
      const ParsedExpr x = parse_expression(resolve("element", element, input));
      const std::vector<const ParsedExpr*> all{&x};
      switch (ring_for(common, all)) {
        case RingKind::graded: emit(render(lambda_t(to_graded(x), order))); break;
        case RingKind::sym: emit(render(lambda_t(to_symfunc(x, alphabet_for(common, all), bound_for(common, all)), order))); break;
        case RingKind::poly: emit(render(lambda_t(to_laurent(x, alphabet_for(common, all)), order))); break;
      }
      return exit_code::ok;
    }

    if (pow_cmd->parsed()) {
      const ParsedExpr a = parse_expression(resolve("base", base, input));
      const ParsedExpr x = parse_expression(resolve("exponent", exponent, input));
      const std::vector<const ParsedExpr*> all{&a, &x};
      const auto vars = alphabet_for(common, all);
      const auto algo = algorithm == "theorem2" ? PowerAlgorithm::theorem2 : PowerAlgorithm::factorize_route;
      if (ring_for(common, all) == RingKind::sym) {
        const int bound = bound_for(common, all);
        emit(render(power(to_symfunc_series(a, vars, bound, order), to_symfunc(x, vars, bound), algo)));
      } else {
        emit(render(power(to_laurent_series(a, vars, order), to_laurent(x, vars), algo)));
      }
      return exit_code::ok;
    }

    if (fact_cmd->parsed()) {
      const ParsedExpr a = parse_expression(resolve("series", series, input));
      const std::vector<const ParsedExpr*> all{&a};
      const auto vars = alphabet_for(common, all);
      const auto algo = algorithm == "iterative" ? FactorizeAlgorithm::iterative : FactorizeAlgorithm::moebius;
      if (ring_for(common, all) == RingKind::sym)
        emit(render_factorization(factorize(to_symfunc_series(a, vars, bound_for(common, all), order), algo)));
      else
        emit(render_factorization(factorize(to_laurent_series(a, vars, order), algo)));
      return exit_code::ok;
    }

    if (adams_cmd->parsed()) {
      const ParsedExpr x = parse_expression(resolve("element", element, input));
      const std::vector<const ParsedExpr*> all{&x};
      switch (ring_for(common, all)) {
        case RingKind::graded: emit(render(adams(to_graded(x), k))); break;
        case RingKind::sym:
          emit(render(adams(to_symfunc(x, alphabet_for(common, all), k * std::max(1, x.max_power_sum_index())), k)));
          break;
        case RingKind::poly: emit(render(adams(to_laurent(x, alphabet_for(common, all)), k))); break;
      }
      return exit_code::ok;
    }

    if (pleth_cmd->parsed()) {
      const ParsedExpr f = parse_expression(resolve("f", f_text, input));
      const ParsedExpr x = parse_expression(resolve("element", element, input));
      const std::vector<const ParsedExpr*> xs{&x};
      const SymFunc fs = to_symfunc(f, {}, std::max(1, f.max_power_sum_index()));
      const int fmax = std::max(1, fs.max_index());
      switch (ring_for(common, xs)) {
        case RingKind::graded: emit(render(plethysm_apply(fs, to_graded(x)))); break;
        case RingKind::sym:
          emit(render(plethysm_apply(fs, to_symfunc(x, alphabet_for(common, xs), fmax * std::max(1, x.max_power_sum_index())))));
          break;
        case RingKind::poly: emit(render(plethysm_apply(fs, to_laurent(x, alphabet_for(common, xs))))); break;
      }
      return exit_code::ok;
    }

    if (schur_cmd->parsed() || spec_cmd->parsed()) {
      const ParsedExpr f = parse_expression(resolve("f", f_text, input));
      const std::vector<const ParsedExpr*> all{&f};
      const SymFunc fs = to_symfunc(f, alphabet_for(common, all), std::max(1, f.max_power_sum_index()));
      if (schur_cmd->parsed()) emit(render_schur(p_to_schur(fs)));
      else emit(render(specialize(fs, parse_mode(mode))));
      return exit_code::ok;
    }

    if (irr_cmd->parsed()) {
      if (target.empty() || target == "class") emit(render(irr_class(n_vars, degree)));
      else emit(render(irr_specialize(n_vars, degree, target == "euler" ? IrrTarget::euler : IrrTarget::hodge_deligne)));
      return exit_code::ok;
    }

    if (config_cmd->parsed()) {
      const ParsedExpr e = parse_expression(resolve("ex", ex, input));
      const std::vector<const ParsedExpr*> all{&e};
      const auto conf = config_space_series(to_laurent(e, alphabet_for(common, all)), order);
      if (specialize_mode == "none") emit(render(conf));
      else emit(render(specialize_series(conf, parse_mode(specialize_mode))));
      return exit_code::ok;
    }

    if (quot_cmd->parsed()) {
      if (common.input.empty()) throw UsageError("quotient needs --input with group action data");
      const GroupActionData action = GroupActionData::from_json(input);
      if (exponential) emit(render(quotient_euler_exp(action, order)));
      else emit(render(quotient_euler(action, order)));
      return exit_code::ok;
    }

    if (hyper_cmd->parsed()) {
      const LaurentPoly cls = hyperelliptic_class(genus);
      emit(render(target == "hodge_deligne" ? hodge_deligne_image(cls) : cls));
      return exit_code::ok;
    }

    if (moduli_cmd->parsed()) {
      const auto m = moduli_g2_series(order);
      if (!schur_flag) {
        emit(render(m));
        return exit_code::ok;
      }
      Output o;
      o.json = Json::array();
      for (int n = 0; n <= order; ++n) {
        const auto s = p_to_schur(m[n]);
        o.text += "t^" + std::to_string(n) + ": " + schur_to_text(s) + (n < order ? "\n" : "");
        o.json.push_back(Json{{"t", n}, {"schur", schur_to_json(s)}});
      }
      emit(o);
      return exit_code::ok;
    }

    if (hz_cmd->parsed()) {
      const Rational v = harer_zagier(genus, points);
      emit({to_string(v), Json(to_string(v))});
      return exit_code::ok;
    }

    if (verify_cmd->parsed()) {
      const IdentityReport r = verify_identity(identity, order);
      Output o;
      o.json = Json{{"identity", r.name}, {"order", r.order}, {"holds", r.holds}};
      o.text = r.name + ": " + (r.holds ? "holds" : "FAILS") + " to order " + std::to_string(r.order);
      if (r.first_discrepancy) {
        const auto& d = *r.first_discrepancy;
        o.json["first_discrepancy"] = Json{{"t_power", d.t_power}, {"term", d.term}, {"lhs", d.lhs}, {"rhs", d.rhs}};
        o.text += "\nfirst discrepancy at t^" + std::to_string(d.t_power) + " * " + d.term + ": lhs = " + d.lhs +
                  ", rhs = " + d.rhs;
      }
      emit(o);
      return r.holds ? exit_code::ok : exit_code::identity_failed;
    }

    if (repro_cmd->parsed()) {
      const auto results = reproduce_checks(order);
      Output o;
      o.json = Json::array();
      bool all_pass = true;
      for (const auto& r : results) {
        const std::string status = r.diagnostic ? "INFO" : r.passed ? "PASS" : "FAIL";
        if (!r.diagnostic && !r.passed) all_pass = false;
        o.text += "[" + status + "] " + std::to_string(r.id) + ". " + r.title + ": " + r.detail + "\n";
        o.json.push_back(Json{{"id", r.id}, {"title", r.title}, {"status", status}, {"detail", r.detail}});
      }
      o.text += all_pass ? "all checks passed" : "some checks FAILED";
      emit(o);
      return all_pass ? exit_code::ok : exit_code::identity_failed;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_code::usage_error;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_code::usage_error;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::domain_error;
  }
  return exit_code::usage_error;
}

}  // namespace powstruct
