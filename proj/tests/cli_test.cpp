#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "powstruct/cli.hpp"
#include "powstruct/serialize.hpp"

using namespace powstruct;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

TEST(Cli, PowExample) {
  const auto r = run({"pow", "--base", "1+t", "--exponent", "1+L", "--order", "6"});
  ASSERT_EQ(r.code, exit_code::ok) << r.err;
  EXPECT_NE(r.out.find("(L^4 - L^2)*t^4"), std::string::npos) << r.out;
  EXPECT_EQ(r.out,
            "1 + (L + 1)*t + L^2*t^2 + (L^3 - L)*t^3 + (L^4 - L^2)*t^4 + (L^5 - L^3)*t^5 + (L^6 - L^4)*t^6 + O(t^7)\n");
  const auto t2 = run({"pow", "--base", "1+t", "--exponent", "1+L", "--order", "6", "--algorithm", "theorem2"});
  EXPECT_EQ(t2.out, r.out);
}

TEST(Cli, IrrEuler) {
  const auto r = run({"irr", "--vars", "2", "--degree", "1", "--target", "euler"});
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_EQ(r.out, "2\n");
  EXPECT_EQ(run({"irr", "--vars", "2", "--degree", "2"}).out, "L^5 - L^2\n");
  EXPECT_EQ(run({"irr", "--vars", "2", "--degree", "2", "--target", "hodge_deligne"}).out, "u^5*v^5 - u^2*v^2\n");
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "--identity", "exp_moebius", "--order", "12"}).code, exit_code::ok);
  EXPECT_EQ(run({"verify", "--identity", "euler_phi", "--order", "12"}).code, exit_code::ok);
  const auto gcd = run({"verify", "--identity", "gcd_product", "--order", "6", "--output-format", "json"});
  EXPECT_EQ(gcd.code, exit_code::identity_failed);
  const Json j = Json::parse(gcd.out);
  EXPECT_FALSE(j.at("holds").get<bool>());
  EXPECT_EQ(j.at("first_discrepancy").at("t_power"), 2);
  EXPECT_EQ(run({"verify", "--identity", "nope"}).code, exit_code::domain_error);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, exit_code::usage_error);
  EXPECT_EQ(run({"frobnicate"}).code, exit_code::usage_error);
  EXPECT_EQ(run({"pow", "--base", "1+t"}).code, exit_code::usage_error);
  EXPECT_EQ(run({"pow", "--base", "1+t", "--exponent", "L", "--bogus", "1"}).code, exit_code::usage_error);
  EXPECT_EQ(run({"lambda", "--element", "(L+"}).code, exit_code::usage_error);
  EXPECT_EQ(run({"lambda", "--element", "L", "--output-format", "xml"}).code, exit_code::usage_error);
  EXPECT_EQ(run({"quotient"}).code, exit_code::usage_error);
}

TEST(Cli, DomainErrors) {
  EXPECT_EQ(run({"pow", "--base", "2+t", "--exponent", "L"}).code, exit_code::domain_error);
  EXPECT_EQ(run({"hyperelliptic", "--genus", "1"}).code, exit_code::domain_error);
  EXPECT_EQ(run({"harer-zagier", "--genus", "1", "--points", "0"}).code, exit_code::domain_error);
}

TEST(Cli, Lambda) {
  EXPECT_EQ(run({"lambda", "--element", "L^2", "--order", "3"}).out, "1 + L^2*t + L^4*t^2 + L^6*t^3 + O(t^4)\n");
  EXPECT_EQ(run({"lambda", "--element", "g", "--ring", "graded", "--order", "2"}).out, "1 + g*t + (g + 1/2*g^2)*t^2 + O(t^3)\n");
  const auto sym = run({"lambda", "--element", "p[1]", "--order", "2"});
  EXPECT_EQ(sym.out, "1 + p[1]*t + (1/2*p[1,1] + 1/2*p[2])*t^2 + O(t^3)\n");
}

TEST(Cli, Factorize) {
  const auto r = run({"factorize", "--series", "1+t", "--order", "3"});
  EXPECT_EQ(r.out, "B_1 = 1\nB_2 = -1\nB_3 = 0\n");
  EXPECT_EQ(run({"factorize", "--series", "1+t", "--order", "3", "--algorithm", "iterative"}).out, r.out);
}

TEST(Cli, AdamsPlethysmSchurSpecialize) {
  EXPECT_EQ(run({"adams", "--element", "L^3+1", "--k", "2"}).out, "L^6 + 1\n");
  EXPECT_EQ(run({"adams", "--element", "u*p[2]", "--k", "2"}).out, "u^2*p[4]\n");
  EXPECT_EQ(run({"adams", "--element", "3*g^2", "--k", "3", "--ring", "graded"}).out, "27*g^2\n");
  EXPECT_EQ(run({"plethysm", "--f", "p[3]", "--element", "L^2"}).out, "L^6\n");
  EXPECT_EQ(run({"plethysm", "--f", "s[2]", "--element", "L"}).out, "L^2\n");
  EXPECT_EQ(run({"schur", "--f", "p[2]"}).out, "-s[1,1] + s[2]\n");
  EXPECT_EQ(run({"specialize", "--f", "1/2*p[1,1] - 1/2*p[2]", "--mode", "sign"}).out, "1\n");
  EXPECT_EQ(run({"specialize", "--f", "1/2*p[1,1] + 1/2*p[2]", "--mode", "ordered"}).out, "1\n");
}

TEST(Cli, ApplicationCommands) {
  EXPECT_EQ(run({"hyperelliptic", "--genus", "3"}).out, "L^5\n");
  EXPECT_EQ(run({"hyperelliptic", "--genus", "2", "--target", "hodge_deligne"}).out, "u^3*v^3\n");
  EXPECT_EQ(run({"harer-zagier", "--genus", "2"}).out, "-1/240\n");
  const auto m = run({"moduli-g2", "--order", "4"});
  EXPECT_EQ(m.out, "1 + 2*p[1]*t + p[1,1]*t^2 + (-1/6*p[1,1,1,1] + 2/3*p[3,1] + 1/2*p[4])*t^4 + O(t^5)\n");
  const auto ms = run({"moduli-g2", "--order", "4", "--schur"});
  EXPECT_NE(ms.out.find("t^4: -s[2,2] - s[3,1] + s[4]"), std::string::npos) << ms.out;
  EXPECT_EQ(run({"config", "--ex", "1+q", "--order", "3", "--specialize", "invariants"}).out,
            "1 + (q + 1)*t + q^2*t^2 + (q^3 - q)*t^3 + O(t^4)\n");
}

TEST(Cli, QuotientFromFile) {
  const std::string path = write_temp(
      "powstruct_z2.json",
      R"({"group_order":2,"classes":[{"size":1,"identity":true,"orbit_euler":{"1":2}},{"size":1,"orbit_euler":{"1":2,"2":0}}]})");
  EXPECT_EQ(run({"quotient", "--input", path, "--order", "3"}).out, "1 + 2*p[1]*t + p[1,1]*t^2 + O(t^4)\n");
  EXPECT_EQ(run({"quotient", "--input", path, "--order", "3", "--exponential"}).out, "1 + 2*t + t^2 + O(t^4)\n");
  const std::string bad = write_temp("powstruct_bad.json", R"({"group_order":3,"classes":[]})");
  EXPECT_EQ(run({"quotient", "--input", bad}).code, exit_code::domain_error);
  EXPECT_EQ(run({"quotient", "--input", "/nonexistent/file.json"}).code, exit_code::usage_error);
}

TEST(Cli, ParametersFromInputFile) {
  const std::string path = write_temp("powstruct_pow.json", R"({"base":"1+t","exponent":"1+L"})");
  const auto a = run({"pow", "--input", path, "--order", "6"});
  const auto b = run({"pow", "--base", "1+t", "--exponent", "1+L", "--order", "6"});
  EXPECT_EQ(a.code, exit_code::ok) << a.err;
  EXPECT_EQ(a.out, b.out);
  // encoded objects are accepted too
  const auto json_series = run({"pow", "--base", "1+t", "--exponent", "1+L", "--order", "6", "--output-format", "json"});
  const Json encoded = Json::parse(json_series.out);
  const std::string path2 = write_temp("powstruct_fact.json", Json{{"series", encoded}}.dump());
  const auto f = run({"factorize", "--input", path2, "--order", "6"});
  EXPECT_EQ(f.code, exit_code::ok) << f.err;
  EXPECT_EQ(f.out.substr(0, f.out.find('\n')), "B_1 = L + 1");
}

TEST(Cli, JsonOutputAndDeterminism) {
  const std::vector<std::string> args{"pow", "--base", "1+t+t^2", "--exponent", "u*v - 1", "--order", "5",
                                      "--output-format", "json"};
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j.at("order"), 5);
  EXPECT_EQ(j.at("coeffs").size(), 6u);
}

TEST(Cli, Reproduce) {
  const auto r = run({"reproduce"});
  EXPECT_EQ(r.code, exit_code::ok) << r.out;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
  EXPECT_NE(r.out.find("[INFO] 12."), std::string::npos);
}

}  // namespace
