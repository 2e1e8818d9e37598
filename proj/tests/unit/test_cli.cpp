#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "genhecke/tools/checks.hpp"
#include "genhecke/tools/cli.hpp"
#include "genhecke/tools/serialize.hpp"

using namespace genhecke;
using genhecke::tools::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "genhecke");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = tools::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({"datum", "show", "--preset", "E8"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"hecke", "e-expand", "--preset", "A2-adjoint", "--coweight", "1"}).code == 2);
  CHECK(cli({"hecke", "e-expand", "--preset", "A1-adjoint", "--coweight", "x"}).code == 2);
  CHECK(cli({"center", "verify", "--preset", "A1-adjoint", "--max-degree", "0"}).code == 2);
  CHECK(cli({"toric", "fan", "--preset", "GL2"}).code == 2);
  CHECK(cli({"toric", "qsr", "--preset", "A1-adjoint", "--pl-values", "-1,-1"}).code == 2);
  CHECK(cli({"verify-all", "--checks", "nothing"}).code == 2);
  auto help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify-all") != std::string::npos);
}

TEST_CASE("e-expand of (-1) in A1-adjoint") {
  auto r = cli({"hecke", "e-expand", "--preset", "A1-adjoint", "--coweight", "-1", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j.size() == 1);
  const auto& e = j[0]["E"];
  REQUIRE(e.size() == 2);
  CHECK(e[0]["w0_word"] == json::array());
  CHECK(e[0]["translation"] == json{-1});
  CHECK(e[0]["coeff"] == json{{"0", "1"}});
  CHECK(e[1]["w0_word"] == json{0});
  CHECK(e[1]["coeff"] == json{{"0", "1"}, {"2", "-1"}});
}

TEST_CASE("center verify emits a passing report") {
  auto r = cli({"center", "verify", "--preset", "A2-adjoint", "--max-degree", "8", "--format", "json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["dimensions"].size() == 9);
  for (const auto& d : j["dimensions"]) CHECK(d["dominant_count"] == d["invariant_dimension"]);
}

TEST_CASE("toric subcommands") {
  auto sr = cli({"toric", "sr", "--preset", "A1xA1-adjoint"});
  CHECK(sr.out == "z1*z3\nz2*z4\n");
  auto qsr = cli({"toric", "qsr", "--preset", "A1-adjoint"});
  CHECK(qsr.out == "z1*z2 = q^2\n");
  auto fan = cli({"toric", "fan", "--preset", "B2-adjoint", "--format", "json"});
  auto j = json::parse(fan.out);
  CHECK(j["rays"].size() == 8);
  CHECK(j["smooth"] == true);
  CHECK(cli({"toric", "verify", "--preset", "A2-adjoint", "--max-degree", "3"}).code == 0);
  CHECK(cli({"toric", "verify", "--preset", "A1-adjoint", "--pl-values", "1,-1", "--max-degree", "3"}).code == 0);
}

TEST_CASE("product, inverse and involution subcommands") {
  auto p = cli({"hecke", "product", "--preset", "A1-adjoint", "--coweight", "1", "--coweight", "-1", "--format", "json"});
  CHECK(p.code == 0);
  auto j = json::parse(p.out);
  CHECK(j["q_shift"] == 2);
  CHECK(j["product"] == json::array({{{"w0_word", json::array()}, {"translation", {0}}, {"coeff", {{"2", "1"}}}}}));
  CHECK(cli({"hecke", "invert", "--preset", "G2-adjoint", "--coweight", "1,-1"}).code == 0);
  auto inv = cli({"hecke", "involutions", "--preset", "A1-adjoint", "--coweight", "1", "--format", "json"});
  CHECK(json::parse(inv.out)[0]["epsilon"] == -1);
}

TEST_CASE("datum and weyl subcommands") {
  auto d = json::parse(cli({"datum", "show", "--preset", "A1-sc", "--format", "json"}).out);
  CHECK(d["rank"] == 1);
  CHECK(d["simple_roots"] == json{{2}});
  CHECK(d["simple_coroots"] == json{{1}});
  CHECK(d["pairing"] == json{{1}});
  auto w = json::parse(cli({"weyl", "enumerate", "--preset", "B2-adjoint", "--format", "json"}).out);
  CHECK(w.size() == 8);
  CHECK(w[0]["word"] == json::array());
  auto o = json::parse(cli({"weyl", "orbit", "--preset", "A2-adjoint", "--coweight", "1,0", "--format", "json"}).out);
  CHECK(o[0]["orbit"].size() == 3);
  CHECK(o[0]["stabilizer_order"] == 2);
}

TEST_CASE("serialization of rationals and cone elements") {
  CHECK(tools::to_json(make_rational(-3, 6)) == "-1/2");
  auto ctx = make_context("GL2");
  CHECK(tools::to_json(invariant_projection(*ctx.datum, Coweight{1, 0}).p_part) == json{"1/2", "1/2"});
  auto a = ConeAlgebraElement::monomial(ctx.ell, Coweight{1, 0}, 2, make_rational(2, 3));
  auto j = tools::to_json(a);
  CHECK(j["phi"] == "length");
  CHECK(j["terms"] == json::array({{{"x", {1, 0}}, {"k", 2}, {"c", "2/3"}}}));
}

TEST_CASE("verify-all json is stable for a fixed seed") {
  auto a = cli({"verify-all", "--checks", "weyl", "--format", "json", "--seed", "3"});
  auto b = cli({"verify-all", "--checks", "weyl", "--format", "json", "--seed", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = json::parse(a.out);
  CHECK(j["criteria"].size() == 2);
  CHECK(j["criteria"][1]["id"] == 9);
}
