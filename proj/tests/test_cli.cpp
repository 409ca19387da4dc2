#include "toroidal/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace toroidal;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "toroidal");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bracket prints the rendered distribution") {
  auto r = run({"bracket", ":del_m e:", ":del_m* e:", "--type", "B", "--m", "1", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "2:δ_1δ_1*:(w)δ(z-w) - 2∂_wδ(z-w)\n");

  auto j = run({"bracket", ":eps1 eps1*:", ":eps1 eps1*:", "--type", "A", "--m", "1", "--n", "1", "--format", "json"});
  CHECK(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("bracket") == "-∂_wδ(z-w)");

  auto c = run({"bracket", "(1+i):eps1 eps1*:", "2", "--type", "A", "--m", "1", "--n", "1"});
  CHECK(c.code == 0);
  CHECK(c.out == "0\n");
}

TEST_CASE("rootdata views") {
  auto r = run({"rootdata", "--type", "B", "--m", "0", "--n", "2", "--emit", "cartan", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2 -1 0") != std::string::npos);
  CHECK(r.out.find("-2 2 -1") != std::string::npos);
  CHECK(r.out.find("0 -2 2") != std::string::npos);

  auto j = run({"rootdata", "--type", "A", "--m", "2", "--n", "1"});
  CHECK(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("schema_version") == 1);
  CHECK(doc.at("label") == "A(2,1)");

  CHECK(run({"rootdata", "--type", "A", "--m", "2", "--n", "1", "--emit", "bogus"}).code == 1);
}

TEST_CASE("verify reports and exit codes") {
  auto r = run({"verify", "--type", "C", "--n", "2", "--threads", "2"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("level") == "1");
  CHECK(doc.at("summary").at("fail") == 0);

  auto again = run({"verify", "--type", "C", "--n", "2", "--threads", "1"});
  CHECK(again.out == r.out);

  auto wrong = run({"verify", "--type", "B", "--m", "1", "--n", "1", "--ghost-norm", "3"});
  CHECK(wrong.code == 2);
  CHECK(wrong.err.find("inconsistent level") != std::string::npos);
}

TEST_CASE("usage errors exit with 1 and name the token") {
  auto bad_type = run({"verify", "--type", "E", "--n", "1"});
  CHECK(bad_type.code == 1);
  CHECK(bad_type.err.find("'E'") != std::string::npos);
  CHECK(run({"verify", "--type", "D", "--m", "1", "--n", "1"}).code == 1);
  CHECK(run({"verify", "--type", "A", "--m", "1", "--n", "1", "--frobnicate"}).code == 1);
  CHECK(run({"verify", "--m", "1"}).code == 1);
  CHECK(run({}).code == 1);
  auto bad_field = run({"bracket", ":eps1 gamma:", ":eps1 eps1*:", "--type", "A", "--m", "1", "--n", "1"});
  CHECK(bad_field.code == 1);
  CHECK(bad_field.err.find("gamma") != std::string::npos);
  CHECK(run({"fock-verify", "--type", "B", "--n", "1", "--ordering", "sideways"}).code == 1);
}

TEST_CASE("fock-verify and audit on a small window") {
  std::vector<std::string> small{"--type", "B", "--m", "0", "--n", "1", "--emax", "1", "--zmax", "1", "--kmax", "1",
                                 "--composite-emax", "1", "--composite-zmax", "0", "--composite-kmax", "1"};
  auto args = small;
  args.insert(args.begin(), "fock-verify");
  auto r = run(args);
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("fock_level") == doc.at("symbolic_level"));
  CHECK(doc.at("composite_summary").at("fail") == 0);

  args = small;
  args.insert(args.begin(), "audit");
  const std::string path = "audit_test_output.json";
  args.push_back("--out");
  args.push_back(path);
  auto a = run(args);
  CHECK(a.code == 0);
  CHECK(a.out.empty());
  std::ifstream f(path);
  REQUIRE(f);
  auto audit = nlohmann::json::parse(f);
  CHECK_FALSE(audit.dump().empty());
  std::remove(path.c_str());
}

TEST_CASE("parse_local_field") {
  GeneratorSet g(TypeParams::make(SuperType::A, 1, 1), BetaModel::Combination);
  auto f = parse_local_field(g, "2:eps1 eps2*: - 1/2*:del1 del1*: + 3");
  CHECK(f.central() == Scalar(3));
  CHECK(f.coefficient({g.eps(1), g.eps(2, true)}) == Scalar(2));
  CHECK_THROWS_AS(parse_local_field(g, ""), ParseError);
  CHECK_THROWS_AS(parse_local_field(g, ":eps1 eps1*"), ParseError);
  CHECK_THROWS_AS(parse_local_field(g, ":eps1:"), ParseError);
  CHECK_THROWS_AS(parse_local_field(g, ":eps1 eps1*: :eps1 eps1*:"), ParseError);
}
