#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "fqdiff/cli.hpp"

using json = nlohmann::json;
using namespace fqdiff;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

const json& check_named(const json& doc, const std::string& prefix) {
  for (const auto& c : doc["checks"]) {
    if (c["name"].get<std::string>().starts_with(prefix)) return c;
  }
  static const json missing;
  FAIL("no check named " << prefix);
  return missing;
}

}  // namespace

TEST_CASE("u specs") {
  const auto f7 = FieldCtx::make(7, 1);
  CHECK(cli::parse_u(f7, "4/5") == std::vector{Elem{5}});
  CHECK(cli::parse_u(f7, "-1") == std::vector{Elem{6}});
  CHECK(cli::parse_u(f7, " 9 ") == std::vector{Elem{2}});
  CHECK(cli::parse_u(f7, "all").size() == 7);
  const auto f27 = FieldCtx::make(3, 3);
  CHECK(cli::parse_u(f27, "[1,2,0]") == std::vector{f27.from_coeffs(std::vector<std::uint32_t>{1, 2, 0})});
  for (const char* bad : {"x", "1/0", "", "[1,2]", "3/"}) {
    CHECK_THROWS_AS(cli::parse_u(bad[0] == '[' ? f27 : f7, bad), Error);
  }
}

TEST_CASE("spectrum command") {
  auto o = run({"spectrum", "-p", "7", "-n", "1", "-u", "0", "--method", "formula"});
  REQUIRE(o.code == 0);
  auto doc = o.doc();
  CHECK(doc["field"]["q"] == 7);
  CHECK(doc["results"][0]["formula"]["omegas"] == json({24, 6, 6, 0, 6}));

  o = run({"spectrum", "-p", "7", "-u", "1", "--method", "both"});
  CHECK(o.code == 2);
  doc = o.doc();
  CHECK(doc["results"][0]["mismatches"][0]["index"] == 0);
  CHECK(doc["results"][0]["corrected_agree"] == true);
  CHECK(check_named(doc, "spectrum")["pass"] == false);

  o = run({"spectrum", "-p", "11", "-n", "1", "-u", "2", "--method", "both"});
  CHECK(o.code == 0);
  CHECK(o.doc()["results"][0]["agree"] == true);

  o = run({"spectrum", "-p", "3", "-n", "3", "-u", "0", "--method", "both"});
  CHECK(o.code == 2);
  CHECK(o.doc()["results"][0]["corrected"]["omegas"] == json({14 * 26, 0, 12 * 26, 26}));

  o = run({"spectrum", "-p", "7", "-u", "1", "--output", "csv"});
  CHECK(o.out.starts_with("u,method,index,omega\n1,oracle,0,12\n"));
}

TEST_CASE("thread count does not change output") {
  const auto one = run({"spectrum", "-p", "3", "-n", "5", "-u", "2", "--method", "oracle", "--threads", "1"});
  const auto four = run({"spectrum", "-p", "3", "-n", "5", "-u", "2", "--method", "oracle", "--threads", "4"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
}

TEST_CASE("verify command") {
  auto o = run({"verify", "-p", "7", "-n", "1"});
  CHECK(o.code == 0);
  auto doc = o.doc();
  const auto& sets = doc["results"].back()["u_sets"];
  CHECK(sets["u1"] == 2);
  CHECK(sets["u10"] == 1);
  CHECK(sets["u11"] == 1);
  CHECK(sets["u10_or_u11"] == 2);
  CHECK(check_named(doc, "|U_10 u U_11|")["flagged"] == true);
  CHECK(check_named(doc, "uniformity")["pass"] == true);

  o = run({"verify", "-p", "23"});
  CHECK(o.code == 0);
  doc = o.doc();
  CHECK(check_named(doc, "|U_12| > 0")["pass"] == true);
  CHECK(doc["results"].back()["u_sets"]["u12"] == 2);

  o = run({"verify", "-p", "3", "-n", "3", "--output", "text"});
  CHECK(o.code == 0);
  CHECK(o.out.find("closed form gated") != std::string::npos);
  CHECK(o.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("apn, classify, gamma, charsum") {
  auto o = run({"apn", "-p", "11", "-n", "1"});
  CHECK(o.code == 0);
  const auto apn = o.doc();
  std::vector<int> us;
  for (const auto& r : apn["results"]) us.push_back(r["u"].get<int>());
  CHECK(us == std::vector<int>{0, 2, 4, 7, 9});

  o = run({"classify", "-p", "7", "-n", "1", "-u", "4/5"});
  CHECK(o.code == 0);
  auto doc = o.doc();
  CHECK(doc["results"][0]["u"] == 5);
  CHECK(doc["results"][0]["flags"]["in_u0"] == true);
  CHECK(doc["results"][0]["flags"]["special"] == "plus_4_5");

  o = run({"gamma", "-p", "11", "-n", "1", "-u", "2"});
  CHECK(o.code == 0);
  doc = o.doc();
  CHECK(doc["results"][0]["t_counts"]["t1_identity_holds"] == true);
  CHECK(doc["results"][0]["t_counts"]["t_identity_holds"] == true);

  o = run({"charsum", "-p", "7", "-n", "3"});
  CHECK(o.code == 0);
  CHECK(o.doc()["results"][0]["gamma_pn"]["within_weil"] == true);

  o = run({"charsum", "-p", "11", "--poly", "1,0,1"});
  CHECK(o.code == 0);
  CHECK(o.doc()["results"][0]["sum"]["value"] == -1);
}

TEST_CASE("search-a and table override") {
  auto o = run({"search-a", "-p", "19"});
  CHECK(o.code == 0);
  CHECK(o.doc()["results"][0]["found"] == json({2, 17}));

  const std::string path = "test_cli_table.csv";
  std::ofstream(path) << "p,n,u\n19,1,2\n";
  o = run({"search-a", "-p", "19", "--table-a", path});
  CHECK(o.code == 2);
}

TEST_CASE("usage and environment errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"spectrum"}).code == 1);
  CHECK(run({"spectrum", "-p", "7", "--method", "guess"}).code == 1);
  CHECK(run({"spectrum", "-p", "5", "-u", "1"}).code == 1);
  CHECK(run({"spectrum", "-p", "9", "-u", "1"}).code == 1);
  CHECK(run({"spectrum", "-p", "7", "-u", "x"}).code == 1);
  CHECK(run({"spectrum", "-p", "7"}).code == 1);
  CHECK(run({"verify", "-p", "7", "-n", "5", "--budget", "1000"}).code == 1);
  CHECK(run({"spectrum", "-p", "7", "-n", "3", "--modulus", "1,0,0,1", "-u", "0"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}
