#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "seshadri/cli.hpp"
#include "seshadri/report.hpp"

using namespace seshadri;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("bound subcommand: type-1 exact value") {
  RunResult r = run_cli({"bound", "--type", "1", "--bundle", "3,2", "--global"});
  CHECK(r.code == 0);
  CHECK(r.out.find("exact 2") != std::string::npos);
  CHECK(r.out.find("witness") != std::string::npos);
  CHECK(r.out.find("(1,0)") != std::string::npos);
}

TEST_CASE("bound subcommand: type-2 very general") {
  RunResult r = run_cli({"bound", "--type", "2", "--bundle", "1,1", "--point",
                         "very-general"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lower 4/3") != std::string::npos);
  CHECK(r.out.find("sqrt(2)") != std::string::npos);
}

TEST_CASE("hr-table reproduces the published rows") {
  RunResult r = run_cli({"hr-table", "--r", "2", "--mu", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1 | 1\n") != std::string::npos);
  CHECK(r.out.find("5 | 1, -1, 2, -2, 3") != std::string::npos);
  CHECK(r.out.find("7 | 1, -1, 2, -2, 3") != std::string::npos);

  RunResult r8 = run_cli({"hr-table", "--r", "8"});
  CHECK(r8.code == 0);
  CHECK(r8.out.find("1 | 1\n") != std::string::npos);
  CHECK(r8.out.find("2 |") == std::string::npos);
}

TEST_CASE("hr-verify passes for mu = 8 and fails for mu = 16") {
  RunResult ok = run_cli({"hr-verify", "--type", "2", "--bundle", "1,1", "--r", "2"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("sqrt(15/16)") != std::string::npos);
  RunResult bad = run_cli({"hr-verify", "--type", "2", "--bundle", "1,1", "--r",
                           "2", "--mu", "16"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("oracle subcommand: spec query and exit codes") {
  RunResult r = run_cli({"oracle", "--type", "2", "--bundle", "1,1", "--point",
                         "very-general", "--claimed", "4/3", "--window", "8,8,6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("no violations") != std::string::npos);

  // claiming 2 at a very general point is wrong: exit 1 and a listed violation
  RunResult bad = run_cli({"oracle", "--type", "2", "--bundle", "1,1", "--point",
                           "very-general", "--claimed", "2", "--window", "8,8,6"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("violation") != std::string::npos);

  // disabling the Xu filter resurfaces the m = 4 candidate
  RunResult noxu = run_cli({"oracle", "--type", "2", "--bundle", "1,1", "--point",
                            "very-general", "--claimed", "4/3", "--window",
                            "8,8,6", "--no-xu"});
  CHECK(noxu.code == 1);
  CHECK(noxu.out.find("(2,3)") != std::string::npos);
}

TEST_CASE("replay subcommand") {
  RunResult r = run_cli({"replay", "--case", "type2-m4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("12 < 14") != std::string::npos);
  CHECK(r.out.find("established") != std::string::npos);
  RunResult bad = run_cli({"replay", "--case", "nope"});
  CHECK(bad.code == 2);
}

TEST_CASE("serrano-table") {
  RunResult r = run_cli({"serrano-table"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2,3,6") != std::string::npos);
  CHECK(r.out.find("A/6, B") != std::string::npos);
  CHECK(r.out.find("(0,2)") != std::string::npos);  // B-fibre class on types 2, 4
  // seven data rows
  int rows = 0;
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty() && line.find('|') != std::string::npos &&
        line.find("type") == std::string::npos)
      ++rows;
  CHECK(rows == 7);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"bound", "--type", "9", "--bundle", "1,1", "--global"}).code == 2);
  CHECK(run_cli({"bound", "--type", "1", "--bundle", "x", "--global"}).code == 2);
  CHECK(run_cli({"bound", "--type", "1", "--bundle", "0,2", "--global"}).code == 2);
  CHECK(run_cli({"bound", "--type", "1", "--bundle", "1,1"}).code == 2);
  CHECK(run_cli({"oracle", "--type", "1", "--bundle", "1,1", "--claimed", "1"}).code == 2);
  CHECK(run_cli({"bound", "--type", "1", "--bundle", "1,1", "--point",
                 "singular-fiber:5"})
            .code == 2);
}

TEST_CASE("help texts name the theorems") {
  CHECK(run_cli({"--help"}).out.find("hyperelliptic") != std::string::npos);
  CHECK(run_cli({"bound", "--help"}).out.find("min{a,b}") != std::string::npos);
  CHECK(run_cli({"multipoint", "--help"}).out.find("Harbourne-Roe") !=
        std::string::npos);
  CHECK(run_cli({"hr-table", "--help"}).out.find("Harbourne-Roe") !=
        std::string::npos);
  CHECK(run_cli({"hr-verify", "--help"}).out.find("Hodge") != std::string::npos);
  CHECK(run_cli({"oracle", "--help"}).out.find("Bezout") != std::string::npos);
  CHECK(run_cli({"replay", "--help"}).out.find("4/3") != std::string::npos);
  CHECK(run_cli({"serrano-table", "--help"}).out.find("Serrano") !=
        std::string::npos);
}

TEST_CASE("json outputs round-trip through the typed records") {
  RunResult r = run_cli({"bound", "--type", "2", "--bundle", "1,1", "--point",
                         "very-general", "--format", "json"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc.at("schema_version") == kSchemaVersion);
  for (const json& cj : doc.at("certificates")) {
    Certificate cert = certificate_from_json(cj);
    CHECK(to_json(cert).dump() == cj.dump());
  }

  RunResult hv = run_cli({"hr-verify", "--type", "2", "--bundle", "1,1", "--r",
                          "3", "--format", "json"});
  REQUIRE(hv.code == 0);
  json hv_doc = json::parse(hv.out);
  HrReport report = hr_report_from_json(hv_doc);
  CHECK(to_json(report).dump() == hv_doc.dump());

  RunResult ov = run_cli({"oracle", "--type", "1", "--bundle", "3,2", "--point",
                          "arbitrary", "--claimed", "2", "--window", "6,6,4",
                          "--format", "json"});
  REQUIRE(ov.code == 0);
  json ov_doc = json::parse(ov.out);
  OracleVerdict verdict = verdict_from_json(ov_doc);
  CHECK(to_json(verdict).dump() == ov_doc.dump());

  RunResult st = run_cli({"serrano-table", "--format", "json"});
  REQUIRE(st.code == 0);
  json st_doc = json::parse(st.out);
  CHECK(st_doc.at("types").size() == 7);
  CHECK(st_doc.at("types")[6].at("multiplicities") ==
        json(std::vector<int>{2, 3, 6}));
}

TEST_CASE("text and json outputs carry the same numerical content") {
  std::vector<std::string> base{"bound", "--type", "2", "--bundle",
                                "1,1",   "--point", "very-general"};
  RunResult text = run_cli(base);
  auto with_json = base;
  with_json.push_back("--format");
  with_json.push_back("json");
  RunResult js = run_cli(with_json);
  REQUIRE(text.code == 0);
  REQUIRE(js.code == 0);
  for (const json& cj : json::parse(js.out).at("certificates")) {
    BoundValue v = bound_from_json(cj.at("value"));
    CHECK(text.out.find(v.to_string()) != std::string::npos);
  }
}

TEST_CASE("no colour codes are emitted to captures (NO_COLOR honoured)") {
  RunResult r = run_cli({"hr-verify", "--type", "2", "--bundle", "1,1", "--r", "2"});
  CHECK(r.out.find("\x1b[") == std::string::npos);
}

TEST_CASE("multipoint subcommand") {
  RunResult r = run_cli({"multipoint", "--type", "2", "--bundle", "1,1", "--r", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sqrt(15/16)") != std::string::npos);
  CHECK(r.out.find("upper 1") != std::string::npos);
}

}  // TEST_SUITE
