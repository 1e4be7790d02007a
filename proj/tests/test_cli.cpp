#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "kfin/cli/commands.hpp"
#include "kfin/cli/wire.hpp"
#include "kfin/errors.hpp"
#include "kfin/strata.hpp"
#include "support.hpp"

namespace kfin {
namespace {

using cli::CommandOutput;
using cli::DecideOptions;
using cli::Json;
using testing::Gen;
using testing::quintic;

const std::string kCwsb = R"({"stratum":"CuspWithSmoothBranch","n":3,"params":{"a":"5"}})";

Json parse(const CommandOutput& out) { return Json::parse(out.text); }

std::string quintic_spec() { return cli::curve_to_json(quintic()).dump(); }

DecideOptions at(const char* point) {
  DecideOptions o;
  o.point = point;
  return o;
}

TEST(Wire, CurveRoundTrip) {
  Gen g(51);
  for (StratumId id : kAllStrata) {
    FormSpace l = stratum_space(id, g.params(id, 3 + static_cast<int>(id) % 3));
    Json j = cli::curve_to_json(l);
    EXPECT_EQ(cli::curve_from_json(Json::parse(j.dump())), l);
    EXPECT_EQ(cli::curve_to_json(cli::curve_from_json(j)).dump(), j.dump());
  }
  FieldRef f = NumberField::from_minpoly({-2, 0, 1});
  FormSpace l(2, {testing::form(f, {FieldElement::generator(f), FieldElement(f, 1), FieldElement(f)}),
                  BinaryForm::monomial(2, 2, FieldElement(f, 1))});
  Json j = cli::curve_to_json(l);
  EXPECT_EQ(cli::curve_from_json(j), l);
  EXPECT_EQ(j["field"]["minpoly"], Json::parse("[-2,0,1]"));
}

TEST(Wire, RationalsAreStrings) {
  EXPECT_EQ(cli::element_to_json(testing::q(-3, 4)), Json("-3/4"));
  EXPECT_EQ(cli::element_from_json(Json("6/8"), NumberField::rationals()), testing::q(3, 4));
  EXPECT_THROW(cli::element_from_json(Json("x"), NumberField::rationals()), cli::WireError);
}

TEST(Wire, RankDeficientCurveIsRejected) {
  Json j = Json::parse(R"({"degree":2,"basis":[["1","0","0"],["2","0","0"]]})");
  EXPECT_THROW(cli::curve_from_json(j), InvalidInput);
}

TEST(Wire, Points) {
  FieldRef q = NumberField::rationals();
  EXPECT_EQ(cli::point_from_text("1,1", q), ProjPoint::rational(1, 1));
  EXPECT_EQ(cli::point_from_text("2:4", q), ProjPoint::rational(1, 2));
  EXPECT_EQ(cli::point_from_text("1,0", q), ProjPoint::infinity());
  EXPECT_EQ(cli::point_from_text(R"(["-1/2","1"])", q), ProjPoint::rational(-1, 2));
  EXPECT_THROW(cli::point_from_text("0,0", q), cli::WireError);
}

TEST(Decide, WorkedVerdicts) {
  CommandOutput out = cli::cmd_decide(kCwsb, at("1,1"));
  EXPECT_EQ(out.exit_code, cli::kExitKF);
  Json j = parse(out);
  EXPECT_EQ(j["outcome"], "KF");
  EXPECT_EQ(j["witness_k"], 1);

  out = cli::cmd_decide(kCwsb, at("0,1"));
  EXPECT_EQ(out.exit_code, cli::kExitNotKF);
  j = parse(out);
  EXPECT_EQ(j["outcome"], "NotKF");
  EXPECT_EQ(j["bound_used"], 3);

  out = cli::cmd_decide(quintic_spec(), {});
  EXPECT_EQ(out.exit_code, cli::kExitKF);
  j = parse(out);
  EXPECT_EQ(j["point"], "(1:1)");
  EXPECT_EQ(j["witness_k"], 1);
}

TEST(Decide, CapGivesUndecidedWithBound) {
  DecideOptions o = at("0,1");
  o.max_k = 5;
  CommandOutput out = cli::cmd_decide(quintic_spec(), o);
  EXPECT_EQ(out.exit_code, cli::kExitUndecided);
  Json j = parse(out);
  EXPECT_EQ(j["outcome"], "Undecided");
  EXPECT_EQ(j["cap"], 5);
  EXPECT_EQ(j["bound_used"], 20736000576000004L);
  EXPECT_EQ(cli::integer_to_json(Integer("99999999999999999999")), "99999999999999999999");
}

TEST(Decide, ErrorsMapToExitCodes) {
  EXPECT_EQ(cli::cmd_decide("{not json", {}).exit_code, cli::kExitMalformed);
  EXPECT_EQ(cli::cmd_decide(R"({"stratum":"Nope","n":3,"params":{}})", {}).exit_code, cli::kExitMalformed);
  // Admissibility and genus hypotheses are preconditions.
  EXPECT_EQ(cli::cmd_decide(R"({"stratum":"Tacnode","n":3,"params":{"a":"0","b":"1"}})", {}).exit_code,
            cli::kExitPrecondition);
  std::string rnc = R"({"degree":3,"basis":[["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]})";
  CommandOutput out = cli::cmd_decide(rnc, at("0,1"));
  EXPECT_EQ(out.exit_code, cli::kExitPrecondition);
  Json j = parse(out);
  EXPECT_TRUE(j.contains("error"));
  EXPECT_TRUE(j.contains("message"));
}

TEST(Decide, StratumSpecAgreesWithExportedCurve) {
  Gen g(52);
  std::vector<std::string> specs{kCwsb, R"({"stratum":"Tacnode","n":3,"params":{"a":"2","b":"5"}})",
                                 R"({"stratum":"TwoCusps","n":3,"params":{"a":"5","b":"5"}})",
                                 R"({"stratum":"CuspAndNode","n":3,"params":{"a":"5/2","b":"0"}})",
                                 R"({"stratum":"Cusp25","n":4,"params":{"a":"3","b":"-1"}})"};
  for (const auto& spec : specs) {
    CommandOutput exported = cli::cmd_export(spec);
    ASSERT_EQ(exported.exit_code, 0) << exported.text;
    std::vector<std::string> points{"1,1", "0,1", "1,0", "-1,1", "1,2"};
    for (const auto& pt : points) {
      DecideOptions o = at(pt.c_str());
      o.max_k = 6;
      Json a = parse(cli::cmd_decide(spec, o));
      Json b = parse(cli::cmd_decide(exported.text, o));
      if (a["outcome"] != "Undecided" && b["outcome"] != "Undecided") {
        EXPECT_EQ(a["outcome"], b["outcome"]) << spec << " " << pt;
      }
      if (a["outcome"] == "KF" || b["outcome"] == "KF") {
        EXPECT_EQ(a["witness_k"], b["witness_k"]) << spec << " " << pt;
      }
    }
  }
}

TEST(Classify, QuinticAndFullSpace) {
  CommandOutput out = cli::cmd_classify(quintic_spec(), {}, cli::Format::Json);
  ASSERT_EQ(out.exit_code, 0) << out.text;
  Json j = parse(out);
  EXPECT_EQ(j["genus"], 2);
  ASSERT_EQ(j["singular_points"].size(), 1u);
  EXPECT_EQ(j["singular_points"][0]["type"], "CuspWithSmoothBranch");

  std::string full = R"({"degree":4,"basis":[["1","0","0","0","0"],["0","1","0","0","0"],["0","0","1","0","0"],)"
                     R"(["0","0","0","1","0"],["0","0","0","0","1"]]})";
  j = parse(cli::cmd_classify(full, {}, cli::Format::Json));
  EXPECT_EQ(j["genus"], 0);
  EXPECT_TRUE(j["singular_points"].empty());
}

TEST(Classify, ExportedTacnode) {
  CommandOutput exported = cli::cmd_export(R"({"stratum":"Tacnode","n":3,"params":{"a":"1","b":"0"}})");
  Json j = parse(cli::cmd_classify(exported.text, {}, cli::Format::Json));
  ASSERT_EQ(j["singular_points"].size(), 1u);
  EXPECT_EQ(j["singular_points"][0]["type"], "Tacnode");
}

TEST(Classify, BasePointsArePreconditionFailures) {
  std::string bp = R"({"degree":2,"basis":[["1","0","0"],["0","1","0"]]})";
  EXPECT_EQ(cli::cmd_classify(bp, {}, cli::Format::Json).exit_code, cli::kExitPrecondition);
}

TEST(Semigroup, QuinticGenerators) {
  Json j = parse(cli::cmd_semigroup(quintic_spec(), "1,1", 3, cli::Format::Json));
  EXPECT_EQ(j["generators"], Json::parse("[[5,0],[5,1],[5,2],[5,5]]"));
  EXPECT_EQ(j["truncated"], false);
  j = parse(cli::cmd_semigroup(quintic_spec(), "0,1", 2, cli::Format::Json));
  EXPECT_EQ(j["generators"], Json::parse("[[5,0],[5,1],[5,2],[5,3],[10,7],[10,8]]"));
  EXPECT_EQ(j["truncated"], true);
  std::string full2 = R"({"degree":2,"basis":[["1","0","0"],["0","1","0"],["0","0","1"]]})";
  j = parse(cli::cmd_semigroup(full2, "0,1", 1, cli::Format::Json));
  EXPECT_EQ(j["generators"], Json::parse("[[2,0],[2,1],[2,2]]"));
}

std::vector<Json> lines_of(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(Json::parse(line));
  }
  return out;
}

TEST(Sweep, TwoCuspsLocus) {
  cli::SweepOptions o;
  o.stratum = "TwoCusps";
  o.grid = {cli::parse_axis("a=-5..5"), cli::parse_axis("b=-5,-1,1,5")};
  auto rows = lines_of(cli::cmd_sweep(o).text);
  ASSERT_EQ(rows.size(), 44u);
  for (const auto& row : rows) {
    Rational a = parse_rational(row["params"]["a"].get<std::string>());
    Rational b = parse_rational(row["params"]["b"].get<std::string>());
    const bool on_locus = a * b == 25 || a == 0;
    EXPECT_EQ(row["verdict"]["outcome"] == "KF", on_locus) << row.dump();
    if (a * b == 25) {
      bool has = false;
      for (const auto& w : row["verdict"]["witnesses"]) {
        has = has || w["point"] == "(" + to_string(a / 5) + ":1)";
      }
      EXPECT_TRUE(has) << row.dump();
    }
  }
}

TEST(Sweep, CuspsAlwaysKfAndTacnodeOffLocusNot) {
  cli::SweepOptions o;
  o.stratum = "Cusp345";
  o.grid = {cli::parse_axis("a=-3..3")};
  for (const auto& row : lines_of(cli::cmd_sweep(o).text)) EXPECT_EQ(row["verdict"]["outcome"], "KF");
  o.stratum = "Tacnode";
  o.grid = {cli::parse_axis("a=1,3"), cli::parse_axis("b=1,2")};
  for (const auto& row : lines_of(cli::cmd_sweep(o).text)) {
    EXPECT_EQ(row["verdict"]["outcome"], "NotKF");
    EXPECT_EQ(row["verdict"]["bound_used"], 6);
  }
}

TEST(Sweep, OutputIsIndependentOfJobs) {
  cli::SweepOptions o;
  o.stratum = "CuspAndNode";
  o.grid = {cli::parse_axis("a=-2..2"), cli::parse_axis("b=-1,0,1/2")};
  const std::string serial = cli::cmd_sweep(o).text;
  o.jobs = 4;
  EXPECT_EQ(cli::cmd_sweep(o).text, serial);
  o.jobs = 3;
  EXPECT_EQ(cli::cmd_sweep(o).text, serial);
  // Inadmissible cells are reported in-line.
  EXPECT_NE(serial.find("\"error\""), std::string::npos);
  EXPECT_EQ(lines_of(serial).size(), 15u);
}

TEST(Locus, Commands) {
  CommandOutput out = cli::cmd_locus("OrdinaryTriplePoint", 3, cli::Format::Json);
  ASSERT_EQ(out.exit_code, 0);
  Json j = parse(out);
  EXPECT_EQ(j["variables"], Json::parse(R"(["a","b","u","v"])"));
  out = cli::cmd_locus("TwoNodes", 3, cli::Format::Json);
  EXPECT_GE(parse(out)["term_count"].get<int>(), 100);
  EXPECT_EQ(cli::cmd_locus("Tacnode", 3, cli::Format::Json).exit_code, cli::kExitMalformed);
  out = cli::cmd_locus("OrdinaryTriplePoint", 3, cli::Format::Text);
  EXPECT_NE(out.text.find("^"), std::string::npos);
}

// The installed binary: stdin input, exit statuses, determinism.
struct Process {
  int status;
  std::string out;
};

Process run(const std::string& args, const std::string& input) {
  const std::string path = ::testing::TempDir() + "kfin_cli_input.json";
  std::ofstream(path) << input;
  FILE* pipe = popen((std::string(KFIN_BINARY) + " " + args + " < " + path).c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

TEST(Binary, ExitStatusesAndStdin) {
  EXPECT_EQ(run("decide - --point 1,1", kCwsb).status, 0);
  EXPECT_EQ(run("decide - --point 0,1", kCwsb).status, 1);
  EXPECT_EQ(run("decide - --point 0,1 --max-k 3", quintic_spec()).status, 2);
  EXPECT_EQ(run("decide -", "[1,2").status, 64);
  EXPECT_EQ(run("locus Tacnode --n 3", "").status, 64);
  EXPECT_EQ(run("decide - --bogus", kCwsb).status, 64);
  Process a = run("--format text semigroup - --point 1,1 --k-max 3", quintic_spec());
  Process b = run("semigroup - --point 1,1 --k-max 3 --format text", quintic_spec());
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Binary, SweepIsByteIdenticalAcrossJobs) {
  Process a = run("sweep TwoCusps --grid a=-5..5 --grid b=1,5 --jobs 1", "");
  Process b = run("sweep TwoCusps --grid a=-5..5 --grid b=1,5 --jobs 4", "");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 22);
}

}  // namespace
}  // namespace kfin
