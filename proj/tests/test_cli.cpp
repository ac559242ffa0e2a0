/**
 * Copyright 2026 The qtheta Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "oracle/hp_oracle.hpp"
#include "qtheta/cli.hpp"

namespace qtheta::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qtheta");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

TEST(ParseComplex, Grammar) {
  EXPECT_EQ(parse_complex("0.3"), Complex(0.3, 0.0));
  EXPECT_EQ(parse_complex("i"), Complex(0.0, 1.0));
  EXPECT_EQ(parse_complex("-i"), Complex(0.0, -1.0));
  EXPECT_EQ(parse_complex("2.5i"), Complex(0.0, 2.5));
  EXPECT_EQ(parse_complex("1+2i"), Complex(1.0, 2.0));
  EXPECT_EQ(parse_complex("-1-i"), Complex(-1.0, -1.0));
  EXPECT_EQ(parse_complex("1e-3+2e+1i"), Complex(1e-3, 20.0));
  EXPECT_EQ(parse_complex("+0.5"), Complex(0.5, 0.0));
  EXPECT_THROW(parse_complex(""), ContractError);
  EXPECT_THROW(parse_complex("abc"), ContractError);
  EXPECT_THROW(parse_complex("1+2j"), ContractError);
  EXPECT_THROW(parse_complex("1++2i"), ContractError);
}

TEST(Cli, ListText) {
  const auto r = run_cli({"list"});
  EXPECT_EQ(r.code, exit_pass);
  EXPECT_NE(r.out.find("thm-2.1  [numeric+formal]"), std::string::npos);
  EXPECT_NE(r.out.find("p:m=16,N=200"), std::string::npos);
}

TEST(Cli, ListJson) {
  const auto r = run_cli({"list", "--format", "json"});
  ASSERT_EQ(r.code, exit_pass);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_GE(j.size(), 19u);
  bool found = false;
  for (const auto& e : j) {
    if (e["id"] == "thm-2.1") {
      found = true;
      EXPECT_EQ(e["modes"], nlohmann::json({"numeric", "formal"}));
      EXPECT_EQ(e["formal"][0]["root_m"], 16);
      EXPECT_EQ(e["formal"][0]["default_order"], 200);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, EvalPinnedValues) {
  auto value = [](const Result& r) {
    const auto j = nlohmann::json::parse(r.out);
    return Complex(j["value"]["re"].get<double>(), j["value"]["im"].get<double>());
  };
  const auto s = run_cli({"eval", "sinq", "--z", "1.5707963267948966", "--q", "0.5", "--format", "json"});
  ASSERT_EQ(s.code, exit_pass) << s.err;
  EXPECT_NEAR(value(s).real(), 1.0, 1e-12);
  EXPECT_EQ(nlohmann::json::parse(s.out)["policy"]["tol"], 1e-15);

  const auto t = run_cli({"eval", "theta1", "--z", "0", "--tau", "i", "--format", "json"});
  ASSERT_EQ(t.code, exit_pass) << t.err;
  EXPECT_EQ(value(t), Complex(0.0));

  const auto p = run_cli({"eval", "piq", "--q", "0.1", "--format", "json"});
  ASSERT_EQ(p.code, exit_pass);
  EXPECT_NEAR(value(p).real(), static_cast<double>(oracle::Real(oracle::frozen::pi_tenth)), 1e-13);

  const auto text = run_cli({"eval", "cosq", "--z", "0.2+0.1i", "--q", "0.3"});
  EXPECT_EQ(text.code, exit_pass);
  EXPECT_NE(text.out.find("policy: tol=1e-15 max_terms=1000000 route=product"), std::string::npos);
}

TEST(Cli, EvalErrorsGiveOneLineAndCode) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"eval", "sinq", "--z", "0.3", "--q", "1.5"},
           {"eval", "sinq", "--z", "zzz", "--q", "0.5"},
           {"eval", "sinq", "--z", "0.3"},
           {"eval", "tan", "--q", "0.5"},
           {"eval", "theta1", "--tau", "0.5-i"},
           {"bogus"},
       }) {
    const auto r = run_cli(args);
    EXPECT_EQ(r.code, exit_usage) << args[0] << " " << r.err;
    EXPECT_EQ(lines(r.err), 1) << r.err;
  }
  const auto nc = run_cli({"eval", "piq", "--q", "0.9", "--max-terms", "2"});
  EXPECT_EQ(nc.code, exit_non_converged);
  EXPECT_EQ(lines(nc.err), 1);
}

TEST(Cli, CheckSingleIdentity) {
  const auto r = run_cli({"check", "q-Double", "--q", "0.3", "--format", "json"});
  ASSERT_EQ(r.code, exit_pass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["id"], "q-Double");
  EXPECT_TRUE(j[0]["pass"].get<bool>());
  EXPECT_LT(j[0]["max_rel_err"].get<double>(), 1e-9);
  for (const char* key : {"z", "q", "lhs", "rhs"}) EXPECT_TRUE(j[0]["worst"].contains(key)) << key;
  EXPECT_TRUE(j[0].contains("grid"));
}

TEST(Cli, CheckCsvFile) {
  const auto path = std::filesystem::temp_directory_path() / "qtheta_check_report.csv";
  const auto r = run_cli({"check", "thm-2.2", "--format", "csv", "--out", path.string()});
  ASSERT_EQ(r.code, exit_pass) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(lines(content.str()), 1 + 200);
  EXPECT_EQ(content.str().rfind("id,index,z_re", 0), 0u);
  std::filesystem::remove(path);
}

TEST(Cli, CheckAllPassesOnDefaults) {
  const auto r = run_cli({"check", "all"});
  EXPECT_EQ(r.code, exit_pass) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, CheckRejectsUnknownIdBeforeWork) {
  const auto r = run_cli({"check", "q-Double2", "nope"});
  EXPECT_EQ(r.code, exit_usage);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(lines(r.err), 1);
}

TEST(Cli, CheckOutputIsSortedAndByteStable) {
  const std::vector<std::string> base{"check", "thm-2.3", "q-Double2", "help-1-3", "--format", "json"};
  auto one = base;
  one.insert(one.end(), {"--threads", "1"});
  auto three = base;
  three.insert(three.end(), {"--threads", "3"});
  const auto a = run_cli(one);
  const auto b = run_cli(three);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, run_cli(one).out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j[0]["id"], "help-1-3");
  EXPECT_EQ(j[1]["id"], "q-Double2");
  EXPECT_EQ(j[2]["id"], "thm-2.3");
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run_cli({"check", "thm-2.3", "--mutation", "sign-flip"}).code, exit_verification_failed);
  EXPECT_EQ(run_cli({"check", "q-Double2", "--q", "0.3", "--max-terms", "3"}).code, exit_non_converged);
  EXPECT_EQ(run_cli({"check", "q-Double2", "--q", "1.2"}).code, exit_usage);
}

TEST(Cli, Prove) {
  EXPECT_EQ(run_cli({"prove", "help-0", "--order", "40"}).code, exit_pass);
  const auto full = run_cli({"prove", "thm-2.1", "--format", "json"});
  ASSERT_EQ(full.code, exit_pass);
  const auto j = nlohmann::json::parse(full.out);
  EXPECT_TRUE(j[0]["verified"].get<bool>());
  EXPECT_EQ(j[0]["order"], 200);
  EXPECT_EQ(j[0]["root_m"], 16);
  EXPECT_TRUE(j[0].contains("elapsed"));
  EXPECT_EQ(run_cli({"prove", "thm-2.2", "--order", "1"}).code, exit_inconclusive);
  EXPECT_EQ(run_cli({"prove", "thm-2.1", "--mutation", "half-to-third"}).code, exit_verification_failed);
  const auto bad = run_cli({"prove", "q-Double2"});
  EXPECT_EQ(bad.code, exit_usage);
  EXPECT_EQ(lines(bad.err), 1);
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, exit_pass);
  EXPECT_NE(r.out.find("check"), std::string::npos);
}

}  // namespace
}  // namespace qtheta::cli
