// Copyright 2026 The zslab Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the built zslab binary and checks exit codes and output.

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run Cli(const std::string& args) {
  const std::string cmd = std::string(ZSLAB_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string TempFile(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

TEST(Cli, SConst) {
  const auto r = Cli("sconst Z5 --exact");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "9\n");
  const auto b = Cli("sconst F3^2 --bounds");
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("Reiher"), std::string::npos);
}

TEST(Cli, RValuePrintsWitness) {
  const auto r = Cli("rvalue 3 2");
  EXPECT_EQ(r.code, 0);
  const auto nl = r.out.find('\n');
  EXPECT_EQ(r.out.substr(0, nl), "4");
  const auto w = nlohmann::json::parse(r.out.substr(nl + 1));
  EXPECT_EQ(w.size(), 4u);
}

TEST(Cli, CertificateFileReverifies) {
  const auto path = (std::filesystem::temp_directory_path() / "zslab_cli_cert.json").string();
  EXPECT_EQ(Cli("gconst F3^2 --cert " + path).out, "5\n");
  const auto v = Cli("verify-cert " + path);
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "valid\n");
  const auto tampered = TempFile(
      "zslab_cli_bad_cert.json",
      R"({"claim":"no-distinct-zero-sum-set","group":"F3^2","m":3,"exhaustive":true,"object":[[0,0],[0,1],[0,2]]})");
  EXPECT_EQ(Cli("verify-cert " + tampered).code, 1);
}

TEST(Cli, WitnessFind) {
  const auto seq = TempFile("zslab_cli_seq.json", "[[1],[1],[1],[1],[1],[1],[1],[1],[1],[1],[1],[1],[1],[1],[1],[1],[1]]");
  const auto r = Cli("witness find Z9 " + seq + " --trace");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "found");
  EXPECT_EQ(j["witness"]["indices"].size(), 9u);
  EXPECT_TRUE(j.contains("trace"));
  EXPECT_EQ(j["verified"], true);
}

TEST(Cli, ExtractIsDeterministic) {
  const auto set = TempFile("zslab_cli_set.json",
                            R"({"group":"F5^2","points":[[0,0],[0,1],[1,0],[1,3],[2,2],[3,4],[4,1]]})");
  const auto a = Cli("extract " + set + " --mode randomized --seed 5 --samples 9");
  const auto b = Cli("extract " + set + " --mode randomized --seed 5 --samples 9");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["verified"], true);
}

TEST(Cli, ReportSortedByLiteral) {
  const auto r = Cli("report Z7 F3^2 Z6");
  EXPECT_EQ(r.code, 0);
  const auto z3 = r.out.find("\nZ2xZ3\t");
  const auto z32 = r.out.find("\nZ3^2\t");
  const auto z7 = r.out.find("\nZ7\t");
  EXPECT_LT(z3, z32);
  EXPECT_LT(z32, z7);
  const auto j = Cli("report Z6 --format json");
  EXPECT_EQ(nlohmann::json::parse(j.out)[0]["consistent"], true);
}

TEST(Cli, BatteryOnHomocyclicFamily) {
  EXPECT_EQ(Cli("verify-paper --family homocyclic --kmax 6 --nmax 2").code, 0);
}

TEST(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(Cli("sconst Q5").code, 2);
  EXPECT_EQ(Cli("sconst").code, 2);
  EXPECT_EQ(Cli("rvalue 4 2").code, 2);
  EXPECT_EQ(Cli("witness find Z3 /nonexistent.json").code, 2);
  EXPECT_EQ(Cli("bogus").code, 2);
  EXPECT_EQ(Cli("extract /nonexistent.json --group F3^2").code, 2);
}

}  // namespace
