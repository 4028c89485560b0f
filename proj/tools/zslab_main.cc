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

// zslab command-line front end.
//
// Exit status: 0 success, 1 a verification failed, 2 invalid input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zslab/apfree.h"
#include "zslab/battery.h"
#include "zslab/bounds.h"
#include "zslab/constructive.h"
#include "zslab/error.h"
#include "zslab/extractor.h"
#include "zslab/group.h"
#include "zslab/io.h"
#include "zslab/zerosum.h"

namespace {

using namespace zslab;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;

// Per-search node limit for verify-paper unless --budget or ZSLAB_BUDGET is
// set. Keeps the order <= 36 battery near a minute.
constexpr uint64_t kBatteryBudget = 2'000'000;

struct RunConfig {
  uint64_t budget = 0;
  uint64_t seed = 0;
  bool symmetry = true;
  std::string format = "tsv";
  std::string output;
};

SearchOptions Search(const RunConfig& cfg) {
  SearchOptions o;
  o.node_budget = cfg.budget;
  o.translation_symmetry = cfg.symmetry;
  return o;
}

// Writes to --output when given, stdout otherwise.
void Emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write " + cfg.output);
  out << text;
}

void WriteJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string ValueLine(int64_t value, bool exhaustive) {
  std::string line = std::to_string(value);
  if (!exhaustive) line += " (lower bound: search budget exhausted)";
  return line + "\n";
}

int RunSConst(const RunConfig& cfg, const std::string& literal, bool bounds,
              const std::string& cert_path) {
  const AbelianGroup g = ParseGroup(literal);
  if (bounds) {
    ReportOptions ro;
    ro.search = Search(cfg);
    ro.max_exact_order = 0;
    BoundReport report = BuildBoundsReport(g, ro);
    std::erase_if(report.entries,
                  [](const BoundEntry& e) { return e.quantity != "s"; });
    Emit(cfg, TsvHeader() + ToTsv(report));
    return kExitOk;
  }
  const ExtremalResult res = SExact(g, Search(cfg));
  if (!cert_path.empty()) WriteJsonFile(cert_path, ToJson(res.certificate));
  Emit(cfg, ValueLine(res.value, res.exhaustive));
  return kExitOk;
}

int RunGConst(const RunConfig& cfg, const std::string& literal,
              const std::string& cert_path) {
  const AbelianGroup g = ParseGroup(literal);
  const ExtremalResult res = GExact(g, Search(cfg));
  if (!cert_path.empty()) WriteJsonFile(cert_path, ToJson(res.certificate));
  Emit(cfg, ValueLine(res.value, res.exhaustive));
  return kExitOk;
}

int RunRValue(const RunConfig& cfg, int64_t p, int n) {
  const RExactResult res = RExact(p, n, Search(cfg));
  Emit(cfg, ValueLine(res.value, res.exhaustive) +
                ToJson(res.witness.points()).dump() + "\n");
  return kExitOk;
}

int RunWitness(const RunConfig& cfg, const std::string& literal,
               const std::string& path, bool trace, bool exact_oracle) {
  const AbelianGroup g = ParseGroup(literal);
  const ElementFile file = ReadElementFile(path, g);
  const GSequence seq(file.group, file.elements);
  const SOracle oracle =
      exact_oracle ? ExactSOracle(Search(cfg)) : DefaultSOracle(Search(cfg));
  const SolveResult res = SolveGeneral(seq, oracle);
  Json out;
  out["group"] = g.ToString();
  out["length"] = seq.size();
  out["m"] = g.exponent();
  int code = kExitOk;
  switch (res.status) {
    case SolveStatus::kFound:
      out["status"] = "found";
      out["witness"] = ToJson(*res.witness);
      if (!VerifyWitness(seq, *res.witness, g.exponent())) code = kExitVerify;
      if (ReplayTrace(seq, res.trace) != res.witness->indices) {
        code = kExitVerify;
      }
      break;
    case SolveStatus::kProvenAbsent:
      out["status"] = "proven-absent";
      break;
    case SolveStatus::kBudgetExhausted:
      out["status"] = "budget-exhausted";
      break;
  }
  if (trace) out["trace"] = ToJson(res.trace);
  out["verified"] = code == kExitOk;
  Emit(cfg, out.dump(2) + "\n");
  return code;
}

int RunExtract(const RunConfig& cfg, const std::string& path,
               const std::string& literal, const std::string& mode,
               int64_t samples) {
  std::optional<AbelianGroup> g;
  if (!literal.empty()) g = ParseGroup(literal);
  const ElementFile file = ReadElementFile(path, g);
  const PointSet a(file.group, file.elements);
  ExtractionOptions eo;
  eo.mode = mode == "randomized" ? ExtractionMode::kRandomized
                                 : ExtractionMode::kExhaustive;
  eo.seed = cfg.seed;
  eo.samples = samples;
  const ExtractionOutcome outcome = ExtractApFree(a, eo);
  Json out;
  out["group"] = file.group.ToString();
  out["size"] = a.size();
  out["result"] = ToJson(outcome);
  bool ok = true;
  if (outcome.zero_sum) {
    ok = VerifyWitness(a, *outcome.zero_sum, file.group.prime());
  } else if (outcome.apfree) {
    const int64_t margin = outcome.scores->x1 - outcome.scores->x2;
    ok = IsApFree(outcome.apfree->b) && outcome.apfree->b.size() >= margin;
  }
  out["verified"] = ok;
  Emit(cfg, out.dump(2) + "\n");
  return ok ? kExitOk : kExitVerify;
}

int RunReport(const RunConfig& cfg, const std::vector<std::string>& literals,
              int64_t max_exact_order) {
  std::vector<AbelianGroup> groups;
  for (const auto& l : literals) groups.push_back(ParseGroup(l));
  std::sort(groups.begin(), groups.end(),
            [](const AbelianGroup& a, const AbelianGroup& b) {
              return a.ToString() < b.ToString();
            });
  ReportOptions ro;
  ro.search = Search(cfg);
  ro.max_exact_order = max_exact_order;
  bool consistent = true;
  std::string tsv = TsvHeader();
  Json all = Json::array();
  for (const auto& g : groups) {
    const BoundReport report = BuildBoundsReport(g, ro);
    consistent = consistent && report.consistent;
    tsv += ToTsv(report);
    all.push_back(ToJson(report));
  }
  Emit(cfg, cfg.format == "json" ? all.dump(2) + "\n" : tsv);
  return consistent ? kExitOk : kExitVerify;
}

int RunVerifyPaper(const RunConfig& cfg, const std::string& family,
                   int64_t kmax, int nmax, int64_t max_order) {
  BatteryOptions bo;
  bo.family = family == "homocyclic" ? Family::kHomocyclic : Family::kAll;
  bo.kmax = kmax;
  bo.nmax = nmax;
  bo.max_order = max_order > 0 ? max_order
                 : bo.family == Family::kAll
                     ? 36
                     : std::numeric_limits<int64_t>::max();
  bo.report.search = Search(cfg);
  const BatteryResult res = RunBattery(bo);
  std::ostringstream os;
  os << "group\tcheck\tstatus\tdetail\n";
  int failures = 0;
  for (const auto& c : res.checks) {
    if (!c.passed) ++failures;
    os << c.group << '\t' << c.name << '\t' << (c.passed ? "ok" : "FAIL")
       << '\t' << c.detail << '\n';
  }
  os << "# " << res.checks.size() << " checks over " << res.reports.size()
     << " groups, " << failures << " failed\n";
  Emit(cfg, os.str());
  return res.ok ? kExitOk : kExitVerify;
}

int RunVerifyCert(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kInvalidInput, path + ": " + e.what());
  }
  const bool ok = VerifyCertificate(CertificateFromJson(j));
  std::cout << (ok ? "valid" : "invalid") << '\n';
  return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-sum constants and 3-AP-free sets in finite abelian groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.budget = DefaultNodeBudget();
  app.add_option("--budget", cfg.budget, "Search node limit (env ZSLAB_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for all randomness");
  app.add_flag("--symmetry,!--no-symmetry", cfg.symmetry,
               "Fix zero by translation in extremal searches (default on)");
  app.add_option("--output,-o", cfg.output, "Write output to a file");

  std::string literal, path, cert_path, mode = "exhaustive", family = "all";
  std::vector<std::string> literals;
  bool exact = false, bounds = false, trace = false;
  std::string oracle = "exact";
  int64_t p = 0, samples = 0, kmax = 6, max_order = 0, max_exact = 36;
  int n = 0, nmax = 3;

  auto* sconst = app.add_subcommand("sconst", "Compute s(G)");
  sconst->add_option("GROUP", literal)->required();
  auto* exact_flag = sconst->add_flag("--exact", exact, "Exhaustive search");
  sconst->add_flag("--bounds", bounds, "List upper and lower bounds")
      ->excludes(exact_flag);
  sconst->add_option("--cert", cert_path, "Write the certificate as JSON");

  auto* gconst = app.add_subcommand("gconst", "Compute g(G)");
  gconst->add_option("GROUP", literal)->required();
  gconst->add_option("--cert", cert_path, "Write the certificate as JSON");

  auto* rvalue = app.add_subcommand("rvalue", "Compute r(F_p^n)");
  rvalue->add_option("p", p)->required();
  rvalue->add_option("n", n)->required();

  auto* witness = app.add_subcommand("witness", "Zero-sum witnesses");
  witness->require_subcommand(1);
  auto* find = witness->add_subcommand("find", "Find an exp(G)-term zero sum");
  find->add_option("GROUP", literal)->required();
  find->add_option("SEQFILE", path)->required();
  find->add_flag("--trace", trace, "Include the reduction trace");
  find->add_option("--oracle", oracle, "s oracle for block lengths")
      ->check(CLI::IsMember({"exact", "default"}));

  auto* extract = app.add_subcommand("extract", "AP-free or zero-sum extraction");
  extract->add_option("SETFILE", path)->required();
  extract->add_option("--group", literal, "Group when the file is a bare array");
  extract->add_option("--mode", mode)
      ->check(CLI::IsMember({"exhaustive", "randomized"}));
  extract->add_option("--seed", cfg.seed, "Seed for randomized mode");
  extract->add_option("--samples", samples, "Hyperplanes sampled (0: 10p)");

  auto* report = app.add_subcommand("report", "Bound table for groups");
  report->add_option("GROUP", literals)->required();
  report->add_option("--format", cfg.format)
      ->check(CLI::IsMember({"tsv", "json"}));
  report->add_option("--max-exact-order", max_exact,
                     "Largest |G| searched exactly");

  auto* verify = app.add_subcommand("verify-paper", "Run the bound battery");
  verify->add_option("--family", family)
      ->check(CLI::IsMember({"all", "homocyclic"}));
  verify->add_option("--kmax", kmax);
  verify->add_option("--nmax", nmax);
  verify->add_option("--max-order", max_order,
                     "Order cap (default 36 for the full family)");

  auto* vcert = app.add_subcommand("verify-cert", "Re-verify a certificate file");
  vcert->add_option("FILE", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*sconst) return RunSConst(cfg, literal, bounds, cert_path);
    if (*gconst) return RunGConst(cfg, literal, cert_path);
    if (*rvalue) return RunRValue(cfg, p, n);
    if (*find) return RunWitness(cfg, literal, path, trace, oracle == "exact");
    if (*extract) return RunExtract(cfg, path, literal, mode, samples);
    if (*report) return RunReport(cfg, literals, max_exact);
    if (*verify) {
      if (app.count("--budget") == 0 && std::getenv("ZSLAB_BUDGET") == nullptr) {
        cfg.budget = kBatteryBudget;
      }
      return RunVerifyPaper(cfg, family, kmax, nmax, max_order);
    }
    if (*vcert) return RunVerifyCert(path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kInternal ? kExitVerify : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
