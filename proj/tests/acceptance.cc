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

// Acceptance run: one PASS/FAIL line per check, exit status 1 if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "zslab/apfree.h"
#include "zslab/bounds.h"
#include "zslab/constructive.h"
#include "zslab/extractor.h"
#include "zslab/zerosum.h"

namespace {

using namespace zslab;
using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void Require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [failed: " << what << "]";
    }
  }
};

std::vector<oracle::Vec> Raw(const std::vector<GroupElement>& xs) {
  std::vector<oracle::Vec> out;
  for (const auto& x : xs) out.push_back(x.coords);
  return out;
}

PointSet RandomSubset(std::mt19937_64& rng, const AbelianGroup& g) {
  std::uniform_real_distribution<double> density(0.1, 0.7);
  std::bernoulli_distribution keep(density(rng));
  std::vector<int64_t> idx;
  for (int64_t i = 0; i < g.order(); ++i) {
    if (keep(rng)) idx.push_back(i);
  }
  return PointSet::FromIndices(g, idx);
}

// s(G) by exhaustive search, checked against the closed form, the
// certificate and the naive m-subset scan of the certificate.
void CheckS(Outcome& o, const AbelianGroup& g, int64_t expected,
            double limit_s) {
  const auto start = Clock::now();
  const auto res = SExact(g);
  const double t = Seconds(start);
  const std::string name = g.ToString();
  o.Require(res.exhaustive, name + " exhaustive");
  o.Require(res.value == expected, name + " = " + std::to_string(res.value));
  o.Require(VerifyCertificate(res.certificate), name + " certificate");
  o.Require(!oracle::HasZeroSumOfSize(Raw(res.certificate.object),
                                      g.factors(), g.exponent()),
            name + " naive certificate scan");
  o.Require(t < limit_s, name + " time " + std::to_string(t));
  o.note << " " << name << "=" << res.value;
}

void CyclicEgz(Outcome& o) {
  for (int64_t k = 2; k <= 7; ++k) {
    CheckS(o, AbelianGroup::Canonicalize({k}), 2 * k - 1, 60);
  }
}

void ReiherCase(Outcome& o) { CheckS(o, AbelianGroup::Elementary(3, 2), 9, 600); }

void TwoGroups(Outcome& o) {
  for (int n = 1; n <= 4; ++n) {
    CheckS(o, AbelianGroup::Elementary(2, n), (int64_t{1} << n) + 1, 60);
  }
  CheckS(o, AbelianGroup::Canonicalize({4}), 7, 60);
}

void ProgressionFree(Outcome& o) {
  const std::vector<std::tuple<int64_t, int, int64_t>> cases{
      {3, 1, 2}, {3, 2, 4}, {3, 3, 9}, {5, 1, 2}};
  for (const auto& [p, n, expected] : cases) {
    const auto start = Clock::now();
    const auto res = RExact(p, n);
    const double t = Seconds(start);
    const std::string name = "r(" + std::to_string(p) + "," + std::to_string(n) + ")";
    o.Require(res.exhaustive, name + " exhaustive");
    o.Require(res.value == expected, name + " = " + std::to_string(res.value));
    o.Require(res.witness.size() == res.value && IsApFree(res.witness),
              name + " witness");
    o.Require(oracle::NaiveR(p, n) == expected, name + " naive oracle");
    o.Require(t < 60, name + " time");
    o.note << " " << name << "=" << res.value;
  }
}

void TernaryIdentity(Outcome& o) {
  for (int n = 1; n <= 3; ++n) {
    const auto g = GExact(AbelianGroup::Elementary(3, n));
    const auto r = RExact(3, n);
    o.Require(g.exhaustive && r.exhaustive, "exhaustive n=" + std::to_string(n));
    o.Require(g.value == r.value + 1, "g = r + 1 at n=" + std::to_string(n));
    o.note << " g(F3^" << n << ")=" << g.value << " r=" << r.value;
  }
}

void FieldInequalities(Outcome& o) {
  for (int n = 2; n <= 3; ++n) {
    const auto g = GExact(AbelianGroup::Elementary(3, n));
    const auto r = RExact(3, n - 1);
    o.Require(g.exhaustive && r.exhaustive, "exact sides");
    o.Require(g.value <= 6 * r.value, "g(F3^" + std::to_string(n) + ")");
    o.note << " g(F3^" << n << ")=" << g.value << "<=" << 6 * r.value;
  }
  for (int n = 1; n <= 2; ++n) {
    const auto s = SExact(AbelianGroup::Elementary(3, n));
    const auto r = RExact(3, n);
    o.Require(s.exhaustive && r.exhaustive, "exact sides");
    o.Require(s.value <= 6 * r.value, "s(F3^" + std::to_string(n) + ")");
    o.note << " s(F3^" << n << ")=" << s.value << "<=" << 6 * r.value;
  }
}

void ExactExpectation(Outcome& o) {
  std::mt19937_64 rng(20260101);
  int checked = 0;
  for (int64_t p : {3, 5}) {
    const auto g = AbelianGroup::Elementary(p, 2);
    for (int i = 0; i < 100; ++i) {
      const PointSet a = RandomSubset(rng, g);
      const auto e = ExpectationCheck(a);
      const auto direct = oracle::HyperplaneAverages(Raw(a.points()), p, 2);
      const int64_t t = CountApSets(a);
      const Rational formula_x1(a.size(), p);
      const Rational formula_x2 = Rational(t * (p - 1), p * (p * p - 1));
      o.Require(e.mean_x1 == direct.x1 && direct.x1 == formula_x1, "mean X1");
      o.Require(e.mean_x2 == direct.x2 && direct.x2 == formula_x2, "mean X2");
      ++checked;
    }
  }
  o.note << " " << checked << " sets";
}

void ExtractorGuarantee(Outcome& o) {
  SearchOptions sym;
  sym.translation_symmetry = true;
  for (auto [p, n] : {std::pair<int64_t, int>{3, 2}, {3, 3}, {5, 2}}) {
    const auto g = AbelianGroup::Elementary(p, n);
    const auto res = GExact(g, sym);
    const std::string name = g.ToString();
    o.Require(res.exhaustive, name + " exhaustive");
    const PointSet a(g, res.certificate.object);
    const auto out = ExtractApFree(a);
    o.Require(out.apfree.has_value(), name + " ap-free branch");
    if (!out.apfree) continue;
    const auto& b = out.apfree->b;
    bool inside = true;
    for (const auto& x : b.points()) {
      inside = inside && a.Contains(x) && out.apfree->plane.Contains(x);
    }
    o.Require(inside, name + " B inside A and V");
    o.Require(IsApFree(b), name + " B ap-free");
    o.Require(2 * p * b.size() > a.size(), name + " |B| > |A|/(2p)");
    o.Require(IsApFree(HyperplaneTransfer(out.apfree->plane, b)),
              name + " transfer ap-free");
    o.note << " " << name << ": |A|=" << a.size() << " |B|=" << b.size();
  }
}

void CenteredApBattery(Outcome& o) {
  std::mt19937_64 rng(515);
  const auto g = AbelianGroup::Elementary(5, 2);
  int triggered = 0;
  for (int i = 0; i < 1000; ++i) {
    const PointSet a = RandomSubset(rng, g);
    for (const auto& x : a.points()) {
      if (ApsCenteredAt(a, x).size() < 2) continue;
      ++triggered;
      const auto w = ZeroSumFromCenteredAps(a, x);
      o.Require(w.has_value() && w->length() == 5 && VerifyWitness(a, *w, 5),
                "zero sum at " + ToString(x));
    }
  }
  SearchOptions sym;
  sym.translation_symmetry = true;
  for (auto [p, n] : {std::pair<int64_t, int>{3, 2}, {3, 3}, {5, 2}}) {
    const auto g2 = AbelianGroup::Elementary(p, n);
    const auto res = GExact(g2, sym);
    const PointSet a(g2, res.certificate.object);
    size_t worst = 0;
    for (const auto& x : a.points()) {
      worst = std::max(worst, ApsCenteredAt(a, x).size());
    }
    o.Require(static_cast<int64_t>(worst) <= (p - 3) / 2,
              g2.ToString() + " centered count");
  }
  o.note << " " << triggered << " centers with >= 2 APs";
}

void ConstructiveSolver(Outcome& o) {
  const auto start = Clock::now();
  std::mt19937_64 rng(6);
  const SOracle exact = ExactSOracle();
  for (const char* lit : {"Z6", "Z9", "Z12", "Z6^2", "Z9xZ3"}) {
    const AbelianGroup g = ParseGroup(lit);
    const int64_t len = RequiredLength(g, exact);
    int ok = 0;
    for (int i = 0; i < 1000; ++i) {
      std::vector<GroupElement> xs;
      for (int64_t j = 0; j < len; ++j) {
        xs.push_back(g.ElementAt(static_cast<int64_t>(rng() % g.order())));
      }
      const GSequence seq(g, xs);
      const auto res = SolveGeneral(seq, exact);
      if (res.status == SolveStatus::kFound &&
          res.witness->length() == g.exponent() &&
          VerifyWitness(seq, *res.witness, g.exponent()) &&
          ReplayTrace(seq, res.trace) == res.witness->indices) {
        ++ok;
      }
    }
    o.Require(ok == 1000, std::string(lit) + " " + std::to_string(ok) + "/1000");
    o.note << " " << lit << "(L=" << len << ")";
  }
  const double t = Seconds(start);
  o.Require(t < 300, "total time");
}

void JValues(Outcome& o) {
  o.Require(std::abs(JConstant(3) - 0.9184) <= 1e-3, "J(3)");
  double prev = 2;
  for (int64_t p : {3, 5, 7, 11, 13}) {
    const double j = JConstant(p);
    o.Require(j <= prev, "non-increasing at " + std::to_string(p));
    o.Require(j >= 0.8414 && j <= 0.9184 + 1e-4, "range at " + std::to_string(p));
    prev = j;
    o.note << " J(" << p << ")=" << j;
  }
}

void BoundBattery(Outcome& o) {
  const std::string cmd = std::string(ZSLAB_CLI) + " verify-paper > /dev/null";
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  o.Require(code == 0, "exit " + std::to_string(code));
  o.note << " exit " << code;
}

void PartitionChecks(Outcome& o) {
  std::mt19937_64 rng(1313);
  const ElementarySFn s = [](int64_t p, int n) {
    return std::pow(static_cast<double>(p), n) * static_cast<double>(p - 1) + 1;
  };
  auto random_partition = [&rng](int max_len, int max_part) {
    std::vector<int> parts;
    const int len = 1 + static_cast<int>(rng() % max_len);
    int cap = max_part;
    for (int i = 0; i < len; ++i) {
      const int part = 1 + static_cast<int>(rng() % cap);
      parts.push_back(part);
      cap = part;
    }
    return Partition(parts);
  };
  for (int i = 0; i < 200; ++i) {
    const int64_t primes[] = {2, 3, 5, 7};
    const int64_t p = primes[rng() % 4];
    const auto b = SUpperPGroup(p, random_partition(4, 4), s);
    o.Require(b.refined <= b.simple + 1e-9, "dominance");
  }
  for (int i = 0; i < 1000; ++i) {
    const Partition a = random_partition(8, 8);
    o.Require(ConjugatePartition(ConjugatePartition(a)) == a, "involution");
  }
  o.note << " 200 shapes, 1000 partitions";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> checks{
      {"cyclic s(Z/k) = 2k-1, k = 2..7", CyclicEgz},
      {"s(F3^2) = 9", ReiherCase},
      {"s(F2^n) = 2^n+1 for n <= 4, s(Z4) = 7", TwoGroups},
      {"exact r values with naive confirmation", ProgressionFree},
      {"g(F3^n) = r(F3^n) + 1, n = 1..3", TernaryIdentity},
      {"g and s against 2p r with exact sides", FieldInequalities},
      {"exact hyperplane averages", ExactExpectation},
      {"extractor on extremal sets", ExtractorGuarantee},
      {"centered-AP zero sums", CenteredApBattery},
      {"constructive solver at required length", ConstructiveSolver},
      {"J(p) values", JValues},
      {"bound battery over orders <= 36", BoundBattery},
      {"p-group bound dominance and partition involution", PartitionChecks},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : checks) {
    Outcome o;
    const auto start = Clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.Require(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    char head[32];
    std::snprintf(head, sizeof(head), "%02d", ++index);
    std::printf("%s %s  %s (%.1fs)%s\n", o.pass ? "PASS" : "FAIL", head,
                name.c_str(), Seconds(start), o.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu passed\n", static_cast<int>(checks.size()) - failed,
              checks.size());
  return failed == 0 ? 0 : 1;
}
