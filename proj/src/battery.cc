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

#include "zslab/battery.h"

#include <algorithm>
#include <functional>

#include "zslab/extractor.h"

namespace zslab {
namespace {

// Partitions of n into non-increasing parts.
void Partitions(int n, int max_part, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    Partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

void SortByLiteral(std::vector<AbelianGroup>& groups) {
  std::sort(groups.begin(), groups.end(),
            [](const AbelianGroup& a, const AbelianGroup& b) {
              return a.ToString() < b.ToString();
            });
}

}  // namespace

std::vector<AbelianGroup> AbelianGroupsUpToOrder(int64_t max_order) {
  std::vector<AbelianGroup> out;
  for (int64_t n = 2; n <= max_order; ++n) {
    // Cartesian product over primes of the partition choices.
    std::vector<std::vector<int64_t>> factor_lists{{}};
    for (const auto& [p, a] : Factorize(n)) {
      std::vector<std::vector<int>> parts;
      std::vector<int> cur;
      Partitions(a, a, cur, parts);
      std::vector<std::vector<int64_t>> next;
      for (const auto& base : factor_lists) {
        for (const auto& part : parts) {
          auto f = base;
          for (int e : part) f.push_back(IntPow(p, e));
          next.push_back(std::move(f));
        }
      }
      factor_lists = std::move(next);
    }
    for (const auto& f : factor_lists) {
      out.push_back(AbelianGroup::Canonicalize(f));
    }
  }
  SortByLiteral(out);
  return out;
}

std::vector<AbelianGroup> HomocyclicGroups(int64_t kmax, int nmax,
                                           int64_t max_order) {
  std::vector<AbelianGroup> out;
  for (int64_t k = 2; k <= kmax; ++k) {
    int64_t order = 1;
    for (int n = 1; n <= nmax; ++n) {
      order *= k;
      if (order > max_order) break;
      std::vector<int64_t> f(n, k);
      out.push_back(AbelianGroup::Canonicalize(f));
    }
  }
  SortByLiteral(out);
  return out;
}

BatteryResult RunBattery(const BatteryOptions& options) {
  BatteryResult result;
  const auto groups =
      options.family == Family::kAll
          ? AbelianGroupsUpToOrder(options.max_order)
          : HomocyclicGroups(options.kmax, options.nmax, options.max_order);
  auto check = [&result](std::string group, std::string name, bool passed,
                         std::string detail) {
    if (!passed) result.ok = false;
    result.checks.push_back(BatteryCheck{std::move(group), std::move(name),
                                         passed, std::move(detail)});
  };
  for (const auto& g : groups) {
    BoundReport report = BuildBoundsReport(g, options.report);
    std::string detail;
    for (const auto& v : report.violations) {
      if (!detail.empty()) detail += "; ";
      detail += v;
    }
    check(g.ToString(), "bounds-consistent", report.consistent, detail);

    if (g.IsElementary() && g.prime() != 2 && g.rank() >= 2 &&
        g.order() <= options.report.r_max_exact_order) {
      SearchOptions search = options.report.search;
      search.translation_symmetry = true;
      const auto rec = GBoundViaExtraction(g.prime(), g.rank(), search);
      check(g.ToString(), rec.name, rec.holds,
            std::to_string(rec.lhs) + " vs " + std::to_string(rec.rhs));
    }
    result.reports.push_back(std::move(report));
  }
  return result;
}

}  // namespace zslab
