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

// Batch consistency runs over families of small groups.

#ifndef ZSLAB_BATTERY_H_
#define ZSLAB_BATTERY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "zslab/bounds.h"
#include "zslab/group.h"

namespace zslab {

// Every abelian group of order 2..max_order, one per isomorphism class,
// sorted by literal.
std::vector<AbelianGroup> AbelianGroupsUpToOrder(int64_t max_order);

// (Z/k)^n for 2 <= k <= kmax, 1 <= n <= nmax with order <= max_order,
// sorted by literal.
std::vector<AbelianGroup> HomocyclicGroups(int64_t kmax, int nmax,
                                           int64_t max_order);

enum class Family { kAll, kHomocyclic };

struct BatteryOptions {
  Family family = Family::kAll;
  int64_t kmax = 6;
  int nmax = 3;
  int64_t max_order = 36;
  ReportOptions report;
};

struct BatteryCheck {
  std::string group;
  std::string name;
  bool passed = true;
  std::string detail;
};

struct BatteryResult {
  std::vector<BoundReport> reports;
  std::vector<BatteryCheck> checks;
  bool ok = true;
};

BatteryResult RunBattery(const BatteryOptions& options);

}  // namespace zslab

#endif  // ZSLAB_BATTERY_H_
