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

// Bound engine for s(G), g(G) and r(F_p^n).
//
// Every evaluator takes its r- and s-values from a policy object that uses
// an exact value when one is known (closed formula or completed search) and
// a proven upper bound otherwise, and records which one it used.

#ifndef ZSLAB_BOUNDS_H_
#define ZSLAB_BOUNDS_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zslab/group.h"
#include "zslab/zerosum.h"

namespace zslab {

// J(p) = min_{0<t<1} (1 + t + ... + t^{p-1}) / t^{(p-1)/3} / p, by golden
// section search on [1e-9, 1 - 1e-9]. Throws kInvalidInput for p = 2 or a
// non-prime, kInternal if the result leaves [0.8414, 0.9184].
double JConstant(int64_t p, double tol = 1e-12);

// (J(p) p)^n for odd p, 2^n for p = 2, 1 for n = 0.
double RUpper(int64_t p, int n);

struct RValue {
  double value = 0;
  bool exact = false;
  std::string source;
};

// r(F_p^n): exact for p = 2, n = 0 and completed searches with
// p^n <= max_exact_order; (J(p) p)^n otherwise. Results are cached, so an
// instance must not be shared between threads.
class RPolicy {
 public:
  explicit RPolicy(SearchOptions options = {}, int64_t max_exact_order = 27)
      : options_(options), max_exact_order_(max_exact_order) {}

  RValue Evaluate(int64_t p, int n);

 private:
  SearchOptions options_;
  int64_t max_exact_order_;
  std::map<std::pair<int64_t, int>, RValue> cache_;
};

struct SValue {
  double value = 0;
  bool exact = false;
  std::string source;
};

// Exact-else-bound values of s(G).
//   exact: EGZ 2k-1 (cyclic), Reiher 4k-3 ((Z/k)^2), Harborth
//          (2^m-1)2^n+1 ((Z/2^m)^n), or a completed s search for
//          |G| <= max_exact_order;
//   bound: 2p r(F_p^n) for F_p^n, the conjugate-partition chain for
//          p-groups, the Sylow chain for everything else.
class SPolicy {
 public:
  explicit SPolicy(SearchOptions options = {}, int64_t max_exact_order = 27,
                   int64_t r_max_exact_order = 27)
      : options_(options),
        max_exact_order_(max_exact_order),
        r_(options, r_max_exact_order) {}

  SValue Evaluate(const AbelianGroup& g);
  SValue Elementary(int64_t p, int n);
  RPolicy& r_policy() { return r_; }

 private:
  SearchOptions options_;
  int64_t max_exact_order_;
  RPolicy r_;
  std::map<AbelianGroup, SValue> cache_;
};

// Known closed-form value of s(G), if G belongs to one of the families
// above.
std::optional<SValue> KnownSValue(const AbelianGroup& g);

// Parts a_1 >= ... >= a_n >= 1.
class Partition {
 public:
  // Throws kInvalidInput unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// b_j = #{i : a_i >= j} for j = 1..a_1.
Partition ConjugatePartition(const Partition& a);

using ElementarySFn = std::function<double(int64_t p, int n)>;
using GroupSFn = std::function<double(const AbelianGroup&)>;

struct PGroupBound {
  // (p^{a_1} - 1)/(p - 1) * S(F_p^n).
  double simple = 0;
  // sum_j p^{j-1} S(F_p^{b_j}), b the conjugate partition of a.
  double refined = 0;
};

PGroupBound SUpperPGroup(const AbelianGroup& g, const ElementarySFn& s);
PGroupBound SUpperPGroup(int64_t p, const Partition& shape,
                         const ElementarySFn& s);

struct CompositeBound {
  // sum_i exp(G_1)...exp(G_{i-1}) s(G_i) with components in prime order.
  double exact_form = 0;
  // exp(G) * sum_i s(G_i) / exp(G_i).
  double relaxed = 0;
  // Minimum of the exact form over all component orders (m <= 4).
  double best_order = 0;
};

CompositeBound SUpperComposite(const AbelianGroup& g, const GroupSFn& s);

// Strict: s(G) < 3 exp(G) sum_i r(F_{p_i}^{n_i}).
double SUpperPrimeRSum(const AbelianGroup& g, RPolicy& r);
// The same bound for (Z/k)^n, checked against SUpperPrimeRSum.
double SUpperHomocyclic(int64_t k, int n, RPolicy& r);

struct ElementarySumBound {
  // Strict: exp(G) sum_i S(F_{p_i}^{n_i}) / (p_i - 1).
  double value = 0;
  // Set when a p = 2 component contributes s(F_2^n) / 1 directly.
  bool uses_p2_path = false;
};
ElementarySumBound SUpperElementarySum(const AbelianGroup& g, SPolicy& s);

struct FieldBounds {
  // g(F_p^n) <= 2p r(F_p^{n-1}); absent for n = 1.
  std::optional<double> g_bound;
  // s(F_p^n) <= 2p r(F_p^n).
  double s_bound = 0;
};
// Throws kInvalidInput for p = 2 or n < 1.
FieldBounds ExtractionAndLiftBounds(int64_t p, int n, RPolicy& r);

enum class BoundKind { kLower, kUpper, kExact };
const char* BoundKindName(BoundKind kind);

struct BoundEntry {
  // "s", "g" or "r(F3^2)"-style.
  std::string quantity;
  BoundKind kind = BoundKind::kUpper;
  double value = 0;
  bool strict = false;
  std::string source;
  std::string assumptions;
  // False for values taken from a search that ran out of budget.
  bool exhaustive = true;
};

// Homocyclic (Z/k)^n form of G, if any.
std::optional<std::pair<int64_t, int>> HomocyclicForm(const AbelianGroup& g);

// Closed-form s entries: EGZ, Reiher and Harborth exact values; Harborth
// and Elsholtz lower bounds; Harborth and Gao-Yang upper bounds.
std::vector<BoundEntry> ClassicalBounds(const AbelianGroup& g);

struct ReportOptions {
  SearchOptions search;
  // Largest |G| for which s and g are searched exactly.
  int64_t max_exact_order = 36;
  // Largest p^n for which r(F_p^n) is searched exactly.
  int64_t r_max_exact_order = 27;
};

struct BoundReport {
  AbelianGroup group;
  std::vector<BoundEntry> entries;
  bool consistent = true;
  std::vector<std::string> violations;
};

BoundReport BuildBoundsReport(const AbelianGroup& g,
                              const ReportOptions& options = {});

// Recomputes report.consistent / report.violations from the entries: exact
// values agree, every lower <= exact <= upper, strict uppers strictly, and
// every lower <= every upper.
void CheckConsistency(BoundReport& report);

}  // namespace zslab

#endif  // ZSLAB_BOUNDS_H_
