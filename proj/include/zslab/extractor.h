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

// Hyperplane extraction: from a set A in F_p^n (p odd, n >= 2), produce either
// p distinct elements of A summing to zero, or a hyperplane V and an AP-free
// B contained in A n V with |B| >= X1 - X2, where X1 = |A n V| and X2 counts
// the AP sets of A inside V.
//
// When no point of A is the middle of (p-1)/2 APs, A spans at most
// (p-3)/2 * |A| APs, and averaging over all hyperplanes gives
//   E[X1] = |A| / p,   E[X2] = T * (p^(n-1) - 1) / (p (p^n - 1)) < |A| / (2p),
// so the best hyperplane yields |B| > |A| / (2p).

#ifndef ZSLAB_EXTRACTOR_H_
#define ZSLAB_EXTRACTOR_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "zslab/apfree.h"
#include "zslab/group.h"
#include "zslab/hyperplane.h"
#include "zslab/zerosum.h"

namespace zslab {

using Rational = boost::rational<int64_t>;

struct HyperplaneScore {
  int64_t x1 = 0;
  int64_t x2 = 0;

  int64_t margin() const { return x1 - x2; }
};

HyperplaneScore ScoreHyperplane(const PointSet& a, const Hyperplane& v);

struct Deletion {
  ApTriple ap;
  GroupElement deleted;
};

struct ApFreePart {
  Hyperplane plane;
  PointSet b;
  std::vector<Deletion> deletions;
};

struct ExtractionOutcome {
  std::optional<Witness> zero_sum;
  std::optional<ApFreePart> apfree;
  // Set on the AP-free branch only.
  std::optional<HyperplaneScore> scores;
  // Hyperplanes scored (all of them, or the samples drawn).
  int64_t planes_scored = 0;
};

enum class ExtractionMode { kExhaustive, kRandomized };

struct ExtractionOptions {
  ExtractionMode mode = ExtractionMode::kExhaustive;
  uint64_t seed = 0;
  // 0 means 10 * p.
  int64_t samples = 0;
};

// Throws kInvalidInput unless A lives in F_p^n with p odd and n >= 2.
ExtractionOutcome ExtractApFree(const PointSet& a,
                                const ExtractionOptions& options = {});

// Deletes points of `slice` until no AP is left: each step removes the point
// lying in the most surviving AP sets, ties to the smaller index.
ApFreePart DeleteToApFree(const Hyperplane& v, const PointSet& slice);

struct Expectation {
  Rational mean_x1;
  Rational mean_x2;
};

// Closed-form hyperplane averages of X1 and X2.
Expectation ExpectationCheck(const PointSet& a);

struct InequalityRecord {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  bool lhs_exact = false;
  bool rhs_exact = false;
  bool strict = false;
  bool holds = false;
  std::string note;
};

// g(F_p^n) <= 2p * r(F_p^{n-1}), both sides computed by exact search where
// the budget allows. The note reads "checked against bounds only" when
// either side fell back to a bound.
InequalityRecord GBoundViaExtraction(int64_t p, int n,
                                     const SearchOptions& options = {});

}  // namespace zslab

#endif  // ZSLAB_EXTRACTOR_H_
