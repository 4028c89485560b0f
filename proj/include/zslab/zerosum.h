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

// Zero-sum subsequences and exact Erdos-Ginzburg-Ziv constants.
//
// s(G): smallest s such that every length-s sequence over G has a zero-sum
//       subsequence of length exp(G).
// g(G): smallest a such that every a-subset of G contains exp(G) distinct
//       elements summing to zero; |G| + 1 when no such subset exists at all.

#ifndef ZSLAB_ZEROSUM_H_
#define ZSLAB_ZEROSUM_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "zslab/group.h"

namespace zslab {

struct GSequence {
  AbelianGroup group;
  std::vector<GroupElement> items;

  GSequence() = default;
  // Throws kInvalidElement if an item does not belong to the group.
  GSequence(AbelianGroup g, std::vector<GroupElement> elems);

  int64_t size() const { return static_cast<int64_t>(items.size()); }
};

enum class WitnessKind { kZeroSumSubsequence, kDistinctZeroSumSet };

struct Witness {
  WitnessKind kind = WitnessKind::kZeroSumSubsequence;
  // Positions in the sequence, or in PointSet::points() for set witnesses.
  std::vector<int64_t> indices;
  std::vector<GroupElement> elements;

  int64_t length() const { return static_cast<int64_t>(indices.size()); }
};

// True iff the witness picks distinct in-range positions whose elements
// match, sum to zero and (when given) number exactly `m`.
bool VerifyWitness(const GSequence& seq, const Witness& w,
                   std::optional<int64_t> m = std::nullopt);
// Set form: additionally requires pairwise distinct elements.
bool VerifyWitness(const PointSet& set, const Witness& w,
                   std::optional<int64_t> m = std::nullopt);

// Exact search for m items summing to zero. Processes prefixes left to right
// and stops at the shortest prefix that admits a solution, so the witness has
// the smallest possible last index. Throws kInvalidInput unless
// 1 <= m <= |seq|.
std::optional<Witness> FindZeroSumSubsequence(const GSequence& seq, int64_t m);

// m pairwise distinct members of `set` summing to zero.
std::optional<Witness> FindDistinctZeroSum(const PointSet& set, int64_t m);

// Node budget from ZSLAB_BUDGET, else kDefaultNodeBudget.
inline constexpr uint64_t kDefaultNodeBudget = 20'000'000;
uint64_t DefaultNodeBudget();

struct SearchOptions {
  uint64_t node_budget = DefaultNodeBudget();
  // Assume the extremal object is normalized by a translation: for sequences
  // the zero element has the largest multiplicity, for sets zero is a
  // member. Valid because m * t = 0 for m = exp(G).
  bool translation_symmetry = false;
};

struct ExtremalCertificate {
  enum class Claim { kNoZeroSumSubsequence, kNoDistinctZeroSumSet };

  Claim claim = Claim::kNoZeroSumSubsequence;
  AbelianGroup group;
  // The sequence (kNoZeroSumSubsequence) or set members, in index order.
  std::vector<GroupElement> object;
  int64_t m = 0;
  bool exhaustive = false;
};

struct ExtremalResult {
  // s(G) or g(G) when exhaustive; otherwise a lower bound.
  int64_t value = 0;
  ExtremalCertificate certificate;
  bool exhaustive = false;
  uint64_t nodes = 0;
};

// Multiset DFS in canonical element order with multiplicity cap exp(G) - 1,
// incremental reachability tables for feasibility and a per-element
// capacity bound.
ExtremalResult SExact(const AbelianGroup& g, const SearchOptions& options = {});
// Same engine with multiplicity cap 1.
ExtremalResult GExact(const AbelianGroup& g, const SearchOptions& options = {});

// Re-checks the claim: the object is valid and admits no witness.
bool VerifyCertificate(const ExtremalCertificate& cert);

}  // namespace zslab

#endif  // ZSLAB_ZEROSUM_H_
