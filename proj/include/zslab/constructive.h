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

// Constructive zero-sum finding over arbitrary finite abelian groups.
//
// Given H <= G with exp(G) = exp(H) exp(G/H), a sequence of length
//   exp(G/H) (S(H) - 1) + S(G/H)
// always has a zero-sum subsequence of length exp(G): repeatedly take
// exp(G/H) terms summing to zero in G/H (each block sums into H) until S(H)
// disjoint blocks are collected, solve the block sums inside H, and return
// the union of the chosen blocks. The solver applies this with H the
// largest-prime Sylow component and, inside a p-group, with H = pG, bottoming
// out at elementary abelian groups where an exact DP search is used.

#ifndef ZSLAB_CONSTRUCTIVE_H_
#define ZSLAB_CONSTRUCTIVE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zslab/group.h"
#include "zslab/zerosum.h"

namespace zslab {

// Upper bound on s(F_p^n); only ever called on elementary abelian groups.
using SOracle = std::function<int64_t(const AbelianGroup&)>;

// Closed-form EGZ/Reiher/Harborth values, else a completed s search.
// Throws kInvalidInput when neither is available.
SOracle ExactSOracle(const SearchOptions& options = {});
// Exact where possible, otherwise the rounded-up bound-engine value.
SOracle DefaultSOracle(const SearchOptions& options = {});

// Input length that guarantees SolveGeneral succeeds through the
// reductions.
int64_t RequiredLength(const AbelianGroup& g, const SOracle& oracle);

struct ReductionTrace {
  enum class StepKind { kBaseCase, kPGroupStep, kSylowStep, kDirectSearch };

  StepKind kind = StepKind::kBaseCase;
  AbelianGroup group;
  // Quotient steps: blocks of this step's sequence, in extraction order.
  std::vector<std::vector<int64_t>> blocks;
  // One per block, solving the projected remainder at that round.
  std::vector<ReductionTrace> block_traces;
  // Zero or one entry: the solve of the block sums inside H.
  std::vector<ReductionTrace> subgroup_trace;
  // Chosen positions in this step's sequence.
  std::vector<int64_t> selected;
};

const char* StepKindName(ReductionTrace::StepKind kind);

enum class SolveStatus { kFound, kProvenAbsent, kBudgetExhausted };

struct SolveResult {
  SolveStatus status = SolveStatus::kBudgetExhausted;
  std::optional<Witness> witness;
  ReductionTrace trace;
};

using SubSolver = std::function<SolveResult(const GSequence&)>;

// Elementary abelian base case. Throws kInternal if the oracle promised a
// solution that the exact search does not find.
SolveResult SolveBase(const GSequence& seq, const SOracle& oracle);

// One quotient reduction. Throws kSequenceTooShort below
// exp(G/H) (S(H) - 1) + S(G/H), kInvalidInput if H is trivial.
SolveResult SolveViaQuotient(const GSequence& seq, const SubgroupQuotient& sq,
                             const SubSolver& solve_h,
                             const SubSolver& solve_q, const SOracle& oracle);

// Full recursion. Below RequiredLength it falls back to an exact DP over G;
// kProvenAbsent then certifies that the sequence itself has no zero-sum
// subsequence of length exp(G).
SolveResult SolveGeneral(const GSequence& seq, const SOracle& oracle);

// Re-derives the final index set from the trace, checking every block and
// leaf on the way. Returns nullopt on any inconsistency.
std::optional<std::vector<int64_t>> ReplayTrace(const GSequence& seq,
                                                const ReductionTrace& trace);

struct LiftResult {
  // p copies of one element, when some element occurs p times.
  std::optional<Witness> witness;
  // Otherwise occurrence j of a vector gets extra coordinate j.
  std::optional<PointSet> lifted;
};

// Throws kInvalidInput unless the sequence lives in F_p^n.
LiftResult LiftSequence(const GSequence& seq);

}  // namespace zslab

#endif  // ZSLAB_CONSTRUCTIVE_H_
