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

#include "zslab/constructive.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <set>

#include "zslab/bounds.h"
#include "zslab/error.h"

namespace zslab {

const char* StepKindName(ReductionTrace::StepKind kind) {
  switch (kind) {
    case ReductionTrace::StepKind::kBaseCase:
      return "base-case";
    case ReductionTrace::StepKind::kPGroupStep:
      return "pgroup-step";
    case ReductionTrace::StepKind::kSylowStep:
      return "sylow-step";
    case ReductionTrace::StepKind::kDirectSearch:
      return "direct-search";
  }
  return "unknown";
}

SOracle ExactSOracle(const SearchOptions& options) {
  auto cache = std::make_shared<std::map<AbelianGroup, int64_t>>();
  return [cache, options](const AbelianGroup& g) -> int64_t {
    if (auto it = cache->find(g); it != cache->end()) return it->second;
    int64_t value = 0;
    if (auto known = KnownSValue(g)) {
      value = static_cast<int64_t>(known->value);
    } else {
      SearchOptions opts = options;
      opts.translation_symmetry = true;
      const auto r = SExact(g, opts);
      if (!r.exhaustive) {
        throw Error(ErrorCode::kInvalidInput,
                    "no exact s value available for " + g.ToString());
      }
      value = r.value;
    }
    (*cache)[g] = value;
    return value;
  };
}

SOracle DefaultSOracle(const SearchOptions& options) {
  auto policy = std::make_shared<SPolicy>(options);
  return [policy](const AbelianGroup& g) -> int64_t {
    return static_cast<int64_t>(std::ceil(policy->Evaluate(g).value - 1e-9));
  };
}

int64_t RequiredLength(const AbelianGroup& g, const SOracle& oracle) {
  if (g.IsElementary()) return oracle(g);
  const SubgroupQuotient sq = g.IsPGroup() ? SubgroupQuotient::PMultiples(g)
                                           : SubgroupQuotient::SylowFactor(g);
  const int64_t lh = RequiredLength(*sq.subgroup(), oracle);
  const int64_t lq = RequiredLength(sq.quotient(), oracle);
  return sq.quotient().exponent() * (lh - 1) + lq;
}

namespace {

Witness MakeWitness(const GSequence& seq, std::vector<int64_t> indices) {
  Witness w;
  w.kind = WitnessKind::kZeroSumSubsequence;
  w.indices = std::move(indices);
  for (int64_t i : w.indices) w.elements.push_back(seq.items[i]);
  return w;
}

// Exact DP over the whole group is allowed up to this many table cells.
constexpr double kMaxDirectCells = 2e8;

}  // namespace

SolveResult SolveBase(const GSequence& seq, const SOracle& oracle) {
  const AbelianGroup& g = seq.group;
  if (!g.IsElementary()) {
    throw Error(ErrorCode::kInvalidInput,
                "base case needs an elementary abelian group");
  }
  if (seq.size() < oracle(g)) {
    throw Error(ErrorCode::kSequenceTooShort,
                "base case over " + g.ToString() + " needs " +
                    std::to_string(oracle(g)) + " terms");
  }
  auto w = FindZeroSumSubsequence(seq, g.exponent());
  if (!w) {
    throw Error(ErrorCode::kInternal,
                "no zero-sum subsequence in a sequence of guaranteed length; "
                "the s oracle for " + g.ToString() + " is wrong");
  }
  SolveResult result;
  result.status = SolveStatus::kFound;
  result.trace.kind = ReductionTrace::StepKind::kBaseCase;
  result.trace.group = g;
  result.trace.selected = w->indices;
  result.witness = std::move(w);
  return result;
}

SolveResult SolveViaQuotient(const GSequence& seq, const SubgroupQuotient& sq,
                             const SubSolver& solve_h,
                             const SubSolver& solve_q, const SOracle& oracle) {
  if (!sq.subgroup()) {
    throw Error(ErrorCode::kInvalidInput, "quotient step needs non-trivial H");
  }
  const AbelianGroup& h = *sq.subgroup();
  const AbelianGroup& q = sq.quotient();
  const int64_t blocks_needed = RequiredLength(h, oracle);
  const int64_t need = q.exponent() * (blocks_needed - 1) +
                       RequiredLength(q, oracle);
  if (seq.size() < need) {
    throw Error(ErrorCode::kSequenceTooShort,
                "quotient step over " + seq.group.ToString() + " needs " +
                    std::to_string(need) + " terms, got " +
                    std::to_string(seq.size()));
  }

  SolveResult result;
  ReductionTrace& trace = result.trace;
  trace.kind = sq.kind() == SubgroupQuotient::Kind::kPMultiples
                   ? ReductionTrace::StepKind::kPGroupStep
                   : ReductionTrace::StepKind::kSylowStep;
  trace.group = seq.group;

  std::vector<int64_t> remaining(seq.size());
  for (int64_t i = 0; i < seq.size(); ++i) remaining[i] = i;
  GSequence block_sums;
  block_sums.group = h;
  for (int64_t round = 0; round < blocks_needed; ++round) {
    GSequence projected;
    projected.group = q;
    for (int64_t i : remaining) projected.items.push_back(sq.Project(seq.items[i]));
    SolveResult sub = solve_q(projected);
    if (sub.status != SolveStatus::kFound) {
      throw Error(ErrorCode::kInternal,
                  "quotient solve failed on a sequence of guaranteed length");
    }
    std::vector<int64_t> block;
    for (int64_t j : sub.trace.selected) block.push_back(remaining[j]);
    GroupElement sum = seq.group.Zero();
    for (int64_t i : block) sum = seq.group.Add(sum, seq.items[i]);
    block_sums.items.push_back(sq.Preimage(sum));
    std::vector<int64_t> rest;
    std::set_difference(remaining.begin(), remaining.end(), block.begin(),
                        block.end(), std::back_inserter(rest));
    remaining = std::move(rest);
    trace.blocks.push_back(std::move(block));
    trace.block_traces.push_back(std::move(sub.trace));
  }

  SolveResult top = solve_h(block_sums);
  if (top.status != SolveStatus::kFound) {
    throw Error(ErrorCode::kInternal,
                "subgroup solve failed on a sequence of guaranteed length");
  }
  std::vector<int64_t> selected;
  for (int64_t b : top.trace.selected) {
    const auto& block = trace.blocks[b];
    selected.insert(selected.end(), block.begin(), block.end());
  }
  std::sort(selected.begin(), selected.end());
  trace.subgroup_trace.push_back(std::move(top.trace));
  trace.selected = selected;

  result.witness = MakeWitness(seq, std::move(selected));
  if (!VerifyWitness(seq, *result.witness, seq.group.exponent())) {
    throw Error(ErrorCode::kInternal, "composed witness failed to verify");
  }
  result.status = SolveStatus::kFound;
  return result;
}

SolveResult SolveGeneral(const GSequence& seq, const SOracle& oracle) {
  const AbelianGroup& g = seq.group;
  const int64_t m = g.exponent();
  if (seq.size() >= RequiredLength(g, oracle)) {
    if (g.IsElementary()) return SolveBase(seq, oracle);
    const SubSolver recurse = [&oracle](const GSequence& s) {
      return SolveGeneral(s, oracle);
    };
    const SubgroupQuotient sq = g.IsPGroup()
                                    ? SubgroupQuotient::PMultiples(g)
                                    : SubgroupQuotient::SylowFactor(g);
    return SolveViaQuotient(seq, sq, recurse, recurse, oracle);
  }

  SolveResult result;
  result.trace.kind = ReductionTrace::StepKind::kDirectSearch;
  result.trace.group = g;
  if (seq.size() < m) {
    result.status = SolveStatus::kProvenAbsent;
    return result;
  }
  const double cells = static_cast<double>(seq.size() + 1) * (m + 1) *
                       static_cast<double>(g.order());
  if (cells > kMaxDirectCells) {
    result.status = SolveStatus::kBudgetExhausted;
    return result;
  }
  auto w = FindZeroSumSubsequence(seq, m);
  if (!w) {
    result.status = SolveStatus::kProvenAbsent;
    return result;
  }
  result.status = SolveStatus::kFound;
  result.trace.selected = w->indices;
  result.witness = std::move(w);
  return result;
}

std::optional<std::vector<int64_t>> ReplayTrace(const GSequence& seq,
                                                const ReductionTrace& trace) {
  const AbelianGroup& g = seq.group;
  if (trace.group != g) return std::nullopt;
  const int64_t m = g.exponent();
  auto verified = [&](const std::vector<int64_t>& sel)
      -> std::optional<std::vector<int64_t>> {
    if (!VerifyWitness(seq, MakeWitness(seq, sel), m)) return std::nullopt;
    return sel;
  };
  for (int64_t i : trace.selected) {
    if (i < 0 || i >= seq.size()) return std::nullopt;
  }

  using Kind = ReductionTrace::StepKind;
  if (trace.kind == Kind::kBaseCase || trace.kind == Kind::kDirectSearch) {
    if (trace.kind == Kind::kBaseCase && !g.IsElementary()) return std::nullopt;
    return verified(trace.selected);
  }

  const bool pgroup = trace.kind == Kind::kPGroupStep;
  if (pgroup != g.IsPGroup() || g.IsElementary()) return std::nullopt;
  const SubgroupQuotient sq = pgroup ? SubgroupQuotient::PMultiples(g)
                                     : SubgroupQuotient::SylowFactor(g);
  if (trace.blocks.size() != trace.block_traces.size() ||
      trace.subgroup_trace.size() != 1) {
    return std::nullopt;
  }
  const AbelianGroup& q = sq.quotient();
  std::vector<int64_t> remaining(seq.size());
  for (int64_t i = 0; i < seq.size(); ++i) remaining[i] = i;
  GSequence block_sums;
  block_sums.group = *sq.subgroup();
  for (size_t b = 0; b < trace.blocks.size(); ++b) {
    GSequence projected;
    projected.group = q;
    for (int64_t i : remaining) projected.items.push_back(sq.Project(seq.items[i]));
    const auto sub = ReplayTrace(projected, trace.block_traces[b]);
    if (!sub) return std::nullopt;
    std::vector<int64_t> block;
    for (int64_t j : *sub) block.push_back(remaining[j]);
    if (block != trace.blocks[b] ||
        static_cast<int64_t>(block.size()) != q.exponent()) {
      return std::nullopt;
    }
    GroupElement sum = g.Zero();
    for (int64_t i : block) sum = g.Add(sum, seq.items[i]);
    if (!sq.InSubgroup(sum)) return std::nullopt;
    block_sums.items.push_back(sq.Preimage(sum));
    std::vector<int64_t> rest;
    std::set_difference(remaining.begin(), remaining.end(), block.begin(),
                        block.end(), std::back_inserter(rest));
    remaining = std::move(rest);
  }
  const auto top = ReplayTrace(block_sums, trace.subgroup_trace.front());
  if (!top) return std::nullopt;
  std::vector<int64_t> selected;
  for (int64_t b : *top) {
    selected.insert(selected.end(), trace.blocks[b].begin(),
                    trace.blocks[b].end());
  }
  std::sort(selected.begin(), selected.end());
  if (selected != trace.selected) return std::nullopt;
  return verified(selected);
}

LiftResult LiftSequence(const GSequence& seq) {
  const AbelianGroup& g = seq.group;
  if (!g.IsElementary()) {
    throw Error(ErrorCode::kInvalidInput,
                "coordinate lift needs a sequence over F_p^n");
  }
  const int64_t p = g.prime();
  LiftResult result;
  std::map<GroupElement, std::vector<int64_t>> seen;
  for (int64_t i = 0; i < seq.size(); ++i) {
    auto& occ = seen[seq.items[i]];
    occ.push_back(i);
    if (static_cast<int64_t>(occ.size()) == p) {
      result.witness = MakeWitness(seq, occ);
      return result;
    }
  }
  std::map<GroupElement, int64_t> next;
  std::vector<GroupElement> lifted;
  lifted.reserve(seq.items.size());
  for (const auto& x : seq.items) {
    GroupElement y = x;
    y.coords.push_back(next[x]++);
    lifted.push_back(std::move(y));
  }
  result.lifted = PointSet(AbelianGroup::Elementary(p, g.rank() + 1),
                           std::move(lifted));
  return result;
}

}  // namespace zslab
