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

#include "zslab/extractor.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "zslab/bounds.h"
#include "zslab/error.h"

namespace zslab {

namespace {

void CheckOddField(const AbelianGroup& g) {
  if (!g.IsElementary() || g.prime() == 2 || g.rank() < 2) {
    throw Error(ErrorCode::kInvalidInput,
                "extraction needs F_p^n with p odd and n >= 2, got " +
                    g.ToString());
  }
}

PointSet Slice(const PointSet& a, const Hyperplane& v) {
  std::vector<GroupElement> on;
  for (const auto& x : a.points()) {
    if (v.Contains(x)) on.push_back(x);
  }
  return PointSet(a.group(), std::move(on));
}

}  // namespace

HyperplaneScore ScoreHyperplane(const PointSet& a, const Hyperplane& v) {
  const PointSet slice = Slice(a, v);
  return HyperplaneScore{slice.size(), CountApSets(slice)};
}

ApFreePart DeleteToApFree(const Hyperplane& v, const PointSet& slice) {
  const auto& g = slice.group();
  const auto aps = EnumerateApSets(slice);
  std::vector<bool> alive(aps.size(), true);
  std::set<int64_t> removed;
  ApFreePart part{v, PointSet(g), {}};
  size_t remaining = aps.size();
  while (remaining > 0) {
    std::map<int64_t, int64_t> coverage;
    for (size_t i = 0; i < aps.size(); ++i) {
      if (!alive[i]) continue;
      for (int64_t m : aps[i].members) ++coverage[m];
    }
    int64_t victim = -1;
    int64_t most = 0;
    for (const auto& [idx, cnt] : coverage) {
      if (cnt > most) {
        most = cnt;
        victim = idx;
      }
    }
    removed.insert(victim);
    const GroupElement gone = g.ElementAt(victim);
    for (size_t i = 0; i < aps.size(); ++i) {
      if (!alive[i]) continue;
      const auto& m = aps[i].members;
      if (std::find(m.begin(), m.end(), victim) == m.end()) continue;
      alive[i] = false;
      --remaining;
      const int64_t mid = aps[i].middles.front();
      std::vector<int64_t> ends;
      for (int64_t e : m) {
        if (e != mid) ends.push_back(e);
      }
      part.deletions.push_back(Deletion{
          ApTriple{g.ElementAt(ends[0]), g.ElementAt(mid), g.ElementAt(ends[1])},
          gone});
    }
  }
  std::vector<GroupElement> kept;
  for (size_t i = 0; i < slice.indices().size(); ++i) {
    if (!removed.contains(slice.indices()[i])) kept.push_back(slice.points()[i]);
  }
  part.b = PointSet(g, std::move(kept));
  return part;
}

ExtractionOutcome ExtractApFree(const PointSet& a,
                                const ExtractionOptions& options) {
  const auto& g = a.group();
  CheckOddField(g);
  const int64_t p = g.prime();
  ExtractionOutcome outcome;

  for (const auto& x : a.points()) {
    if (auto w = ZeroSumFromCenteredAps(a, x)) {
      outcome.zero_sum = std::move(w);
      return outcome;
    }
  }

  const auto planes = EnumerateHyperplanes(p, g.rank());
  std::vector<size_t> candidates;
  if (options.mode == ExtractionMode::kExhaustive) {
    candidates.resize(planes.size());
    for (size_t i = 0; i < planes.size(); ++i) candidates[i] = i;
  } else {
    const int64_t samples = options.samples > 0 ? options.samples : 10 * p;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<size_t> pick(0, planes.size() - 1);
    for (int64_t i = 0; i < samples; ++i) candidates.push_back(pick(rng));
  }

  size_t best = candidates.front();
  HyperplaneScore best_score = ScoreHyperplane(a, planes[best]);
  for (size_t k = 1; k < candidates.size(); ++k) {
    const HyperplaneScore s = ScoreHyperplane(a, planes[candidates[k]]);
    if (s.margin() > best_score.margin()) {
      best = candidates[k];
      best_score = s;
    }
  }
  outcome.planes_scored = static_cast<int64_t>(candidates.size());
  outcome.scores = best_score;
  outcome.apfree = DeleteToApFree(planes[best], Slice(a, planes[best]));
  return outcome;
}

Expectation ExpectationCheck(const PointSet& a) {
  const auto& g = a.group();
  if (!g.IsElementary() || g.rank() < 2) {
    throw Error(ErrorCode::kInvalidInput,
                "expectation check needs F_p^n with n >= 2");
  }
  const int64_t p = g.prime();
  const int n = g.rank();
  const int64_t t = CountApSets(a);
  Expectation e;
  e.mean_x1 = Rational(a.size(), p);
  e.mean_x2 = Rational(t) * Rational(IntPow(p, n - 1) - 1, p * (IntPow(p, n) - 1));
  return e;
}

InequalityRecord GBoundViaExtraction(int64_t p, int n,
                                     const SearchOptions& options) {
  if (!IsPrime(p) || p == 2 || n < 2) {
    throw Error(ErrorCode::kInvalidInput,
                "g bound via extraction needs p odd and n >= 2");
  }
  InequalityRecord rec;
  rec.name = "g(F_" + std::to_string(p) + "^" + std::to_string(n) +
             ") <= 2p r(F_" + std::to_string(p) + "^" + std::to_string(n - 1) +
             ")";
  const auto g = GExact(AbelianGroup::Elementary(p, n), options);
  rec.lhs = static_cast<double>(g.value);
  rec.lhs_exact = g.exhaustive;

  const RValue r = RPolicy(options).Evaluate(p, n - 1);
  rec.rhs = 2.0 * static_cast<double>(p) * r.value;
  rec.rhs_exact = r.exact;
  rec.holds = rec.lhs <= rec.rhs;
  if (!rec.lhs_exact || !rec.rhs_exact) rec.note = "checked against bounds only";
  return rec;
}

}  // namespace zslab
