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

// Three-term arithmetic progressions: distinct x, y, z with x + z = 2y.
//
// An AP is identified internally by its middle term and the unordered pair of
// endpoints. In F_3^n every point of an AP set is a valid middle, so
// set-level enumeration merges those triples and keeps all their middles.

#ifndef ZSLAB_APFREE_H_
#define ZSLAB_APFREE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zslab/group.h"
#include "zslab/hyperplane.h"
#include "zslab/zerosum.h"

namespace zslab {

// y is the middle; x precedes z in index order.
struct ApTriple {
  GroupElement x;
  GroupElement y;
  GroupElement z;

  bool operator==(const ApTriple&) const = default;
};

struct ApSet {
  // Member indices, ascending.
  std::array<int64_t, 3> members{};
  // Indices of the members that are valid middle terms.
  std::vector<int64_t> middles;
};

// One entry per (AP set, valid middle).
std::vector<ApTriple> EnumerateAps(const PointSet& a);
// One entry per AP set, sorted by members.
std::vector<ApSet> EnumerateApSets(const PointSet& a);
int64_t CountApSets(const PointSet& a);
bool IsApFree(const PointSet& a);

// Unordered pairs {u, v} of A \ {x} with u + v = 2x and u != v, each pair
// ordered by index and the list sorted lexicographically. Throws
// kInvalidInput when x is not in A.
std::vector<std::pair<GroupElement, GroupElement>> ApsCenteredAt(
    const PointSet& a, const GroupElement& x);

// Over F_p^n with p odd: if x is the middle of at least (p-1)/2 APs in A,
// x together with the endpoints of the first (p-1)/2 of them are p distinct
// elements summing to p*x = 0. The witness lists x first.
std::optional<Witness> ZeroSumFromCenteredAps(const PointSet& a,
                                              const GroupElement& x);

struct RExactResult {
  int64_t value = 0;
  PointSet witness;
  bool exhaustive = false;
  uint64_t nodes = 0;
};

// Largest AP-free subset of F_p^n by branch and bound over the AP
// hypergraph. p = 2 is answered directly (F_2^n has no APs).
RExactResult RExact(int64_t p, int n, const SearchOptions& options = {});

// Cartesian product of AP-free sets; throws kInvalidInput unless both inputs
// are AP-free subsets of elementary abelian groups over the same prime.
PointSet ProductConstruction(const PointSet& a, const PointSet& b);

// Carries a subset of the hyperplane V to F_p^{n-1}: translate V through the
// point offset*e_j (j the pivot of the normal) and drop coordinate j. The map
// is an affine bijection V -> F_p^{n-1}, so it preserves APs.
PointSet HyperplaneTransfer(const Hyperplane& v, const PointSet& a);

}  // namespace zslab

#endif  // ZSLAB_APFREE_H_
