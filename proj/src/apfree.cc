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

#include "zslab/apfree.h"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "zslab/error.h"

namespace zslab {

namespace {

// Index-level view of a point set used by the enumerators.
struct IndexedSet {
  explicit IndexedSet(const PointSet& a) : ig(a.group()), set(a) {
    for (int64_t i = 0; i < a.size(); ++i) position[a.indices()[i]] = i;
  }
  int64_t PositionOfIndex(int64_t idx) const {
    const auto it = position.find(idx);
    return it == position.end() ? -1 : it->second;
  }

  IndexedGroup ig;
  const PointSet& set;
  std::unordered_map<int64_t, int64_t> position;
};

// Calls visit(x, y, z) with member indices for every AP with middle y,
// x < z.
template <typename Visit>
void ForEachAp(const IndexedSet& s, Visit visit) {
  const auto& idx = s.set.indices();
  for (int64_t y : idx) {
    const int64_t twice = s.ig.Add(y, y);
    for (int64_t x : idx) {
      if (x == y) continue;
      const int64_t z = s.ig.Add(twice, s.ig.Neg(x));
      if (z <= x || s.PositionOfIndex(z) < 0) continue;
      visit(x, y, z);
    }
  }
}

}  // namespace

std::vector<ApTriple> EnumerateAps(const PointSet& a) {
  const IndexedSet s(a);
  const auto& g = a.group();
  std::vector<ApTriple> out;
  ForEachAp(s, [&](int64_t x, int64_t y, int64_t z) {
    out.push_back(ApTriple{g.ElementAt(x), g.ElementAt(y), g.ElementAt(z)});
  });
  return out;
}

std::vector<ApSet> EnumerateApSets(const PointSet& a) {
  const IndexedSet s(a);
  std::map<std::array<int64_t, 3>, std::vector<int64_t>> merged;
  ForEachAp(s, [&](int64_t x, int64_t y, int64_t z) {
    std::array<int64_t, 3> key{x, y, z};
    std::sort(key.begin(), key.end());
    merged[key].push_back(y);
  });
  std::vector<ApSet> out;
  out.reserve(merged.size());
  for (auto& [members, middles] : merged) {
    std::sort(middles.begin(), middles.end());
    out.push_back(ApSet{members, std::move(middles)});
  }
  return out;
}

int64_t CountApSets(const PointSet& a) {
  return static_cast<int64_t>(EnumerateApSets(a).size());
}

bool IsApFree(const PointSet& a) {
  const IndexedSet s(a);
  bool found = false;
  ForEachAp(s, [&](int64_t, int64_t, int64_t) { found = true; });
  return !found;
}

std::vector<std::pair<GroupElement, GroupElement>> ApsCenteredAt(
    const PointSet& a, const GroupElement& x) {
  if (!a.Contains(x)) {
    throw Error(ErrorCode::kInvalidInput,
                ToString(x) + " is not a member of the set");
  }
  const IndexedSet s(a);
  const auto& g = a.group();
  const int64_t xi = g.IndexOf(x);
  const int64_t twice = s.ig.Add(xi, xi);
  std::vector<std::pair<GroupElement, GroupElement>> out;
  for (int64_t u : a.indices()) {
    if (u == xi) continue;
    const int64_t v = s.ig.Add(twice, s.ig.Neg(u));
    if (v <= u || s.PositionOfIndex(v) < 0) continue;
    out.emplace_back(g.ElementAt(u), g.ElementAt(v));
  }
  return out;
}

std::optional<Witness> ZeroSumFromCenteredAps(const PointSet& a,
                                              const GroupElement& x) {
  const auto& g = a.group();
  const int64_t p = g.prime();
  if (!g.IsElementary() || p == 2) {
    throw Error(ErrorCode::kInvalidInput,
                "centered-AP construction needs F_p^n with p odd");
  }
  const auto pairs = ApsCenteredAt(a, x);
  const auto need = static_cast<size_t>((p - 1) / 2);
  if (pairs.size() < need) return std::nullopt;
  Witness w;
  w.kind = WitnessKind::kDistinctZeroSumSet;
  auto push = [&](const GroupElement& e) {
    w.indices.push_back(a.PositionOf(e));
    w.elements.push_back(e);
  };
  push(x);
  for (size_t i = 0; i < need; ++i) {
    push(pairs[i].first);
    push(pairs[i].second);
  }
  if (!VerifyWitness(a, w, p)) {
    throw Error(ErrorCode::kInternal, "centered-AP witness failed to verify");
  }
  return w;
}

namespace {

// Maximum independent set in the 3-uniform AP hypergraph of a group.
class ApFreeSearch {
 public:
  ApFreeSearch(const AbelianGroup& g, const SearchOptions& options)
      : n_(g.order()), options_(options), edges_(n_) {
    const PointSet all =
        PointSet::FromIndices(g, [&] {
          std::vector<int64_t> v(n_);
          for (int64_t i = 0; i < n_; ++i) v[i] = i;
          return v;
        }());
    for (const ApSet& ap : EnumerateApSets(all)) {
      const auto& m = ap.members;
      edges_[m[0]].push_back({m[1], m[2]});
      edges_[m[1]].push_back({m[0], m[2]});
      edges_[m[2]].push_back({m[0], m[1]});
    }
    order_.resize(n_);
    for (int64_t i = 0; i < n_; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](int64_t l, int64_t r) {
      return edges_[l].size() > edges_[r].size();
    });
    if (options_.translation_symmetry) {
      // Zero goes first and is forced in.
      std::stable_partition(order_.begin(), order_.end(),
                            [](int64_t v) { return v == 0; });
    }
  }

  std::vector<int64_t> Run() {
    std::vector<int8_t> status(n_, kFree);
    Dfs(0, 0, status);
    return best_;
  }

  bool exhaustive() const { return !aborted_; }
  uint64_t nodes() const { return nodes_; }

 private:
  static constexpr int8_t kFree = 0;
  static constexpr int8_t kChosen = 1;
  static constexpr int8_t kBlocked = 2;

  void Dfs(size_t pos, int64_t size, const std::vector<int8_t>& status) {
    if (aborted_) return;
    if (++nodes_ > options_.node_budget) {
      aborted_ = true;
      return;
    }
    if (size > static_cast<int64_t>(best_.size()) || !have_best_) {
      have_best_ = true;
      best_.clear();
      for (int64_t v = 0; v < n_; ++v) {
        if (status[v] == kChosen) best_.push_back(v);
      }
    }
    int64_t available = 0;
    size_t next = order_.size();
    for (size_t i = pos; i < order_.size(); ++i) {
      if (status[order_[i]] != kFree) continue;
      if (next == order_.size()) next = i;
      ++available;
    }
    if (next == order_.size()) return;
    if (size + available <= static_cast<int64_t>(best_.size())) return;

    const int64_t v = order_[next];
    std::vector<int8_t> with = status;
    with[v] = kChosen;
    for (const auto& [u, w] : edges_[v]) {
      if (with[u] == kChosen && with[w] == kFree) with[w] = kBlocked;
      if (with[w] == kChosen && with[u] == kFree) with[u] = kBlocked;
    }
    Dfs(next + 1, size + 1, with);
    if (options_.translation_symmetry && next == 0) return;
    std::vector<int8_t> without = status;
    without[v] = kBlocked;
    Dfs(next + 1, size, without);
  }

  int64_t n_;
  SearchOptions options_;
  std::vector<std::vector<std::pair<int64_t, int64_t>>> edges_;
  std::vector<int64_t> order_;
  std::vector<int64_t> best_;
  bool have_best_ = false;
  uint64_t nodes_ = 0;
  bool aborted_ = false;
};

constexpr int64_t kMaxApSearchOrder = 729;

}  // namespace

RExactResult RExact(int64_t p, int n, const SearchOptions& options) {
  const AbelianGroup g = AbelianGroup::Elementary(p, n);
  RExactResult result;
  if (p == 2) {
    std::vector<int64_t> all(g.order());
    for (int64_t i = 0; i < g.order(); ++i) all[i] = i;
    result.value = g.order();
    result.witness = PointSet::FromIndices(g, std::move(all));
    result.exhaustive = true;
    return result;
  }
  if (g.order() > kMaxApSearchOrder) {
    throw Error(ErrorCode::kInvalidInput,
                g.ToString() + " exceeds the exact-search size cap");
  }
  ApFreeSearch search(g, options);
  auto best = search.Run();
  result.value = static_cast<int64_t>(best.size());
  result.witness = PointSet::FromIndices(g, std::move(best));
  result.exhaustive = search.exhaustive();
  result.nodes = search.nodes();
  return result;
}

PointSet ProductConstruction(const PointSet& a, const PointSet& b) {
  const auto& ga = a.group();
  const auto& gb = b.group();
  if (!ga.IsElementary() || !gb.IsElementary() || ga.prime() != gb.prime()) {
    throw Error(ErrorCode::kInvalidInput,
                "product construction needs F_p^m and F_p^k over one prime");
  }
  if (!IsApFree(a) || !IsApFree(b)) {
    throw Error(ErrorCode::kInvalidInput, "product inputs must be AP-free");
  }
  const AbelianGroup g =
      AbelianGroup::Elementary(ga.prime(), ga.rank() + gb.rank());
  std::vector<GroupElement> pts;
  pts.reserve(a.size() * b.size());
  for (const auto& x : a.points()) {
    for (const auto& y : b.points()) {
      GroupElement z = x;
      z.coords.insert(z.coords.end(), y.coords.begin(), y.coords.end());
      pts.push_back(std::move(z));
    }
  }
  return PointSet(g, std::move(pts));
}

PointSet HyperplaneTransfer(const Hyperplane& v, const PointSet& a) {
  const int n = v.dimension();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidInput, "hyperplane transfer needs n >= 2");
  }
  if (a.group() != AbelianGroup::Elementary(v.p, n)) {
    throw Error(ErrorCode::kInvalidInput, "set and hyperplane disagree on F_p^n");
  }
  const int j = v.pivot();
  std::vector<GroupElement> image;
  image.reserve(a.size());
  for (const auto& x : a.points()) {
    if (!v.Contains(x)) {
      throw Error(ErrorCode::kInvalidInput,
                  ToString(x) + " is not on " + v.ToString());
    }
    GroupElement y = x;
    y.coords.erase(y.coords.begin() + j);
    image.push_back(std::move(y));
  }
  return PointSet(AbelianGroup::Elementary(v.p, n - 1), std::move(image));
}

}  // namespace zslab
