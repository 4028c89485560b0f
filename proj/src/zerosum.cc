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

#include "zslab/zerosum.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <set>
#include <string>

#include "zslab/error.h"

namespace zslab {

GSequence::GSequence(AbelianGroup g, std::vector<GroupElement> elems)
    : group(std::move(g)), items(std::move(elems)) {
  for (const auto& x : items) {
    if (!group.IsValid(x)) {
      throw Error(ErrorCode::kInvalidElement,
                  ToString(x) + " is not an element of " + group.ToString());
    }
  }
}

namespace {

bool CheckWitnessAgainst(const AbelianGroup& g,
                         const std::vector<GroupElement>& items,
                         const Witness& w, std::optional<int64_t> m) {
  if (w.indices.empty() || w.indices.size() != w.elements.size()) return false;
  if (m && w.length() != *m) return false;
  std::set<int64_t> seen;
  GroupElement sum = g.Zero();
  for (size_t i = 0; i < w.indices.size(); ++i) {
    const int64_t idx = w.indices[i];
    if (idx < 0 || idx >= static_cast<int64_t>(items.size())) return false;
    if (!seen.insert(idx).second) return false;
    if (!g.IsValid(w.elements[i]) || items[idx] != w.elements[i]) return false;
    sum = g.Add(sum, items[idx]);
  }
  return sum == g.Zero();
}

}  // namespace

bool VerifyWitness(const GSequence& seq, const Witness& w,
                   std::optional<int64_t> m) {
  if (w.kind != WitnessKind::kZeroSumSubsequence) return false;
  return CheckWitnessAgainst(seq.group, seq.items, w, m);
}

bool VerifyWitness(const PointSet& set, const Witness& w,
                   std::optional<int64_t> m) {
  if (w.kind != WitnessKind::kDistinctZeroSumSet) return false;
  if (!CheckWitnessAgainst(set.group(), set.points(), w, m)) return false;
  std::set<GroupElement> distinct(w.elements.begin(), w.elements.end());
  return distinct.size() == w.elements.size();
}

std::optional<Witness> FindZeroSumSubsequence(const GSequence& seq,
                                              int64_t m) {
  const int64_t len = seq.size();
  if (m < 1 || m > len) {
    throw Error(ErrorCode::kInvalidInput,
                "subsequence length " + std::to_string(m) +
                    " outside [1, " + std::to_string(len) + "]");
  }
  const IndexedGroup ig(seq.group);
  const int64_t n = ig.size();
  const int64_t layer = (m + 1) * n;
  if (static_cast<double>(layer) * static_cast<double>(len + 1) > 1e9) {
    throw Error(ErrorCode::kInvalidInput, "zero-sum DP table too large");
  }
  std::vector<int64_t> idx(len);
  for (int64_t i = 0; i < len; ++i) idx[i] = seq.group.IndexOf(seq.items[i]);

  // reach[i][c * n + g]: some c of the first i items sum to g.
  std::vector<std::vector<uint8_t>> reach;
  reach.emplace_back(layer, 0);
  reach[0][0] = 1;
  int64_t stop = -1;
  for (int64_t i = 1; i <= len; ++i) {
    reach.push_back(reach[i - 1]);
    auto& cur = reach[i];
    const auto& prev = reach[i - 1];
    const int64_t x = idx[i - 1];
    const int64_t top = std::min<int64_t>(i, m);
    for (int64_t c = top; c >= 1; --c) {
      const uint8_t* src = prev.data() + (c - 1) * n;
      uint8_t* dst = cur.data() + c * n;
      for (int64_t g = 0; g < n; ++g) {
        if (src[g]) dst[ig.Add(g, x)] = 1;
      }
    }
    if (cur[m * n]) {
      stop = i;
      break;
    }
  }
  if (stop < 0) return std::nullopt;

  Witness w;
  w.kind = WitnessKind::kZeroSumSubsequence;
  int64_t c = m;
  int64_t g = 0;
  for (int64_t i = stop; i >= 1 && c > 0; --i) {
    if (reach[i - 1][c * n + g]) continue;
    w.indices.push_back(i - 1);
    g = ig.Add(g, ig.Neg(idx[i - 1]));
    --c;
  }
  if (c != 0 || g != 0) {
    throw Error(ErrorCode::kInternal, "zero-sum DP reconstruction failed");
  }
  std::reverse(w.indices.begin(), w.indices.end());
  for (int64_t i : w.indices) w.elements.push_back(seq.items[i]);
  return w;
}

std::optional<Witness> FindDistinctZeroSum(const PointSet& set, int64_t m) {
  if (m < 1) throw Error(ErrorCode::kInvalidInput, "m must be >= 1");
  if (m > set.size()) return std::nullopt;
  GSequence seq(set.group(), set.points());
  auto w = FindZeroSumSubsequence(seq, m);
  if (w) w->kind = WitnessKind::kDistinctZeroSumSet;
  return w;
}

uint64_t DefaultNodeBudget() {
  const char* env = std::getenv("ZSLAB_BUDGET");
  if (env == nullptr) return kDefaultNodeBudget;
  uint64_t value = 0;
  const char* end = env + std::strlen(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0) return kDefaultNodeBudget;
  return value;
}

namespace {

constexpr int64_t kMaxSearchOrder = 1024;
constexpr double kMaxSearchBytes = 256.0 * 1024 * 1024;

// Depth-first search for the longest multiset over G (multiplicity <= cap per
// element) with no m-term zero-sum subsequence. Depth d decides the
// multiplicity of the element with index d.
class ExtremalSearch {
 public:
  ExtremalSearch(const AbelianGroup& g, int64_t m, int64_t cap,
                 const SearchOptions& options)
      : ig_(g), n_(g.order()), m_(m), cap_(cap), options_(options) {
    if (n_ > kMaxSearchOrder ||
        static_cast<double>(n_) * (cap_ + 1) * m_ * n_ > kMaxSearchBytes) {
      throw Error(ErrorCode::kInvalidInput,
                  g.ToString() + " exceeds the exact-search size cap");
    }
    // neg_multiple_[i * n + y] = -(i * y).
    neg_multiple_.resize((cap_ + 1) * n_);
    for (int64_t i = 0; i <= cap_; ++i) {
      for (int64_t y = 0; y < n_; ++y) {
        neg_multiple_[i * n_ + y] = ig_.Neg(ig_.Scale(i, y));
      }
    }
    pool_.assign(n_, std::vector<std::vector<uint8_t>>(
                         cap_ + 1, std::vector<uint8_t>(m_ * n_, 0)));
    counts_.assign(n_, 0);
  }

  // Returns the best multiplicity vector; sets exhaustive().
  std::vector<int64_t> Run() {
    std::vector<uint8_t> root(m_ * n_, 0);
    root[0] = 1;
    best_len_ = -1;
    Dfs(0, 0, root);
    return best_counts_;
  }

  bool exhaustive() const { return !aborted_; }
  int64_t best_length() const { return best_len_; }
  uint64_t nodes() const { return nodes_; }

 private:
  bool Blocked(const std::vector<uint8_t>& reach, int64_t copies,
               int64_t y) const {
    return reach[(m_ - copies) * n_ + neg_multiple_[copies * n_ + y]] != 0;
  }

  int64_t CapacityOf(const std::vector<uint8_t>& reach, int64_t y) const {
    int64_t k = 0;
    while (k < cap_ && !Blocked(reach, k + 1, y)) ++k;
    return k;
  }

  static void AddCopy(const IndexedGroup& ig, int64_t m, int64_t n,
                      std::vector<uint8_t>& reach, int64_t x) {
    for (int64_t c = m - 1; c >= 1; --c) {
      const uint8_t* src = reach.data() + (c - 1) * n;
      uint8_t* dst = reach.data() + c * n;
      for (int64_t g = 0; g < n; ++g) {
        if (src[g]) dst[ig.Add(g, x)] = 1;
      }
    }
  }

  void Dfs(int64_t d, int64_t len, const std::vector<uint8_t>& reach) {
    if (aborted_) return;
    if (++nodes_ > options_.node_budget) {
      aborted_ = true;
      return;
    }
    if (len > best_len_) {
      best_len_ = len;
      best_counts_ = counts_;
    }
    if (d == n_) return;

    const bool sym = options_.translation_symmetry;
    const int64_t ceiling = (sym && d > 0) ? counts_[0] : cap_;
    int64_t bound = len;
    for (int64_t y = d; y < n_ && bound <= best_len_; ++y) {
      bound += std::min(CapacityOf(reach, y), ceiling);
    }
    if (bound <= best_len_) return;

    auto& states = pool_[d];
    states[0] = reach;
    int64_t kmax = 0;
    while (kmax < ceiling && !Blocked(states[kmax], 1, d)) {
      states[kmax + 1] = states[kmax];
      AddCopy(ig_, m_, n_, states[kmax + 1], d);
      ++kmax;
    }
    // With the symmetry on, the zero element carries the top multiplicity
    // and the sequence is non-empty.
    const int64_t kmin = (sym && d == 0) ? std::min<int64_t>(1, kmax) : 0;
    for (int64_t k = kmax; k >= kmin; --k) {
      counts_[d] = k;
      Dfs(d + 1, len + k, states[k]);
      if (aborted_) break;
    }
    counts_[d] = 0;
  }

  IndexedGroup ig_;
  int64_t n_;
  int64_t m_;
  int64_t cap_;
  SearchOptions options_;
  std::vector<int64_t> neg_multiple_;
  std::vector<std::vector<std::vector<uint8_t>>> pool_;
  std::vector<int64_t> counts_;
  std::vector<int64_t> best_counts_;
  int64_t best_len_ = -1;
  uint64_t nodes_ = 0;
  bool aborted_ = false;
};

ExtremalResult RunExtremal(const AbelianGroup& g, int64_t cap,
                           ExtremalCertificate::Claim claim,
                           const SearchOptions& options) {
  ExtremalSearch search(g, g.exponent(), cap, options);
  const auto counts = search.Run();
  ExtremalResult result;
  result.exhaustive = search.exhaustive();
  result.nodes = search.nodes();
  result.value = search.best_length() + 1;
  result.certificate.claim = claim;
  result.certificate.group = g;
  result.certificate.m = g.exponent();
  result.certificate.exhaustive = result.exhaustive;
  for (size_t i = 0; i < counts.size(); ++i) {
    for (int64_t k = 0; k < counts[i]; ++k) {
      result.certificate.object.push_back(g.ElementAt(static_cast<int64_t>(i)));
    }
  }
  return result;
}

}  // namespace

ExtremalResult SExact(const AbelianGroup& g, const SearchOptions& options) {
  return RunExtremal(g, g.exponent() - 1,
                     ExtremalCertificate::Claim::kNoZeroSumSubsequence,
                     options);
}

ExtremalResult GExact(const AbelianGroup& g, const SearchOptions& options) {
  return RunExtremal(g, 1, ExtremalCertificate::Claim::kNoDistinctZeroSumSet,
                     options);
}

bool VerifyCertificate(const ExtremalCertificate& cert) {
  for (const auto& x : cert.object) {
    if (!cert.group.IsValid(x)) return false;
  }
  if (cert.m < 1) return false;
  if (cert.claim == ExtremalCertificate::Claim::kNoDistinctZeroSumSet) {
    std::set<GroupElement> distinct(cert.object.begin(), cert.object.end());
    if (distinct.size() != cert.object.size()) return false;
    return !FindDistinctZeroSum(PointSet(cert.group, cert.object), cert.m);
  }
  if (static_cast<int64_t>(cert.object.size()) < cert.m) return true;
  return !FindZeroSumSubsequence(GSequence(cert.group, cert.object), cert.m);
}

}  // namespace zslab
