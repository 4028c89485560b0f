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

// Brute-force reference implementations used only by tests. They work on
// raw coordinate vectors and share no code with the library searches.

#ifndef ZSLAB_TESTS_ORACLES_H_
#define ZSLAB_TESTS_ORACLES_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include <boost/rational.hpp>

namespace oracle {

using Vec = std::vector<int64_t>;

inline std::vector<Vec> AllElements(const Vec& moduli) {
  std::vector<Vec> out{{}};
  for (int64_t q : moduli) {
    std::vector<Vec> next;
    for (const auto& v : out) {
      for (int64_t c = 0; c < q; ++c) {
        auto w = v;
        w.push_back(c);
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline bool IsZero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](int64_t c) { return c == 0; });
}

inline Vec AddMod(const Vec& a, const Vec& b, const Vec& moduli) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % moduli[i];
  return out;
}

inline int64_t Exponent(const Vec& moduli) {
  int64_t e = 1;
  for (int64_t q : moduli) e = std::lcm(e, q);
  return e;
}

// Does some choice of exactly m positions sum to zero? Walks all
// combinations.
inline bool HasZeroSumOfSize(const std::vector<Vec>& seq, const Vec& moduli,
                             int64_t m) {
  const int64_t len = static_cast<int64_t>(seq.size());
  if (m > len) return false;
  std::vector<int64_t> pick(m);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    Vec sum(moduli.size(), 0);
    for (int64_t i : pick) sum = AddMod(sum, seq[i], moduli);
    if (IsZero(sum)) return true;
    int64_t k = m - 1;
    while (k >= 0 && pick[k] == len - m + k) --k;
    if (k < 0) return false;
    ++pick[k];
    for (int64_t j = k + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// s by enumerating every multiset of each length. Tiny groups only.
inline int64_t NaiveS(const Vec& moduli) {
  const auto elems = AllElements(moduli);
  const int64_t m = Exponent(moduli);
  const int64_t n = static_cast<int64_t>(elems.size());
  for (int64_t len = m;; ++len) {
    bool all = true;
    std::vector<int64_t> pick(len, 0);
    while (all) {
      std::vector<Vec> seq;
      for (int64_t i : pick) seq.push_back(elems[i]);
      if (!HasZeroSumOfSize(seq, moduli, m)) all = false;
      int64_t k = len - 1;
      while (k >= 0 && pick[k] == n - 1) --k;
      if (k < 0) break;
      ++pick[k];
      for (int64_t j = k + 1; j < len; ++j) pick[j] = pick[k];
    }
    if (all) return len;
  }
}

// g by enumerating every subset; |G| <= 16 only. Returns |G| + 1 when no
// subset of size exp(G) sums to zero.
inline int64_t NaiveG(const Vec& moduli) {
  const auto elems = AllElements(moduli);
  const int64_t m = Exponent(moduli);
  const int64_t n = static_cast<int64_t>(elems.size());
  int64_t best = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    const int64_t size = std::popcount(mask);
    if (size <= best) continue;
    std::vector<Vec> set;
    for (int64_t i = 0; i < n; ++i) {
      if (mask >> i & 1) set.push_back(elems[i]);
    }
    if (!HasZeroSumOfSize(set, moduli, m)) best = size;
  }
  return best + 1;
}

inline bool IsMiddle(const Vec& x, const Vec& y, const Vec& z, int64_t p) {
  for (size_t i = 0; i < x.size(); ++i) {
    if ((x[i] + z[i] - 2 * y[i]) % p != 0) return false;
  }
  return true;
}

// Three-element subsets of `pts` that are APs in some order.
inline int64_t CountApSets(const std::vector<Vec>& pts, int64_t p) {
  int64_t count = 0;
  const size_t n = pts.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      for (size_t k = j + 1; k < n; ++k) {
        const auto &a = pts[i], &b = pts[j], &c = pts[k];
        if (IsMiddle(a, b, c, p) || IsMiddle(b, a, c, p) ||
            IsMiddle(a, c, b, p)) {
          ++count;
        }
      }
    }
  }
  return count;
}

// r(F_p^n) by include/exclude DFS that only rejects points closing an AP.
// 0 is put in first; any AP-free set can be translated to contain it.
inline int64_t NaiveR(int64_t p, int n) {
  const auto elems = AllElements(Vec(n, p));
  const size_t size = elems.size();
  std::vector<Vec> chosen{elems[0]};
  int64_t best = 1;
  std::function<void(size_t)> dfs = [&](size_t i) {
    best = std::max<int64_t>(best, static_cast<int64_t>(chosen.size()));
    if (i == size) return;
    const Vec& x = elems[i];
    bool ok = true;
    for (size_t a = 0; a < chosen.size() && ok; ++a) {
      for (size_t b = a + 1; b < chosen.size() && ok; ++b) {
        const auto &u = chosen[a], &v = chosen[b];
        if (IsMiddle(u, v, x, p) || IsMiddle(v, u, x, p) ||
            IsMiddle(u, x, v, p)) {
          ok = false;
        }
      }
    }
    if (ok) {
      chosen.push_back(x);
      dfs(i + 1);
      chosen.pop_back();
    }
    dfs(i + 1);
  };
  dfs(1);
  return best;
}

using Rational = boost::rational<int64_t>;

struct Averages {
  Rational x1;
  Rational x2;
};

// Mean of |A cap V| and of the AP-set count of A cap V over all affine
// hyperplanes, listed as (a, b) with every nonzero a. Each hyperplane then
// appears p - 1 times, which leaves the mean unchanged.
inline Averages HyperplaneAverages(const std::vector<Vec>& pts, int64_t p,
                                   int n) {
  int64_t total1 = 0, total2 = 0, planes = 0;
  for (const auto& a : AllElements(Vec(n, p))) {
    if (IsZero(a)) continue;
    for (int64_t b = 0; b < p; ++b) {
      std::vector<Vec> slice;
      for (const auto& x : pts) {
        int64_t dot = 0;
        for (int i = 0; i < n; ++i) dot += a[i] * x[i];
        if (dot % p == b) slice.push_back(x);
      }
      total1 += static_cast<int64_t>(slice.size());
      total2 += CountApSets(slice, p);
      ++planes;
    }
  }
  return {Rational(total1, planes), Rational(total2, planes)};
}

}  // namespace oracle

#endif  // ZSLAB_TESTS_ORACLES_H_
