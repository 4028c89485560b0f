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

#include "zslab/bounds.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "zslab/apfree.h"
#include "zslab/constructive.h"
#include "zslab/error.h"

namespace zslab {

namespace {

constexpr double kJLow = 0.8414;
constexpr double kJHigh = 0.9184;

std::string FieldName(int64_t p, int n) {
  return "F" + std::to_string(p) + "^" + std::to_string(n);
}

std::string RQuantity(int64_t p, int n) { return "r(" + FieldName(p, n) + ")"; }

}  // namespace

double JConstant(int64_t p, double tol) {
  if (p == 2 || !IsPrime(p)) {
    throw Error(ErrorCode::kInvalidInput, "J(p) needs an odd prime p");
  }
  if (!(tol > 0)) throw Error(ErrorCode::kInvalidInput, "tolerance must be > 0");
  const double e = (static_cast<double>(p) - 1.0) / 3.0;
  auto f = [p, e](double t) {
    double sum = 0;
    double power = 1;
    for (int64_t i = 0; i < p; ++i) {
      sum += power;
      power *= t;
    }
    return sum / std::pow(t, e);
  };
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 1e-9;
  double hi = 1.0 - 1e-9;
  double c = hi - phi * (hi - lo);
  double d = lo + phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + phi * (hi - lo);
      fd = f(d);
    }
  }
  const double j = f(0.5 * (lo + hi)) / static_cast<double>(p);
  if (j < kJLow || j > kJHigh) {
    throw Error(ErrorCode::kInternal,
                "J(" + std::to_string(p) + ") = " + std::to_string(j) +
                    " falls outside [0.8414, 0.9184]");
  }
  return j;
}

double RUpper(int64_t p, int n) {
  if (!IsPrime(p) || n < 0) throw Error(ErrorCode::kInvalidInput, "bad r query");
  if (n == 0) return 1.0;
  if (p == 2) return std::ldexp(1.0, n);
  return std::pow(JConstant(p) * static_cast<double>(p), n);
}

RValue RPolicy::Evaluate(int64_t p, int n) {
  const auto key = std::make_pair(p, n);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  RValue v;
  if (n == 0) {
    v = {1.0, true, "empty product"};
  } else if (p == 2) {
    v = {std::ldexp(1.0, n), true, "no APs in F_2^n"};
  } else {
    bool done = false;
    if (IntPow(p, n) <= max_exact_order_) {
      SearchOptions opts = options_;
      opts.translation_symmetry = true;
      const auto r = RExact(p, n, opts);
      if (r.exhaustive) {
        v = {static_cast<double>(r.value), true, "exhaustive search"};
        done = true;
      }
    }
    if (!done) v = {RUpper(p, n), false, "Ellenberg-Gijswijt"};
  }
  cache_[key] = v;
  return v;
}

std::optional<std::pair<int64_t, int>> HomocyclicForm(const AbelianGroup& g) {
  const auto comps = SylowSplit(g);
  const int n = comps.front().cyclic_count;
  int64_t k = 1;
  for (const auto& c : comps) {
    if (c.cyclic_count != n) return std::nullopt;
    const auto& f = c.group.factors();
    if (f.front() != f.back()) return std::nullopt;
    k *= f.front();
  }
  return std::make_pair(k, n);
}

std::optional<SValue> KnownSValue(const AbelianGroup& g) {
  const auto comps = SylowSplit(g);
  if (std::all_of(comps.begin(), comps.end(),
                  [](const SylowComponent& c) { return c.cyclic_count == 1; })) {
    return SValue{static_cast<double>(2 * g.order() - 1), true, "EGZ"};
  }
  const auto form = HomocyclicForm(g);
  if (!form) return std::nullopt;
  const auto [k, n] = *form;
  if (n == 2) return SValue{static_cast<double>(4 * k - 3), true, "Reiher"};
  if (comps.size() == 1 && comps.front().prime == 2) {
    return SValue{std::ldexp(static_cast<double>(k - 1), n) + 1.0, true,
                  "Harborth"};
  }
  return std::nullopt;
}

SValue SPolicy::Evaluate(const AbelianGroup& g) {
  if (auto it = cache_.find(g); it != cache_.end()) return it->second;
  SValue v;
  if (auto known = KnownSValue(g)) {
    v = *known;
  } else {
    bool done = false;
    if (g.order() <= max_exact_order_) {
      SearchOptions opts = options_;
      opts.translation_symmetry = true;
      const auto r = SExact(g, opts);
      if (r.exhaustive) {
        v = {static_cast<double>(r.value), true, "exhaustive search"};
        done = true;
      }
    }
    if (!done) {
      v = {static_cast<double>(g.order() + g.exponent() - 1), false,
           "Gao-Yang"};
      auto consider = [&v](double value, const char* source) {
        if (value < v.value) v = {value, false, source};
      };
      if (auto form = HomocyclicForm(g)) {
        consider(static_cast<double>(form->first - 1) *
                         std::pow(static_cast<double>(form->first), form->second) +
                     1.0,
                 "Harborth");
      }
      const auto comps = SylowSplit(g);
      if (g.IsElementary()) {
        const int64_t p = g.prime();
        consider(std::ceil(2.0 * p * r_.Evaluate(p, g.rank()).value - 1e-9),
                 "coordinate-lift");
      } else if (comps.size() == 1) {
        const auto pb = SUpperPGroup(
            g, [this](int64_t p, int n) { return Elementary(p, n).value; });
        consider(std::ceil(pb.refined - 1e-9), "conjugate-partition-chain");
      } else {
        const auto cb = SUpperComposite(
            g, [this](const AbelianGroup& c) { return Evaluate(c).value; });
        consider(std::ceil(cb.exact_form - 1e-9), "sylow-chain");
      }
    }
  }
  cache_[g] = v;
  return v;
}

SValue SPolicy::Elementary(int64_t p, int n) {
  return Evaluate(AbelianGroup::Elementary(p, n));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(ErrorCode::kInvalidInput,
                  "partition parts must be positive and non-increasing");
    }
  }
}

Partition ConjugatePartition(const Partition& a) {
  std::vector<int> b;
  if (a.parts().empty()) return Partition(b);
  for (int j = 1; j <= a.parts().front(); ++j) {
    b.push_back(static_cast<int>(
        std::count_if(a.parts().begin(), a.parts().end(),
                      [j](int ai) { return ai >= j; })));
  }
  return Partition(std::move(b));
}

PGroupBound SUpperPGroup(int64_t p, const Partition& shape,
                         const ElementarySFn& s) {
  if (shape.parts().empty()) {
    throw Error(ErrorCode::kInvalidInput, "empty p-group shape");
  }
  const int a1 = shape.parts().front();
  const int n = static_cast<int>(shape.parts().size());
  PGroupBound out;
  out.simple = static_cast<double>((IntPow(p, a1) - 1) / (p - 1)) * s(p, n);
  const Partition b = ConjugatePartition(shape);
  double weight = 1;
  for (int bj : b.parts()) {
    out.refined += weight * s(p, bj);
    weight *= static_cast<double>(p);
  }
  return out;
}

PGroupBound SUpperPGroup(const AbelianGroup& g, const ElementarySFn& s) {
  return SUpperPGroup(g.prime(), Partition(PGroupShape(g)), s);
}

CompositeBound SUpperComposite(const AbelianGroup& g, const GroupSFn& s) {
  const auto comps = SylowSplit(g);
  std::vector<double> values;
  std::vector<double> exps;
  for (const auto& c : comps) {
    values.push_back(s(c.group));
    exps.push_back(static_cast<double>(c.exponent));
  }
  auto chain = [&](const std::vector<size_t>& order) {
    double total = 0;
    double prefix = 1;
    for (size_t i : order) {
      total += prefix * values[i];
      prefix *= exps[i];
    }
    return total;
  };
  std::vector<size_t> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  CompositeBound out;
  out.exact_form = chain(order);
  for (size_t i = 0; i < comps.size(); ++i) {
    out.relaxed += values[i] / exps[i];
  }
  out.relaxed *= static_cast<double>(g.exponent());
  out.best_order = out.exact_form;
  if (comps.size() <= 4) {
    while (std::next_permutation(order.begin(), order.end())) {
      out.best_order = std::min(out.best_order, chain(order));
    }
  }
  return out;
}

double SUpperPrimeRSum(const AbelianGroup& g, RPolicy& r) {
  double sum = 0;
  for (const auto& c : SylowSplit(g)) sum += r.Evaluate(c.prime, c.cyclic_count).value;
  return 3.0 * static_cast<double>(g.exponent()) * sum;
}

double SUpperHomocyclic(int64_t k, int n, RPolicy& r) {
  if (k < 2 || n < 1) throw Error(ErrorCode::kInvalidInput, "need k >= 2, n >= 1");
  double sum = 0;
  for (const auto& [p, a] : Factorize(k)) sum += r.Evaluate(p, n).value;
  const double value = 3.0 * static_cast<double>(k) * sum;
  const std::vector<int64_t> orders(n, k);
  const double general = SUpperPrimeRSum(AbelianGroup::Canonicalize(orders), r);
  if (std::abs(general - value) > 1e-9 * std::max(1.0, value)) {
    throw Error(ErrorCode::kInternal, "homocyclic and general r-sum disagree");
  }
  return value;
}

ElementarySumBound SUpperElementarySum(const AbelianGroup& g, SPolicy& s) {
  ElementarySumBound out;
  double sum = 0;
  for (const auto& c : SylowSplit(g)) {
    sum += s.Elementary(c.prime, c.cyclic_count).value /
           static_cast<double>(c.prime - 1);
    if (c.prime == 2) out.uses_p2_path = true;
  }
  out.value = static_cast<double>(g.exponent()) * sum;
  return out;
}

FieldBounds ExtractionAndLiftBounds(int64_t p, int n, RPolicy& r) {
  if (p == 2 || !IsPrime(p) || n < 1) {
    throw Error(ErrorCode::kInvalidInput, "needs an odd prime p and n >= 1");
  }
  FieldBounds out;
  const double twice_p = 2.0 * static_cast<double>(p);
  if (n >= 2) out.g_bound = twice_p * r.Evaluate(p, n - 1).value;
  out.s_bound = twice_p * r.Evaluate(p, n).value;
  return out;
}

const char* BoundKindName(BoundKind kind) {
  switch (kind) {
    case BoundKind::kLower:
      return "lower";
    case BoundKind::kUpper:
      return "upper";
    case BoundKind::kExact:
      return "exact";
  }
  return "unknown";
}

std::vector<BoundEntry> ClassicalBounds(const AbelianGroup& g) {
  std::vector<BoundEntry> out;
  auto add = [&out](BoundKind kind, double value, std::string source,
                    std::string assumptions) {
    out.push_back(BoundEntry{"s", kind, value, false, std::move(source),
                             std::move(assumptions), true});
  };
  add(BoundKind::kUpper,
      static_cast<double>(g.order() + g.exponent() - 1), "Gao-Yang",
      "|G| + exp(G) - 1");
  if (auto form = HomocyclicForm(g)) {
    const auto [k, n] = *form;
    const double kd = static_cast<double>(k);
    const double pow2 = std::ldexp(1.0, n);
    add(BoundKind::kLower, (kd - 1) * pow2 + 1, "Harborth",
        "(k-1) 2^n + 1, k=" + std::to_string(k) + " n=" + std::to_string(n));
    add(BoundKind::kUpper, (kd - 1) * std::pow(kd, n) + 1, "Harborth",
        "(k-1) k^n + 1");
    if (k >= 3 && k % 2 == 1) {
      add(BoundKind::kLower, std::pow(1.125, n / 3) * (kd - 1) * pow2 + 1,
          "Elsholtz", "1.125^floor(n/3) (k-1) 2^n + 1, k odd");
    }
  }
  if (auto known = KnownSValue(g)) {
    add(BoundKind::kExact, known->value, known->source, "closed form");
  }
  return out;
}

namespace {

bool Leq(double a, double b) { return a <= b + 1e-9 * std::max(1.0, std::abs(b)); }
bool Lt(double a, double b) { return a < b - 1e-9 * std::max(1.0, std::abs(b)); }

std::string Describe(const BoundEntry& e) {
  std::ostringstream os;
  os << e.quantity << " " << BoundKindName(e.kind) << (e.strict ? " (strict)" : "")
     << " " << e.value << " [" << e.source << "]";
  return os.str();
}

}  // namespace

void CheckConsistency(BoundReport& report) {
  report.violations.clear();
  std::map<std::string, std::vector<const BoundEntry*>> by_quantity;
  for (const auto& e : report.entries) by_quantity[e.quantity].push_back(&e);
  for (const auto& [quantity, entries] : by_quantity) {
    for (const BoundEntry* lo : entries) {
      for (const BoundEntry* hi : entries) {
        if (lo == hi) continue;
        const bool lo_side = lo->kind != BoundKind::kUpper;
        const bool hi_side = hi->kind != BoundKind::kLower;
        if (!lo_side || !hi_side) continue;
        // An upper bound must strictly exceed anything known to be attained
        // or exceeded when it is strict.
        const bool ok = hi->strict ? Lt(lo->value, hi->value)
                                   : Leq(lo->value, hi->value);
        if (!ok) {
          report.violations.push_back(Describe(*lo) + " vs " + Describe(*hi));
        }
      }
    }
  }
  report.consistent = report.violations.empty();
}

BoundReport BuildBoundsReport(const AbelianGroup& g,
                              const ReportOptions& options) {
  BoundReport report;
  report.group = g;
  auto& entries = report.entries;
  SearchOptions search = options.search;
  search.translation_symmetry = true;
  RPolicy r(search, options.r_max_exact_order);
  SPolicy s(search, options.max_exact_order, options.r_max_exact_order);
  const auto comps = SylowSplit(g);
  const double exp = static_cast<double>(g.exponent());
  auto add = [&entries](std::string quantity, BoundKind kind, double value,
                        bool strict, std::string source,
                        std::string assumptions = "", bool exhaustive = true) {
    entries.push_back(BoundEntry{std::move(quantity), kind, value, strict,
                                 std::move(source), std::move(assumptions),
                                 exhaustive});
  };

  // Exact searches.
  std::optional<double> s_exact;
  std::optional<double> g_exact;
  if (g.order() <= options.max_exact_order) {
    const auto sr = SExact(g, search);
    add("s", sr.exhaustive ? BoundKind::kExact : BoundKind::kLower,
        static_cast<double>(sr.value), false, "exhaustive search", "",
        sr.exhaustive);
    if (sr.exhaustive) s_exact = static_cast<double>(sr.value);
    const auto gr = GExact(g, search);
    add("g", gr.exhaustive ? BoundKind::kExact : BoundKind::kLower,
        static_cast<double>(gr.value), false, "exhaustive search", "",
        gr.exhaustive);
    if (gr.exhaustive) g_exact = static_cast<double>(gr.value);
  }

  // Closed forms and classical bounds on s.
  for (auto& e : ClassicalBounds(g)) entries.push_back(std::move(e));
  if (auto known = KnownSValue(g); known && !s_exact) s_exact = known->value;

  // r(F_p^{n_i}) for each Sylow component.
  for (const auto& c : comps) {
    const int64_t p = c.prime;
    const int n = c.cyclic_count;
    const std::string q = RQuantity(p, n);
    const RValue rv = r.Evaluate(p, n);
    if (rv.exact) add(q, BoundKind::kExact, rv.value, false, rv.source);
    if (p != 2) add(q, BoundKind::kUpper, RUpper(p, n), false, "Ellenberg-Gijswijt",
                    "(J(p) p)^n");
    if (n >= 2) {
      const RValue head = r.Evaluate(p, n - 1);
      const RValue tail = r.Evaluate(p, 1);
      if (head.exact && tail.exact) {
        add(q, BoundKind::kLower, head.value * tail.value, false,
            "product construction", "r(F_p^{n-1}) r(F_p)");
      }
    }
    if (p == 3 && g.IsElementary() && g_exact) {
      add(q, BoundKind::kExact, *g_exact - 1, false, "g(F_3^n) - 1",
          "3 distinct zero-sum elements form an AP in F_3^n");
    }
  }

  // Upper bounds on s through r and s of elementary groups.
  add("s", BoundKind::kUpper, SUpperPrimeRSum(g, r), true, "prime-r-sum",
      "3 exp(G) sum r(F_p^{n_p})");
  if (auto form = HomocyclicForm(g)) {
    add("s", BoundKind::kUpper, SUpperHomocyclic(form->first, form->second, r),
        true, "homocyclic-r-sum", "3k sum r(F_p^n)");
  }
  const auto esum = SUpperElementarySum(g, s);
  add("s", BoundKind::kUpper, esum.value, true, "sylow-elementary-sum",
      esum.uses_p2_path ? "p=2 term uses s(F_2^n) = 2^n + 1 directly" : "");
  if (comps.size() >= 2) {
    const auto cb = SUpperComposite(
        g, [&s](const AbelianGroup& c) { return s.Evaluate(c).value; });
    add("s", BoundKind::kUpper, cb.exact_form, false, "sylow-chain");
    add("s", BoundKind::kUpper, cb.relaxed, false, "sylow-chain-relaxed");
    add("s", BoundKind::kUpper, cb.best_order, false, "sylow-chain-best-order");
  }
  if (comps.size() == 1 && !g.IsElementary()) {
    const auto pb = SUpperPGroup(
        g, [&s](int64_t p, int n) { return s.Elementary(p, n).value; });
    const double sf = s.Elementary(g.prime(), g.rank()).value;
    add("s", BoundKind::kUpper, pb.simple, false, "p-multiples-chain");
    add("s", BoundKind::kUpper, exp / static_cast<double>(g.prime() - 1) * sf,
        true, "p-multiples-chain-strict");
    add("s", BoundKind::kUpper, pb.refined, false, "conjugate-partition-chain");
  }
  if (!g.IsElementary()) {
    add("s", BoundKind::kUpper,
        static_cast<double>(RequiredLength(g, DefaultSOracle(search))), false,
        "quotient-fold");
  }
  if (g.IsElementary() && g.prime() != 2) {
    const auto fb = ExtractionAndLiftBounds(g.prime(), g.rank(), r);
    add("s", BoundKind::kUpper, fb.s_bound, false, "coordinate-lift",
        "2p r(F_p^n)");
    if (fb.g_bound) {
      add("g", BoundKind::kUpper, *fb.g_bound, false, "hyperplane-extraction",
          "2p r(F_p^{n-1})");
    }
  }

  // Relations between s and g.
  if (s_exact) {
    add("g", BoundKind::kUpper, *s_exact, false, "g <= s");
    add("g", BoundKind::kLower, (*s_exact - 1) / (exp - 1) + 1, false,
        "s <= (exp-1)(g-1)+1");
  }
  if (g_exact) {
    add("s", BoundKind::kLower, *g_exact, false, "g <= s");
    add("s", BoundKind::kUpper, (exp - 1) * (*g_exact - 1) + 1, false,
        "s <= (exp-1)(g-1)+1");
  }

  CheckConsistency(report);
  return report;
}

}  // namespace zslab
