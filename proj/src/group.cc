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

#include "zslab/group.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "zslab/error.h"

namespace zslab {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
      return "invalid-input";
    case ErrorCode::kInvalidElement:
      return "invalid-element";
    case ErrorCode::kInvalidIndex:
      return "invalid-index";
    case ErrorCode::kSequenceTooShort:
      return "sequence-too-short";
    case ErrorCode::kInternal:
      return "internal-error";
  }
  return "unknown";
}

std::string ToString(const GroupElement& x) {
  std::string out = "(";
  for (size_t i = 0; i < x.coords.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(x.coords[i]);
  }
  return out + ")";
}

bool IsPrime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<int64_t, int>> Factorize(int64_t n) {
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int a = 0;
    while (n % d == 0) {
      n /= d;
      ++a;
    }
    out.emplace_back(d, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<std::pair<int64_t, int>> PrimePowerDecompose(int64_t q) {
  if (q < 2) return std::nullopt;
  const auto f = Factorize(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

int64_t IntPow(int64_t base, int exp) {
  int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

AbelianGroup::AbelianGroup(std::vector<int64_t> factors)
    : factors_(std::move(factors)) {
  order_ = 1;
  exponent_ = 1;
  for (int64_t q : factors_) {
    order_ *= q;
    exponent_ = std::lcm(exponent_, q);
  }
}

AbelianGroup AbelianGroup::Canonicalize(std::span<const int64_t> orders) {
  if (orders.empty()) {
    throw Error(ErrorCode::kInvalidInput, "group needs at least one factor");
  }
  std::vector<std::pair<int64_t, int64_t>> keyed;  // (p, q)
  __int128 order = 1;
  for (int64_t k : orders) {
    if (k < 2) {
      throw Error(ErrorCode::kInvalidInput,
                  "cyclic order must be >= 2, got " + std::to_string(k));
    }
    order *= k;
    if (order > kMaxGroupOrder) {
      throw Error(ErrorCode::kInvalidInput, "group order exceeds 2^31");
    }
    for (const auto& [p, a] : Factorize(k)) keyed.emplace_back(p, IntPow(p, a));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) {
    if (l.first != r.first) return l.first < r.first;
    return l.second > r.second;
  });
  std::vector<int64_t> factors;
  factors.reserve(keyed.size());
  for (const auto& kv : keyed) factors.push_back(kv.second);
  return AbelianGroup(std::move(factors));
}

AbelianGroup AbelianGroup::Elementary(int64_t p, int n) {
  if (!IsPrime(p) || n < 1) {
    throw Error(ErrorCode::kInvalidInput, "F_p^n needs prime p and n >= 1");
  }
  std::vector<int64_t> orders(n, p);
  return Canonicalize(orders);
}

bool AbelianGroup::IsPGroup() const {
  if (factors_.empty()) return false;
  const int64_t p = prime();
  return std::all_of(factors_.begin(), factors_.end(), [p](int64_t q) {
    return PrimePowerDecompose(q)->first == p;
  });
}

bool AbelianGroup::IsElementary() const {
  return !factors_.empty() && IsPrime(factors_.front()) &&
         std::all_of(factors_.begin(), factors_.end(),
                     [this](int64_t q) { return q == factors_.front(); });
}

int64_t AbelianGroup::prime() const {
  if (factors_.empty()) return 0;
  return PrimePowerDecompose(factors_.front())->first;
}

GroupElement AbelianGroup::Zero() const {
  return GroupElement{std::vector<int64_t>(factors_.size(), 0)};
}

bool AbelianGroup::IsValid(const GroupElement& x) const {
  if (x.coords.size() != factors_.size()) return false;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (x.coords[i] < 0 || x.coords[i] >= factors_[i]) return false;
  }
  return true;
}

void AbelianGroup::CheckElement(const GroupElement& x) const {
  if (!IsValid(x)) {
    throw Error(ErrorCode::kInvalidElement,
                zslab::ToString(x) + " is not an element of " + ToString());
  }
}

GroupElement AbelianGroup::Add(const GroupElement& x,
                               const GroupElement& y) const {
  CheckElement(x);
  CheckElement(y);
  GroupElement out = x;
  for (size_t i = 0; i < factors_.size(); ++i) {
    out.coords[i] = (x.coords[i] + y.coords[i]) % factors_[i];
  }
  return out;
}

GroupElement AbelianGroup::Neg(const GroupElement& x) const {
  CheckElement(x);
  GroupElement out = x;
  for (size_t i = 0; i < factors_.size(); ++i) {
    out.coords[i] = (factors_[i] - x.coords[i]) % factors_[i];
  }
  return out;
}

GroupElement AbelianGroup::Scale(int64_t c, const GroupElement& x) const {
  CheckElement(x);
  GroupElement out = x;
  for (size_t i = 0; i < factors_.size(); ++i) {
    const int64_t q = factors_[i];
    const int64_t cm = ((c % q) + q) % q;
    out.coords[i] = static_cast<int64_t>(
        (static_cast<__int128>(cm) * x.coords[i]) % q);
  }
  return out;
}

int64_t AbelianGroup::ElementOrder(const GroupElement& x) const {
  CheckElement(x);
  int64_t ord = 1;
  for (size_t i = 0; i < factors_.size(); ++i) {
    const int64_t q = factors_[i];
    ord = std::lcm(ord, q / std::gcd(q, x.coords[i]));
  }
  return ord;
}

int64_t AbelianGroup::IndexOf(const GroupElement& x) const {
  CheckElement(x);
  int64_t idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    idx = idx * factors_[i] + x.coords[i];
  }
  return idx;
}

GroupElement AbelianGroup::ElementAt(int64_t index) const {
  if (index < 0 || index >= order_) {
    throw Error(ErrorCode::kInvalidIndex,
                std::to_string(index) + " outside [0, " +
                    std::to_string(order_) + ")");
  }
  GroupElement out{std::vector<int64_t>(factors_.size())};
  for (size_t i = factors_.size(); i-- > 0;) {
    out.coords[i] = index % factors_[i];
    index /= factors_[i];
  }
  return out;
}

std::string AbelianGroup::ToString() const {
  std::string out;
  for (size_t i = 0; i < factors_.size();) {
    size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (!out.empty()) out += "x";
    out += "Z" + std::to_string(factors_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

int64_t ParseNumber(std::string_view text, std::string_view literal) {
  int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kInvalidInput,
                "bad number in group literal '" + std::string(literal) + "'");
  }
  return value;
}

}  // namespace

AbelianGroup ParseGroup(std::string_view literal) {
  std::vector<int64_t> orders;
  size_t pos = 0;
  auto fail = [&literal](const std::string& why) {
    throw Error(ErrorCode::kInvalidInput,
                "cannot parse group '" + std::string(literal) + "': " + why);
  };
  if (literal.empty()) fail("empty literal");
  while (pos <= literal.size()) {
    size_t next = literal.find('x', pos);
    if (next == std::string_view::npos) next = literal.size();
    std::string_view term = literal.substr(pos, next - pos);
    if (term.size() < 2) fail("empty factor");
    const char kind = term.front();
    if (kind != 'Z' && kind != 'F') fail("factor must start with Z or F");
    term.remove_prefix(1);
    int64_t power = 1;
    const size_t caret = term.find('^');
    if (caret != std::string_view::npos) {
      power = ParseNumber(term.substr(caret + 1), literal);
      term = term.substr(0, caret);
    }
    const int64_t base = ParseNumber(term, literal);
    if (power < 1 || power > 64) fail("exponent out of range");
    if (base < 2) fail("cyclic order must be >= 2");
    if (kind == 'F' && !IsPrime(base)) fail("F needs a prime");
    for (int64_t i = 0; i < power; ++i) orders.push_back(base);
    if (next == literal.size()) break;
    pos = next + 1;
  }
  return AbelianGroup::Canonicalize(orders);
}

std::vector<SylowComponent> SylowSplit(const AbelianGroup& g) {
  std::vector<SylowComponent> out;
  const auto& f = g.factors();
  for (size_t i = 0; i < f.size();) {
    const int64_t p = PrimePowerDecompose(f[i])->first;
    size_t j = i;
    while (j < f.size() && PrimePowerDecompose(f[j])->first == p) ++j;
    SylowComponent c;
    c.prime = p;
    c.group = AbelianGroup::Canonicalize(
        std::span<const int64_t>(f.data() + i, j - i));
    c.cyclic_count = static_cast<int>(j - i);
    c.exponent = f[i];
    c.offset = static_cast<int>(i);
    out.push_back(std::move(c));
    i = j;
  }
  return out;
}

std::vector<int> PGroupShape(const AbelianGroup& g) {
  if (!g.IsPGroup()) {
    throw Error(ErrorCode::kInvalidInput, g.ToString() + " is not a p-group");
  }
  std::vector<int> shape;
  for (int64_t q : g.factors()) shape.push_back(PrimePowerDecompose(q)->second);
  return shape;
}

SubgroupQuotient SubgroupQuotient::PMultiples(const AbelianGroup& g) {
  if (!g.IsPGroup()) {
    throw Error(ErrorCode::kInvalidInput, g.ToString() + " is not a p-group");
  }
  SubgroupQuotient sq;
  sq.kind_ = Kind::kPMultiples;
  sq.group_ = g;
  sq.prime_ = g.prime();
  sq.quotient_ = AbelianGroup::Elementary(sq.prime_, g.rank());
  std::vector<int64_t> h;
  for (int64_t q : g.factors()) {
    if (q > sq.prime_) h.push_back(q / sq.prime_);
  }
  sq.split_ = static_cast<int>(h.size());
  if (!h.empty()) sq.subgroup_ = AbelianGroup::Canonicalize(h);
  return sq;
}

SubgroupQuotient SubgroupQuotient::SylowFactor(const AbelianGroup& g) {
  const auto comps = SylowSplit(g);
  if (comps.size() < 2) {
    throw Error(ErrorCode::kInvalidInput,
                g.ToString() + " has a single Sylow component");
  }
  SubgroupQuotient sq;
  sq.kind_ = Kind::kSylowFactor;
  sq.group_ = g;
  sq.split_ = comps.back().offset;
  sq.subgroup_ = comps.back().group;
  sq.quotient_ = AbelianGroup::Canonicalize(
      std::span<const int64_t>(g.factors().data(), sq.split_));
  return sq;
}

GroupElement SubgroupQuotient::Project(const GroupElement& x) const {
  if (!group_.IsValid(x)) {
    throw Error(ErrorCode::kInvalidElement, zslab::ToString(x));
  }
  if (kind_ == Kind::kPMultiples) {
    GroupElement out = x;
    for (auto& c : out.coords) c %= prime_;
    return out;
  }
  return GroupElement{
      std::vector<int64_t>(x.coords.begin(), x.coords.begin() + split_)};
}

bool SubgroupQuotient::InSubgroup(const GroupElement& x) const {
  if (!group_.IsValid(x)) return false;
  const GroupElement q = Project(x);
  return std::all_of(q.coords.begin(), q.coords.end(),
                     [](int64_t c) { return c == 0; });
}

GroupElement SubgroupQuotient::Embed(const GroupElement& h) const {
  if (!subgroup_ || !subgroup_->IsValid(h)) {
    throw Error(ErrorCode::kInvalidElement, "not an element of H: " + zslab::ToString(h));
  }
  GroupElement out = group_.Zero();
  if (kind_ == Kind::kPMultiples) {
    for (int i = 0; i < split_; ++i) out.coords[i] = prime_ * h.coords[i];
  } else {
    for (size_t i = 0; i < h.coords.size(); ++i) {
      out.coords[split_ + i] = h.coords[i];
    }
  }
  return out;
}

GroupElement SubgroupQuotient::Preimage(const GroupElement& x) const {
  if (!InSubgroup(x) || !subgroup_) {
    throw Error(ErrorCode::kInvalidElement, zslab::ToString(x) + " is not in H");
  }
  GroupElement h = subgroup_->Zero();
  if (kind_ == Kind::kPMultiples) {
    for (int i = 0; i < split_; ++i) h.coords[i] = x.coords[i] / prime_;
  } else {
    for (size_t i = 0; i < h.coords.size(); ++i) {
      h.coords[i] = x.coords[split_ + i];
    }
  }
  return h;
}

namespace {
constexpr int64_t kMaxCayleyTable = 2048;
}  // namespace

IndexedGroup::IndexedGroup(const AbelianGroup& g)
    : group_(g), size_(g.order()) {
  if (size_ <= kMaxCayleyTable) {
    table_.resize(size_ * size_);
    neg_.resize(size_);
    for (int64_t a = 0; a < size_; ++a) {
      neg_[a] = static_cast<int32_t>(NegSlow(a));
      for (int64_t b = 0; b < size_; ++b) {
        table_[a * size_ + b] = static_cast<int32_t>(AddSlow(a, b));
      }
    }
  }
}

int64_t IndexedGroup::AddSlow(int64_t a, int64_t b) const {
  const auto& f = group_.factors();
  int64_t out = 0;
  int64_t weight = 1;
  for (size_t i = f.size(); i-- > 0;) {
    const int64_t ca = a % f[i];
    const int64_t cb = b % f[i];
    a /= f[i];
    b /= f[i];
    out += ((ca + cb) % f[i]) * weight;
    weight *= f[i];
  }
  return out;
}

int64_t IndexedGroup::NegSlow(int64_t a) const {
  const auto& f = group_.factors();
  int64_t out = 0;
  int64_t weight = 1;
  for (size_t i = f.size(); i-- > 0;) {
    const int64_t ca = a % f[i];
    a /= f[i];
    out += ((f[i] - ca) % f[i]) * weight;
    weight *= f[i];
  }
  return out;
}

int64_t IndexedGroup::Scale(int64_t c, int64_t a) const {
  c %= group_.exponent();
  if (c < 0) c += group_.exponent();
  int64_t out = 0;
  int64_t base = a;
  while (c > 0) {
    if (c & 1) out = Add(out, base);
    base = Add(base, base);
    c >>= 1;
  }
  return out;
}

PointSet::PointSet(AbelianGroup g, std::vector<GroupElement> points)
    : group_(std::move(g)) {
  std::vector<std::pair<int64_t, GroupElement>> keyed;
  keyed.reserve(points.size());
  for (auto& p : points) {
    const int64_t idx = group_.IndexOf(p);
    keyed.emplace_back(idx, std::move(p));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  for (size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].first == keyed[i - 1].first) {
      throw Error(ErrorCode::kInvalidElement,
                  "repeated point " + zslab::ToString(keyed[i].second));
    }
    indices_.push_back(keyed[i].first);
    points_.push_back(std::move(keyed[i].second));
  }
}

PointSet PointSet::FromIndices(AbelianGroup g, std::vector<int64_t> indices) {
  std::vector<GroupElement> pts;
  pts.reserve(indices.size());
  for (int64_t i : indices) pts.push_back(g.ElementAt(i));
  return PointSet(std::move(g), std::move(pts));
}

int64_t PointSet::PositionOf(const GroupElement& x) const {
  if (!group_.IsValid(x)) return -1;
  const int64_t idx = group_.IndexOf(x);
  const auto it = std::lower_bound(indices_.begin(), indices_.end(), idx);
  if (it == indices_.end() || *it != idx) return -1;
  return it - indices_.begin();
}

bool PointSet::Contains(const GroupElement& x) const {
  return PositionOf(x) >= 0;
}

}  // namespace zslab
