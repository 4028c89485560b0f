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

// Finite abelian groups in canonical prime-power form.
//
// A group is stored as the list of its cyclic prime-power factors sorted by
// (prime ascending, exponent descending), so Z12 x Z12 becomes
// Z4 x Z4 x Z3 x Z3 and a p-group's factors p^a1 >= ... >= p^an read off
// directly. Elements are coordinate vectors, one residue per factor.
//
// Elements are also addressed by a mixed-radix index in [0, |G|) with the
// leftmost factor most significant: in Z2 x Z3 the index 4 is (1, 1).
//
// Group literals accepted by ParseGroup:
//   Zk        cyclic group of order k (split by CRT)
//   Zk^n      n-fold power
//   Fp^n      elementary abelian (Z/p)^n, p prime
//   AxB       direct product of any of the above, e.g. "Z9xZ3", "Z6^2xF2"

#ifndef ZSLAB_GROUP_H_
#define ZSLAB_GROUP_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zslab {

inline constexpr int64_t kMaxGroupOrder = int64_t{1} << 31;

struct GroupElement {
  std::vector<int64_t> coords;

  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;
};

std::string ToString(const GroupElement& x);

class AbelianGroup {
 public:
  // Splits every Z/kZ into prime-power factors and sorts canonically.
  // Throws kInvalidInput for an order < 2, an empty list or a group whose
  // order exceeds kMaxGroupOrder.
  static AbelianGroup Canonicalize(std::span<const int64_t> orders);
  static AbelianGroup Canonicalize(std::initializer_list<int64_t> orders) {
    return Canonicalize(std::span<const int64_t>(orders.begin(), orders.size()));
  }
  // (Z/p)^n.
  static AbelianGroup Elementary(int64_t p, int n);

  AbelianGroup() = default;

  const std::vector<int64_t>& factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  int64_t order() const { return order_; }
  int64_t exponent() const { return exponent_; }

  bool IsPGroup() const;
  bool IsElementary() const;
  // Smallest prime dividing |G|; the prime of a p-group.
  int64_t prime() const;

  GroupElement Zero() const;
  bool IsValid(const GroupElement& x) const;
  GroupElement Add(const GroupElement& x, const GroupElement& y) const;
  GroupElement Neg(const GroupElement& x) const;
  GroupElement Scale(int64_t c, const GroupElement& x) const;
  int64_t ElementOrder(const GroupElement& x) const;

  int64_t IndexOf(const GroupElement& x) const;
  GroupElement ElementAt(int64_t index) const;

  // Canonical literal, e.g. "Z4xZ4xZ3xZ3" (repeated factors use ^).
  std::string ToString() const;

  bool operator==(const AbelianGroup& other) const {
    return factors_ == other.factors_;
  }
  auto operator<=>(const AbelianGroup& other) const {
    return factors_ <=> other.factors_;
  }

 private:
  explicit AbelianGroup(std::vector<int64_t> factors);
  void CheckElement(const GroupElement& x) const;

  std::vector<int64_t> factors_;
  int64_t order_ = 1;
  int64_t exponent_ = 1;
};

AbelianGroup ParseGroup(std::string_view literal);

// Prime-power factorization helpers shared by the bound evaluators.
bool IsPrime(int64_t n);
// Returns (p, a) with q = p^a, or nullopt if q is not a prime power >= 2.
std::optional<std::pair<int64_t, int>> PrimePowerDecompose(int64_t q);
std::vector<std::pair<int64_t, int>> Factorize(int64_t n);
int64_t IntPow(int64_t base, int exp);

struct SylowComponent {
  int64_t prime = 0;
  AbelianGroup group;
  int cyclic_count = 0;
  int64_t exponent = 0;
  // Index of the component's first coordinate inside the parent group.
  int offset = 0;
};

std::vector<SylowComponent> SylowSplit(const AbelianGroup& g);

// Exponents a_1 >= ... >= a_n of a p-group.
std::vector<int> PGroupShape(const AbelianGroup& g);

// A subgroup H of G together with the quotient map G -> G/H, in the two
// shapes the recursive solvers use:
//   * PMultiples: G a p-group, H = pG, G/H = F_p^n (per-coordinate mod p).
//   * SylowFactor: H = the last Sylow component, G/H = the other components.
// In both cases exp(G) = exp(H) * exp(G/H) whenever H is non-trivial.
class SubgroupQuotient {
 public:
  enum class Kind { kPMultiples, kSylowFactor };

  static SubgroupQuotient PMultiples(const AbelianGroup& g);
  static SubgroupQuotient SylowFactor(const AbelianGroup& g);

  Kind kind() const { return kind_; }
  const AbelianGroup& group() const { return group_; }
  const AbelianGroup& quotient() const { return quotient_; }
  // Empty when H is trivial.
  const std::optional<AbelianGroup>& subgroup() const { return subgroup_; }

  GroupElement Project(const GroupElement& x) const;
  // H-element -> the corresponding G-element.
  GroupElement Embed(const GroupElement& h) const;
  // Inverse of Embed; throws kInvalidElement unless x lies in H.
  GroupElement Preimage(const GroupElement& x) const;
  bool InSubgroup(const GroupElement& x) const;

 private:
  SubgroupQuotient() = default;

  Kind kind_ = Kind::kPMultiples;
  AbelianGroup group_;
  AbelianGroup quotient_;
  std::optional<AbelianGroup> subgroup_;
  int64_t prime_ = 0;
  int split_ = 0;  // PMultiples: factors with a_i >= 2; SylowFactor: offset.
};

// Group arithmetic on mixed-radix indices, backed by a Cayley table for
// small groups. Used by the exhaustive searches.
class IndexedGroup {
 public:
  explicit IndexedGroup(const AbelianGroup& g);

  const AbelianGroup& group() const { return group_; }
  int64_t size() const { return size_; }
  int64_t Add(int64_t a, int64_t b) const {
    if (!table_.empty()) return table_[a * size_ + b];
    return AddSlow(a, b);
  }
  int64_t Neg(int64_t a) const { return neg_.empty() ? NegSlow(a) : neg_[a]; }
  int64_t Scale(int64_t c, int64_t a) const;

 private:
  int64_t AddSlow(int64_t a, int64_t b) const;
  int64_t NegSlow(int64_t a) const;

  AbelianGroup group_;
  int64_t size_;
  std::vector<int32_t> table_;
  std::vector<int32_t> neg_;
};

// A finite set of distinct elements, stored in canonical index order.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(AbelianGroup g) : group_(std::move(g)) {}
  // Throws kInvalidElement for invalid or repeated points.
  PointSet(AbelianGroup g, std::vector<GroupElement> points);
  static PointSet FromIndices(AbelianGroup g, std::vector<int64_t> indices);

  const AbelianGroup& group() const { return group_; }
  const std::vector<GroupElement>& points() const { return points_; }
  const std::vector<int64_t>& indices() const { return indices_; }
  int64_t size() const { return static_cast<int64_t>(points_.size()); }
  bool empty() const { return points_.empty(); }
  bool Contains(const GroupElement& x) const;
  // Position of x in points(), or -1.
  int64_t PositionOf(const GroupElement& x) const;

 private:
  AbelianGroup group_;
  std::vector<GroupElement> points_;
  std::vector<int64_t> indices_;
};

}  // namespace zslab

#endif  // ZSLAB_GROUP_H_
