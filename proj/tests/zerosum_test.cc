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

#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "zslab/error.h"
#include "zslab/zerosum.h"

namespace zslab {
namespace {

GSequence Seq(const char* lit, std::vector<std::vector<int64_t>> items) {
  const AbelianGroup g = ParseGroup(lit);
  std::vector<GroupElement> xs;
  for (auto& c : items) xs.push_back(GroupElement{std::move(c)});
  return GSequence(g, xs);
}

std::vector<oracle::Vec> Raw(const std::vector<GroupElement>& xs) {
  std::vector<oracle::Vec> out;
  for (const auto& x : xs) out.push_back(x.coords);
  return out;
}

TEST(FindZeroSum, Examples) {
  auto w = FindZeroSumSubsequence(Seq("Z3", {{1}, {1}, {1}}), 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->indices, (std::vector<int64_t>{0, 1, 2}));
  EXPECT_FALSE(FindZeroSumSubsequence(Seq("Z3", {{1}, {1}, {2}, {2}}), 3));
  auto w2 = FindZeroSumSubsequence(Seq("Z2^2", {{1, 0}, {1, 0}}), 2);
  ASSERT_TRUE(w2);
  EXPECT_EQ(w2->indices, (std::vector<int64_t>{0, 1}));
}

TEST(FindZeroSum, RejectsBadLength) {
  const auto seq = Seq("Z3", {{1}, {1}});
  EXPECT_THROW(FindZeroSumSubsequence(seq, 3), Error);
  EXPECT_THROW(FindZeroSumSubsequence(seq, 0), Error);
}

TEST(FindZeroSum, AgreesWithNaiveEnumeration) {
  std::mt19937_64 rng(11);
  const std::vector<const char*> groups{"Z2", "Z3", "Z4", "Z2^2", "Z5",
                                        "Z6", "Z7", "Z8", "Z9", "Z3^2",
                                        "Z4xZ2", "Z2^3"};
  for (int trial = 0; trial < 600; ++trial) {
    const AbelianGroup g = ParseGroup(groups[trial % groups.size()]);
    const int64_t len = 1 + static_cast<int64_t>(rng() % 12);
    std::vector<GroupElement> xs;
    for (int64_t i = 0; i < len; ++i) {
      xs.push_back(g.ElementAt(static_cast<int64_t>(rng() % g.order())));
    }
    const GSequence seq(g, xs);
    const int64_t m = 1 + static_cast<int64_t>(rng() % len);
    const auto w = FindZeroSumSubsequence(seq, m);
    EXPECT_EQ(w.has_value(), oracle::HasZeroSumOfSize(Raw(xs), g.factors(), m))
        << g.ToString() << " len " << len << " m " << m;
    if (w) {
      EXPECT_TRUE(VerifyWitness(seq, *w, m));
    }
  }
}

TEST(VerifyWitness, Cases) {
  const auto seq = Seq("Z3", {{1}, {1}, {1}, {2}});
  Witness ok{WitnessKind::kZeroSumSubsequence, {0, 1, 2}, {{{1}}, {{1}}, {{1}}}};
  EXPECT_TRUE(VerifyWitness(seq, ok, 3));
  EXPECT_FALSE(VerifyWitness(seq, ok, 2));
  Witness repeated{WitnessKind::kZeroSumSubsequence, {0, 0, 1},
                   {{{1}}, {{1}}, {{1}}}};
  EXPECT_FALSE(VerifyWitness(seq, repeated));
  Witness nonzero{WitnessKind::kZeroSumSubsequence, {0, 1, 3},
                  {{{1}}, {{1}}, {{2}}}};
  EXPECT_FALSE(VerifyWitness(seq, nonzero));
  Witness mismatch{WitnessKind::kZeroSumSubsequence, {0, 1, 2},
                   {{{1}}, {{1}}, {{2}}}};
  EXPECT_FALSE(VerifyWitness(seq, mismatch));
  Witness out_of_range{WitnessKind::kZeroSumSubsequence, {0, 1, 9},
                       {{{1}}, {{1}}, {{1}}}};
  EXPECT_FALSE(VerifyWitness(seq, out_of_range));
}

TEST(FindDistinctZeroSum, SetWitness) {
  const auto g = AbelianGroup::Elementary(3, 2);
  const PointSet line(g, {{{0, 0}}, {{0, 1}}, {{0, 2}}, {{1, 1}}});
  const auto w = FindDistinctZeroSum(line, 3);
  ASSERT_TRUE(w);
  EXPECT_TRUE(VerifyWitness(line, *w, 3));
  const PointSet free(g, {{{0, 0}}, {{0, 1}}, {{1, 0}}, {{1, 1}}});
  EXPECT_FALSE(FindDistinctZeroSum(free, 3));
}

TEST(SExact, KnownValues) {
  EXPECT_EQ(SExact(ParseGroup("Z5")).value, 9);
  EXPECT_EQ(SExact(ParseGroup("F3^2")).value, 9);
  EXPECT_EQ(SExact(ParseGroup("F2^3")).value, 9);
  EXPECT_EQ(SExact(ParseGroup("Z4xZ2")).value, 9);
}

TEST(SExact, MatchesNaiveOnTinyGroups) {
  for (const char* lit : {"Z2", "Z3", "Z4", "Z2^2", "Z5", "Z6"}) {
    const AbelianGroup g = ParseGroup(lit);
    const auto res = SExact(g);
    ASSERT_TRUE(res.exhaustive) << lit;
    EXPECT_EQ(res.value, oracle::NaiveS(g.factors())) << lit;
  }
}

TEST(SExact, CertificateHasNoZeroSum) {
  for (const char* lit : {"Z6", "F3^2", "Z4xZ2", "F2^3"}) {
    const auto res = SExact(ParseGroup(lit));
    EXPECT_EQ(static_cast<int64_t>(res.certificate.object.size()), res.value - 1);
    EXPECT_TRUE(VerifyCertificate(res.certificate));
    EXPECT_FALSE(oracle::HasZeroSumOfSize(Raw(res.certificate.object),
                                          res.certificate.group.factors(),
                                          res.certificate.m));
  }
}

TEST(SExact, SymmetryDoesNotChangeValues) {
  SearchOptions sym;
  sym.translation_symmetry = true;
  for (const char* lit : {"Z2", "Z6", "Z7", "F3^2", "Z4xZ2", "Z4^2", "F2^3",
                          "Z3xZ6"}) {
    const AbelianGroup g = ParseGroup(lit);
    EXPECT_EQ(SExact(g).value, SExact(g, sym).value) << lit;
    EXPECT_EQ(GExact(g).value, GExact(g, sym).value) << lit;
  }
}

TEST(GExact, KnownValues) {
  EXPECT_EQ(GExact(ParseGroup("F3^2")).value, 5);
  EXPECT_EQ(GExact(ParseGroup("Z5")).value, 5);
  // No two distinct elements of F_2^2 sum to zero: |G| + 1.
  EXPECT_EQ(GExact(ParseGroup("Z2^2")).value, 5);
}

TEST(GExact, MatchesNaiveSubsets) {
  for (const char* lit : {"Z3", "Z4", "Z2^2", "Z6", "Z7", "Z8", "F3^2",
                          "Z4xZ2", "Z2^3", "Z4^2", "Z2^4", "Z12", "Z5"}) {
    const AbelianGroup g = ParseGroup(lit);
    const auto res = GExact(g);
    ASSERT_TRUE(res.exhaustive);
    EXPECT_EQ(res.value, oracle::NaiveG(g.factors())) << lit;
    EXPECT_TRUE(VerifyCertificate(res.certificate)) << lit;
  }
}

TEST(VerifyCertificate, RejectsTampered) {
  auto res = GExact(ParseGroup("F3^2"));
  ASSERT_EQ(res.certificate.object.size(), 4u);
  auto cert = res.certificate;
  cert.object.push_back(GroupElement{{2, 2}});
  if (!FindDistinctZeroSum(PointSet(cert.group, cert.object), 3)) {
    cert.object.back() = GroupElement{{1, 2}};
  }
  EXPECT_FALSE(VerifyCertificate(cert));
}

TEST(Budget, ExhaustionIsReported) {
  SearchOptions tiny;
  tiny.node_budget = 10;
  const auto res = SExact(ParseGroup("F3^3"), tiny);
  EXPECT_FALSE(res.exhaustive);
  EXPECT_FALSE(res.certificate.exhaustive);
  EXPECT_TRUE(VerifyCertificate(res.certificate));
}

TEST(Budget, RejectsHugeGroups) {
  EXPECT_THROW(SExact(ParseGroup("Z2^11")), Error);
}

}  // namespace
}  // namespace zslab
