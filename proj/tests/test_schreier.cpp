#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "test_support.hpp"
#include "tsirelson/errors.hpp"
#include "tsirelson/oracle.hpp"
#include "tsirelson/sample.hpp"
#include "tsirelson/schreier.hpp"

namespace tsirelson {
namespace {

using schreier::is_admissible;
using schreier::is_maximal;
using schreier::is_member;

std::vector<Pos> subset_of(unsigned mask, Pos universe) {
  std::vector<Pos> out;
  for (Pos p = 1; p <= universe; ++p)
    if (mask >> (p - 1) & 1u) out.push_back(p);
  return out;
}

// F = E_1 < ... < E_l with every E_i in S_n and {min E_i} in S_k.
bool composes(const std::vector<Pos>& f, std::size_t from, std::vector<Pos>& minima, int n, int k) {
  if (from == f.size()) return true;
  for (std::size_t to = from + 1; to <= f.size(); ++to) {
    std::vector<Pos> block(f.begin() + static_cast<long>(from), f.begin() + static_cast<long>(to));
    if (!is_member(block, n)) break;
    minima.push_back(f[from]);
    bool ok = is_member(minima, k) && composes(f, to, minima, n, k);
    minima.pop_back();
    if (ok) return true;
  }
  return false;
}

TEST(Schreier, SmallMembership) {
  EXPECT_TRUE(is_member(FinSet{}, 0));
  EXPECT_TRUE(is_member(FinSet{7}, 0));
  EXPECT_FALSE(is_member(FinSet{2, 3}, 0));
  EXPECT_TRUE(is_member(FinSet{2, 3}, 1));
  EXPECT_FALSE(is_member(FinSet{2, 3, 4}, 1));
  EXPECT_TRUE(is_member(FinSet{3, 4, 5}, 1));
  EXPECT_FALSE(is_member(FinSet{1, 2}, 3));
  EXPECT_TRUE(is_member(FinSet{2, 3, 4, 5, 6, 7}, 2));
  EXPECT_FALSE(is_member(FinSet{2, 3, 4, 5, 6, 7, 8}, 2));
}

TEST(Schreier, MinLevel) {
  EXPECT_EQ(schreier::min_level(FinSet{5}.span()), 0);
  EXPECT_EQ(schreier::min_level(FinSet{1, 2}.span()), -1);
  EXPECT_EQ(schreier::min_level(FinSet{2, 3, 4, 5, 6, 7}.span()), 2);
  EXPECT_EQ(schreier::min_level(FinSet{2, 3, 4}.span()), 2);
}

TEST(Schreier, Maximality) {
  EXPECT_TRUE(is_maximal(FinSet{3, 4, 5}, 1));
  EXPECT_FALSE(is_maximal(FinSet{3, 4}, 1));
  EXPECT_TRUE(is_maximal(FinSet{2, 3, 4, 5, 6, 7}, 2));
  EXPECT_FALSE(is_maximal(FinSet{}, 1));
  try {
    (void)is_maximal(FinSet{2, 3, 4}, 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMember);
  }
}

TEST(Schreier, Admissibility) {
  EXPECT_TRUE(is_admissible({{2}, {3, 4}}, 1));
  EXPECT_FALSE(is_admissible({{2}, {3, 4}, {5}}, 1));
  EXPECT_FALSE(is_admissible({{2, 5}, {3, 4}}, 1));
  EXPECT_FALSE(is_admissible({{2}, {}}, 1));
  EXPECT_TRUE(is_admissible({{2}, {3, 4}, {5}}, 1, 2));
  EXPECT_FALSE(is_admissible({{1}, {3}}, 1));
  EXPECT_THROW((void)is_admissible(std::vector<FinSet>{FinSet{2}}, 1, 0), Error);
}

TEST(Schreier, SetSequenceRejectsOverlap) {
  EXPECT_THROW(SetSequence({FinSet{2, 4}, FinSet{3}}), Error);
  EXPECT_EQ(SetSequence({FinSet{2, 3}, FinSet{5}}).minima(), (std::vector<Pos>{2, 5}));
}

TEST(Schreier, GreedyAgreesWithLiteralRecursion) {
  for (int n = 0; n <= 3; ++n) {
    for (unsigned mask = 0; mask < (1u << 12); ++mask) {
      FinSet f(subset_of(mask, 12));
      ASSERT_EQ(is_member(f, n), oracle::brute_member(f, n)) << "mask " << mask << " n " << n;
    }
  }
}

TEST(Schreier, Hereditary) {
  for (int n = 1; n <= 3; ++n) {
    for (unsigned mask = 1; mask < (1u << 12); ++mask) {
      std::vector<Pos> f = subset_of(mask, 12);
      if (!is_member(f, n)) continue;
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        std::vector<Pos> g = f;
        g.erase(g.begin() + static_cast<long>(drop));
        ASSERT_TRUE(is_member(g, n)) << "mask " << mask;
      }
    }
  }
}

TEST(Schreier, Spreading) {
  VectorSampler rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = static_cast<int>(rng.below(3)) + 1;
    std::vector<Pos> f;
    Pos p = 1 + static_cast<Pos>(rng.below(4));
    const std::size_t size = 1 + rng.below(10);
    for (std::size_t i = 0; i < size; ++i, p += 1 + static_cast<Pos>(rng.below(2))) f.push_back(p);
    if (!is_member(f, n)) continue;
    std::vector<Pos> g = f;
    Pos shift = 0;
    for (auto& e : g) e += (shift += static_cast<Pos>(rng.below(3)));
    ASSERT_TRUE(is_member(g, n));
  }
}

TEST(Schreier, CompositionRaisesLevel) {
  for (int n = 0; n <= 3; ++n) {
    for (int k = 1; n + k <= 4; ++k) {
      for (unsigned mask = 0; mask < (1u << 12); ++mask) {
        std::vector<Pos> f = subset_of(mask, 12);
        std::vector<Pos> minima;
        ASSERT_EQ(composes(f, 0, minima, n, k), is_member(f, n + k)) << "mask " << mask << " n " << n << " k " << k;
      }
    }
  }
}

TEST(Schreier, EnumerationMatchesMembership) {
  for (int n = 0; n <= 2; ++n) {
    std::size_t count = 0;
    FinSet previous;
    bool first = true;
    schreier::enumerate(n, 10, [&](const FinSet& f) {
      EXPECT_TRUE(is_member(f, n));
      if (!first) EXPECT_LT(previous, f);
      previous = f;
      first = false;
      ++count;
    });
    std::size_t expected = 0;
    for (unsigned mask = 0; mask < (1u << 10); ++mask) expected += is_member(subset_of(mask, 10), n);
    EXPECT_EQ(count, expected) << "n " << n;
  }
  EXPECT_THROW(schreier::enumerate(5, 10), Error);
  EXPECT_THROW(schreier::enumerate(1, 21), Error);
}

TEST(Schreier, MaxWeightSubsetMatchesEnumeration) {
  VectorSampler rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(trial % 4);
    std::map<Pos, Scalar> weights;
    for (Pos p = 1; p <= 10; ++p)
      if (rng.below(3) != 0) weights[p] = abs(rng.entry());
    Scalar best = 0;
    FinSet witness;
    schreier::enumerate(n, 10, [&](const FinSet& f) {
      Scalar w = 0;
      for (Pos p : f.elements()) {
        auto it = weights.find(p);
        if (it != weights.end()) w += it->second;
      }
      if (w > best) {
        best = w;
        witness = f;
      }
    });
    auto got = schreier::max_weight_subset(weights, n);
    ASSERT_EQ(got.value, best) << "trial " << trial;
    EXPECT_TRUE(is_member(got.set, n));
    Scalar w = 0;
    for (Pos p : got.set.elements()) w += weights.at(p);
    EXPECT_EQ(w, best);
  }
}

TEST(Schreier, MaxWeightSubsetRejectsNegativeWeights) {
  EXPECT_THROW(schreier::max_weight_subset({{2, -1}}, 1), Error);
  EXPECT_EQ(schreier::max_weight_subset({}, 2).value, 0);
}

}  // namespace
}  // namespace tsirelson
