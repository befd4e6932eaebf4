#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tsirelson/sample.hpp"

namespace tsirelson {
namespace {

using testing::checked;
using testing::q;

TEST(Properties, NormEquivalenceBounds) {
  VectorSampler sampler(13);
  for (int trial = 0; trial < 30; ++trial) {
    const FinVec x = sampler.vector(24);
    const Scalar t = checked(x, defs::tsirelson());
    for (int n = 1; n <= 3; ++n) {
      const Scalar tn = checked(x, defs::norm_n(n));
      ASSERT_LE(tn, t) << "n " << n;
      ASSERT_LE(t, pow2(n - 1) * tn) << "n " << n;
    }
  }
}

TEST(Properties, SeminormIsScaledAdmissibleSumOfNormN) {
  VectorSampler sampler(17);
  for (int trial = 0; trial < 20; ++trial) {
    const FinVec x = sampler.vector(16);
    for (auto [j, n] : {std::pair{0, 2}, {1, 2}, {1, 3}, {2, 3}}) {
      const Scalar sum = engine::best_admissible_sum(x, j, defs::norm_n(n)).value;
      ASSERT_EQ(checked(x, defs::seminorm_jn(j, n)), pow2(-j) * sum) << j << "," << n;
    }
  }
}

TEST(Properties, SeminormShiftsByAdmissibleSums) {
  VectorSampler sampler(19);
  for (int trial = 0; trial < 20; ++trial) {
    const FinVec x = sampler.vector(16);
    for (auto [j, n] : {std::pair{0, 2}, {1, 2}, {1, 3}}) {
      for (int k = 1; k <= 2; ++k) {
        const Scalar sum = engine::best_admissible_sum(x, k, defs::seminorm_jn(j, n)).value;
        ASSERT_EQ(checked(x, defs::seminorm_jn(j + k, n)), pow2(-k) * sum) << j << "," << n << " k " << k;
      }
    }
  }
}

TEST(Properties, SeminormDecreasesAlongPeriods) {
  VectorSampler sampler(23);
  for (int trial = 0; trial < 20; ++trial) {
    const FinVec x = sampler.vector(16);
    for (int n = 1; n <= 3; ++n) {
      for (int j = 0; j < n; ++j) {
        ASSERT_GE(checked(x, defs::seminorm_jn(j, n)), checked(x, defs::seminorm_jn(j + n, n)));
      }
    }
  }
}

TEST(Properties, SeminormsAcrossAPeriodDominateTheNorm) {
  VectorSampler sampler(29);
  for (int trial = 0; trial < 30; ++trial) {
    const FinVec x = sampler.vector(16);
    const Scalar t = checked(x, defs::tsirelson());
    for (int n = 1; n <= 3; ++n) {
      Scalar sum = 0;
      for (int j = 0; j < n; ++j) sum += checked(x, defs::seminorm_jn(j, n));
      ASSERT_GE(sum, t) << "n " << n;
    }
  }
}

TEST(Properties, MixedNormIsDominated) {
  VectorSampler sampler(31);
  for (int trial = 0; trial < 30; ++trial) {
    const FinVec x = sampler.vector(16);
    const Scalar t = checked(x, defs::tsirelson());
    ASSERT_LE(checked(x, defs::mixed(testing::tail, q("1/2"))), t);
    ASSERT_LE(checked(x, defs::mixed([](int) { return Scalar(1, 2); }, q("1/2"))), t);
    ASSERT_EQ(checked(x, defs::mixed([](int) { return Scalar(1); }, q("1/2"))), t);
  }
}

TEST(Properties, NormAxioms) {
  VectorSampler sampler(37);
  for (int trial = 0; trial < 30; ++trial) {
    const FinVec x = sampler.vector(12), y = sampler.vector(12);
    const Scalar c = sampler.entry();
    for (const auto& d : {defs::tsirelson(), defs::implicit(2, q("1/4")), defs::norm_jn(1, 2)}) {
      const Scalar nx = checked(x, d), ny = checked(y, d);
      ASSERT_LE(checked(x + y, d), nx + ny) << d.name;
      ASSERT_EQ(checked(c * x, d), abs(c) * nx) << d.name;
      ASSERT_LE(x.sup_norm(), nx) << d.name;
      ASSERT_LE(nx, x.l1_norm()) << d.name;
    }
  }
}

TEST(Properties, UnconditionalAndMonotone) {
  VectorSampler sampler(41);
  for (int trial = 0; trial < 30; ++trial) {
    const FinVec x = sampler.vector(12);
    const Scalar t = checked(x, defs::tsirelson());
    ASSERT_EQ(checked(x.abs(), defs::tsirelson()), t);
    const auto support = x.support();
    std::vector<Pos> half(support.begin(), support.begin() + static_cast<long>(support.size() / 2));
    ASSERT_LE(checked(x.restrict(half), defs::tsirelson()), t);
  }
}

TEST(Properties, SpreadingIncreasesNorm) {
  VectorSampler sampler(43);
  for (int trial = 0; trial < 30; ++trial) {
    const FinVec x = sampler.vector(12);
    FinVec spread;
    Pos shift = 0;
    for (const auto& [p, v] : x.entries()) {
      shift += static_cast<Pos>(sampler.below(3));
      spread.set(p + shift, v);
    }
    ASSERT_LE(checked(x, defs::tsirelson()), checked(spread, defs::tsirelson()));
  }
}

TEST(Properties, SchreierNormDominatesAndNests) {
  VectorSampler sampler(47);
  for (int trial = 0; trial < 30; ++trial) {
    const FinVec x = sampler.vector(20);
    Scalar previous = engine::schreier_norm(x, 0);
    EXPECT_EQ(previous, x.sup_norm());
    for (int m = 1; m <= 3; ++m) {
      const Scalar s = engine::schreier_norm(x, m);
      ASSERT_GE(s, previous);
      ASSERT_LE(s, x.l1_norm());
      previous = s;
    }
  }
}

TEST(Properties, DeterministicAcrossRuns) {
  VectorSampler a(5), b(5);
  for (int trial = 0; trial < 10; ++trial) {
    const FinVec x = a.vector(16), y = b.vector(16);
    ASSERT_EQ(x, y);
    NormResult r = engine::eval(x, defs::tsirelson()), s = engine::eval(y, defs::tsirelson());
    ASSERT_EQ(r.value, s.value);
    ASSERT_EQ(r.certificate.render(), s.certificate.render());
  }
}

}  // namespace
}  // namespace tsirelson
