#include <gtest/gtest.h>

#include <vector>

#include "test_support.hpp"
#include "tsirelson/construct.hpp"
#include "tsirelson/errors.hpp"

namespace tsirelson {
namespace {

using construct::BlockBasis;
using testing::checked;
using testing::ones;
using testing::q;

BlockBasis units_at(const std::vector<Pos>& positions) {
  BlockBasis b;
  for (Pos p : positions) b.vectors.push_back(FinVec::unit(p));
  b.normalized = true;
  return b;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::Domain;
}

TEST(Basis, UnitBasis) {
  const BlockBasis b = BlockBasis::unit(5);
  EXPECT_EQ(b.size(), 5u);
  EXPECT_EQ(b.at(3), FinVec::unit(3));
  EXPECT_EQ(b.mins(), (std::vector<Pos>{1, 2, 3, 4, 5}));
  EXPECT_NO_THROW(b.validate());
}

TEST(Basis, RejectsOverlappingBlocks) {
  BlockBasis b;
  b.vectors = {ones(1, 3), ones(3, 4)};
  EXPECT_THROW(b.validate(), Error);
}

TEST(Basis, Thinning) {
  EXPECT_EQ(construct::thin(units_at({1, 2, 3, 5, 7, 20, 61, 200}), 3).mins(),
            (std::vector<Pos>{1, 5, 20, 61, 200}));
  EXPECT_EQ(construct::thin(units_at({1}), 4).mins(), (std::vector<Pos>{1}));
  EXPECT_EQ(construct::thin(units_at({2, 4, 8, 16}), 1).mins(), (std::vector<Pos>{2, 4, 8, 16}));
}

TEST(Average, FirstOrderQuarter) {
  const BlockBasis basis = BlockBasis::unit(64);
  const auto a = construct::n_eps_average(basis, 1, q("1/4"), 1);
  EXPECT_EQ(a.z, q("2/9") * ones(9, 17));
  EXPECT_EQ(a.certificate.index_set, FinSet(std::vector<Pos>{9, 10, 11, 12, 13, 14, 15, 16, 17}));
  EXPECT_EQ(a.certificate.max_subfamily_sum, q("2/9"));
  EXPECT_EQ(a.certificate.norm_lower, 1);
  EXPECT_EQ(checked(a.z, defs::tsirelson()), 1);
  const auto check = construct::check_average(basis, a.z, a.certificate);
  EXPECT_TRUE(check.ok());
  EXPECT_EQ(check.subfamily_sum, q("2/9"));
}

TEST(Average, SecondOrderCoefficientsSumToFour) {
  const BlockBasis basis = BlockBasis::unit(256);
  const auto a = construct::n_eps_average(basis, 2, q("9/10"), 1);
  Scalar sum = 0;
  for (const auto& [l, alpha] : a.certificate.coeffs) sum += alpha;
  EXPECT_EQ(sum, 4);
  EXPECT_LT(a.certificate.max_subfamily_sum, q("9/10"));
  EXPECT_TRUE(construct::check_average(basis, a.z, a.certificate).ok());
}

TEST(Average, TamperedCertificateFailsCheck) {
  const BlockBasis basis = BlockBasis::unit(64);
  auto a = construct::n_eps_average(basis, 1, q("1/4"), 1);
  FinVec z = a.z;
  z.set(9, q("1/9"));
  EXPECT_FALSE(construct::check_average(basis, z, a.certificate).ok());
  a.certificate.epsilon = q("1/10");
  EXPECT_FALSE(construct::check_average(basis, a.z, a.certificate).subfamily_small);
}

TEST(Average, SmallEpsilonExceedsSupportBound) {
  const BlockBasis basis = BlockBasis::unit(2048);
  EXPECT_EQ(kind_of([&] { construct::n_eps_average(basis, 2, q("1/8"), 1); }),
            ErrorKind::EpsilonTooSmallForBudget);
  EXPECT_EQ(kind_of([&] { construct::n_eps_average(basis, 1, q("1/1024"), 1); }),
            ErrorKind::EpsilonTooSmallForBudget);
}

TEST(Average, ShortBasis) {
  EXPECT_EQ(kind_of([&] { construct::n_eps_average(BlockBasis::unit(12), 1, q("1/4"), 1); }),
            ErrorKind::InsufficientBasis);
}

TEST(Average, RealizedAverageReportsItsEpsilon) {
  const BlockBasis basis = BlockBasis::unit(256);
  const auto a = construct::realized_average(basis, 1, 1, 4);
  EXPECT_EQ(a.z, q("1/2") * ones(4, 7));
  EXPECT_EQ(a.certificate.max_subfamily_sum, q("1/2"));
  EXPECT_TRUE(construct::check_average(basis, a.z, a.certificate).sum_exact);
}

TEST(L1Average, MaximalFirstOrderSet) {
  const BlockBasis basis = BlockBasis::unit(32);
  const FinVec z = construct::l1_average(basis, 1, 4);
  EXPECT_EQ(z, q("1/2") * ones(4, 7));
  const Scalar norm = checked(z, defs::tsirelson());
  EXPECT_GE(norm, 1);
  EXPECT_LE(norm, 2);
  EXPECT_EQ(kind_of([&] { construct::l1_average(BlockBasis::unit(6), 1, 4); }), ErrorKind::InsufficientBasis);
}

TEST(Stabilize, FirstOrderIsTheAverage) {
  const BlockBasis basis = BlockBasis::unit(256);
  const auto s = construct::stabilize(basis, 1, q("1/4"));
  ASSERT_EQ(s.parts.size(), 1u);
  EXPECT_EQ(s.z, s.parts[0].z);
  EXPECT_EQ(s.norm, checked(s.z, defs::tsirelson()));
}

TEST(Stabilize, SecondOrderNeedsRelaxation) {
  const BlockBasis basis = BlockBasis::unit(2048);
  const auto kind = kind_of([&] { construct::stabilize(basis, 2, q("1/8")); });
  EXPECT_TRUE(kind == ErrorKind::EpsilonTooSmallForBudget || kind == ErrorKind::BudgetExceeded);
}

}  // namespace
}  // namespace tsirelson
