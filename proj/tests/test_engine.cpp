#include <gtest/gtest.h>

#include <map>

#include "test_support.hpp"
#include "tsirelson/errors.hpp"
#include "tsirelson/schreier.hpp"

namespace tsirelson {
namespace {

using testing::checked;
using testing::ones;
using testing::q;

TEST(Engine, BasisVectorsHaveNormOne) {
  for (Pos m : {1, 2, 5, 40}) {
    EXPECT_EQ(checked(FinVec::unit(m), defs::tsirelson()), 1);
    EXPECT_EQ(checked(FinVec::unit(m), defs::implicit(2, q("1/4"))), 1);
    EXPECT_EQ(checked(FinVec::unit(m), defs::norm_n(3)), 1);
    EXPECT_EQ(checked(FinVec::unit(m), defs::mixed(testing::tail, q("1/2"))), 1);
  }
}

TEST(Engine, TsirelsonSmallVectors) {
  EXPECT_EQ(checked(ones(1, 3), defs::tsirelson()), 1);
  EXPECT_EQ(checked(ones(3, 5), defs::tsirelson()), q("3/2"));
  // {2},{3,4,5} with {3},{4},{5} inside: 1/2 (1 + 3/2).
  EXPECT_EQ(checked(ones(2, 5), defs::tsirelson()), q("3/2"));
  EXPECT_EQ(checked(ones(2, 7), defs::tsirelson()), 2);
  EXPECT_EQ(checked(FinVec{}, defs::tsirelson()), 0);
}

TEST(Engine, SignsDoNotMatter) {
  FinVec x{{3, 1}, {4, -1}, {5, q("1/2")}};
  EXPECT_EQ(checked(x, defs::tsirelson()), checked(x.abs(), defs::tsirelson()));
}

TEST(Engine, ImplicitLevelTwo) {
  EXPECT_EQ(checked(ones(3, 5), defs::implicit(2, q("1/4"))), 1);
  EXPECT_EQ(checked(ones(2, 7), defs::implicit(2, q("1/4"))), q("3/2"));
}

TEST(Engine, TreeNorms) {
  const FinVec x = ones(3, 5);
  EXPECT_EQ(checked(x, defs::seminorm_jn(1, 2)), q("3/2"));
  EXPECT_EQ(checked(x, defs::norm_n(2)), 1);
  EXPECT_EQ(checked(x, defs::norm_jn(1, 2)), q("3/2"));
  EXPECT_EQ(checked(ones(2, 7), defs::norm_n(2)), q("3/2"));
}

TEST(Engine, NormOneIsTsirelson) {
  for (const FinVec& x : {ones(2, 7), ones(3, 9), FinVec{{2, 3}, {3, -1}, {7, q("5/2")}, {8, 1}}}) {
    EXPECT_EQ(checked(x, defs::norm_n(1)), checked(x, defs::tsirelson()));
  }
}

TEST(Engine, MixedWithUnitCoefficientsIsTsirelson) {
  auto one = [](int) { return Scalar(1); };
  for (const FinVec& x : {ones(2, 7), ones(3, 12), FinVec{{2, 3}, {3, -1}, {7, q("5/2")}, {8, 1}}}) {
    EXPECT_EQ(checked(x, defs::mixed(one, q("1/2"))), checked(x, defs::tsirelson()));
  }
}

TEST(Engine, SchreierNorm) {
  EXPECT_EQ(engine::schreier_norm(FinVec{{1, 1}, {2, -1}, {3, 1}}, 1), 1);
  EXPECT_EQ(engine::schreier_norm(FinVec{}, 2), 0);
  EXPECT_EQ(engine::schreier_norm(ones(3, 5), 1), 3);
  EXPECT_EQ(engine::schreier_norm(ones(3, 5), 0), 1);
  EXPECT_EQ(engine::schreier_norm(ones(2, 7), 2), 6);
  // Positive and negative parts are maximized separately.
  EXPECT_EQ(engine::schreier_norm(FinVec{{3, 1}, {4, -2}, {5, 1}, {6, -2}}, 1), 4);
}

TEST(Engine, BestAdmissibleSum) {
  auto r = engine::best_admissible_sum(ones(3, 5), 1, defs::norm_n(2));
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.witness, SetSequence({FinSet{3}, FinSet{4}, FinSet{5}}));

  auto single = engine::best_admissible_sum(FinVec::unit(1), 2, defs::tsirelson());
  EXPECT_EQ(single.value, 1);
  EXPECT_EQ(single.witness, SetSequence({FinSet{1}}));

  const FinVec x{{2, 1}, {3, q("1/2")}, {6, -2}};
  auto whole = engine::best_admissible_sum(x, 0, defs::tsirelson());
  EXPECT_EQ(whole.value, checked(x, defs::tsirelson()));
  EXPECT_EQ(whole.witness, SetSequence({FinSet{2, 3, 6}}));
}

TEST(Engine, ScaledAdmissibility) {
  // Scale 2 allows twice as many parts from the same start; the parts need
  // not cover the support, so {3},{4},{5} wins at scale 1.
  EXPECT_EQ(engine::best_admissible_sum(ones(2, 5), 1, defs::norm_n(3), 2).value, 4);
  EXPECT_EQ(engine::best_admissible_sum(ones(2, 5), 1, defs::norm_n(3), 1).value, 3);
}

TEST(Engine, BoundedIntervalSums) {
  auto leaf = engine::IntervalLeaf::from_def(ones(3, 8), defs::tsirelson());
  EXPECT_EQ(engine::best_bounded_sum(leaf, 6).value, 6);
  EXPECT_EQ(engine::best_bounded_sum(leaf, 1).value, checked(ones(3, 8), defs::tsirelson()));
}

TEST(Engine, SupportLimit) {
  engine::Limits tight;
  tight.max_support = 4;
  try {
    (void)engine::eval(ones(1, 5), defs::tsirelson(), tight);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SupportTooLarge);
  }
}

TEST(Engine, InvalidDefinitions) {
  auto kind_of = [](const NormDef& d) {
    try {
      (void)engine::eval(ones(2, 5), d);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Domain;
  };
  EXPECT_EQ(kind_of(defs::implicit(1, q("3/2"))), ErrorKind::InvalidDef);
  EXPECT_EQ(kind_of(defs::implicit(0, q("1/2"))), ErrorKind::InvalidDef);
  EXPECT_EQ(kind_of(defs::norm_n(0)), ErrorKind::InvalidDef);
  EXPECT_EQ(kind_of(defs::mixed([](int) { return Scalar(0); }, q("1/2"))), ErrorKind::InvalidDef);
  NormDef scaled = defs::tsirelson();
  scaled.scale = 0;
  EXPECT_THROW(scaled.validate(), Error);
}

TEST(Certificate, RoundTripAndRendering) {
  const FinVec x = ones(3, 5);
  NormResult r = engine::eval(x, defs::tsirelson());
  EXPECT_EQ(check_certificate(x, defs::tsirelson(), r.certificate), q("3/2"));
  EXPECT_EQ(r.certificate.node_count(), 4u);
  EXPECT_EQ(r.certificate.render(), "{3,4,5}@0\n  {3}@1 = 1\n  {4}@1 = 1\n  {5}@1 = 1\n");
}

TEST(Certificate, SingleNodeOnBasisVector) {
  const FinVec x = FinVec::unit(5);
  NormResult r = engine::eval(x, defs::tsirelson());
  EXPECT_EQ(r.certificate.node_count(), 1u);
  EXPECT_EQ(check_certificate(x, defs::tsirelson(), r.certificate), 1);
}

TEST(Certificate, RejectsInadmissibleChildren) {
  const FinVec x = ones(2, 4);
  NormResult r = engine::eval(x, defs::tsirelson());
  Certificate forged;
  forged.root = CertNode{FinSet{2, 3, 4}, 0, 1, {}, std::nullopt};
  for (Pos p : {2, 3, 4}) forged.root->children.push_back(CertNode{FinSet{p}, 1, 0, {}, Scalar(1)});
  EXPECT_THROW((void)check_certificate(x, defs::tsirelson(), forged), BadTree);
  EXPECT_EQ(check_certificate(x, defs::tsirelson(), r.certificate), r.value);
}

TEST(Certificate, RejectsWrongDefinition) {
  const FinVec x = ones(3, 5);
  NormResult r = engine::eval(x, defs::tsirelson());
  EXPECT_THROW((void)check_certificate(x, defs::implicit(2, q("1/4")), r.certificate), BadTree);
}

}  // namespace
}  // namespace tsirelson
