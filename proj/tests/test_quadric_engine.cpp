#include <gtest/gtest.h>

#include "sphgeo/quadric_engine.hpp"
#include "test_support.hpp"

using namespace sg;

namespace {

Mat random_isometry(sgt::Rng& rng, const QuadricForm& q, int count) {
  Mat f = Mat::Identity(q.size(), q.size());
  for (int j = 0; j < count;) {
    const Vec m = rng.gaussian(q.size());
    if (std::abs(q(m)) < 0.2 * m.squaredNorm()) continue;
    f = reflection_matrix(q, m) * f;
    ++j;
  }
  return f;
}

}  // namespace

TEST(Signature, OfDiagonalForms) {
  EXPECT_EQ(QuadricForm::diagonal({1, 1, 1, -1}).signature(), (Signature{3, 1, 0}));
  EXPECT_EQ(QuadricForm::diagonal({1, 0, -1}).signature(), (Signature{1, 1, 1}));
  EXPECT_TRUE(QuadricForm::diagonal({1, 0, -1}).degenerate());
}

TEST(Signature, InvariantUnderCongruence) {
  sgt::Rng rng(4);
  const QuadricForm q = QuadricForm::diagonal({1, 1, -1, -1, 0});
  for (int t = 0; t < 20; ++t) {
    const Mat p = Mat::Random(5, 5) + 3.0 * Mat::Identity(5, 5);
    EXPECT_EQ(signature_of(Mat(p.transpose() * q.matrix() * p)), q.signature());
  }
}

TEST(Classify, Causality) {
  const QuadricForm q = QuadricForm::diagonal({1, 1, 1, -1});
  EXPECT_EQ(classify(q, HPoint({0, 0, 0, 1})), Causality::Timelike);
  EXPECT_EQ(classify(q, HPoint({1, 0, 0, 0})), Causality::Spacelike);
  EXPECT_EQ(classify(q, HPoint({1, 0, 0, 1})), Causality::Lightlike);
}

TEST(Polar, OfPointIsTangentPlaneOnQuadric) {
  const QuadricForm q = QuadricForm::diagonal({1, 1, -1});
  const HPoint x({0.6, 0.8, 1.0});
  const Subspace p = polar(q, join({x}));
  EXPECT_EQ(p.dim(), 1);
  EXPECT_TRUE(p.contains(x));
}

TEST(LineIntersect, Kinds) {
  const QuadricForm q = QuadricForm::diagonal({1, 1, -1});
  const auto two = line_intersect(q, HPoint({0, 0, 1}), HPoint({1, 0, 0}));
  ASSERT_EQ(two.kind, LineKind::TwoReal);
  ASSERT_EQ(two.points.size(), 2u);
  for (const auto& p : two.points) EXPECT_NEAR(eval_normalized(q, p.coords()), 0.0, 1e-14);

  EXPECT_EQ(line_intersect(q, HPoint({2, 0, 1}), HPoint({0, 1, 0})).kind, LineKind::TwoComplexConjugate);
  EXPECT_EQ(line_intersect(q, HPoint({1, 0, 1}), HPoint({0, 1, 0})).kind, LineKind::Tangent);
  const QuadricForm h = QuadricForm::diagonal({1, -1, 1, -1});
  EXPECT_EQ(line_intersect(h, HPoint({1, 1, 0, 0}), HPoint({0, 0, 1, 1})).kind, LineKind::Contained);
}

TEST(TangentCone, ContainsTangentLines) {
  const QuadricForm q = QuadricForm::diagonal({1, 1, -1});
  const HPoint x({2.0, 0.0, 1.0});
  const QuadricForm c = tangent_cone(q, x);
  const HPoint touch({0.5, std::sqrt(0.75), 1.0});
  EXPECT_NEAR(eval_normalized(c, touch.coords()), 0.0, 1e-14);
  EXPECT_NEAR(eval_normalized(c, x.coords()), 0.0, 1e-14);
}

TEST(Reflection, InvolutionFixingMirrorPolar) {
  sgt::Rng rng(8);
  const QuadricForm q = QuadricForm::diagonal({1, 1, 1, -1});
  const Vec m = Vec::Unit(4, 0) + 0.3 * Vec::Unit(4, 3);
  const Mat r = reflection_matrix(q, m);
  EXPECT_LT((r * r - Mat::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT(form_residual(q, r), 1e-14);
  Vec y = rng.gaussian(4);
  y -= q(y, m) / q(m) * m;
  EXPECT_LT((r * y - y).norm(), 1e-14 * y.norm());
  EXPECT_THROW(reflect(q, HPoint({1, 0, 0, 1})), GeometryError);
}

class Decompose : public ::testing::TestWithParam<std::vector<double>> {};

TEST_P(Decompose, RecomposesWithBoundedMirrorCount) {
  const auto& d = GetParam();
  Vec diag = Eigen::Map<const Vec>(d.data(), static_cast<Eigen::Index>(d.size()));
  const QuadricForm q(Mat(diag.asDiagonal()));
  sgt::Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    const Mat f = random_isometry(rng, q, rng.integer(1, 2 * q.size()));
    const auto mirrors = decompose_reflections(q, ProjMap(f));
    EXPECT_LE(static_cast<int>(mirrors.size()), q.size());
    EXPECT_LT(map_distance(compose_reflections(q, mirrors), f), 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Signatures, Decompose,
                         ::testing::Values(std::vector<double>{1, 1, -1}, std::vector<double>{1, 1, 1, -1},
                                           std::vector<double>{1, 1, -1, -1}, std::vector<double>{1, 1, 1, 1},
                                           std::vector<double>{1, 1, 1, -1, -1}));

TEST(Decompose, IdentityNeedsNoMirror) {
  const QuadricForm q = QuadricForm::diagonal({1, 1, 1, -1});
  EXPECT_TRUE(decompose_reflections(q, ProjMap::identity(4)).empty());
}

TEST(Decompose, RejectsNonIsometry) {
  const QuadricForm q = QuadricForm::diagonal({1, 1, 1, -1});
  Mat f = Mat::Identity(4, 4);
  f(0, 1) = 0.5;
  EXPECT_THROW(decompose_reflections(q, ProjMap(f)), GeometryError);
}

TEST(Pencil, MemberThroughLineContainsIt) {
  sgt::Rng rng(12);
  const QuadricForm q1 = QuadricForm::diagonal({1, 1, -1, 0});
  const QuadricForm q2 = QuadricForm::diagonal({1, -2, 0, -1});
  const Pencil p(q1, q2);
  auto base_point = [&] {
    for (;;) {
      const double a = rng.uniform(-1, 1), b = rng.uniform(-1, 1);
      const double w2 = a * a - 2 * b * b;
      if (w2 <= 0.1 * (a * a + b * b)) continue;
      return Vec((Vec(4) << a, b, std::sqrt(a * a + b * b) * rng.sign(), std::sqrt(w2) * rng.sign()).finished());
    }
  };
  for (int t = 0; t < 10; ++t) {
    const Vec x = base_point(), y = base_point();
    double tt = 0.0;
    const QuadricForm m = pencil_member_through(p, HPoint(x), HPoint(y), &tt);
    EXPECT_LT(map_distance(m.matrix(), p.member_matrix(1.0, tt)), 1e-14);
    for (double s : {0.3, -1.7, 4.0}) EXPECT_NEAR(eval_normalized(m, Vec(x + s * y)), 0.0, 1e-12);
  }
}

TEST(Pencil, FitResidualOfMember) {
  const QuadricForm q1 = QuadricForm::diagonal({1, 1, -1});
  const QuadricForm q2 = QuadricForm::diagonal({1, -1, 0});
  EXPECT_LT(pencil_fit_residual({q1.matrix(), q2.matrix()}, Mat(2.0 * q1.matrix() - 3.0 * q2.matrix())), 1e-14);
  EXPECT_GT(pencil_fit_residual({q1.matrix(), q2.matrix()}, QuadricForm::diagonal({0, 1, 5}).matrix()), 1e-3);
}
