#include <gtest/gtest.h>

#include "sphgeo/projective_core.hpp"
#include "test_support.hpp"

using namespace sg;

TEST(HPoint, RejectsZeroVector) {
  EXPECT_THROW(HPoint({0.0, 0.0, 0.0}), GeometryError);
}

TEST(HPoint, CanonicalRepresentative) {
  const HPoint x({-2.0, 4.0, -1.0});
  const Vec c = normalize(x).coords();
  EXPECT_DOUBLE_EQ(c.cwiseAbs().maxCoeff(), 1.0);
  EXPECT_GT(c[2], 0.0);
  EXPECT_TRUE(approx_equal(x, HPoint({6.0, -12.0, 3.0})));
  EXPECT_FALSE(approx_equal(x, HPoint({1.0, 2.0, 3.0})));
}

TEST(HPoint, CanonicalIsScaleInvariant) {
  sgt::Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const Vec v = rng.gaussian(5);
    const double s = rng.uniform(0.1, 10.0) * rng.sign();
    EXPECT_LT((canonical(v) - canonical(Vec(s * v))).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Subspace, JoinRejectsDependentPoints) {
  EXPECT_THROW(join({HPoint({1, 0, 0, 0}), HPoint({0, 1, 0, 0}), HPoint({1, 1, 0, 0})}), GeometryError);
  const Subspace u = join({HPoint({1, 0, 0, 0}), HPoint({0, 1, 0, 0})});
  EXPECT_EQ(u.dim(), 1);
  EXPECT_TRUE(u.contains(HPoint({2, -3, 0, 0})));
  EXPECT_FALSE(u.contains(HPoint({0, 0, 1, 0})));
}

TEST(Subspace, DualDimensionsAddUp) {
  sgt::Rng rng(3);
  for (int k = 1; k <= 4; ++k) {
    std::vector<HPoint> pts;
    for (int i = 0; i < k; ++i) pts.emplace_back(rng.gaussian(5));
    const Subspace u = join(pts);
    EXPECT_EQ(u.dim() + u.dual().dim(), u.ambient_dim() - 1);
    EXPECT_TRUE(u.dual().dual().same_as(u));
  }
}

TEST(Subspace, MeetOfTwoPlanesInSpace) {
  const Subspace a = hyperplane(Vec::Unit(4, 0));
  const Subspace b = hyperplane(Vec::Unit(4, 1));
  const Subspace l = meet(a, b);
  EXPECT_EQ(l.dim(), 1);
  EXPECT_TRUE(l.contains(HPoint({0, 0, 1, 5})));
}

TEST(ProjMap, RejectsSingularMatrix) {
  Mat m = Mat::Identity(3, 3);
  m(2, 2) = 0.0;
  EXPECT_THROW(ProjMap{m}, GeometryError);
}

TEST(ProjMap, CompositionAndInverse) {
  sgt::Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const ProjMap f(Mat(Mat::Random(4, 4) + 3.0 * Mat::Identity(4, 4)));
    const ProjMap g(Mat(Mat::Random(4, 4) + 3.0 * Mat::Identity(4, 4)));
    const HPoint x(rng.gaussian(4));
    EXPECT_TRUE(approx_equal((f * g)(x), f(g(x))));
    EXPECT_TRUE(same_map(f * f.inverse(), ProjMap::identity(4)));
  }
}

TEST(ProjMap, ScaleDoesNotMatter) {
  const Mat m = Mat::Random(3, 3) + 2.0 * Mat::Identity(3, 3);
  EXPECT_LT(map_distance(m, Mat(-7.5 * m)), 1e-15);
}

TEST(ProjMap, DualMapPreservesIncidence) {
  sgt::Rng rng(9);
  const ProjMap f(Mat(Mat::Random(4, 4) + 3.0 * Mat::Identity(4, 4)));
  const ProjMap fd = dualize_map(f);
  for (int t = 0; t < 20; ++t) {
    const Vec a = rng.gaussian(4);
    Vec x = rng.gaussian(4);
    x -= a.dot(x) / a.squaredNorm() * a;
    const Vec fa = fd.matrix() * a, fx = f.matrix() * x;
    EXPECT_NEAR(fa.dot(fx) / (fa.norm() * fx.norm()), 0.0, 1e-12);
  }
}

TEST(NormalizedVolume, DetectsDependence) {
  EXPECT_NEAR(normalized_volume(std::vector<Vec>{Vec::Unit(3, 0), Vec::Unit(3, 1), Vec::Unit(3, 2)}), 1.0, 1e-15);
  Vec v(3);
  v << 1, 1, 0;
  EXPECT_NEAR(normalized_volume(std::vector<Vec>{Vec::Unit(3, 0), Vec::Unit(3, 1), v}), 0.0, 1e-15);
}

TEST(NullSpace, AnnihilatesMatrix) {
  sgt::Rng rng(2);
  Mat m(2, 5);
  m.row(0) = rng.gaussian(5).transpose();
  m.row(1) = rng.gaussian(5).transpose();
  const Mat k = null_space(m);
  EXPECT_EQ(k.cols(), 3);
  EXPECT_LT((m * k).cwiseAbs().maxCoeff(), 1e-13);
}
