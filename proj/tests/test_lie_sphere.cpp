#include <gtest/gtest.h>

#include <cmath>

#include "sphgeo/lie_sphere.hpp"
#include "test_support.hpp"

using namespace sg;

namespace {

HPoint circle(const LieContext& ctx, double x, double y, double r) {
  return lie_encode_euclidean(ctx, {EuclideanKind::Sphere, (Vec(2) << x, y).finished(), r});
}

}  // namespace

TEST(LieContext, NullBasisVectors) {
  const LieContext ctx = lie_context(2);
  EXPECT_EQ(ctx.L.signature(), (Signature{3, 2, 0}));
  EXPECT_NEAR(ctx.L(ctx.e0), 0.0, 1e-15);
  EXPECT_NEAR(ctx.L(ctx.einf), 0.0, 1e-15);
  EXPECT_NEAR(ctx.L(ctx.e0, ctx.einf), -0.5, 1e-15);
}

TEST(LieEuclidean, EncodedObjectsLieOnQuadric) {
  sgt::Rng rng(1);
  const LieContext ctx = lie_context(2);
  for (int t = 0; t < 20; ++t) {
    const HPoint s = circle(ctx, rng.normal(), rng.normal(), rng.uniform(-2, 2));
    EXPECT_NEAR(eval_normalized(ctx.L, s.coords()), 0.0, 1e-14);
    const HPoint l = lie_encode_euclidean(ctx, {EuclideanKind::Plane, rng.unit(2), rng.normal()});
    EXPECT_NEAR(eval_normalized(ctx.L, l.coords()), 0.0, 1e-14);
  }
}

TEST(LieEuclidean, OrientedContactOfCircles) {
  const LieContext ctx = lie_context(2);
  // Externally touching with opposite orientations, internally with equal ones.
  EXPECT_TRUE(oriented_contact(ctx, circle(ctx, 0, 0, 1), circle(ctx, 3, 0, -2)));
  EXPECT_TRUE(oriented_contact(ctx, circle(ctx, 0, 0, 3), circle(ctx, 1, 0, 2)));
  EXPECT_FALSE(oriented_contact(ctx, circle(ctx, 0, 0, 1), circle(ctx, 3, 0, 2)));
  const HPoint on = lie_encode_euclidean(ctx, {EuclideanKind::Point, (Vec(2) << 0.6, 0.8).finished(), 0.0});
  EXPECT_TRUE(oriented_contact(ctx, on, circle(ctx, 0, 0, 1)));
  EXPECT_TRUE(oriented_contact(ctx, on, circle(ctx, 0, 0, -1)));
  const HPoint line = lie_encode_euclidean(ctx, {EuclideanKind::Plane, Vec::Unit(2, 1), 1.0});
  EXPECT_TRUE(oriented_contact(ctx, line, circle(ctx, 5, 0, 1)) || oriented_contact(ctx, line, circle(ctx, 5, 0, -1)));
  EXPECT_FALSE(oriented_contact(ctx, line, circle(ctx, 5, 0, 0.5)));
}

TEST(LieSpherical, EncodeDecodeAndReduce) {
  const LieContext ctx = lie_context(2);
  const Vec c = (Vec(3) << 0.0, 0.6, 0.8).finished();
  const SphericalSphere s = lie_decode_spherical(ctx, lie_encode_spherical(ctx, c, 0.4));
  const SphericalSphere r = reduce_spherical(s);
  EXPECT_NEAR(r.radius, 0.4, 1e-14);
  EXPECT_LT((r.center - c).norm(), 1e-14);
  const SphericalSphere big = reduce_spherical({c, 2.5});
  EXPECT_NEAR(big.radius, 2.5 - M_PI, 1e-14);
  EXPECT_LT((big.center + c).norm(), 1e-14);
}

TEST(Stereographic, LandsOnUnitSphere) {
  sgt::Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const Vec z = stereographic_lift(rng.gaussian(2));
    EXPECT_NEAR(z.norm(), 1.0, 1e-15);
  }
  const Vec o = stereographic_lift(Vec::Zero(2));
  EXPECT_NEAR(o[2], 1.0, 1e-15);
}

TEST(InversiveDistance, ClosedForms) {
  const OrientedSphere a{(Vec(2) << 0, 0).finished(), 1.0};
  EXPECT_NEAR(inversive_distance(a, {(Vec(2) << std::sqrt(2.0), 0).finished(), 1.0}), 0.0, 1e-15);
  EXPECT_NEAR(inversive_distance(a, {(Vec(2) << 2, 0).finished(), 1.0}), -1.0, 1e-15);
  EXPECT_NEAR(inversive_distance(a, {(Vec(2) << 2, 0).finished(), -1.0}), 1.0, 1e-15);
  EXPECT_NEAR(inversive_distance(a, {(Vec(2) << 0, 0).finished(), 2.0}), 1.25, 1e-15);
}

TEST(InversiveDistance, AgreesWithQDistance) {
  sgt::Rng rng(3);
  const LieContext ctx = lie_context(2);
  for (int t = 0; t < 20; ++t) {
    const OrientedSphere s{rng.gaussian(2), rng.uniform(0.2, 2.0) * rng.sign()};
    const HPoint x = circle(ctx, s.center[0], s.center[1], s.radius);
    const OrientedSphere u{rng.gaussian(2), rng.uniform(0.2, 2.0) * rng.sign()};
    const HPoint y = circle(ctx, u.center[0], u.center[1], u.radius);
    const double qd = q_distance(ctx.L, ctx.p, x, y);
    EXPECT_NEAR(qd, inversive_distance(s, u), 1e-11 * std::max(1.0, std::abs(qd)));
  }
}

TEST(SphereComplex, Classification) {
  const LieContext ctx = lie_context(2);
  Vec q = Vec::Zero(5);
  q[0] = 1.0;
  EXPECT_EQ(classify_complex(ctx, HPoint(q)).kind, ComplexKind::Elliptic);
  q = Vec::Zero(5);
  q[4] = 1.0;
  q[0] = 0.5;
  EXPECT_EQ(classify_complex(ctx, HPoint(q)).kind, ComplexKind::Hyperbolic);
  EXPECT_EQ(classify_complex(ctx, ctx.p).kind, ComplexKind::Hyperbolic);
  q = Vec::Zero(5);
  q[0] = 1.0;
  q[4] = 1.0;
  EXPECT_EQ(classify_complex(ctx, HPoint(q)).kind, ComplexKind::Parabolic);
}

TEST(SphereComplex, ConstantDistanceForm) {
  const LieContext ctx = lie_context(2);
  Vec q = Vec::Zero(5);
  q[0] = 0.3;
  q[4] = 1.0;
  const ConstantDistanceComplex c = complex_as_constant_distance(ctx, HPoint(q));
  EXPECT_NEAR(eval_normalized(ctx.L, c.q_plus.coords()), 0.0, 1e-13);
  EXPECT_TRUE(std::isfinite(c.I));
}

TEST(Subgeometry, TableRows) {
  EXPECT_EQ(classify_subgeometry(-1, 1).space_form, "hyperbolic space");
  EXPECT_EQ(classify_subgeometry(-1, -1).space_form, "elliptic space");
  EXPECT_EQ(classify_subgeometry(1, -1).space_form, "deSitter space");
  EXPECT_EQ(classify_subgeometry(-1, 0).laguerre_group, "PO(n,1,1)");
  EXPECT_EQ(classify_subgeometry(1, 0).mobius_group, "PO(n,2)");
  EXPECT_THROW(classify_subgeometry(0, 0), GeometryError);
}
