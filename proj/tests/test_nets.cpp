#include <gtest/gtest.h>

#include <cmath>

#include "sphgeo/nets.hpp"
#include "test_support.hpp"

using namespace sg;

namespace {

NetParams sample_net(int eps, ConicType conic, double alpha, double beta, int N = 11) {
  NetParams p;
  p.epsilon = eps;
  p.conic = conic;
  p.alpha = alpha;
  p.beta = beta;
  p.s = 0.23;
  p.s_tilde = periodic_step(p, N);
  p.i_range = {-12, 12};
  p.j_range = {-12, 12};
  return p;
}

std::vector<NetParams> sample_nets() {
  return {sample_net(1, ConicType::Ellipse, 0.9, 0.4), sample_net(-1, ConicType::Ellipse, 0.5, 0.3),
          sample_net(-1, ConicType::Hyperbola, 0.5, 0.3), sample_net(0, ConicType::Ellipse, 2.0, 1.0)};
}

Vec flip(const Vec& v) {
  Vec w = v;
  w[3] = -w[3];
  return w;
}

}  // namespace

TEST(Modulus, Examples) {
  NetParams p;
  p.epsilon = 1;
  p.alpha = 0.9;
  p.beta = 0.4;
  EXPECT_NEAR(base_curve_modulus(p), 1.0 - (0.16 * 1.81) / (0.81 * 1.16), 1e-15);
  EXPECT_NEAR(base_curve_modulus(p), 0.69178, 1e-5);
  p.epsilon = 0;
  p.alpha = 2.0;
  p.beta = 1.0;
  EXPECT_NEAR(base_curve_modulus(p), 0.75, 1e-15);
  p.conic = ConicType::Hyperbola;
  p.alpha = p.beta = 1.0;
  EXPECT_NEAR(base_curve_modulus(p), 0.5, 1e-15);
}

TEST(Params, Validation) {
  NetParams p;
  p.alpha = 0.3;
  p.beta = 0.4;
  EXPECT_THROW(validate(p), GeometryError);
  p = NetParams{};
  p.i_range = {3, 1};
  EXPECT_THROW(validate(p), GeometryError);
  EXPECT_THROW(periodic_step(NetParams{}, 0), GeometryError);
}

TEST(BasePoint, OriginValues) {
  NetParams p;
  const double a = 0.9, eps = 1.0;
  const Vec v = base_point(p, 1, 0.0).coords();
  EXPECT_NEAR(v[0], 1.0 / std::sqrt(1 + eps * a * a), 1e-15);
  EXPECT_NEAR(v[1], 0.0, 1e-15);
  EXPECT_NEAR(v[2], a / std::sqrt(1 + eps * a * a), 1e-15);
  EXPECT_NEAR(v[3], 1.0, 1e-15);
  EXPECT_NEAR(eval(net_laguerre_quadric(p), HPoint(v)), 0.0, 1e-15);
  EXPECT_NEAR(eval(base_cone(p), HPoint(v)), 0.0, 1e-15);
}

TEST(BasePoint, OnBaseCurveAndOrientationFlip) {
  sgt::Rng rng(1);
  for (const NetParams& p : sample_nets()) {
    const QuadricForm B = net_laguerre_quadric(p), C = base_cone(p);
    for (int t = 0; t < 50; ++t) {
      const double u = rng.uniform(-10, 10);
      const Vec vp = base_point(p, 1, u).coords(), vm = base_point(p, -1, u).coords();
      EXPECT_LT(std::abs(eval_normalized(B, vp)), 1e-12);
      EXPECT_LT(std::abs(eval_normalized(C, vp)), 1e-12);
      EXPECT_LT((flip(vm) - vp).norm(), 1e-15);
    }
  }
}

TEST(RulingLambda, EndpointsAndSymmetry) {
  NetParams e = sample_net(1, ConicType::Ellipse, 0.9, 0.4);
  const double K = complete_K(base_curve_modulus(e));
  EXPECT_NEAR(ruling_lambda(e, 2 * K).value, 1.0, 1e-12);
  NetParams h = sample_net(-1, ConicType::Hyperbola, 0.5, 0.3);
  const double Kh = complete_K(base_curve_modulus(h));
  EXPECT_NEAR(ruling_lambda(h, 2 * Kh).value, -4.0, 1e-11);
  EXPECT_TRUE(ruling_lambda(e, 0.0).infinite);
  sgt::Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const double s = rng.uniform(0.05, 3.0);
    EXPECT_EQ(ruling_lambda(e, s).value, ruling_lambda(e, -s).value);
  }
}

TEST(RulingLambda, PencilMemberContainsRuling) {
  sgt::Rng rng(3);
  for (const NetParams& p : sample_nets()) {
    for (int t = 0; t < 20; ++t) {
      const double s = rng.uniform(0.05, 3.0), u = rng.uniform(-5, 5);
      const QuadricForm Q = pencil_quadric(p, ruling_lambda(p, s));
      const Vec a = base_point(p, 1, u).coords(), b = base_point(p, -1, u + s).coords();
      for (double x : {-2.0, -0.3, 0.5, 1.0, 4.0}) EXPECT_LT(std::abs(eval_normalized(Q, Vec(a + x * b))), 1e-10);
    }
  }
}

TEST(Coplanarity, ParametrizationLattice) {
  sgt::Rng rng(4);
  for (const NetParams& p : sample_nets()) {
    for (int t = 0; t < 125; ++t) {
      const double u = rng.uniform(-5, 5), ut = rng.uniform(-5, 5), s = rng.uniform(-2, 2);
      const double r = normalized_volume(std::vector<HPoint>{base_point(p, 1, u), base_point(p, -1, u + s),
                                                             base_point(p, -1, ut), base_point(p, 1, ut + s)});
      EXPECT_LT(r, 1e-10);
    }
  }
}

TEST(Generate, SampleNetsAreCheckerboardIncircular) {
  for (const NetParams& p : sample_nets()) {
    const CbicNet net = generate(p);
    const NetResiduals r = net_residuals(net);
    EXPECT_LT(r.max_on_quadric, 1e-12);
    EXPECT_LT(r.max_coplanarity, 1e-10);
    for (int i = -12; i + 22 <= 12; ++i) {
      EXPECT_TRUE(approx_equal(net.ell.at(i), net.ell.at(i + 22)));
      EXPECT_TRUE(approx_equal(net.m.at(i), net.m.at(i + 22)));
    }
  }
}

TEST(Generate, GeneralizedIncircles) {
  for (const NetParams& p : sample_nets()) {
    const CbicNet net = generate(p);
    double worst = 0.0;
    for (int k = 0; k <= 3; ++k) {
      for (int i = -8; i <= 0; ++i) {
        for (int j = -8; j <= 0; ++j) {
          if ((i + j) % 2 != 0) continue;
          const int d = 2 * k + 1;
          worst = std::max(worst, normalized_volume(std::vector<HPoint>{net.ell.at(i), net.m.at(j), net.ell.at(i + d),
                                                                        net.m.at(j + d)}));
        }
      }
    }
    EXPECT_LT(worst, 1e-10);
  }
}

TEST(Generate, EmbeddedNetsPairFamilies) {
  NetParams p = sample_net(1, ConicType::Ellipse, 0.9, 0.4);
  p.u0_l = p.u0_m = 0.37;
  const CbicNet net = generate(p);
  for (int i = -6; i <= 6; ++i) {
    EXPECT_TRUE(approx_equal(net.ell.at(i), HPoint(flip(net.m.at(i).coords()))));
  }
}

TEST(Generate, ZeroStepGivesUnorientedLinePairs) {
  NetParams p = sample_net(-1, ConicType::Ellipse, 0.5, 0.3);
  p.s = 0.0;
  p.s_tilde = periodic_step(p, 11);
  const CbicNet net = generate(p);
  for (int k = -5; k <= 5; ++k) {
    EXPECT_TRUE(approx_equal(net.ell.at(2 * k), HPoint(flip(net.ell.at(2 * k + 1).coords()))));
  }
  EXPECT_LT(net_residuals(net).max_coplanarity, 1e-10);
}

TEST(Generate, FullPeriodStepMakesFamiliesConstant) {
  NetParams p = sample_net(1, ConicType::Ellipse, 0.9, 0.4, 1);
  p.s = 0.0;
  p.s_tilde = periodic_step(p, 1);
  EXPECT_NEAR(p.s_tilde, 4.0 * complete_K(base_curve_modulus(p)), 1e-14);
  const CbicNet net = generate(p);
  for (int k = -4; k <= 4; ++k) EXPECT_TRUE(approx_equal(net.ell.at(2 * k), net.ell.at(0)));
}

TEST(Incircles, OddQuadRadiiShrinkWithStep) {
  NetParams p = sample_net(1, ConicType::Ellipse, 0.9, 0.4);
  p.u0_l = 0.1;
  p.u0_m = 0.9;
  p.i_range = {0, 1};
  p.j_range = {0, 1};
  double previous = INFINITY;
  for (int j = 2; j <= 10; ++j) {
    p.s = std::ldexp(1.0, -j);
    p.s_tilde = periodic_step(p, 11);
    // The quad (l_0, l_1, m_0, m_1) is bounded by lines at parameter distance s.
    const LaguerreContext ctx = laguerre_context(net_space_form(p));
    const CbicNet net = generate(p);
    const LaguerreSphere c = incircle(ctx, {net.ell.at(0), net.ell.at(1), net.m.at(0), net.m.at(1)});
    EXPECT_LT(c.radius, previous);
    previous = c.radius;
  }
  EXPECT_LT(previous, 1e-4);
}

TEST(Hyperboloids, ContainEvenRulings) {
  for (const NetParams& p : sample_nets()) {
    const CbicNet net = generate(p);
    const AssociatedHyperboloids h = associated_hyperboloids(net);
    for (int k = -5; k <= 4; ++k) {
      const Vec a = net.ell.at(2 * k).coords(), b = net.ell.at(2 * k + 1).coords();
      for (double x : {-1.0, 0.5, 3.0}) EXPECT_LT(std::abs(eval_normalized(h.Q, Vec(a + x * b))), 1e-10);
      const Vec c = net.ell.at(2 * k + 1).coords(), d = net.ell.at(2 * k + 2).coords();
      for (double x : {-1.0, 0.5, 3.0}) EXPECT_LT(std::abs(eval_normalized(h.Qt, Vec(c + x * d))), 1e-10);
    }
    EXPECT_LT(pencil_fit_residual({net.B.matrix(), h.Q.matrix()}, h.Qt.matrix()), 1e-10);
  }
}

TEST(Hyperboloids, FittedAgreesWithClosedForm) {
  const CbicNet net = generate(sample_net(1, ConicType::Ellipse, 0.9, 0.4));
  const AssociatedHyperboloids a = associated_hyperboloids(net);
  const AssociatedHyperboloids f = fit_associated_hyperboloids(net);
  EXPECT_LT(map_distance(a.Q.matrix(), f.Q.matrix()), 1e-8);
  EXPECT_LT(map_distance(a.Qt.matrix(), f.Qt.matrix()), 1e-8);
}

TEST(Miquel, RandomInstancesClose) {
  sgt::Rng rng(5);
  int done = 0;
  while (done < 30) {
    const auto inst = sgt::miquel_instance(rng);
    if (!inst) continue;
    EXPECT_TRUE(miquel_check(*inst));
    ++done;
  }
}

TEST(Miquel, SubdivisionOnBaseCurve) {
  sgt::Rng rng(6);
  for (const NetParams& p : sample_nets()) {
    for (int t = 0; t < 10; ++t) {
      // Arguments with u_l1 + ... chosen so that three quads close: consecutive
      // lines of a generated net with random offsets.
      NetParams q = p;
      q.s = rng.uniform(0.1, 0.5);
      q.s_tilde = rng.uniform(0.1, 0.5);
      q.u0_l = rng.uniform(-1, 1);
      q.u0_m = rng.uniform(-1, 1);
      q.i_range = {0, 3};
      q.j_range = {0, 3};
      const CbicNet net = generate(q);
      const std::array<HPoint, 8> pts{net.ell.at(0), net.ell.at(1), net.ell.at(2), net.ell.at(3),
                                      net.m.at(0),   net.m.at(1),   net.m.at(2),   net.m.at(3)};
      EXPECT_TRUE(laguerre_subdivision_check(net.B, net.C, pts));
    }
  }
}

TEST(Miquel, SubdivisionRejectsPointsOffCurve) {
  const NetParams p = sample_net(1, ConicType::Ellipse, 0.9, 0.4);
  const CbicNet net = generate(p);
  std::array<HPoint, 8> pts{net.ell.at(0), net.ell.at(1), net.ell.at(2), net.ell.at(3),
                            net.m.at(0),   net.m.at(1),   net.m.at(2),   net.m.at(3)};
  Vec bad = pts[0].coords();
  bad[0] += 1e-3;
  pts[0] = HPoint(bad);
  EXPECT_THROW(laguerre_subdivision_check(net.B, net.C, pts), GeometryError);
}

TEST(Octahedral, PlanesConcur) {
  for (const NetParams& p : sample_nets()) {
    const OctahedralGrid g = octahedral_grid(p, 2);
    EXPECT_FALSE(g.points.empty());
    EXPECT_LT(g.max_residual, 1e-9);
  }
  EXPECT_THROW(octahedral_grid(sample_nets()[0], -1), GeometryError);
}

TEST(Octahedral, FamilySplit) {
  const NetParams p = sample_net(1, ConicType::Ellipse, 0.9, 0.4);
  for (int k = -2; k <= 2; ++k) {
    EXPECT_TRUE(approx_equal(nu_point(p, 1, k), ell_at(p, 2 * k)));
    EXPECT_TRUE(approx_equal(nu_point(p, 2, k), ell_at(p, -2 * k + 1)));
    EXPECT_TRUE(approx_equal(nu_point(p, 3, k), m_at(p, -2 * k)));
    EXPECT_TRUE(approx_equal(nu_point(p, 4, k), m_at(p, 2 * k + 1)));
  }
}

TEST(Octahedral, DiagonalSurfaceQuadruplesShareDualPencilMember) {
  // Four intersection points with k_1 + k_2 constant.
  const NetParams p = sample_net(1, ConicType::Ellipse, 0.9, 0.4);
  const OctahedralGrid g = octahedral_grid(p, 2);
  const std::array<A3Index, 4> a{A3Index{-1, 1, 0, 0}, A3Index{0, 0, 1, -1}, A3Index{1, -1, -1, 1},
                                 A3Index{2, -2, 0, 0}};
  std::array<HPoint, 4> c;
  for (int i = 0; i < 4; ++i) c[i] = g.points.at(a[i]);
  EXPECT_LT(dual_pencil_residual(p, c), 1e-8);
}
