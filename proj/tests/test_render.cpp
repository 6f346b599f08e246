#include <gtest/gtest.h>

#include <cmath>

#include "sphgeo/render.hpp"
#include "test_support.hpp"

using namespace sg;

namespace {

const SpaceForm kHyp = SpaceForm::hyperbolic(2);

double radius_of(const Point2& p) { return std::hypot(p.x, p.y); }

NetParams hyperbolic_net() {
  NetParams p;
  p.epsilon = -1;
  p.alpha = 0.5;
  p.beta = 0.3;
  p.s = 0.23;
  p.s_tilde = periodic_step(p, 11);
  p.i_range = {-6, 6};
  p.j_range = {-6, 6};
  return p;
}

}  // namespace

TEST(Models, NamesRoundTrip) {
  for (Model m : {Model::Klein, Model::PoincareDisk, Model::HalfPlane, Model::SphereOrthographic,
                  Model::SphereStereographic, Model::EuclideanPlane}) {
    EXPECT_EQ(model_from_string(to_string(m)), m);
  }
  EXPECT_THROW(model_from_string("mercator"), std::exception);
}

TEST(Models, Compatibility) {
  EXPECT_NO_THROW(check_model(kHyp, Model::PoincareDisk));
  EXPECT_THROW(check_model(SpaceForm::elliptic(2), Model::PoincareDisk), GeometryError);
  EXPECT_THROW(check_model(kHyp, Model::SphereOrthographic), GeometryError);
  EXPECT_THROW(check_model(SpaceForm::euclidean(2), Model::Klein), GeometryError);
  EXPECT_NO_THROW(check_model(SpaceForm::euclidean(2), Model::EuclideanPlane));
}

TEST(Project, OriginIsDiskCenter) {
  const Vec o = Vec::Unit(3, 2);
  for (Model m : {Model::Klein, Model::PoincareDisk}) {
    const auto p = project_point(kHyp, m, o);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->x, 0.0);
    EXPECT_EQ(p->y, 0.0);
  }
}

TEST(Project, HyperbolicCircleRadii) {
  const LaguerreContext ctx = laguerre_context(kHyp);
  for (double r : {0.2, 1.0, 2.3}) {
    LaguerreSphere s;
    s.kind = LaguerreKind::Sphere;
    s.center = Vec::Unit(3, 2);
    s.radius = r;
    const auto samples = sample_laguerre_circle(ctx, encode_sphere(ctx, s).coords(), 64);
    ASSERT_EQ(samples.size(), 64u);
    for (const Vec& z : samples) {
      EXPECT_NEAR(radius_of(*project_point(kHyp, Model::Klein, z)), std::tanh(r), 1e-12);
      EXPECT_NEAR(radius_of(*project_point(kHyp, Model::PoincareDisk, z)), std::tanh(r / 2), 1e-12);
    }
  }
}

TEST(Project, PoincareKleinRelation) {
  sgt::Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    const double r = rng.uniform(0.0, 5.0), a = rng.uniform(0.0, 2 * M_PI);
    const Vec z = (Vec(3) << std::sinh(r) * std::cos(a), std::sinh(r) * std::sin(a), std::cosh(r)).finished();
    const Point2 k = *project_point(kHyp, Model::Klein, z);
    const Point2 p = *project_point(kHyp, Model::PoincareDisk, z);
    const double rho = radius_of(p);
    EXPECT_NEAR(radius_of(k), 2 * rho / (1 + rho * rho), 1e-9);
    if (rho > 1e-9) EXPECT_NEAR(std::atan2(k.y, k.x), std::atan2(p.y, p.x), 1e-9);
  }
}

TEST(Project, HalfPlaneIsUpper) {
  sgt::Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const double r = rng.uniform(0.0, 3.0), a = rng.uniform(0.0, 2 * M_PI);
    const Vec z = (Vec(3) << std::sinh(r) * std::cos(a), std::sinh(r) * std::sin(a), std::cosh(r)).finished();
    const auto h = project_point(kHyp, Model::HalfPlane, z);
    ASSERT_TRUE(h);
    EXPECT_GT(h->y, 0.0);
  }
  const auto c = project_point(kHyp, Model::HalfPlane, Vec::Unit(3, 2));
  EXPECT_NEAR(c->x, 0.0, 1e-15);
  EXPECT_NEAR(c->y, 1.0, 1e-15);
}

TEST(Project, OutsideDiskIsDropped) {
  EXPECT_FALSE(project_point(kHyp, Model::Klein, (Vec(3) << 2.0, 0.0, 1.0).finished()));
}

TEST(Project, EllipticAntipodesAgree) {
  const Vec z = (Vec(3) << 0.3, -0.2, 0.9).finished();
  for (Model m : {Model::SphereOrthographic, Model::SphereStereographic, Model::Klein}) {
    const auto a = project_point(SpaceForm::elliptic(2), m, z);
    const auto b = project_point(SpaceForm::elliptic(2), m, Vec(-z));
    ASSERT_TRUE(a && b);
    EXPECT_NEAR(a->x, b->x, 1e-15);
    EXPECT_NEAR(a->y, b->y, 1e-15);
  }
}

TEST(Lines, KleinImageIsChordOnLine) {
  const CbicNet net = generate(hyperbolic_net());
  for (const auto& [i, l] : net.ell) {
    const Vec c = line_coefficients(kHyp, l.coords());
    const auto samples = sample_line(kHyp, l.coords(), 64);
    ASSERT_FALSE(samples.empty());
    for (const Vec& z : samples) {
      const auto p = project_point(kHyp, Model::Klein, z);
      if (!p) continue;
      EXPECT_NEAR((c[0] * p->x + c[1] * p->y + c[2]) / c.norm(), 0.0, 1e-12);
      EXPECT_LE(radius_of(*p), 1.0 + 1e-12);
    }
  }
}

TEST(Svg, EmptySceneHasBackgroundOnly) {
  Scene2D s;
  s.width = 10;
  s.height = 20;
  s.background = "#abcdef";
  EXPECT_EQ(emit_svg(s),
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"10\" height=\"20\" "
            "viewBox=\"0 0 10 20\">\n"
            "<rect x=\"0\" y=\"0\" width=\"10\" height=\"20\" fill=\"#abcdef\"/>\n"
            "</svg>\n");
}

TEST(Svg, NumberFormat) {
  EXPECT_EQ(format_number(1.0), "1.000000");
  EXPECT_EQ(format_number(-1e-9), "0.000000");
  EXPECT_EQ(format_number(-2.5), "-2.500000");
}

TEST(Svg, PolylineMapsToPixels) {
  Scene2D s;
  s.xmin = s.ymin = -1.0;
  s.xmax = s.ymax = 1.0;
  s.width = s.height = 100;
  s.polylines.push_back({{{-1.0, 1.0}, {1.0, -1.0}}, {"#000000", 2.0, "none"}, false});
  const std::string svg = emit_svg(s);
  EXPECT_NE(svg.find("points=\"0.000000,0.000000 100.000000,100.000000\""), std::string::npos);
  EXPECT_NE(svg.find("stroke-width=\"2.000000\""), std::string::npos);
}

TEST(RenderNet, DeterministicAndFinite) {
  const CbicNet net = generate(hyperbolic_net());
  for (Model m : {Model::Klein, Model::PoincareDisk, Model::HalfPlane}) {
    RenderOptions o;
    o.model = m;
    o.samples_per_circle = 32;
    o.samples_per_line = 32;
    const Scene2D a = render_net(net, o);
    EXPECT_FALSE(a.polylines.empty());
    for (const auto& pl : a.polylines) {
      for (const auto& p : pl.points) {
        EXPECT_TRUE(std::isfinite(p.x) && std::isfinite(p.y));
      }
    }
    EXPECT_EQ(emit_svg(a), emit_svg(render_net(net, o)));
  }
}

TEST(RenderNet, RejectsIncompatibleModel) {
  RenderOptions o;
  o.model = Model::SphereOrthographic;
  EXPECT_THROW(render_net(generate(hyperbolic_net()), o), GeometryError);
}
