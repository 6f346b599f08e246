#include "sphgeo/laguerre.hpp"

#include <cmath>

namespace sg {

const char* to_string(LaguerreKind kind) {
  switch (kind) {
    case LaguerreKind::OrientedPlane: return "oriented_plane";
    case LaguerreKind::Sphere: return "sphere";
    case LaguerreKind::Horosphere: return "horosphere";
    case LaguerreKind::DistanceSurface: return "distance_surface";
    case LaguerreKind::DeSitterSphere: return "desitter_sphere";
    case LaguerreKind::EuclideanCircle: return "euclidean_circle";
    case LaguerreKind::ParallelLinePencil: return "parallel_line_pencil";
  }
  return "unknown";
}

const char* to_string(ScalingFamily family) {
  switch (family) {
    case ScalingFamily::S: return "S";
    case ScalingFamily::C: return "C";
    case ScalingFamily::H: return "H";
    case ScalingFamily::EllipticS: return "elliptic_S";
  }
  return "unknown";
}

LaguerreContext laguerre_context(const SpaceForm& sf, const Tolerance& tol) {
  if (sf.n < 1) fail(ErrorCode::InvalidParams, "dimension must be at least 1");
  const int size = sf.n + 2;
  Vec d = Vec::Ones(size);
  d[size - 1] = -1.0;
  if (sf.tag == SpaceTag::Hyperbolic) d[size - 2] = -1.0;
  if (sf.tag == SpaceTag::Euclidean) d[size - 2] = 0.0;
  Vec p = Vec::Zero(size);
  p[size - 1] = 1.0;
  return {sf, QuadricForm(Mat(d.asDiagonal())), HPoint(p), tol};
}

Subspace polar_project(const LaguerreContext& ctx, const HPoint& x) {
  if (x.size() != ctx.size()) fail(ErrorCode::DimensionMismatch, "point and quadric sizes differ");
  const Vec& v = x.coords();
  const Vec& p = ctx.p.coords();
  if ((v - v.dot(p) * p).norm() <= ctx.tol.abs(v.norm())) {
    fail(ErrorCode::ProjectingCenter, "polar projection of p is undefined");
  }
  Mat rows(2, ctx.size());
  rows.row(0) = (ctx.B.matrix() * v).transpose();
  rows.row(1) = (ctx.B.matrix() * p).transpose();
  return Subspace(null_space(rows, ctx.tol), ctx.size());
}

namespace {

Vec head(const Vec& x) { return x.head(x.size() - 1); }

// Sign-canonical y, with x rescaled by the same factor.
void canonicalize(Vec& y, double& h) {
  const Vec c = canonical_sign(y);
  if ((c - y).norm() > 0) {
    y = -y;
    h = -h;
  }
}

int sign_of(double h) { return h < 0 ? -1 : 1; }

LaguerreSphere decode_hyperbolic(const LaguerreContext& ctx, const Vec& x) {
  const QuadricForm base = ctx.sf.absolute();
  Vec y = head(x);
  double h = x[x.size() - 1];
  const double scale = x.norm();
  if (y.norm() <= ctx.tol.abs(scale)) fail(ErrorCode::EmptySection, "p has no Laguerre sphere");
  const double yy = eval_normalized(base, y);
  LaguerreSphere s;
  if (yy < -ctx.tol.rel_eps) {
    const double k = std::sqrt(-base(y));
    y /= k;
    h /= k;
    if (y[y.size() - 1] < 0) {
      y = -y;
      h = -h;
    }
    s.kind = LaguerreKind::Sphere;
    s.radius = std::asinh(std::abs(h));
  } else if (yy <= ctx.tol.rel_eps) {
    const double k = y[y.size() - 1];
    y /= k;
    h /= k;
    if (std::abs(h) <= ctx.tol.rel_eps) fail(ErrorCode::NotRepresentable, "horosphere at infinite radius");
    s.kind = LaguerreKind::Horosphere;
    s.radius = std::log(std::abs(h));
  } else {
    const double k = std::sqrt(base(y));
    y /= k;
    h /= k;
    canonicalize(y, h);
    const double a = std::abs(h);
    if (std::abs(a * a - 1.0) <= ctx.tol.rel_eps * std::max(1.0, a * a)) {
      s.kind = LaguerreKind::OrientedPlane;
      s.radius = 0.0;
    } else if (a > 1.0) {
      s.kind = LaguerreKind::DistanceSurface;
      s.radius = std::acosh(a);
    } else {
      s.kind = LaguerreKind::DeSitterSphere;
      s.radius = std::acos(a);
    }
  }
  s.center = y;
  s.orientation = sign_of(h);
  return s;
}

LaguerreSphere decode_elliptic(const LaguerreContext& ctx, const Vec& x) {
  Vec y = head(x);
  double h = x[x.size() - 1];
  const double k = y.norm();
  if (k <= ctx.tol.abs(x.norm())) fail(ErrorCode::EmptySection, "p has no Laguerre sphere");
  y /= k;
  h /= k;
  canonicalize(y, h);
  const double a = std::abs(h);
  LaguerreSphere s;
  if (std::abs(a - 1.0) <= ctx.tol.rel_eps) {
    s.kind = LaguerreKind::OrientedPlane;
  } else if (a > 1.0) {
    fail(ErrorCode::EmptySection, "plane misses the elliptic Laguerre quadric");
  } else {
    s.kind = LaguerreKind::Sphere;
    s.radius = std::asin(a);
  }
  s.center = y;
  s.orientation = sign_of(h);
  return s;
}

LaguerreSphere decode_euclidean(const LaguerreContext& ctx, const Vec& a) {
  const int n = ctx.sf.n;
  const double a3 = a[n];
  if (std::abs(a3) <= ctx.tol.abs(max_abs(a))) {
    fail(ErrorCode::Degenerate, "plane parallel to the cylinder axis: parallel line pencil");
  }
  const Vec c = a / -a3;
  LaguerreSphere s;
  s.kind = LaguerreKind::EuclideanCircle;
  s.center = c.head(n);
  const double rho = -c[n + 1];
  s.radius = std::abs(rho);
  s.orientation = sign_of(rho);
  return s;
}

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::KindMismatch, what);
}

}  // namespace

LaguerreSphere decode_sphere(const LaguerreContext& ctx, const HPoint& x) {
  if (x.size() != ctx.size()) fail(ErrorCode::DimensionMismatch, "point and quadric sizes differ");
  switch (ctx.sf.tag) {
    case SpaceTag::Hyperbolic: return decode_hyperbolic(ctx, x.coords());
    case SpaceTag::Elliptic: return decode_elliptic(ctx, x.coords());
    case SpaceTag::Euclidean: return decode_euclidean(ctx, x.coords());
  }
  fail(ErrorCode::KindMismatch, "unknown space form");
}

HPoint encode_sphere(const LaguerreContext& ctx, const LaguerreSphere& s) {
  const int n = ctx.sf.n;
  const double o = s.orientation < 0 ? -1.0 : 1.0;
  Vec x(n + 2);
  if (ctx.sf.tag == SpaceTag::Euclidean) {
    require(s.kind == LaguerreKind::EuclideanCircle, "Euclidean Laguerre spheres are circles");
    if (s.center.size() != n) fail(ErrorCode::DimensionMismatch, "center size must be n");
    x << s.center, -1.0, -o * s.radius;
    return HPoint(x);
  }
  if (s.center.size() != n + 1) fail(ErrorCode::DimensionMismatch, "center size must be n+1");
  const QuadricForm base = ctx.sf.absolute();
  const double yy = base(s.center);
  const double band = 1e-8 * std::max(1.0, s.center.squaredNorm());
  double h = 0.0;
  if (ctx.sf.tag == SpaceTag::Elliptic) {
    require(std::abs(yy - 1.0) <= band, "elliptic centers lie on the unit sphere");
    switch (s.kind) {
      case LaguerreKind::OrientedPlane: h = 1.0; break;
      case LaguerreKind::Sphere: h = std::sin(s.radius); break;
      default: require(false, "kind not available in elliptic Laguerre geometry");
    }
  } else {
    switch (s.kind) {
      case LaguerreKind::Sphere:
        require(std::abs(yy + 1.0) <= band, "sphere centers lie on the hyperboloid");
        h = std::sinh(s.radius);
        break;
      case LaguerreKind::Horosphere:
        require(std::abs(yy) <= band, "horosphere centers lie on the light cone");
        h = std::exp(s.radius);
        break;
      case LaguerreKind::OrientedPlane:
        require(std::abs(yy - 1.0) <= band, "plane poles lie on deSitter space");
        h = 1.0;
        break;
      case LaguerreKind::DistanceSurface:
        require(std::abs(yy - 1.0) <= band, "distance surface poles lie on deSitter space");
        h = std::cosh(s.radius);
        break;
      case LaguerreKind::DeSitterSphere:
        require(std::abs(yy - 1.0) <= band, "deSitter sphere centers lie on deSitter space");
        h = std::cos(s.radius);
        break;
      default: require(false, "kind not available in hyperbolic Laguerre geometry");
    }
  }
  x << s.center, o * h;
  return HPoint(x);
}

Vec section_plane(const LaguerreContext& ctx, const Vec& x) {
  if (ctx.sf.tag == SpaceTag::Euclidean) return x;
  return ctx.B.matrix() * x;
}

HPoint sphere_from_plane(const LaguerreContext& ctx, const Vec& coefficients) {
  if (ctx.sf.tag == SpaceTag::Euclidean) return HPoint(coefficients);
  // B is diagonal with entries +-1, hence its own inverse.
  return HPoint(Vec(ctx.B.matrix() * coefficients));
}

double tangent_distance(const LaguerreContext& ctx, const HPoint& x1, const HPoint& x2) {
  const Subspace u = join({x1, x2}, ctx.tol);
  const Signature sig = restricted_signature(ctx.B, polar(ctx.B, u, ctx.tol), ctx.tol);
  if ((sig.r == 0 || sig.s == 0) && sig.t == 0) {
    fail(ErrorCode::NoCommonTangent, "spheres have no common oriented tangent plane");
  }
  return ck_distance(ctx.B, x1, x2, ctx.tol);
}

HPoint encode_line(const EuclideanLine& line) {
  const int n = static_cast<int>(line.normal.size());
  Vec x(n + 2);
  x << line.normal, line.d, 1.0;
  return HPoint(x);
}

EuclideanLine decode_line(const HPoint& x, const Tolerance& tol) {
  const Vec& v = x.coords();
  const int n = x.size() - 2;
  const double k = v[n + 1];
  if (std::abs(k) <= tol.abs(v.norm())) fail(ErrorCode::NotOnQuadric, "point on the cylinder axis plane");
  const Vec w = v / k;
  const double nn = w.head(n).norm();
  if (std::abs(nn - 1.0) > 1e-8) fail(ErrorCode::NotOnQuadric, "point is not on the Blaschke cylinder");
  return {w.head(n) / nn, w[n]};
}

HPoint euclidean_line(double theta, double d) { return HPoint{std::cos(theta), std::sin(theta), d, 1.0}; }

Mat laguerre_scaling_matrix(const LaguerreContext& ctx, ScalingFamily family, double t) {
  const int N = ctx.size();
  Mat m = Mat::Identity(N, N);
  const int a = N - 3, b = N - 2, c = N - 1;
  const bool hyp = ctx.sf.tag == SpaceTag::Hyperbolic;
  const bool ell = ctx.sf.tag == SpaceTag::Elliptic;
  switch (family) {
    case ScalingFamily::S:
      if (!hyp) break;
      m(b, b) = std::cos(t);
      m(b, c) = std::sin(t);
      m(c, b) = -std::sin(t);
      m(c, c) = std::cos(t);
      return m;
    case ScalingFamily::C:
      if (!hyp) break;
      m(a, a) = std::cosh(t);
      m(a, c) = std::sinh(t);
      m(c, a) = std::sinh(t);
      m(c, c) = std::cosh(t);
      return m;
    case ScalingFamily::H: {
      if (!hyp) break;
      const double q = 0.5 * t * t;
      m(a, a) = 1.0 + q;
      m(a, b) = q;
      m(a, c) = t;
      m(b, a) = -q;
      m(b, b) = 1.0 - q;
      m(b, c) = -t;
      m(c, a) = t;
      m(c, b) = t;
      m(c, c) = 1.0;
      return m;
    }
    case ScalingFamily::EllipticS:
      if (!ell) break;
      m(b, b) = std::cosh(t);
      m(b, c) = std::sinh(t);
      m(c, b) = std::sinh(t);
      m(c, c) = std::cosh(t);
      return m;
  }
  fail(ErrorCode::WrongFamily, std::string("family ") + to_string(family) + " is not defined for " +
                                   to_string(ctx.sf.tag) + " Laguerre geometry");
}

ProjMap laguerre_scaling(const LaguerreContext& ctx, ScalingFamily family, double t) {
  return ProjMap(laguerre_scaling_matrix(ctx, family, t), Tolerance{0.0});
}

namespace {

// Isometry fixing p that sends y to x, both with the same p-component and
// norm, or nothing when x - y is isotropic.
std::optional<Mat> isometry_fixing_p(const LaguerreContext& ctx, const Vec& y, const Vec& x) {
  const int N = ctx.size();
  const Vec d = x - y;
  const double scale = std::max(1.0, x.squaredNorm());
  if (d.norm() <= 1e-12 * std::sqrt(scale)) return Mat::Identity(N, N);
  if (std::abs(ctx.B(d)) <= 1e-9 * std::max(scale, d.squaredNorm())) return std::nullopt;
  return reflection_matrix(ctx.B, d);
}

}  // namespace

LaguerreDecomposition decompose_laguerre(const LaguerreContext& ctx, const ProjMap& f) {
  if (ctx.sf.tag == SpaceTag::Euclidean) {
    fail(ErrorCode::UnsupportedEuclidean, "decomposition is defined for the non-Euclidean quadrics");
  }
  if (f.size() != ctx.size()) fail(ErrorCode::DimensionMismatch, "map and quadric sizes differ");
  double c = 0.0;
  if (form_residual(ctx.B, f.matrix(), &c) > std::max(ctx.tol.rel_eps, 1e-8) || !(c > 0.0)) {
    fail(ErrorCode::NotOrthogonal, "map does not preserve the Laguerre quadric");
  }
  const int N = ctx.size();
  Mat g = f.matrix() / std::sqrt(c);
  Vec x = g.col(N - 1);
  if (x[N - 1] < 0) {
    g = -g;
    x = -x;
  }
  const double a = x[N - 1];
  Vec xt = x;
  xt[N - 1] = 0.0;
  const bool hyp = ctx.sf.tag == SpaceTag::Hyperbolic;

  LaguerreDecomposition out;
  std::vector<double> candidates;
  if (xt.norm() <= 1e-12 * std::max(1.0, a)) {
    out.family = hyp ? ScalingFamily::S : ScalingFamily::EllipticS;
    candidates = {0.0};
  } else if (!hyp) {
    out.family = ScalingFamily::EllipticS;
    const double t = std::acosh(std::max(1.0, a));
    const double sg = xt[N - 2] < 0 ? -1.0 : 1.0;
    candidates = {sg * t, -sg * t};
  } else if (std::abs(a * a - 1.0) <= 1e-9 * std::max(1.0, a * a)) {
    out.family = ScalingFamily::H;
    const double s = xt[N - 3] + xt[N - 2];
    if (std::abs(s) <= 1e-12 * xt.norm()) {
      candidates = {xt[N - 3]};
    } else {
      const double t = (s < 0 ? -1.0 : 1.0) * xt.norm() / std::sqrt(2.0);
      candidates = {t};
    }
  } else if (a < 1.0) {
    out.family = ScalingFamily::S;
    const double t = std::acos(a);
    const double sg = xt[N - 2] < 0 ? -1.0 : 1.0;
    candidates = {sg * t, -sg * t};
  } else {
    out.family = ScalingFamily::C;
    const double t = std::acosh(a);
    const double sg = xt[N - 3] < 0 ? -1.0 : 1.0;
    candidates = {sg * t, -sg * t};
  }

  for (double t : candidates) {
    const Mat tm = laguerre_scaling_matrix(ctx, out.family, t);
    const Vec y = tm.col(N - 1);
    std::optional<Mat> phi = isometry_fixing_p(ctx, y, x);
    if (!phi) {
      // Route through the reflection of p^perp that fixes the base points.
      Vec yt = y;
      yt[N - 1] = 0.0;
      const Vec sum = xt + yt;
      if (std::abs(ctx.B(sum)) <= 1e-9 * std::max(1.0, sum.squaredNorm()) ||
          std::abs(ctx.B(xt)) <= 1e-9 * std::max(1.0, xt.squaredNorm())) {
        continue;
      }
      phi = Mat(reflection_matrix(ctx.B, xt) * reflection_matrix(ctx.B, sum));
    }
    out.t = t;
    out.Phi = ProjMap(*phi, Tolerance{0.0});
    const Mat tinv = laguerre_scaling_matrix(ctx, out.family, -t);
    out.Psi = ProjMap(Mat(tinv * phi->inverse() * g), Tolerance{0.0});
    return out;
  }
  fail(ErrorCode::NotOrthogonal, "no p-fixing isometry found for the scaling image");
}

}  // namespace sg
