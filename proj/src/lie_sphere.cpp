#include "sphgeo/lie_sphere.hpp"

#include <cmath>
#include <numbers>

namespace sg {

const char* to_string(EuclideanKind kind) {
  switch (kind) {
    case EuclideanKind::Point: return "point";
    case EuclideanKind::Sphere: return "sphere";
    case EuclideanKind::Plane: return "plane";
  }
  return "unknown";
}

const char* to_string(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::Elliptic: return "elliptic";
    case ComplexKind::Hyperbolic: return "hyperbolic";
    case ComplexKind::Parabolic: return "parabolic";
  }
  return "unknown";
}

LieContext lie_context(int n, const Tolerance& tol) {
  if (n < 1) fail(ErrorCode::InvalidParams, "dimension must be at least 1");
  const int size = n + 3;
  Vec d = Vec::Ones(size);
  d[size - 1] = -1.0;
  d[size - 2] = -1.0;
  Vec p = Vec::Zero(size);
  p[size - 1] = 1.0;
  Vec e0 = Vec::Zero(size);
  Vec einf = Vec::Zero(size);
  e0[n + 1] = e0[n] = 0.5;
  einf[n + 1] = 0.5;
  einf[n] = -0.5;
  return {n, QuadricForm(Mat(d.asDiagonal())), HPoint(p), e0, einf, tol};
}

namespace {

void require_unit(const Vec& v, const Tolerance& tol) {
  if (std::abs(v.norm() - 1.0) > std::max(tol.rel_eps, 1e-12)) fail(ErrorCode::NotUnit, "vector must have unit length");
}

void require_on_L(const LieContext& ctx, const HPoint& x) {
  if (x.size() != ctx.size()) fail(ErrorCode::DimensionMismatch, "point and Lie quadric sizes differ");
  if (std::abs(eval_normalized(ctx.L, x.coords())) > std::max(ctx.tol.rel_eps, 1e-9)) {
    fail(ErrorCode::NotOnQuadric, "point is not on the Lie quadric");
  }
}

}  // namespace

HPoint lie_encode_spherical(const LieContext& ctx, const Vec& center, double radius) {
  if (center.size() != ctx.n + 1) fail(ErrorCode::DimensionMismatch, "center size must be n+1");
  require_unit(center, ctx.tol);
  Vec x(ctx.size());
  x << center, std::cos(radius), std::sin(radius);
  return HPoint(x);
}

SphericalSphere lie_decode_spherical(const LieContext& ctx, const HPoint& x) {
  require_on_L(ctx, x);
  const Vec& v = x.coords();
  const Vec c = v.head(ctx.n + 1);
  const double k = c.norm();
  if (k <= ctx.tol.abs(v.norm())) fail(ErrorCode::NotRepresentable, "zero center");
  return {c / k, std::atan2(v[ctx.n + 2] / k, v[ctx.n + 1] / k)};
}

SphericalSphere reduce_spherical(const SphericalSphere& s) {
  constexpr double pi = std::numbers::pi;
  double r = std::remainder(s.radius, 2.0 * pi);
  Vec c = s.center;
  if (r > pi / 2) {
    r -= pi;
    c = -c;
  } else if (r <= -pi / 2) {
    r += pi;
    c = -c;
  }
  return {c, r};
}

HPoint lie_encode_euclidean(const LieContext& ctx, const EuclideanItem& item) {
  const int n = ctx.n;
  if (item.center.size() != n) fail(ErrorCode::DimensionMismatch, "item vector size must be n");
  Vec x = Vec::Zero(ctx.size());
  x.head(n) = item.center;
  const double s2 = item.center.squaredNorm();
  switch (item.kind) {
    case EuclideanKind::Point:
      x += ctx.e0 + s2 * ctx.einf;
      break;
    case EuclideanKind::Sphere: {
      const double r = item.value;
      x += ctx.e0 + (s2 - r * r) * ctx.einf;
      x[n + 2] = r;
      break;
    }
    case EuclideanKind::Plane:
      require_unit(item.center, ctx.tol);
      x += 2.0 * item.value * ctx.einf;
      x[n + 2] = 1.0;
      break;
  }
  return HPoint(x);
}

EuclideanItem lie_decode_euclidean(const LieContext& ctx, const HPoint& xp) {
  require_on_L(ctx, xp);
  const int n = ctx.n;
  const Vec& x = xp.coords();
  const double scale = x.norm();
  const double a = x[n] + x[n + 1];
  EuclideanItem out;
  if (std::abs(a) <= ctx.tol.abs(scale)) {
    const double rho = x[n + 2];
    if (std::abs(rho) <= ctx.tol.abs(scale)) fail(ErrorCode::NotRepresentable, "point at infinity");
    const Vec y = x / rho;
    out.kind = EuclideanKind::Plane;
    out.center = y.head(n);
    out.value = 0.5 * (y[n + 1] - y[n]);
    return out;
  }
  const Vec y = x / a;
  out.center = y.head(n);
  out.value = y[n + 2];
  out.kind = std::abs(out.value) <= ctx.tol.abs(y.norm()) ? EuclideanKind::Point : EuclideanKind::Sphere;
  if (out.kind == EuclideanKind::Point) out.value = 0.0;
  return out;
}

Vec stereographic_lift(const Vec& x) {
  const double s = x.squaredNorm();
  Vec out(x.size() + 1);
  out << 2.0 * x / (1.0 + s), (1.0 - s) / (1.0 + s);
  return out;
}

bool oriented_contact(const LieContext& ctx, const HPoint& s1, const HPoint& s2) {
  require_on_L(ctx, s1);
  require_on_L(ctx, s2);
  const Vec a = s1.coords() / s1.coords().norm();
  const Vec b = s2.coords() / s2.coords().norm();
  return std::abs(ctx.L(a, b)) < ctx.tol.rel_eps;
}

SphereComplex classify_complex(const LieContext& ctx, const HPoint& q) {
  if (q.size() != ctx.size()) fail(ErrorCode::DimensionMismatch, "complex and Lie quadric sizes differ");
  Vec v = q.coords() / q.coords().norm();
  const double qq = ctx.L(v);
  SphereComplex out;
  if (std::abs(qq) <= ctx.tol.rel_eps) {
    out.kind = ComplexKind::Parabolic;
    const Vec& p = ctx.p.coords();
    const double qp = ctx.L(v, p);
    const double root = std::sqrt(std::max(0.0, qp * qp + qq));
    const double t1 = qp + root, t2 = qp - root;
    const double t = std::abs(t1) < std::abs(t2) ? t1 : t2;
    v += t * p;
  } else {
    out.kind = qq > 0 ? ComplexKind::Elliptic : ComplexKind::Hyperbolic;
  }
  out.q = HPoint(v);
  out.plane_complex = std::abs(ctx.L(v, ctx.p.coords())) <= ctx.tol.abs(v.norm());
  return out;
}

SubgeometryRow classify_subgeometry(int p_sign, int q_sign) {
  const int ps = (p_sign > 0) - (p_sign < 0);
  const int qs = (q_sign > 0) - (q_sign < 0);
  if (ps == -1 && qs == -1) return {"elliptic space", "PO(n+1)", "PO(n+1,1)", "PO(n+1,1)"};
  if (ps == -1 && qs == 1) return {"hyperbolic space", "PO(n,1)", "PO(n+1,1)", "PO(n,2)"};
  if (ps == 1 && qs == -1) return {"deSitter space", "PO(n,1)", "PO(n,2)", "PO(n+1,1)"};
  if (ps == -1 && qs == 0) return {"(dual) Euclidean space", "PO(n,0,1)", "PO(n+1,1)", "PO(n,1,1)"};
  if (ps == 1 && qs == 0) return {"(dual) Minkowski space", "PO(n-1,1,1)", "PO(n,2)", "PO(n,1,1)"};
  fail(ErrorCode::UnknownRow, "no classification row for these signatures");
}

double q_distance(const QuadricForm& Q, const HPoint& q, const HPoint& x, const HPoint& y, const Tolerance& tol) {
  const Vec qn = q.coords() / q.coords().norm();
  const Vec xn = x.coords() / x.coords().norm();
  const Vec yn = y.coords() / y.coords().norm();
  if (std::abs(eval_normalized(Q, qn)) <= tol.rel_eps) {
    fail(ErrorCode::PointOnQuadric, "q must lie off the quadric");
  }
  const double xq = Q(xn, qn);
  const double yq = Q(yn, qn);
  const double m = max_abs(Q.matrix());
  if (std::abs(xq) <= tol.abs(m) || std::abs(yq) <= tol.abs(m)) {
    fail(ErrorCode::OnPolarHyperplane, "point on the polar hyperplane of q");
  }
  return 1.0 - Q(xn, yn) * Q(qn) / (xq * yq);
}

double inversive_distance(const OrientedSphere& s1, const OrientedSphere& s2) {
  if (s1.radius == 0.0 || s2.radius == 0.0) fail(ErrorCode::ZeroRadius, "inversive distance needs nonzero radii");
  if (s1.center.size() != s2.center.size()) fail(ErrorCode::DimensionMismatch, "center sizes differ");
  const double d2 = (s1.center - s2.center).squaredNorm();
  return (s1.radius * s1.radius + s2.radius * s2.radius - d2) / (2.0 * s1.radius * s2.radius);
}

ConstantDistanceComplex complex_as_constant_distance(const LieContext& ctx, const HPoint& q) {
  if (q.size() != ctx.size()) fail(ErrorCode::DimensionMismatch, "complex and Lie quadric sizes differ");
  const Vec v = q.coords() / q.coords().norm();
  const int last = ctx.size() - 1;
  Vec qt = v;
  qt[last] = 0.0;
  const double kappa = v[last];
  const double qtqt = ctx.L(qt);
  if (qtqt <= ctx.tol.rel_eps) {
    fail(ErrorCode::NoRealRepresentative, "line through p and q misses the Lie quadric");
  }
  const double R = std::sqrt(qtqt);
  const Vec& p = ctx.p.coords();
  return {HPoint(Vec(qt + R * p)), HPoint(Vec(qt - R * p)), kappa / R};
}

}  // namespace sg
