#include "sphgeo/moebius_projection.hpp"

#include <cmath>

namespace sg {

const char* to_string(ProjectedKind kind) {
  switch (kind) {
    case ProjectedKind::Sphere: return "sphere";
    case ProjectedKind::Horosphere: return "horosphere";
    case ProjectedKind::Hyperplane: return "hyperplane";
    case ProjectedKind::ConeOfContact: return "cone_of_contact";
    case ProjectedKind::Absolute: return "absolute";
  }
  return "unknown";
}

const char* to_string(MobiusKind kind) {
  switch (kind) {
    case MobiusKind::Point: return "point";
    case MobiusKind::Plane: return "plane";
    case MobiusKind::Sphere: return "sphere";
    case MobiusKind::DistanceSurface: return "distance_surface";
    case MobiusKind::Horosphere: return "horosphere";
  }
  return "unknown";
}

ProjectionContext::ProjectionContext(QuadricForm q, HPoint center, const Tolerance& tol)
    : q_(std::move(q)), center_(std::move(center)), tol_(tol) {
  if (center_.size() != q_.size()) fail(ErrorCode::DimensionMismatch, "center and form sizes differ");
  if (std::abs(eval_normalized(q_, center_.coords())) <= tol.rel_eps) {
    fail(ErrorCode::PointOnQuadric, "projection center must lie off the quadric");
  }
  qq_ = q_(center_.coords());
  const Vec aq = q_.matrix() * center_.coords();
  Eigen::Index j = 0;
  const double m = aq.cwiseAbs().maxCoeff(&j);
  const int size = q_.size();
  if ((aq.cwiseAbs().sum() - m) <= tol.abs(m)) {
    // Coordinate hyperplane: keep the remaining coordinate axes.
    base_ = Mat::Zero(size, size - 1);
    for (int i = 0, c = 0; i < size; ++i) {
      if (i != j) base_(i, c++) = 1.0;
    }
  } else {
    base_ = null_space(Mat(aq.transpose()), tol);
  }
  Mat qt = base_.transpose() * q_.matrix() * base_;
  qt_ = QuadricForm(Mat(0.5 * (qt + qt.transpose())));
}

Vec involute(const ProjectionContext& ctx, const Vec& x) {
  const Vec& q = ctx.q().coords();
  return x - (2.0 * ctx.Q()(x, q) / ctx.qq()) * q;
}

HPoint involute(const ProjectionContext& ctx, const HPoint& x) { return HPoint(involute(ctx, x.coords())); }

Mat involution_matrix(const ProjectionContext& ctx) { return reflection_matrix(ctx.Q(), ctx.q().coords()); }

Vec project(const ProjectionContext& ctx, const Vec& x) {
  const Vec& q = ctx.q().coords();
  return x - (ctx.Q()(x, q) / ctx.qq()) * q;
}

HPoint project(const ProjectionContext& ctx, const HPoint& x) {
  const Vec p = project(ctx, x.coords());
  if (p.norm() <= ctx.tol().rel_eps * x.coords().norm()) {
    fail(ErrorCode::ProjectingCenter, "cannot project the projection center");
  }
  return HPoint(p);
}

ProjectedSphere project_sphere(const ProjectionContext& ctx, const HPoint& xp) {
  const QuadricForm& Q = ctx.Q();
  const double scale = max_abs(Q.matrix());
  const Vec x = xp.coords() / xp.coords().norm();
  const Vec q = ctx.q().coords() / ctx.q().coords().norm();
  const double eps = ctx.tol().rel_eps;
  ProjectedSphere s;
  const Vec xt = project(ctx, x);
  if (xt.norm() <= eps) {
    s.kind = ProjectedKind::Absolute;
    s.center = ctx.q();
    s.mu = ExtReal::inf();
    return s;
  }
  // The section x^perp cap Q must be real.
  const Subspace xperp = polar(Q, Subspace(x, Q.size()), ctx.tol());
  const Signature rs = restricted_signature(Q, xperp, ctx.tol());
  if (rs.t == 0 && (rs.r == 0 || rs.s == 0)) {
    fail(ErrorCode::EmptySection, "the polar hyperplane misses the quadric");
  }
  const double xq = Q(x, q);
  const double xx = Q(x);
  const double qq = Q(q);
  const double delta = xq * xq - xx * qq;
  s.center = HPoint(xt);
  if (std::abs(xq) <= eps * scale) {
    s.kind = ProjectedKind::Hyperplane;
    s.mu = ExtReal::of(0.0);
  } else if (std::abs(xx) <= eps * scale) {
    s.kind = ProjectedKind::ConeOfContact;
    s.mu = ExtReal::of(1.0);
  } else if (std::abs(delta) <= eps * scale * scale) {
    s.kind = ProjectedKind::Horosphere;
    // mu * <x~,x~> in the representative xt.
    s.mu = ExtReal::of(-xq * xq / qq);
  } else {
    s.kind = ProjectedKind::Sphere;
    s.mu = ExtReal::of(xq * xq / delta);
  }
  return s;
}

std::pair<HPoint, HPoint> lift_sphere(const ProjectionContext& ctx, const ProjectedSphere& s) {
  if (s.kind == ProjectedKind::Absolute) return {ctx.q(), ctx.q()};
  const Vec& xt = s.center.coords();
  const Vec& q = ctx.q().coords();
  double radicand = 0.0;
  if (s.kind == ProjectedKind::Horosphere) {
    radicand = -s.mu.value / ctx.qq();
  } else {
    radicand = -s.mu.value * ctx.Q()(xt) / ctx.qq();
  }
  const double scale = xt.squaredNorm() / q.squaredNorm();
  if (radicand < -ctx.tol().rel_eps * scale) fail(ErrorCode::NoRealLift, "sphere has no real lift");
  const double c = std::sqrt(std::max(0.0, radicand));
  return {HPoint(Vec(xt + c * q)), HPoint(Vec(xt - c * q))};
}

double lifted_distance(const ProjectionContext& ctx, const HPoint& xp, const HPoint& yp) {
  const Vec x = xp.coords() / xp.coords().norm();
  const Vec y = yp.coords() / yp.coords().norm();
  const Vec& q = ctx.q().coords();
  const double xq = ctx.Q()(x, q) / q.norm();
  const double yq = ctx.Q()(y, q) / q.norm();
  const double bound = ctx.tol().abs(max_abs(ctx.Q().matrix()));
  if (std::abs(xq) <= bound || std::abs(yq) <= bound) {
    fail(ErrorCode::BranchPoint, "point lies on the polar hyperplane of q");
  }
  const double v = 1.0 - ctx.Q()(x, y) * ctx.qq() / (q.squaredNorm() * xq * yq);
  return v * v;
}

HPoint common_point(const ProjectionContext& ctx, const HPoint& x1, const HPoint& x2) {
  const QuadricForm& Q = ctx.Q();
  Mat two(Q.size(), 2);
  two << x1.coords() / x1.coords().norm(), x2.coords() / x2.coords().norm();
  const Subspace s = polar(Q, span_of(two, ctx.tol()), ctx.tol());
  const Mat r = restricted_form(Q, s);
  Eigen::SelfAdjointEigenSolver<Mat> es(r);
  const Vec& ev = es.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();
  const Eigen::Index last = ev.size() - 1;
  if (ev[0] < -ctx.tol().abs(scale) && ev[last] > ctx.tol().abs(scale)) {
    const Vec y = es.eigenvectors().col(0) / std::sqrt(-ev[0]) + es.eigenvectors().col(last) / std::sqrt(ev[last]);
    return HPoint(Vec(s.basis() * y));
  }
  for (Eigen::Index i = 0; i <= last; ++i) {
    if (std::abs(ev[i]) <= ctx.tol().abs(scale)) return HPoint(Vec(s.basis() * es.eigenvectors().col(i)));
  }
  fail(ErrorCode::NoIntersection, "the spheres do not intersect");
}

double sphere_angle(const ProjectionContext& ctx, const HPoint& x1, const HPoint& x2) {
  common_point(ctx, x1, x2);
  return ck_distance(ctx.Q(), x1, x2, ctx.tol());
}

double sphere_angle_projected(const ProjectionContext& ctx, const HPoint& x1, const HPoint& x2) {
  const QuadricForm& Q = ctx.Q();
  const Vec yt = project(ctx, common_point(ctx, x1, x2).coords());
  const Vec& q = ctx.q().coords();
  auto pole = [&](const HPoint& xp) {
    const Vec x = xp.coords() / xp.coords().norm();
    const Vec xt = project(ctx, x);
    // mu <x~,x~> = -<x,q>^2/<q,q> for every Q-sphere.
    const double xq = Q(x, q);
    return Vec(Q(xt, yt) * xt + (xq * xq / ctx.qq()) * yt);
  };
  return ck_distance(Q, pole(x1), pole(x2), ctx.tol());
}

Mat scaling_matrix(const QuadricForm& Q, const Vec& x1in, const Vec& x2in, const Tolerance& tol) {
  const double k = ck_distance(Q, x1in, x2in, tol);
  if (!(k > tol.rel_eps)) fail(ErrorCode::NonPositiveDistance, "scaling needs K(x1,x2) > 0");
  Vec x1 = x1in / std::sqrt(std::abs(Q(x1in)));
  Vec x2 = x2in / std::sqrt(std::abs(Q(x2in)));
  const double c = Q(x1) > 0 ? 1.0 : -1.0;
  double b = Q(x1, x2);
  if (b * c < 0) {
    x2 = -x2;
    b = -b;
  }
  Mat u(Q.size(), 2);
  u << x1, x2;
  Mat m(2, 2);
  m << -1.0, -1.0, (c + 2.0 * b) / c, -1.0;
  m /= (c + b);
  return Mat::Identity(Q.size(), Q.size()) + u * m * u.transpose() * Q.matrix();
}

ProjMap scaling(const ProjectionContext& ctx, const HPoint& x1, const HPoint& x2) {
  return ProjMap(scaling_matrix(ctx.Q(), x1.coords(), x2.coords(), ctx.tol()), Tolerance{0.0});
}

MobiusDecomposition decompose_mobius(const ProjectionContext& ctx, const ProjMap& f) {
  double c = 0.0;
  if (form_residual(ctx.Q(), f.matrix(), &c) > std::max(ctx.tol().rel_eps, 1e-8) || !(c > 0.0)) {
    fail(ErrorCode::NotOrthogonal, "map does not preserve the quadric");
  }
  const HPoint x = f(ctx.q());
  const ProjMap t = scaling(ctx, ctx.q(), x);
  return {t, t.inverse() * f};
}

ProjectionContext mobius_context(const SpaceForm& sf) {
  const int size = sf.n + 2;
  Vec d = Vec::Ones(size);
  d[size - 1] = -1.0;
  Vec q = Vec::Zero(size);
  switch (sf.tag) {
    case SpaceTag::Hyperbolic: q[sf.n] = 1.0; break;
    case SpaceTag::Elliptic: q[sf.n + 1] = 1.0; break;
    case SpaceTag::Euclidean:
      fail(ErrorCode::UnsupportedEuclidean, "Euclidean Moebius geometry lives in the Lie model");
  }
  return ProjectionContext(QuadricForm(Mat(d.asDiagonal())), HPoint(q));
}

Vec canonical_sign(const Vec& v, double tol) {
  const double m = max_abs(v);
  for (Eigen::Index i = v.size() - 1; i >= 0; --i) {
    if (std::abs(v[i]) > tol * m) return v[i] < 0 ? Vec(-v) : v;
  }
  return v;
}

namespace {

// Ambient index of the lift coordinate.
int lift_index(const SpaceForm& sf) { return sf.tag == SpaceTag::Hyperbolic ? sf.n : sf.n + 1; }

// +1 or -1 such that factor * v is sign-canonical.
double canonical_factor(const Vec& v) { return (canonical_sign(v) - v).norm() > 0 ? -1.0 : 1.0; }

Vec insert_lift(const SpaceForm& sf, const Vec& y, double h) {
  const int li = lift_index(sf);
  Vec x(sf.n + 2);
  for (int i = 0, c = 0; i < sf.n + 2; ++i) x[i] = (i == li) ? h : y[c++];
  return x;
}

}  // namespace

HPoint encode_mobius(const SpaceForm& sf, const MobiusSphere& s) {
  if (sf.tag == SpaceTag::Euclidean) fail(ErrorCode::UnsupportedEuclidean, "use the Lie codec");
  if (s.center.size() != sf.n + 1) fail(ErrorCode::DimensionMismatch, "center size must be n+1");
  const double o = s.orientation < 0 ? -1.0 : 1.0;
  const QuadricForm qt = sf.absolute();
  const double yy = qt(s.center);
  auto need = [&](bool ok) {
    if (!ok) fail(ErrorCode::KindMismatch, "center is not on the sheet required by the kind");
  };
  if (sf.tag == SpaceTag::Elliptic) {
    switch (s.kind) {
      case MobiusKind::Point: return HPoint(insert_lift(sf, s.center, o));
      case MobiusKind::Plane: return HPoint(insert_lift(sf, s.center, 0.0));
      case MobiusKind::Sphere: return HPoint(insert_lift(sf, s.center, o * std::cos(s.radius)));
      default: fail(ErrorCode::KindMismatch, "kind not available in elliptic Moebius geometry");
    }
  }
  switch (s.kind) {
    case MobiusKind::Point: need(yy < 0); return HPoint(insert_lift(sf, s.center, o));
    case MobiusKind::Plane: need(yy > 0); return HPoint(insert_lift(sf, s.center, 0.0));
    case MobiusKind::Sphere: need(yy < 0); return HPoint(insert_lift(sf, s.center, o * std::cosh(s.radius)));
    case MobiusKind::DistanceSurface:
      need(yy > 0);
      return HPoint(insert_lift(sf, s.center, o * std::sinh(s.radius)));
    case MobiusKind::Horosphere:
      need(std::abs(yy) <= 1e-9 * s.center.squaredNorm());
      return HPoint(insert_lift(sf, s.center, o * std::exp(s.radius)));
  }
  fail(ErrorCode::KindMismatch, "unknown kind");
}

MobiusSphere decode_mobius(const SpaceForm& sf, const HPoint& xp, const Tolerance& tol) {
  if (sf.tag == SpaceTag::Euclidean) fail(ErrorCode::UnsupportedEuclidean, "use the Lie codec");
  if (xp.size() != sf.n + 2) fail(ErrorCode::DimensionMismatch, "lift size must be n+2");
  const Vec x = xp.coords() / max_abs(xp.coords());
  const int li = lift_index(sf);
  Vec y(sf.n + 1);
  for (int i = 0, c = 0; i < sf.n + 2; ++i) {
    if (i != li) y[c++] = x[i];
  }
  double h = x[li];
  const double eps = tol.rel_eps;
  const QuadricForm qt = sf.absolute();
  MobiusSphere out;

  if (sf.tag == SpaceTag::Elliptic) {
    const double s = canonical_factor(y) / y.norm();
    out.center = y * s;
    h *= s;
    const double a = std::abs(h);
    out.orientation = h < 0 ? -1 : 1;
    if (a > 1.0 + eps) fail(ErrorCode::EmptySection, "sphere has no real points");
    if (a >= 1.0 - eps) {
      out.kind = MobiusKind::Point;
    } else if (a <= eps) {
      out.kind = MobiusKind::Plane;
      out.orientation = 1;
    } else {
      out.kind = MobiusKind::Sphere;
      out.radius = std::acos(a);
    }
    return out;
  }

  const double yy = qt(y);
  const double ynorm2 = y.squaredNorm();
  if (std::abs(h) <= eps) {
    if (yy <= eps * ynorm2) fail(ErrorCode::EmptySection, "plane pole must be spacelike");
    out.kind = MobiusKind::Plane;
    out.center = canonical_sign(Vec(y / std::sqrt(yy)));
    return out;
  }
  double s = 1.0;
  if (std::abs(yy) <= eps * ynorm2) {
    s = 1.0 / y[sf.n];
    out.kind = MobiusKind::Horosphere;
  } else if (yy < 0) {
    s = 1.0 / std::sqrt(-yy);
    if (y[sf.n] < 0) s = -s;
  } else {
    s = canonical_factor(y) / std::sqrt(yy);
  }
  out.center = y * s;
  h *= s;
  out.orientation = h < 0 ? -1 : 1;
  const double a = std::abs(h);
  if (out.kind == MobiusKind::Horosphere) {
    out.radius = std::log(a);
  } else if (yy < 0) {
    if (a < 1.0 - eps) fail(ErrorCode::EmptySection, "sphere has no real points");
    if (a <= 1.0 + eps) {
      out.kind = MobiusKind::Point;
    } else {
      out.kind = MobiusKind::Sphere;
      out.radius = std::acosh(a);
    }
  } else {
    out.kind = MobiusKind::DistanceSurface;
    out.radius = std::asinh(a);
  }
  return out;
}

}  // namespace sg
