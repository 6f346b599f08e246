#include "sphgeo/cayley_klein.hpp"

#include <cmath>

namespace sg {

const char* to_string(SpaceTag tag) {
  switch (tag) {
    case SpaceTag::Hyperbolic: return "hyperbolic";
    case SpaceTag::Elliptic: return "elliptic";
    case SpaceTag::Euclidean: return "euclidean";
  }
  return "unknown";
}

SpaceForm SpaceForm::from_epsilon(int epsilon, int n) {
  if (epsilon < 0) return hyperbolic(n);
  if (epsilon > 0) return elliptic(n);
  return euclidean(n);
}

int SpaceForm::epsilon() const {
  switch (tag) {
    case SpaceTag::Hyperbolic: return -1;
    case SpaceTag::Elliptic: return 1;
    case SpaceTag::Euclidean: return 0;
  }
  return 0;
}

QuadricForm SpaceForm::absolute() const {
  Vec d = Vec::Ones(n + 1);
  if (tag == SpaceTag::Hyperbolic) d[n] = -1.0;
  if (tag == SpaceTag::Euclidean) d[n] = 0.0;
  return QuadricForm(Mat(d.asDiagonal()));
}

double ck_distance(const QuadricForm& q, const Vec& x, const Vec& y, const Tolerance& tol) {
  if (std::abs(eval_normalized(q, x)) <= tol.rel_eps || std::abs(eval_normalized(q, y)) <= tol.rel_eps) {
    fail(ErrorCode::PointOnAbsolute, "Cayley-Klein distance needs points off the absolute");
  }
  const Vec xn = x / x.norm();
  const Vec yn = y / y.norm();
  const double xy = q(xn, yn);
  return xy * xy / (q(xn) * q(yn));
}

double ck_distance(const QuadricForm& q, const HPoint& x, const HPoint& y, const Tolerance& tol) {
  return ck_distance(q, x.coords(), y.coords(), tol);
}

QuadricForm ck_sphere_form(const HPoint& center, ExtReal mu, const QuadricForm& q, const Tolerance& tol) {
  if (center.size() != q.size()) fail(ErrorCode::DimensionMismatch, "center and form sizes differ");
  if (mu.infinite) return q;
  const Vec x = center.coords() / center.coords().norm();
  if (std::abs(eval_normalized(q, x)) <= tol.rel_eps) {
    fail(ErrorCode::InvalidCenter, "center on the absolute needs the horosphere form");
  }
  const Vec ax = q.matrix() * x;
  Mat m = ax * ax.transpose() - mu.value * q(x) * q.matrix();
  return QuadricForm(Mat(0.5 * (m + m.transpose())));
}

QuadricForm ck_horosphere_form(const HPoint& center, double mu_tilde, const QuadricForm& q, const Tolerance& tol) {
  if (center.size() != q.size()) fail(ErrorCode::DimensionMismatch, "center and form sizes differ");
  if (std::abs(eval_normalized(q, center.coords())) > tol.rel_eps) {
    fail(ErrorCode::InvalidCenter, "horosphere center must lie on the absolute");
  }
  const Vec ax = q.matrix() * center.coords();
  Mat m = ax * ax.transpose() - mu_tilde * q.matrix();
  return QuadricForm(Mat(0.5 * (m + m.transpose())));
}

QuadricForm ck_sphere_form(const CKSphere& s, const Tolerance& tol) {
  if (s.horosphere) return ck_horosphere_form(s.center, s.mu.value, s.absolute, tol);
  return ck_sphere_form(s.center, s.mu, s.absolute, tol);
}

ExtReal polar_ck_sphere(ExtReal mu) {
  if (mu.infinite) return mu;
  return ExtReal::of(1.0 - mu.value);
}

Vec sphere_pole(const QuadricForm& q, const Vec& center, double mu, const Vec& y) {
  return q(center, y) * center - mu * q(center) * y;
}

double clamp_checked(double v, double lo, double hi, double tol) {
  if (v < lo - tol || v > hi + tol) fail(ErrorCode::OutsideSpaceForm, "argument outside the metric domain");
  return std::min(hi, std::max(lo, v));
}

double metric_distance(const SpaceForm& sf, const HPoint& a, const HPoint& b, const Tolerance& tol) {
  if (sf.tag == SpaceTag::Euclidean) {
    fail(ErrorCode::UnsupportedEuclidean, "no Cayley-Klein point metric for the Euclidean absolute");
  }
  const QuadricForm q = sf.absolute();
  const double k = ck_distance(q, a, b, tol);
  if (sf.tag == SpaceTag::Elliptic) {
    return std::acos(std::sqrt(clamp_checked(k, 0.0, 1.0, tol.rel_eps)));
  }
  const Causality ca = classify(q, a, tol);
  const Causality cb = classify(q, b, tol);
  if (ca == Causality::Timelike && cb == Causality::Timelike) {
    if (k < 1.0 - tol.rel_eps) fail(ErrorCode::OutsideSpaceForm, "hyperbolic points with K < 1");
    return std::acosh(std::sqrt(std::max(1.0, k)));
  }
  if (ca == Causality::Timelike || cb == Causality::Timelike) {
    if (k > tol.rel_eps) fail(ErrorCode::OutsideSpaceForm, "point and plane pole with K > 0");
    return std::asinh(std::sqrt(std::max(0.0, -k)));
  }
  fail(ErrorCode::OutsideSpaceForm, "points must lie in hyperbolic space (planes: use plane_relation)");
}

PlanePair plane_relation(const SpaceForm& sf, const HPoint& k, const HPoint& m, const Tolerance& tol) {
  if (sf.tag != SpaceTag::Hyperbolic) fail(ErrorCode::KindMismatch, "plane relation is defined for hyperbolic space");
  const QuadricForm q = sf.absolute();
  if (classify(q, k, tol) != Causality::Spacelike || classify(q, m, tol) != Causality::Spacelike) {
    fail(ErrorCode::WrongSide, "plane poles must be spacelike");
  }
  const double c = std::sqrt(ck_distance(q, k, m, tol));
  PlanePair out;
  if (std::abs(c - 1.0) <= tol.rel_eps) {
    out.relation = PlaneRelation::Parallel;
    out.value = 0.0;
  } else if (c < 1.0) {
    out.relation = PlaneRelation::Intersecting;
    out.value = std::acos(c);
  } else {
    out.relation = PlaneRelation::Ultraparallel;
    out.value = std::acosh(c);
  }
  return out;
}

static int last_sign(const Vec& v, double tol) {
  for (Eigen::Index i = v.size() - 1; i >= 0; --i) {
    if (std::abs(v[i]) > tol) return v[i] > 0 ? 1 : -1;
  }
  return 1;
}

SheetPoint normalize_to_sheet(const SpaceForm& sf, const HPoint& x, Sheet sheet, const Tolerance& tol) {
  const Vec& v = x.coords();
  SheetPoint out;
  out.orientation = last_sign(v / max_abs(v), tol.rel_eps);
  if (sheet == Sheet::Sphere) {
    out.v = v / v.norm();
    return out;
  }
  const QuadricForm q = SpaceForm::hyperbolic(sf.n).absolute();
  if (v.size() != q.size()) fail(ErrorCode::DimensionMismatch, "point and space form sizes differ");
  const double nv = eval_normalized(q, v);
  if (sheet == Sheet::Hyperboloid) {
    if (nv >= -tol.rel_eps) fail(ErrorCode::WrongSide, "hyperboloid normalization needs a timelike point");
    out.v = v / std::sqrt(-q(v));
    if (out.v[out.v.size() - 1] < 0) out.v = -out.v;
    return out;
  }
  if (nv <= tol.rel_eps) fail(ErrorCode::WrongSide, "deSitter normalization needs a spacelike point");
  out.v = v / std::sqrt(q(v));
  return out;
}

SheetPoint normalize_to_sheet(const SpaceForm& sf, const HPoint& x, const Tolerance& tol) {
  switch (sf.tag) {
    case SpaceTag::Elliptic: return normalize_to_sheet(sf, x, Sheet::Sphere, tol);
    case SpaceTag::Hyperbolic: {
      const QuadricForm q = sf.absolute();
      const Sheet sh = classify(q, x, tol) == Causality::Timelike ? Sheet::Hyperboloid : Sheet::DeSitter;
      return normalize_to_sheet(sf, x, sh, tol);
    }
    case SpaceTag::Euclidean: break;
  }
  fail(ErrorCode::UnsupportedEuclidean, "no sheet normalization for the Euclidean absolute");
}

}  // namespace sg
