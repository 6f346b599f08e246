#pragma once

// Involution and central projection induced by a point q, Q-spheres and their
// Cayley-Klein images in q^perp, scalings and the Moebius sphere tables.

#include <utility>

#include "sphgeo/cayley_klein.hpp"

namespace sg {

class ProjectionContext {
 public:
  ProjectionContext(QuadricForm q, HPoint center, const Tolerance& tol = {});

  const QuadricForm& Q() const { return q_; }
  const HPoint& q() const { return center_; }
  /// Form restricted to q^perp in base coordinates.
  const QuadricForm& Qtilde() const { return qt_; }
  /// Orthonormal basis of q^perp (columns).
  const Mat& base() const { return base_; }
  double qq() const { return qq_; }
  const Tolerance& tol() const { return tol_; }

  /// Coordinates of a vector of q^perp with respect to base().
  Vec to_base(const Vec& x) const { return base_.transpose() * x; }
  Vec from_base(const Vec& y) const { return base_ * y; }

 private:
  QuadricForm q_;
  HPoint center_;
  QuadricForm qt_;
  Mat base_;
  double qq_ = 0.0;
  Tolerance tol_;
};

HPoint involute(const ProjectionContext& ctx, const HPoint& x);
Vec involute(const ProjectionContext& ctx, const Vec& x);
Mat involution_matrix(const ProjectionContext& ctx);

/// x - <x,q>/<q,q> q, in ambient coordinates.
HPoint project(const ProjectionContext& ctx, const HPoint& x);
Vec project(const ProjectionContext& ctx, const Vec& x);

enum class ProjectedKind { Sphere, Horosphere, Hyperplane, ConeOfContact, Absolute };

const char* to_string(ProjectedKind kind);

struct ProjectedSphere {
  ProjectedKind kind = ProjectedKind::Sphere;
  /// Ambient coordinates of the center; lies in q^perp.
  HPoint center;
  /// For horospheres: mu * <center, center>.
  ExtReal mu;
};

ProjectedSphere project_sphere(const ProjectionContext& ctx, const HPoint& x);
/// x_pm = x~ pm sqrt(-mu <x~,x~>/<q,q>) q.
std::pair<HPoint, HPoint> lift_sphere(const ProjectionContext& ctx, const ProjectedSphere& s);

/// (1 - <x,y><q,q>/(<x,q><y,q>))^2.
double lifted_distance(const ProjectionContext& ctx, const HPoint& x, const HPoint& y);

/// K_Q(x1, x2) for intersecting Q-spheres.
double sphere_angle(const ProjectionContext& ctx, const HPoint& x1, const HPoint& x2);
/// The same value computed in q^perp from the tangent planes of the projected
/// spheres at a common point.
double sphere_angle_projected(const ProjectionContext& ctx, const HPoint& x1, const HPoint& x2);
/// A point of Q in x1^perp cap x2^perp.
HPoint common_point(const ProjectionContext& ctx, const HPoint& x1, const HPoint& x2);

/// Unique Q-preserving map sending x1 to x2 and fixing (x1 ^ x2)^perp.
ProjMap scaling(const ProjectionContext& ctx, const HPoint& x1, const HPoint& x2);
Mat scaling_matrix(const QuadricForm& q, const Vec& x1, const Vec& x2, const Tolerance& tol = {});

struct MobiusDecomposition {
  ProjMap T;
  ProjMap Phi;
};

MobiusDecomposition decompose_mobius(const ProjectionContext& ctx, const ProjMap& f);

// Hyperbolic Moebius geometry: diag(1,..,1,-1) on R^{n+2} with q = e_{n+1}.
// Elliptic Moebius geometry: the same form with q = e_{n+2}.
ProjectionContext mobius_context(const SpaceForm& sf);

enum class MobiusKind { Point, Plane, Sphere, DistanceSurface, Horosphere };

const char* to_string(MobiusKind kind);

struct MobiusSphere {
  MobiusKind kind = MobiusKind::Point;
  /// Center (or plane pole) on the sheet of R^{n+1}: hyperboloid, deSitter,
  /// light cone with last coordinate 1, or unit sphere.
  Vec center;
  double radius = 0.0;
  int orientation = 1;
};

HPoint encode_mobius(const SpaceForm& sf, const MobiusSphere& s);
MobiusSphere decode_mobius(const SpaceForm& sf, const HPoint& x, const Tolerance& tol = {});

/// Sign-canonical copy of a center: last nonzero component positive.
Vec canonical_sign(const Vec& v, double tol = 1e-12);

}  // namespace sg
