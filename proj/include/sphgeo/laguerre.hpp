#pragma once

// Laguerre quadrics of the three space forms, the codec between Laguerre
// spheres and points of the sphere space, and the scaling generators.

#include "sphgeo/moebius_projection.hpp"

namespace sg {

/// Laguerre quadric B on R^{n+2} with the distinguished point p = e_{n+2}.
///   hyperbolic: diag(1,..,1,-1,-1)
///   elliptic:   diag(1,..,1,-1)
///   Euclidean:  diag(1,..,1,0,-1)   (Blaschke cylinder)
struct LaguerreContext {
  SpaceForm sf;
  QuadricForm B;
  HPoint p;
  Tolerance tol;

  int size() const { return B.size(); }
  /// Projection from p onto p^perp; the base form is the absolute of sf.
  ProjectionContext projection() const { return ProjectionContext(B, p, tol); }
};

LaguerreContext laguerre_context(const SpaceForm& sf, const Tolerance& tol = {});

enum class LaguerreKind {
  OrientedPlane,
  Sphere,
  Horosphere,
  DistanceSurface,
  DeSitterSphere,
  EuclideanCircle,
  ParallelLinePencil,
};

const char* to_string(LaguerreKind kind);

struct LaguerreSphere {
  LaguerreKind kind = LaguerreKind::Sphere;
  /// Non-Euclidean: center or pole on its sheet in R^{n+1} (sign-canonical,
  /// horosphere centers with last coordinate 1). Euclidean: center in R^n.
  Vec center;
  /// Radius or distance, r >= 0 (horospheres: any real).
  double radius = 0.0;
  int orientation = 1;

  double signed_radius() const { return orientation < 0 ? -radius : radius; }
};

/// x^perp cap p^perp.
Subspace polar_project(const LaguerreContext& ctx, const HPoint& x);

/// Non-Euclidean: x is the pole of the plane cutting B. Euclidean: x holds the
/// plane coefficients a, normalized to a_{n+1} = -1, giving center
/// (a_1..a_n) and signed radius -a_{n+2}.
LaguerreSphere decode_sphere(const LaguerreContext& ctx, const HPoint& x);
HPoint encode_sphere(const LaguerreContext& ctx, const LaguerreSphere& s);

/// Coefficients of the plane whose section with B is the sphere x.
Vec section_plane(const LaguerreContext& ctx, const Vec& x);
/// Inverse of section_plane.
HPoint sphere_from_plane(const LaguerreContext& ctx, const Vec& coefficients);

/// ck_distance(B, x1, x2) for two spheres with a common oriented tangent plane.
double tangent_distance(const LaguerreContext& ctx, const HPoint& x1, const HPoint& x2);

/// Oriented Euclidean hyperplane {z : normal . z = d}, |normal| = 1.
struct EuclideanLine {
  Vec normal;
  double d = 0.0;
};

/// [normal, d, 1] on the Blaschke cylinder.
HPoint encode_line(const EuclideanLine& line);
EuclideanLine decode_line(const HPoint& x, const Tolerance& tol = {});
/// [cos theta, sin theta, d, 1].
HPoint euclidean_line(double theta, double d);

enum class ScalingFamily { S, C, H, EllipticS };

const char* to_string(ScalingFamily family);

/// Hyperbolic: T^(s)_t rotates (e_{n+1}, e_{n+2}), T^(c)_t boosts
/// (e_n, e_{n+2}), T^(h)_t is the parabolic family on (e_n, e_{n+1}, e_{n+2}).
/// Elliptic: S_t boosts (e_{n+1}, e_{n+2}).
ProjMap laguerre_scaling(const LaguerreContext& ctx, ScalingFamily family, double t);
Mat laguerre_scaling_matrix(const LaguerreContext& ctx, ScalingFamily family, double t);

struct LaguerreDecomposition {
  ProjMap Phi;
  ScalingFamily family = ScalingFamily::S;
  double t = 0.0;
  ProjMap Psi;
};

/// f = Phi * T_t * Psi up to scale with Phi, Psi fixing p.
LaguerreDecomposition decompose_laguerre(const LaguerreContext& ctx, const ProjMap& f);

}  // namespace sg
