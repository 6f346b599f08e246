#pragma once

// Cayley-Klein distance and spheres relative to an absolute quadric.

#include "sphgeo/quadric_engine.hpp"

namespace sg {

/// Real number or +infinity.
struct ExtReal {
  double value = 0.0;
  bool infinite = false;

  static ExtReal inf() { return {0.0, true}; }
  static ExtReal of(double v) { return {v, false}; }
};

enum class SpaceTag { Hyperbolic, Elliptic, Euclidean };

const char* to_string(SpaceTag tag);

struct SpaceForm {
  SpaceTag tag = SpaceTag::Hyperbolic;
  int n = 2;

  static SpaceForm hyperbolic(int n) { return {SpaceTag::Hyperbolic, n}; }
  static SpaceForm elliptic(int n) { return {SpaceTag::Elliptic, n}; }
  static SpaceForm euclidean(int n) { return {SpaceTag::Euclidean, n}; }
  /// -1 hyperbolic, +1 elliptic, 0 Euclidean.
  static SpaceForm from_epsilon(int epsilon, int n);

  int epsilon() const;
  /// diag(1,..,1,-1), identity, or diag(1,..,1,0) on R^{n+1}.
  QuadricForm absolute() const;
};

/// K(x,y) = <x,y>^2 / (<x,x><y,y>).
double ck_distance(const QuadricForm& q, const HPoint& x, const HPoint& y, const Tolerance& tol = {});
double ck_distance(const QuadricForm& q, const Vec& x, const Vec& y, const Tolerance& tol = {});

struct CKSphere {
  HPoint center;
  ExtReal mu;
  QuadricForm absolute;
  /// Lightlike center; mu then holds mu * <x,x>.
  bool horosphere = false;
};

/// <x,y><x,y'> - mu <x,x><y,y'>; mu = infinity gives the absolute itself.
QuadricForm ck_sphere_form(const HPoint& center, ExtReal mu, const QuadricForm& q, const Tolerance& tol = {});
/// Horosphere about a lightlike center: <x,y><x,y'> - mu_tilde <y,y'>.
QuadricForm ck_horosphere_form(const HPoint& center, double mu_tilde, const QuadricForm& q,
                               const Tolerance& tol = {});
QuadricForm ck_sphere_form(const CKSphere& s, const Tolerance& tol = {});

/// mu + mu~ = 1; infinity is paired with itself.
ExtReal polar_ck_sphere(ExtReal mu);

/// Pole of the tangent hyperplane of S_mu(x) at y: <x,y> x - mu <x,x> y.
Vec sphere_pole(const QuadricForm& q, const Vec& center, double mu, const Vec& y);

/// Hyperbolic: arcosh sqrt K for two points, arsinh sqrt(-K) for a point and
/// a plane pole. Elliptic: arccos sqrt K in [0, pi/2].
double metric_distance(const SpaceForm& sf, const HPoint& a, const HPoint& b, const Tolerance& tol = {});

enum class PlaneRelation { Intersecting, Parallel, Ultraparallel };

struct PlanePair {
  PlaneRelation relation = PlaneRelation::Intersecting;
  /// Intersection angle in [0, pi/2] or distance.
  double value = 0.0;
};

/// Relative position of two hyperbolic planes from their (spacelike) poles.
PlanePair plane_relation(const SpaceForm& sf, const HPoint& k, const HPoint& m, const Tolerance& tol = {});

enum class Sheet { Hyperboloid, DeSitter, Sphere };

struct SheetPoint {
  Vec v;
  /// Sign of the last nonzero component of the input representative.
  int orientation = 1;
};

/// Hyperboloid: <x,x> = -1 with x_{n+1} >= 0. DeSitter: <x,x> = 1. Sphere:
/// Euclidean norm 1. The last two keep the direction of the input.
SheetPoint normalize_to_sheet(const SpaceForm& sf, const HPoint& x, const Tolerance& tol = {});
SheetPoint normalize_to_sheet(const SpaceForm& sf, const HPoint& x, Sheet sheet, const Tolerance& tol = {});

/// Clamps into [lo, hi] when within tol of the interval, else OutsideSpaceForm.
double clamp_checked(double v, double lo, double hi, double tol);

}  // namespace sg
