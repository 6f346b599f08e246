#pragma once

// Lie quadric, oriented hyperspheres of S^n and R^n, sphere complexes and the
// signed inversive distance.

#include <string>

#include "sphgeo/moebius_projection.hpp"

namespace sg {

/// L = diag(1,..,1,-1,-1) on R^{n+3} with the point complex p = e_{n+3}.
/// Euclidean basis vectors in coordinates (.., e_{n+1}, e_{n+2}, ..):
///   e_0   = (e_{n+1} + e_{n+2}) / 2
///   e_inf = (e_{n+2} - e_{n+1}) / 2
/// so that <e_0,e_0> = <e_inf,e_inf> = 0 and <e_0,e_inf> = -1/2.
struct LieContext {
  int n = 2;
  QuadricForm L;
  HPoint p;
  Vec e0;
  Vec einf;
  Tolerance tol;

  int size() const { return n + 3; }
};

LieContext lie_context(int n, const Tolerance& tol = {});

/// Oriented hypersphere of S^n: unit center and signed spherical radius.
struct SphericalSphere {
  Vec center;
  double radius = 0.0;
};

/// (c, r) -> [c, cos r, sin r].
HPoint lie_encode_spherical(const LieContext& ctx, const Vec& center, double radius);
/// Representative with |c| = 1; r in (-pi, pi].
SphericalSphere lie_decode_spherical(const LieContext& ctx, const HPoint& x);
/// Chooses the representative of (c, r) ~ (c, r + 2 pi) ~ (-c, r - pi) with
/// r in (-pi/2, pi/2].
SphericalSphere reduce_spherical(const SphericalSphere& s);

enum class EuclideanKind { Point, Sphere, Plane };

const char* to_string(EuclideanKind kind);

/// Oriented object of R^n: a point (center), a sphere (center, signed
/// radius), or an oriented plane {normal . z = d}.
struct EuclideanItem {
  EuclideanKind kind = EuclideanKind::Point;
  Vec center;  // point, sphere center, or unit normal
  double value = 0.0;  // signed radius or plane offset d
};

/// point: x + e_0 + |x|^2 e_inf
/// sphere: s + e_0 + (|s|^2 - r^2) e_inf + r e_{n+3}
/// plane: n + 2d e_inf + e_{n+3}
HPoint lie_encode_euclidean(const LieContext& ctx, const EuclideanItem& item);
EuclideanItem lie_decode_euclidean(const LieContext& ctx, const HPoint& x);

/// Stereographic image (2x, 1 - |x|^2) / (1 + |x|^2) of a point of R^n.
Vec stereographic_lift(const Vec& x);

/// Lie orthogonality of two points of L.
bool oriented_contact(const LieContext& ctx, const HPoint& s1, const HPoint& s2);

enum class ComplexKind { Elliptic, Hyperbolic, Parabolic };

const char* to_string(ComplexKind kind);

struct SphereComplex {
  /// Within the parabolic band q is moved onto the light cone along p.
  HPoint q;
  ComplexKind kind = ComplexKind::Elliptic;
  bool plane_complex = false;
};

SphereComplex classify_complex(const LieContext& ctx, const HPoint& q);

struct SubgeometryRow {
  std::string space_form;
  std::string isometry_group;
  std::string mobius_group;
  std::string laguerre_group;
};

/// Row of the classification table for the signs of <p,p> and <q,q>.
SubgeometryRow classify_subgeometry(int p_sign, int q_sign);

/// 1 - <x,y><q,q> / (<x,q><y,q>).
double q_distance(const QuadricForm& Q, const HPoint& q, const HPoint& x, const HPoint& y,
                  const Tolerance& tol = {});

/// Oriented sphere of R^n for the inversive distance.
struct OrientedSphere {
  Vec center;
  double radius = 0.0;
};

/// (r1^2 + r2^2 - |c1 - c2|^2) / (2 r1 r2).
double inversive_distance(const OrientedSphere& s1, const OrientedSphere& s2);

struct ConstantDistanceComplex {
  HPoint q_plus;
  HPoint q_minus;
  double I = 0.0;
};

/// Writes a complex as the spheres at constant inversive distance I from q_plus.
ConstantDistanceComplex complex_as_constant_distance(const LieContext& ctx, const HPoint& q);

}  // namespace sg
