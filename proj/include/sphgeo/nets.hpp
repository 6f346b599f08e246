#pragma once

// Circumscribed quadrilaterals, incidence checks and checkerboard incircular
// nets from the Jacobi elliptic parametrizations of the base curve.

#include <array>
#include <map>
#include <vector>

#include "sphgeo/elliptic_fn.hpp"
#include "sphgeo/laguerre.hpp"

namespace sg {

/// Default threshold for coplanarity verdicts on normalized determinants.
inline constexpr double kCoplanarTol = 1e-8;

struct Circumscription {
  bool circumscribed = false;
  /// Signature of the form restricted to the spanning plane (valid when
  /// circumscribed).
  Signature plane_signature;
  /// Normalized volume of the four points.
  double residual = 0.0;
};

/// Coplanarity of four points of the Lie (RP^4) or Laguerre (RP^3) quadric.
Circumscription circumscribed(const QuadricForm& q, const std::array<HPoint, 4>& points,
                              double tol = kCoplanarTol);

/// Smallest-to-largest singular value ratio of the row-normalized points,
/// taken at position rank: zero when the points span at most rank dimensions.
double rank_defect(const std::vector<HPoint>& points, int rank);

/// Point representing the circle touching the four lines: the pole of their
/// plane (non-Euclidean) or the plane coefficients (Euclidean).
HPoint incircle_point(const LaguerreContext& ctx, const std::array<HPoint, 4>& points);
LaguerreSphere incircle(const LaguerreContext& ctx, const std::array<HPoint, 4>& points);

/// points = (l1, l2, l3, l4, m1, m2, m3, m4). Hypotheses (l1,l2,m1,m2),
/// (l1,l2,m3,m4), (l3,l4,m1,m2), (l3,l4,m3,m4), (l2,l3,m2,m3); returns the
/// verdict on (l1,l4,m1,m4).
bool miquel_check(const std::array<HPoint, 8>& points, double tol = kCoplanarTol);

/// Eight points on the base curve B cap C with hypotheses (l1,l2,m1,m2),
/// (l2,l3,m2,m3), (l3,l4,m3,m4); returns the verdict on (l1,l4,m1,m4).
bool laguerre_subdivision_check(const QuadricForm& B, const QuadricForm& C, const std::array<HPoint, 8>& points,
                                double tol = kCoplanarTol);

enum class ConicType { Ellipse, Hyperbola };

const char* to_string(ConicType c);

struct IndexRange {
  int lo = 0;
  int hi = 0;
};

struct NetParams {
  int epsilon = 1;
  ConicType conic = ConicType::Ellipse;
  double alpha = 0.9;
  double beta = 0.4;
  double s = 0.0;
  double s_tilde = 0.0;
  double u0_l = 0.0;
  double u0_m = 0.0;
  IndexRange i_range{-4, 4};
  IndexRange j_range{-4, 4};
};

void validate(const NetParams& p);
SpaceForm net_space_form(const NetParams& p);

/// Ellipse: 1 - beta^2 (1 + eps alpha^2) / (alpha^2 (1 + eps beta^2)).
/// Hyperbola: alpha^2 (1 - eps beta^2) / (alpha^2 + beta^2).
double base_curve_modulus(const NetParams& p);

/// diag(1, 1, eps, -1).
QuadricForm net_laguerre_quadric(const NetParams& p);
/// Ellipse diag(alpha^2, beta^2, -1, 0); hyperbola diag(alpha^2, -beta^2, -1, 0).
QuadricForm base_cone(const NetParams& p);

/// v_+(u) (sign > 0) or v_-(u) on B cap C.
HPoint base_point(const NetParams& p, int sign, double u);

/// Pencil parameter of the hyperboloid B + lambda C ruled by v_+(u) ^ v_-(u+s).
ExtReal ruling_lambda(const NetParams& p, double s);
/// B + lambda C, or C for lambda = infinity.
QuadricForm pencil_quadric(const NetParams& p, ExtReal lambda);

/// s~ = 4K/N - s.
double periodic_step(const NetParams& p, int N);

HPoint ell_at(const NetParams& p, int i);
HPoint m_at(const NetParams& p, int j);

struct CbicNet {
  NetParams params;
  std::map<int, HPoint> ell;
  std::map<int, HPoint> m;
  QuadricForm B;
  QuadricForm C;
};

CbicNet generate(const NetParams& p);

struct NetResiduals {
  double max_on_quadric = 0.0;
  double max_coplanarity = 0.0;
};

/// On-quadric residuals for B and C and coplanarity over all checkerboard
/// quads inside the index ranges.
NetResiduals net_residuals(const CbicNet& net);

struct NetIncircle {
  int i = 0;
  int j = 0;
  HPoint point;
  LaguerreSphere sphere;
  bool valid = false;
};

/// Incircles of the checkerboard quads (l_i, l_{i+1}, m_j, m_{j+1}), i + j even.
std::vector<NetIncircle> net_incircles(const CbicNet& net);

struct AssociatedHyperboloids {
  ExtReal lambda;
  ExtReal lambda_tilde;
  /// Contains the lines l_{2k} ^ l_{2k+1} and m_{2l} ^ m_{2l+1}.
  QuadricForm Q;
  /// Contains the lines l_{2k+1} ^ l_{2k+2} and m_{2l+1} ^ m_{2l+2}.
  QuadricForm Qt;
};

AssociatedHyperboloids associated_hyperboloids(const CbicNet& net);

/// Homogeneous least-squares quadric through points of RP^3.
QuadricForm fit_quadric(const std::vector<Vec>& points);
/// Hyperboloids fitted through sampled points of the ruling lines of the net.
AssociatedHyperboloids fit_associated_hyperboloids(const CbicNet& net, int samples_per_line = 5);

using A3Index = std::array<int, 4>;

/// nu^(1)_k = l_{2k}, nu^(2)_k = l_{-2k+1}, nu^(3)_k = m_{-2k}, nu^(4)_k = m_{2k+1}.
HPoint nu_point(const NetParams& p, int family, int k);

struct OctahedralGrid {
  std::map<A3Index, HPoint> points;
  std::map<A3Index, double> residuals;
  double max_residual = 0.0;
};

/// Meets of the plane families for all a with sum 0 and |k_i| <= radius.
OctahedralGrid octahedral_grid(const NetParams& p, int radius);

/// Minimum over the roots of the first cubic of the largest normalized value
/// of w_i^T adj(x B + y C) w_i, with w = B c (or c in the Euclidean case).
double dual_pencil_residual(const NetParams& p, const std::array<HPoint, 4>& c);

}  // namespace sg
