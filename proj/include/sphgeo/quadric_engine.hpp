#pragma once

// Quadrics as symmetric bilinear forms on R^{n+1}.

#include <optional>
#include <vector>

#include "sphgeo/projective_core.hpp"

namespace sg {

struct Signature {
  int r = 0;  // positive
  int s = 0;  // negative
  int t = 0;  // zero

  bool operator==(const Signature&) const = default;
};

Signature signature_of(const Mat& form, const Tolerance& tol = {});

class QuadricForm {
 public:
  QuadricForm() = default;
  explicit QuadricForm(Mat form, const Tolerance& tol = {});
  static QuadricForm diagonal(std::initializer_list<double> d);

  const Mat& matrix() const { return a_; }
  int size() const { return static_cast<int>(a_.rows()); }
  int n() const { return size() - 1; }
  const Signature& signature() const { return sig_; }
  bool degenerate() const { return sig_.t > 0; }

  double operator()(const Vec& x, const Vec& y) const { return x.dot(a_ * y); }
  double operator()(const Vec& x) const { return x.dot(a_ * x); }

 private:
  Mat a_;
  Signature sig_;
};

enum class Causality { Spacelike, Timelike, Lightlike };

/// <x,x> for the given representative.
double eval(const QuadricForm& q, const HPoint& x);
double bilinear(const QuadricForm& q, const Vec& x, const Vec& y);
/// <x,x> / (|x|^2 max|A|): the value the tolerance is applied to.
double eval_normalized(const QuadricForm& q, const Vec& x);
Causality classify(const QuadricForm& q, const HPoint& x, const Tolerance& tol = {});

Signature signature(const QuadricForm& q, const Tolerance& tol = {});
/// Form restricted to a subspace, in the subspace's orthonormal basis.
Mat restricted_form(const QuadricForm& q, const Subspace& u);
Signature restricted_signature(const QuadricForm& q, const Subspace& u, const Tolerance& tol = {});

Subspace polar(const QuadricForm& q, const Subspace& u, const Tolerance& tol = {});
/// Polar hyperplane of a point, as a coefficient vector A x.
Vec polar_hyperplane(const QuadricForm& q, const HPoint& x);

/// Cone of contact from x: y -> <x,y>^2 - <x,x><y,y>.
QuadricForm tangent_cone(const QuadricForm& q, const HPoint& x, const Tolerance& tol = {});

enum class LineKind { TwoReal, TwoComplexConjugate, Tangent, Contained };

struct LineQuadricResult {
  LineKind kind = LineKind::TwoReal;
  std::vector<HPoint> points;
  /// Imaginary part for the complex case; points[0] then holds the real part.
  std::optional<Vec> imaginary;
  double discriminant = 0.0;
};

LineQuadricResult line_intersect(const QuadricForm& q, const HPoint& x, const HPoint& y,
                                 const Tolerance& tol = {});

/// sigma_q(x) = x - 2 <x,q>/<q,q> q.
ProjMap reflect(const QuadricForm& q, const HPoint& mirror, const Tolerance& tol = {});
Mat reflection_matrix(const QuadricForm& q, const Vec& mirror);

/// Fit F^T A F = c A. Returns the relative residual and writes c.
double form_residual(const QuadricForm& q, const Mat& f, double* scale = nullptr);

/// Mirrors m_1..m_k with reflect(m_1) * ... * reflect(m_k) = f up to scale.
std::vector<HPoint> decompose_reflections(const QuadricForm& q, const ProjMap& f,
                                          const Tolerance& tol = {});
Mat compose_reflections(const QuadricForm& q, const std::vector<HPoint>& mirrors);

class Pencil {
 public:
  Pencil(QuadricForm q1, QuadricForm q2, const Tolerance& tol = {});

  const QuadricForm& q1() const { return q1_; }
  const QuadricForm& q2() const { return q2_; }
  Mat member_matrix(double l1, double l2) const { return l1 * q1_.matrix() + l2 * q2_.matrix(); }
  QuadricForm member(double l1, double l2) const { return QuadricForm(member_matrix(l1, l2)); }

 private:
  QuadricForm q1_, q2_;
};

/// Unique member q1 + t q2 containing the line x^y through two base points.
/// Writes t when requested.
QuadricForm pencil_member_through(const Pencil& p, const HPoint& x, const HPoint& y,
                                  double* t = nullptr, const Tolerance& tol = {});

/// Residual of the best fit of m by a linear combination of the given
/// matrices, relative to max|m|.
double pencil_fit_residual(const std::vector<Mat>& generators, const Mat& m);

}  // namespace sg
