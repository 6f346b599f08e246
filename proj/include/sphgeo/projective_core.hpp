#pragma once

// Homogeneous points, projective subspaces and projective maps of RP^n.

#include <Eigen/Dense>
#include <initializer_list>
#include <vector>

#include "sphgeo/errors.hpp"

namespace sg {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Relative tolerance. The absolute threshold is rel_eps times the scale of
/// the operands and is computed at every call site.
struct Tolerance {
  double rel_eps = 1e-9;

  double abs(double scale) const { return rel_eps * scale; }
};

/// Largest absolute entry of a vector or matrix.
double max_abs(const Vec& v);
double max_abs(const Mat& m);

/// Point of RP^n given by a nonzero representative in R^{n+1}. The stored
/// representative is kept as given; use normalize() for the canonical one.
class HPoint {
 public:
  HPoint() = default;
  explicit HPoint(Vec coords);
  HPoint(std::initializer_list<double> coords);

  const Vec& coords() const { return coords_; }
  int size() const { return static_cast<int>(coords_.size()); }
  int n() const { return size() - 1; }
  double operator[](int i) const { return coords_[i]; }

  HPoint normalized(const Tolerance& tol = {}) const;

 private:
  Vec coords_;
};

/// Canonical representative: max-abs component 1, last nonzero component
/// positive.
HPoint normalize(const HPoint& x, const Tolerance& tol = {});
Vec canonical(const Vec& x, const Tolerance& tol = {});

/// Scale-invariant equality of projective points.
bool approx_equal(const HPoint& x, const HPoint& y, const Tolerance& tol = {});

/// Projective subspace stored as an orthonormal spanning basis (columns).
class Subspace {
 public:
  Subspace() = default;
  Subspace(Mat orthonormal_basis, int ambient_size);

  const Mat& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.cols()) - 1; }
  int ambient_size() const { return ambient_; }
  int ambient_dim() const { return ambient_ - 1; }

  bool contains(const HPoint& x, const Tolerance& tol = {}) const;
  /// Relative distance of x from the span.
  double residual(const Vec& x) const;
  /// Annihilator in dual coordinates (U*), dim U + dim U* = n - 1.
  Subspace dual() const;
  bool same_as(const Subspace& other, const Tolerance& tol = {}) const;

 private:
  Mat basis_;
  int ambient_ = 0;
};

Subspace join(const std::vector<HPoint>& points, const Tolerance& tol = {});
Subspace span_of(const Mat& columns, const Tolerance& tol = {});
Subspace meet(const Subspace& a, const Subspace& b, const Tolerance& tol = {});
/// Hyperplane {y : a . y = 0} for the coefficient vector a.
Subspace hyperplane(const Vec& coefficients);

/// Orthonormal basis of the right null space of m (threshold relative to the
/// largest singular value).
Mat null_space(const Mat& m, const Tolerance& tol = {});

/// Invertible matrix up to a nonzero scalar.
class ProjMap {
 public:
  ProjMap() = default;
  explicit ProjMap(Mat matrix, const Tolerance& tol = {});
  static ProjMap identity(int size);

  const Mat& matrix() const { return m_; }
  int size() const { return static_cast<int>(m_.rows()); }

  HPoint operator()(const HPoint& x) const;
  Subspace operator()(const Subspace& u) const;
  ProjMap operator*(const ProjMap& other) const;
  ProjMap inverse() const;

  /// Representative divided by its largest-magnitude entry (sign included).
  Mat scale_normalized() const;

 private:
  Mat m_;
};

/// Max entrywise difference of the scale-normalized matrices.
double map_distance(const Mat& a, const Mat& b);
bool same_map(const ProjMap& f, const ProjMap& g, const Tolerance& tol = {});

/// Inverse transpose: the induced action on hyperplane coordinates.
ProjMap dualize_map(const ProjMap& f, const Tolerance& tol = {});

/// Volume spanned by the row-normalized vectors: product of singular values.
/// Equals |det| / prod |v_i| for a square set and vanishes exactly when the
/// vectors are linearly dependent.
double normalized_volume(const std::vector<Vec>& vectors);
double normalized_volume(const std::vector<HPoint>& points);

}  // namespace sg
