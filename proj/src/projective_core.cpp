#include "sphgeo/projective_core.hpp"

#include <cmath>
#include <limits>

namespace sg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DependentPoints: return "DependentPoints";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateQuadric: return "DegenerateQuadric";
    case ErrorCode::PointOnQuadric: return "PointOnQuadric";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::IsotropicMirror: return "IsotropicMirror";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::LineOnGenerator: return "LineOnGenerator";
    case ErrorCode::PointOnAbsolute: return "PointOnAbsolute";
    case ErrorCode::InvalidCenter: return "InvalidCenter";
    case ErrorCode::OutsideSpaceForm: return "OutsideSpaceForm";
    case ErrorCode::UnsupportedEuclidean: return "UnsupportedEuclidean";
    case ErrorCode::WrongSide: return "WrongSide";
    case ErrorCode::ProjectingCenter: return "ProjectingCenter";
    case ErrorCode::EmptySection: return "EmptySection";
    case ErrorCode::NoRealLift: return "NoRealLift";
    case ErrorCode::BranchPoint: return "BranchPoint";
    case ErrorCode::NoIntersection: return "NoIntersection";
    case ErrorCode::NonPositiveDistance: return "NonPositiveDistance";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NoCommonTangent: return "NoCommonTangent";
    case ErrorCode::WrongFamily: return "WrongFamily";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::NotOnQuadric: return "NotOnQuadric";
    case ErrorCode::UnknownRow: return "UnknownRow";
    case ErrorCode::OnPolarHyperplane: return "OnPolarHyperplane";
    case ErrorCode::ZeroRadius: return "ZeroRadius";
    case ErrorCode::NoRealRepresentative: return "NoRealRepresentative";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::SumNotZero: return "SumNotZero";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::TangentPlane: return "TangentPlane";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::NotCoplanarNet: return "NotCoplanarNet";
    case ErrorCode::WindowEmpty: return "WindowEmpty";
    case ErrorCode::NotOnBaseCurve: return "NotOnBaseCurve";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

double max_abs(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

HPoint::HPoint(Vec coords) : coords_(std::move(coords)) {
  const double eps = std::numeric_limits<double>::epsilon();
  if (coords_.size() == 0 ||
      max_abs(coords_) <= eps * static_cast<double>(coords_.size()) * 1e-300 ||
      !(max_abs(coords_) > 0.0)) {
    fail(ErrorCode::ZeroVector, "homogeneous coordinates must not vanish");
  }
  if (!coords_.allFinite()) fail(ErrorCode::ZeroVector, "non-finite coordinates");
}

HPoint::HPoint(std::initializer_list<double> coords)
    : HPoint(Vec(Eigen::Map<const Vec>(coords.begin(), static_cast<Eigen::Index>(coords.size())))) {}

Vec canonical(const Vec& x, const Tolerance& tol) {
  const double m = max_abs(x);
  if (!(m > 0.0)) fail(ErrorCode::ZeroVector, "cannot normalize the zero vector");
  Vec y = x / m;
  for (Eigen::Index i = y.size() - 1; i >= 0; --i) {
    if (std::abs(y[i]) > tol.rel_eps) {
      if (y[i] < 0) y = -y;
      break;
    }
  }
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (y[i] == 0.0) y[i] = 0.0;  // drop negative zeros
  }
  return y;
}

HPoint HPoint::normalized(const Tolerance& tol) const { return HPoint(canonical(coords_, tol)); }

HPoint normalize(const HPoint& x, const Tolerance& tol) { return x.normalized(tol); }

bool approx_equal(const HPoint& x, const HPoint& y, const Tolerance& tol) {
  if (x.size() != y.size()) return false;
  return max_abs(Vec(canonical(x.coords(), tol) - canonical(y.coords(), tol))) < tol.rel_eps;
}

Subspace::Subspace(Mat orthonormal_basis, int ambient_size)
    : basis_(std::move(orthonormal_basis)), ambient_(ambient_size) {}

double Subspace::residual(const Vec& x) const {
  const double nx = x.norm();
  if (nx == 0.0) return 0.0;
  if (basis_.cols() == 0) return 1.0;
  return (x - basis_ * (basis_.transpose() * x)).norm() / nx;
}

bool Subspace::contains(const HPoint& x, const Tolerance& tol) const {
  if (x.size() != ambient_) fail(ErrorCode::DimensionMismatch, "point and subspace sizes differ");
  return residual(x.coords()) < tol.rel_eps;
}

Subspace Subspace::dual() const {
  Mat comp;
  if (basis_.cols() == 0) {
    comp = Mat::Identity(ambient_, ambient_);
  } else {
    comp = null_space(basis_.transpose());
  }
  return Subspace(comp, ambient_);
}

bool Subspace::same_as(const Subspace& other, const Tolerance& tol) const {
  if (ambient_ != other.ambient_ || dim() != other.dim()) return false;
  for (Eigen::Index j = 0; j < other.basis_.cols(); ++j) {
    if (residual(other.basis_.col(j)) >= tol.rel_eps) return false;
  }
  return true;
}

Mat null_space(const Mat& m, const Tolerance& tol) {
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0) return Mat::Identity(cols, cols);
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const Vec& sv = svd.singularValues();
  const double smax = sv.size() ? sv[0] : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > tol.rel_eps * smax && sv[i] > 0.0) ++rank;
  }
  return svd.matrixV().rightCols(cols - rank);
}

Subspace span_of(const Mat& columns, const Tolerance& tol) {
  Eigen::JacobiSVD<Mat> svd(columns, Eigen::ComputeThinU);
  const Vec& sv = svd.singularValues();
  if (sv.size() == 0 || !(sv[0] > 0.0)) fail(ErrorCode::DependentPoints, "empty span");
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > tol.rel_eps * sv[0]) ++rank;
  }
  return Subspace(svd.matrixU().leftCols(rank), static_cast<int>(columns.rows()));
}

Subspace join(const std::vector<HPoint>& points, const Tolerance& tol) {
  if (points.empty()) fail(ErrorCode::DependentPoints, "no points to join");
  const int size = points.front().size();
  Mat cols(size, static_cast<Eigen::Index>(points.size()));
  for (size_t j = 0; j < points.size(); ++j) {
    if (points[j].size() != size) fail(ErrorCode::DimensionMismatch, "points of different dimension");
    cols.col(static_cast<Eigen::Index>(j)) = points[j].coords() / points[j].coords().norm();
  }
  Subspace s = span_of(cols, tol);
  if (s.dim() + 1 != static_cast<int>(points.size())) {
    fail(ErrorCode::DependentPoints, "points are linearly dependent");
  }
  return s;
}

Subspace meet(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  if (a.ambient_size() != b.ambient_size()) fail(ErrorCode::DimensionMismatch, "different ambient spaces");
  const Mat ac = a.dual().basis();
  const Mat bc = b.dual().basis();
  Mat normals(ac.cols() + bc.cols(), a.ambient_size());
  if (ac.cols()) normals.topRows(ac.cols()) = ac.transpose();
  if (bc.cols()) normals.bottomRows(bc.cols()) = bc.transpose();
  Mat ns = null_space(normals, tol);
  if (ns.cols() == 0) fail(ErrorCode::EmptyIntersection, "subspaces do not meet");
  return Subspace(ns, a.ambient_size());
}

Subspace hyperplane(const Vec& coefficients) {
  Mat row = coefficients.transpose();
  return Subspace(null_space(row), static_cast<int>(coefficients.size()));
}

ProjMap::ProjMap(Mat matrix, const Tolerance& tol) : m_(std::move(matrix)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) fail(ErrorCode::DimensionMismatch, "map matrix must be square");
  const double s = max_abs(m_);
  if (!(s > 0.0)) fail(ErrorCode::Singular, "zero matrix");
  const Vec sv = Eigen::JacobiSVD<Mat>(m_ / s).singularValues();
  if (!(sv[sv.size() - 1] > tol.rel_eps * sv[0])) fail(ErrorCode::Singular, "matrix is numerically singular");
}

ProjMap ProjMap::identity(int size) { return ProjMap(Mat::Identity(size, size)); }

HPoint ProjMap::operator()(const HPoint& x) const {
  if (x.size() != size()) fail(ErrorCode::DimensionMismatch, "map and point sizes differ");
  return HPoint(Vec(m_ * x.coords()));
}

Subspace ProjMap::operator()(const Subspace& u) const {
  return span_of(m_ * u.basis());
}

ProjMap ProjMap::operator*(const ProjMap& other) const {
  if (other.size() != size()) fail(ErrorCode::DimensionMismatch, "maps of different size");
  return ProjMap(Mat(m_ * other.m_), Tolerance{0.0});
}

ProjMap ProjMap::inverse() const { return ProjMap(Mat(m_.inverse()), Tolerance{0.0}); }

Mat ProjMap::scale_normalized() const {
  Eigen::Index r = 0, c = 0;
  m_.cwiseAbs().maxCoeff(&r, &c);
  return m_ / m_(r, c);
}

double map_distance(const Mat& a, const Mat& b) {
  // Align the scale of b with a by least squares, then compare relative to a.
  const double sa = max_abs(a);
  const Mat an = a / sa;
  const double denom = b.squaredNorm();
  if (denom == 0.0) return std::numeric_limits<double>::infinity();
  const double c = (an.array() * b.array()).sum() / denom;
  return max_abs(Mat(an - c * b));
}

bool same_map(const ProjMap& f, const ProjMap& g, const Tolerance& tol) {
  return map_distance(f.matrix(), g.matrix()) < tol.rel_eps;
}

ProjMap dualize_map(const ProjMap& f, const Tolerance& tol) {
  const double s = max_abs(f.matrix());
  if (!(std::abs((f.matrix() / s).determinant()) > tol.rel_eps)) {
    fail(ErrorCode::Singular, "cannot dualize a singular map");
  }
  return ProjMap(Mat(f.matrix().inverse().transpose()), Tolerance{0.0});
}

double normalized_volume(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0.0;
  Mat rows(static_cast<Eigen::Index>(vectors.size()), vectors.front().size());
  for (size_t i = 0; i < vectors.size(); ++i) {
    const double nv = vectors[i].norm();
    if (nv == 0.0) return 0.0;
    rows.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose() / nv;
  }
  if (rows.rows() > rows.cols()) return 0.0;
  if (rows.rows() == rows.cols()) return std::abs(rows.determinant());
  Eigen::JacobiSVD<Mat> svd(rows);
  return svd.singularValues().prod();
}

double normalized_volume(const std::vector<HPoint>& points) {
  std::vector<Vec> v;
  v.reserve(points.size());
  for (const auto& p : points) v.push_back(p.coords());
  return normalized_volume(v);
}

}  // namespace sg
