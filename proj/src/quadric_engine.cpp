#include "sphgeo/quadric_engine.hpp"

#include <cmath>

namespace sg {

Signature signature_of(const Mat& form, const Tolerance& tol) {
  Eigen::SelfAdjointEigenSolver<Mat> es(form, Eigen::EigenvaluesOnly);
  const Vec& ev = es.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();
  Signature sig;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] > tol.abs(scale)) {
      ++sig.r;
    } else if (ev[i] < -tol.abs(scale)) {
      ++sig.s;
    } else {
      ++sig.t;
    }
  }
  return sig;
}

QuadricForm::QuadricForm(Mat form, const Tolerance& tol) : a_(std::move(form)) {
  if (a_.rows() != a_.cols() || a_.rows() == 0) fail(ErrorCode::DimensionMismatch, "form must be square");
  const double scale = max_abs(a_);
  if (!(scale > 0.0)) fail(ErrorCode::ZeroVector, "zero form");
  if (max_abs(Mat(a_ - a_.transpose())) > tol.abs(scale)) {
    fail(ErrorCode::DimensionMismatch, "form is not symmetric");
  }
  a_ = 0.5 * (a_ + a_.transpose());
  sig_ = signature_of(a_, tol);
}

QuadricForm QuadricForm::diagonal(std::initializer_list<double> d) {
  Vec v = Eigen::Map<const Vec>(d.begin(), static_cast<Eigen::Index>(d.size()));
  return QuadricForm(Mat(v.asDiagonal()));
}

static void check_size(const QuadricForm& q, const Vec& x) {
  if (x.size() != q.size()) fail(ErrorCode::DimensionMismatch, "point and form sizes differ");
}

double eval(const QuadricForm& q, const HPoint& x) {
  check_size(q, x.coords());
  return q(x.coords());
}

double bilinear(const QuadricForm& q, const Vec& x, const Vec& y) {
  check_size(q, x);
  check_size(q, y);
  return q(x, y);
}

double eval_normalized(const QuadricForm& q, const Vec& x) {
  check_size(q, x);
  return q(x) / (x.squaredNorm() * max_abs(q.matrix()));
}

Causality classify(const QuadricForm& q, const HPoint& x, const Tolerance& tol) {
  const double v = eval_normalized(q, x.coords());
  if (v > tol.rel_eps) return Causality::Spacelike;
  if (v < -tol.rel_eps) return Causality::Timelike;
  return Causality::Lightlike;
}

Signature signature(const QuadricForm& q, const Tolerance& tol) { return signature_of(q.matrix(), tol); }

Mat restricted_form(const QuadricForm& q, const Subspace& u) {
  return u.basis().transpose() * q.matrix() * u.basis();
}

Signature restricted_signature(const QuadricForm& q, const Subspace& u, const Tolerance& tol) {
  const Mat r = restricted_form(q, u);
  if (max_abs(r) <= tol.abs(max_abs(q.matrix()))) {
    return Signature{0, 0, static_cast<int>(r.rows())};
  }
  // Threshold relative to the ambient form so that small restricted
  // eigenvalues are not promoted.
  Eigen::SelfAdjointEigenSolver<Mat> es(r, Eigen::EigenvaluesOnly);
  const double scale = max_abs(q.matrix());
  Signature sig;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double e = es.eigenvalues()[i];
    if (e > tol.abs(scale)) {
      ++sig.r;
    } else if (e < -tol.abs(scale)) {
      ++sig.s;
    } else {
      ++sig.t;
    }
  }
  return sig;
}

Subspace polar(const QuadricForm& q, const Subspace& u, const Tolerance& tol) {
  if (q.degenerate()) fail(ErrorCode::DegenerateQuadric, "polarity needs a non-degenerate form");
  if (u.ambient_size() != q.size()) fail(ErrorCode::DimensionMismatch, "subspace and form sizes differ");
  const Mat functionals = (q.matrix() * u.basis()).transpose();
  return Subspace(null_space(functionals, tol), q.size());
}

Vec polar_hyperplane(const QuadricForm& q, const HPoint& x) {
  check_size(q, x.coords());
  return q.matrix() * x.coords();
}

QuadricForm tangent_cone(const QuadricForm& q, const HPoint& x, const Tolerance& tol) {
  check_size(q, x.coords());
  if (std::abs(eval_normalized(q, x.coords())) <= tol.rel_eps) {
    fail(ErrorCode::PointOnQuadric, "cone of contact needs a point off the quadric");
  }
  const Vec ax = q.matrix() * x.coords();
  Mat cone = ax * ax.transpose() - q(x.coords()) * q.matrix();
  return QuadricForm(Mat(0.5 * (cone + cone.transpose())));
}

LineQuadricResult line_intersect(const QuadricForm& q, const HPoint& xp, const HPoint& yp,
                                 const Tolerance& tol) {
  check_size(q, xp.coords());
  check_size(q, yp.coords());
  Vec x = xp.coords() / xp.coords().norm();
  Vec y = yp.coords() / yp.coords().norm();
  Mat two(x.size(), 2);
  two << x, y;
  if (Eigen::JacobiSVD<Mat>(two).singularValues()[1] <= tol.rel_eps) {
    fail(ErrorCode::CoincidentPoints, "line needs two distinct points");
  }
  const double scale = max_abs(q.matrix());
  double xx = q(x), yy = q(y), xy = q(x, y);
  // Base the formula on the endpoint farthest from the quadric.
  if (std::abs(yy) < std::abs(xx)) {
    std::swap(x, y);
    std::swap(xx, yy);
  }
  LineQuadricResult res;
  const double delta = xy * xy - xx * yy;
  res.discriminant = delta;
  const double dtol = tol.abs(scale * scale);
  if (std::abs(yy) <= tol.abs(scale)) {
    // Both endpoints lie on the quadric.
    if (std::abs(xy) <= tol.abs(scale)) {
      res.kind = LineKind::Contained;
      res.points = {HPoint(x), HPoint(y)};
    } else {
      res.kind = LineKind::TwoReal;
      res.points = {HPoint(x), HPoint(y)};
    }
    return res;
  }
  if (delta > dtol) {
    const double r = std::sqrt(delta);
    res.kind = LineKind::TwoReal;
    res.points = {HPoint(Vec(yy * x + (-xy + r) * y)), HPoint(Vec(yy * x + (-xy - r) * y))};
  } else if (delta < -dtol) {
    res.kind = LineKind::TwoComplexConjugate;
    res.points = {HPoint(Vec(yy * x - xy * y))};
    res.imaginary = std::sqrt(-delta) * y;
  } else {
    res.kind = LineKind::Tangent;
    res.points = {HPoint(Vec(yy * x - xy * y))};
  }
  return res;
}

Mat reflection_matrix(const QuadricForm& q, const Vec& m) {
  const double mm = q(m);
  return Mat::Identity(q.size(), q.size()) - (2.0 / mm) * m * (q.matrix() * m).transpose();
}

ProjMap reflect(const QuadricForm& q, const HPoint& mirror, const Tolerance& tol) {
  check_size(q, mirror.coords());
  if (std::abs(eval_normalized(q, mirror.coords())) <= tol.rel_eps) {
    fail(ErrorCode::IsotropicMirror, "mirror lies on the quadric");
  }
  return ProjMap(reflection_matrix(q, mirror.coords()), Tolerance{0.0});
}

double form_residual(const QuadricForm& q, const Mat& f, double* scale) {
  const Mat& a = q.matrix();
  const Mat g = f.transpose() * a * f;
  const double c = (g.array() * a.array()).sum() / a.squaredNorm();
  if (scale) *scale = c;
  const double denom = std::max(std::abs(c), 1e-300) * max_abs(a);
  return max_abs(Mat(g - c * a)) / denom;
}

Mat compose_reflections(const QuadricForm& q, const std::vector<HPoint>& mirrors) {
  Mat m = Mat::Identity(q.size(), q.size());
  for (const auto& h : mirrors) m = m * reflection_matrix(q, h.coords());
  return m;
}

namespace {

// Anisotropy ratio |<v,v>| / |v|^2 against the form matrix.
double anisotropy(const Mat& a, const Vec& v) {
  const double n2 = v.squaredNorm();
  return n2 > 0.0 ? std::abs(v.dot(a * v)) / n2 : 0.0;
}

// Mirrors, in product order, of an isometry g that is the identity on the
// A-orthogonal complement of span(w). One reflection fixes an anisotropic
// vector x of span(w); the rest is solved on span(w) cap x^perp.
std::vector<Vec> cartan_dieudonne(const Mat& a, const Mat& g, const Mat& w, int depth = 0) {
  const Eigen::Index k = w.cols();
  if (k == 0 || map_distance(g, Mat::Identity(g.rows(), g.cols())) <= 1e-13 ||
      (g - Mat::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() <= 1e-13) {
    return {};
  }
  const double scale = a.cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Mat> es(Mat(w.transpose() * a * w));
  std::vector<Vec> candidates;
  for (Eigen::Index i = 0; i < k; ++i) candidates.push_back(w * es.eigenvectors().col(i));
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i + 1; j < k; ++j) {
      candidates.push_back(w * (es.eigenvectors().col(i) + es.eigenvectors().col(j)));
      candidates.push_back(w * (es.eigenvectors().col(i) - es.eigenvectors().col(j)));
    }

  const double floor = 1e-6 * scale;
  const double gnorm = std::max(1.0, g.cwiseAbs().maxCoeff());
  const Vec* fixed = nullptr;
  const Vec* best = nullptr;
  double best_ratio = 0.0;
  Vec best_d;
  for (const Vec& x : candidates) {
    if (anisotropy(a, x) < 1e-3 * scale) continue;
    const Vec d = g * x - x;
    if (d.norm() <= 1e-11 * gnorm * x.norm()) {
      fixed = &x;
      break;
    }
    const double r = anisotropy(a, d);
    if (r > best_ratio) {
      best_ratio = r;
      best = &x;
      best_d = d;
    }
  }

  auto complement = [&](const Vec& x) {
    const Mat row = (a * x).transpose() * w;
    const Mat ns = null_space(row, Tolerance{1e-12});
    Eigen::HouseholderQR<Mat> qr(Mat(w * ns));
    return Mat(qr.householderQ() * Mat::Identity(w.rows(), ns.cols()));
  };

  if (fixed) return cartan_dieudonne(a, g, complement(*fixed), depth);
  if (best && best_ratio > floor) {
    const Mat r = reflection_matrix(QuadricForm(a), best_d);
    std::vector<Vec> out{best_d};
    const auto rest = cartan_dieudonne(a, Mat(r * g), complement(*best), depth);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  // Every gx - x is isotropic: compose with one reflection first.
  if (depth > 2) fail(ErrorCode::Singular, "reflection decomposition did not converge");
  for (const Vec& u : candidates) {
    if (anisotropy(a, u) < 1e-3 * scale) continue;
    const Mat r = reflection_matrix(QuadricForm(a), u);
    std::vector<Vec> out{u};
    const auto rest = cartan_dieudonne(a, Mat(r * g), w, depth + 1);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  fail(ErrorCode::Singular, "no anisotropic vector in the subspace");
}

}  // namespace

std::vector<HPoint> decompose_reflections(const QuadricForm& q, const ProjMap& f, const Tolerance& tol) {
  if (f.size() != q.size()) fail(ErrorCode::DimensionMismatch, "map and form sizes differ");
  if (q.degenerate()) fail(ErrorCode::DegenerateQuadric, "reflections need a non-degenerate form");
  double c = 0.0;
  const double res = form_residual(q, f.matrix(), &c);
  if (res > std::max(tol.rel_eps, 1e-8) || !(c > 0.0)) {
    fail(ErrorCode::NotOrthogonal, "map does not preserve the form");
  }
  const Mat g = f.matrix() / std::sqrt(c);
  const Mat full = Mat::Identity(q.size(), q.size());

  std::vector<Vec> best;
  bool have = false;
  double best_err = 0.0;
  for (double sign : {1.0, -1.0}) {
    std::vector<Vec> ms;
    try {
      ms = cartan_dieudonne(q.matrix(), Mat(sign * g), full);
    } catch (const GeometryError&) {
      continue;
    }
    Mat m = Mat::Identity(q.size(), q.size());
    for (const auto& v : ms) m = m * reflection_matrix(q, v);
    const double err = map_distance(f.matrix(), m);
    const bool good = err <= 1e-9, best_good = best_err <= 1e-9;
    if (!have || (good && !best_good) || (good == best_good && (ms.size() < best.size() || (ms.size() == best.size() && err < best_err)))) {
      best = ms;
      best_err = err;
      have = true;
    }
  }
  if (!have) fail(ErrorCode::Singular, "reflection decomposition did not converge");
  std::vector<HPoint> out;
  out.reserve(best.size());
  for (const auto& v : best) out.emplace_back(v);
  return out;
}

Pencil::Pencil(QuadricForm q1, QuadricForm q2, const Tolerance& tol) : q1_(std::move(q1)), q2_(std::move(q2)) {
  if (q1_.size() != q2_.size()) fail(ErrorCode::DimensionMismatch, "pencil generators differ in size");
  if (map_distance(q1_.matrix(), q2_.matrix()) <= tol.rel_eps) {
    fail(ErrorCode::DegenerateInput, "pencil generators are proportional");
  }
}

QuadricForm pencil_member_through(const Pencil& p, const HPoint& x, const HPoint& y, double* t,
                                  const Tolerance& tol) {
  const Vec xn = x.coords() / x.coords().norm();
  const Vec yn = y.coords() / y.coords().norm();
  const double b1 = p.q1()(xn, yn);
  const double b2 = p.q2()(xn, yn);
  const double s1 = max_abs(p.q1().matrix());
  const double s2 = max_abs(p.q2().matrix());
  if (std::abs(b1) <= tol.abs(s1)) {
    if (t) *t = 0.0;
    return p.q1();
  }
  if (std::abs(b2) <= tol.abs(s2)) fail(ErrorCode::LineOnGenerator, "line lies on the second generator");
  const double tt = -b1 / b2;
  if (t) *t = tt;
  return QuadricForm(p.member_matrix(1.0, tt));
}

double pencil_fit_residual(const std::vector<Mat>& generators, const Mat& m) {
  const Eigen::Index cells = m.size();
  Mat design(cells, static_cast<Eigen::Index>(generators.size()));
  for (size_t j = 0; j < generators.size(); ++j) {
    design.col(static_cast<Eigen::Index>(j)) = Eigen::Map<const Vec>(generators[j].data(), cells);
  }
  const Vec target = Eigen::Map<const Vec>(m.data(), cells);
  const Vec coef = design.colPivHouseholderQr().solve(target);
  return max_abs(Vec(design * coef - target)) / max_abs(m);
}

}  // namespace sg
