#include "sphgeo/nets.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace sg {

namespace {

Mat normalized_rows(const std::vector<Vec>& vectors) {
  Mat rows(static_cast<Eigen::Index>(vectors.size()), vectors.front().size());
  for (size_t i = 0; i < vectors.size(); ++i) {
    rows.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose() / vectors[i].norm();
  }
  return rows;
}

std::vector<Vec> coords_of(const std::vector<HPoint>& points) {
  std::vector<Vec> v;
  v.reserve(points.size());
  for (const auto& p : points) v.push_back(p.coords());
  return v;
}

double quad_residual(const HPoint& a, const HPoint& b, const HPoint& c, const HPoint& d) {
  return normalized_volume(std::vector<HPoint>{a, b, c, d});
}

// Unit null vector of the row-normalized points (smallest right singular vector).
Vec null_vector(const std::vector<Vec>& rows) {
  Eigen::JacobiSVD<Mat> svd(normalized_rows(rows), Eigen::ComputeFullV);
  return svd.matrixV().col(svd.matrixV().cols() - 1);
}

int floor_div2(int i) { return (i >= 0) ? i / 2 : -((1 - i) / 2); }

}  // namespace

double rank_defect(const std::vector<HPoint>& points, int rank) {
  const std::vector<Vec> v = coords_of(points);
  for (const auto& x : v) {
    if (x.norm() == 0.0) return 0.0;
  }
  Eigen::JacobiSVD<Mat> svd(normalized_rows(v));
  const Vec& sv = svd.singularValues();
  if (rank >= sv.size()) return 0.0;
  return sv[rank] / sv[0];
}

Circumscription circumscribed(const QuadricForm& q, const std::array<HPoint, 4>& points, double tol) {
  for (const auto& p : points) {
    if (p.size() != q.size()) fail(ErrorCode::DimensionMismatch, "point and quadric sizes differ");
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      for (int c = b + 1; c < 4; ++c) {
        if (rank_defect({points[a], points[b], points[c]}, 2) <= tol) {
          fail(ErrorCode::DegenerateInput, "three of the points are collinear");
        }
      }
    }
  }
  Circumscription out;
  out.residual = quad_residual(points[0], points[1], points[2], points[3]);
  out.circumscribed = out.residual <= tol;
  if (out.circumscribed) {
    const std::vector<Vec> v = coords_of({points.begin(), points.end()});
    Eigen::JacobiSVD<Mat> svd(normalized_rows(v), Eigen::ComputeFullV);
    const Mat basis = svd.matrixV().leftCols(3);
    out.plane_signature = restricted_signature(q, Subspace(basis, q.size()));
  }
  return out;
}

HPoint incircle_point(const LaguerreContext& ctx, const std::array<HPoint, 4>& points) {
  std::vector<Vec> rows;
  for (const auto& p : points) {
    if (p.size() != ctx.size()) fail(ErrorCode::DimensionMismatch, "point and quadric sizes differ");
    rows.push_back(p.coords());
  }
  return sphere_from_plane(ctx, null_vector(rows));
}

LaguerreSphere incircle(const LaguerreContext& ctx, const std::array<HPoint, 4>& points) {
  const HPoint x = incircle_point(ctx, points);
  if (ctx.sf.tag != SpaceTag::Euclidean && std::abs(eval_normalized(ctx.B, x.coords())) <= ctx.tol.rel_eps) {
    fail(ErrorCode::TangentPlane, "plane of the four lines is tangent to the Laguerre quadric");
  }
  return decode_sphere(ctx, x);
}

namespace {

void require_no_five_coplanar(const std::array<HPoint, 8>& pts, double tol) {
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c)
        for (int d = c + 1; d < 8; ++d)
          for (int e = d + 1; e < 8; ++e) {
            if (rank_defect({pts[a], pts[b], pts[c], pts[d], pts[e]}, 3) <= tol) {
              fail(ErrorCode::NotGeneric, "five of the eight points are coplanar");
            }
          }
}

void require_quad(const std::array<HPoint, 8>& pts, int a, int b, int c, int d, double tol) {
  if (quad_residual(pts[a], pts[b], pts[c], pts[d]) > tol) {
    fail(ErrorCode::HypothesisViolated, "a hypothesis quadrilateral is not circumscribed");
  }
}

}  // namespace

bool miquel_check(const std::array<HPoint, 8>& pts, double tol) {
  // l1..l4 = 0..3, m1..m4 = 4..7
  require_no_five_coplanar(pts, tol);
  require_quad(pts, 0, 1, 4, 5, tol);
  require_quad(pts, 0, 1, 6, 7, tol);
  require_quad(pts, 2, 3, 4, 5, tol);
  require_quad(pts, 2, 3, 6, 7, tol);
  require_quad(pts, 1, 2, 5, 6, tol);
  return quad_residual(pts[0], pts[3], pts[4], pts[7]) <= tol;
}

bool laguerre_subdivision_check(const QuadricForm& B, const QuadricForm& C, const std::array<HPoint, 8>& pts,
                                double tol) {
  for (const auto& p : pts) {
    if (p.size() != B.size() || p.size() != C.size()) fail(ErrorCode::DimensionMismatch, "sizes differ");
    if (std::abs(eval_normalized(B, p.coords())) > tol || std::abs(eval_normalized(C, p.coords())) > tol) {
      fail(ErrorCode::NotOnBaseCurve, "point is not on the hypercycle base curve");
    }
  }
  require_no_five_coplanar(pts, tol);
  require_quad(pts, 0, 1, 4, 5, tol);
  require_quad(pts, 1, 2, 5, 6, tol);
  require_quad(pts, 2, 3, 6, 7, tol);
  return quad_residual(pts[0], pts[3], pts[4], pts[7]) <= tol;
}

const char* to_string(ConicType c) { return c == ConicType::Ellipse ? "ellipse" : "hyperbola"; }

void validate(const NetParams& p) {
  auto bad = [](const char* what) { fail(ErrorCode::InvalidParams, what); };
  if (p.epsilon < -1 || p.epsilon > 1) bad("epsilon must be -1, 0 or 1");
  const double e = p.epsilon, a2 = p.alpha * p.alpha, b2 = p.beta * p.beta;
  if (!(p.alpha > 0.0) || !(p.beta > 0.0)) bad("alpha and beta must be positive");
  if (!(1.0 + e * a2 > 0.0)) bad("1 + eps alpha^2 must be positive");
  if (p.conic == ConicType::Ellipse) {
    if (!(p.alpha > p.beta)) bad("ellipse needs alpha > beta");
    if (!(1.0 + e * b2 > 0.0)) bad("1 + eps beta^2 must be positive");
  } else {
    if (p.epsilon > 0) bad("elliptic hyperbola nets are not parametrized");
    if (!(1.0 - e * b2 > 0.0)) bad("1 - eps beta^2 must be positive");
  }
  if (p.i_range.lo > p.i_range.hi || p.j_range.lo > p.j_range.hi) bad("empty index range");
  for (double v : {p.s, p.s_tilde, p.u0_l, p.u0_m}) {
    if (!std::isfinite(v)) bad("net parameters must be finite");
  }
}

SpaceForm net_space_form(const NetParams& p) { return SpaceForm::from_epsilon(p.epsilon, 2); }

double base_curve_modulus(const NetParams& p) {
  validate(p);
  const double e = p.epsilon, a2 = p.alpha * p.alpha, b2 = p.beta * p.beta;
  if (p.conic == ConicType::Ellipse) return 1.0 - b2 * (1.0 + e * a2) / (a2 * (1.0 + e * b2));
  return a2 * (1.0 - e * b2) / (a2 + b2);
}

QuadricForm net_laguerre_quadric(const NetParams& p) {
  return QuadricForm::diagonal({1.0, 1.0, static_cast<double>(p.epsilon), -1.0});
}

QuadricForm base_cone(const NetParams& p) {
  const double a2 = p.alpha * p.alpha, b2 = p.beta * p.beta;
  if (p.conic == ConicType::Ellipse) return QuadricForm::diagonal({a2, b2, -1.0, 0.0});
  return QuadricForm::diagonal({a2, -b2, -1.0, 0.0});
}

HPoint base_point(const NetParams& p, int sign, double u) {
  const double m = base_curve_modulus(p);
  const SnCnDn f = jacobi_sn_cn_dn(u, m);
  const double e = p.epsilon, a = p.alpha, b = p.beta;
  const double o = sign < 0 ? -1.0 : 1.0;
  const double ra = std::sqrt(1.0 + e * a * a);
  if (p.conic == ConicType::Ellipse) {
    const double rb = std::sqrt(1.0 + e * b * b);
    return HPoint{f.cn / ra, f.sn / rb, a * f.dn / ra, o};
  }
  return HPoint{f.dn / ra, a * f.sn / std::sqrt(a * a + b * b), a * f.cn / ra, o};
}

ExtReal ruling_lambda(const NetParams& p, double s) {
  const double m = base_curve_modulus(p);
  const SnCnDn f = jacobi_sn_cn_dn(0.5 * s, m);
  if (std::abs(f.sn) <= 1e-300) return ExtReal::inf();
  const double cs2 = (f.cn * f.cn) / (f.sn * f.sn);
  const double ns2 = 1.0 / (f.sn * f.sn);
  const double a2 = p.alpha * p.alpha, b2 = p.beta * p.beta;
  if (p.conic == ConicType::Ellipse) return ExtReal::of(cs2 / b2 + p.epsilon * ns2);
  return ExtReal::of(-cs2 / b2 - ns2 / a2);
}

QuadricForm pencil_quadric(const NetParams& p, ExtReal lambda) {
  const QuadricForm C = base_cone(p);
  if (lambda.infinite) return C;
  return QuadricForm(Mat(net_laguerre_quadric(p).matrix() + lambda.value * C.matrix()));
}

double periodic_step(const NetParams& p, int N) {
  if (N < 1) fail(ErrorCode::InvalidParams, "N must be positive");
  return 4.0 * complete_K(base_curve_modulus(p)) / N - p.s;
}

HPoint ell_at(const NetParams& p, int i) {
  const int k = floor_div2(i);
  const double u = p.u0_l + k * (p.s + p.s_tilde);
  return (i - 2 * k == 0) ? base_point(p, 1, u) : base_point(p, -1, u + p.s);
}

HPoint m_at(const NetParams& p, int j) {
  const int l = floor_div2(j);
  const double u = p.u0_m + l * (p.s + p.s_tilde);
  return (j - 2 * l == 0) ? base_point(p, -1, u) : base_point(p, 1, u + p.s);
}

CbicNet generate(const NetParams& p) {
  validate(p);
  CbicNet net;
  net.params = p;
  net.B = net_laguerre_quadric(p);
  net.C = base_cone(p);
  for (int i = p.i_range.lo; i <= p.i_range.hi; ++i) net.ell.emplace(i, ell_at(p, i));
  for (int j = p.j_range.lo; j <= p.j_range.hi; ++j) net.m.emplace(j, m_at(p, j));
  return net;
}

NetResiduals net_residuals(const CbicNet& net) {
  NetResiduals r;
  auto on = [&](const HPoint& x) {
    r.max_on_quadric = std::max(r.max_on_quadric, std::abs(eval_normalized(net.B, x.coords())));
    r.max_on_quadric = std::max(r.max_on_quadric, std::abs(eval_normalized(net.C, x.coords())));
  };
  for (const auto& [i, x] : net.ell) on(x);
  for (const auto& [j, x] : net.m) on(x);
  for (const auto& [i, li] : net.ell) {
    auto li1 = net.ell.find(i + 1);
    if (li1 == net.ell.end()) continue;
    for (const auto& [j, mj] : net.m) {
      auto mj1 = net.m.find(j + 1);
      if (mj1 == net.m.end() || (i + j) % 2 != 0) continue;
      r.max_coplanarity = std::max(r.max_coplanarity, quad_residual(li, li1->second, mj, mj1->second));
    }
  }
  return r;
}

std::vector<NetIncircle> net_incircles(const CbicNet& net) {
  const LaguerreContext ctx = laguerre_context(net_space_form(net.params));
  std::vector<NetIncircle> out;
  for (const auto& [i, li] : net.ell) {
    auto li1 = net.ell.find(i + 1);
    if (li1 == net.ell.end()) continue;
    for (const auto& [j, mj] : net.m) {
      auto mj1 = net.m.find(j + 1);
      if (mj1 == net.m.end() || (i + j) % 2 != 0) continue;
      NetIncircle c;
      c.i = i;
      c.j = j;
      const std::array<HPoint, 4> quad{li, li1->second, mj, mj1->second};
      try {
        c.point = incircle_point(ctx, quad);
        c.sphere = incircle(ctx, quad);
        c.valid = true;
      } catch (const GeometryError&) {
        c.valid = false;
      }
      out.push_back(c);
    }
  }
  return out;
}

AssociatedHyperboloids associated_hyperboloids(const CbicNet& net) {
  AssociatedHyperboloids h;
  h.lambda = ruling_lambda(net.params, net.params.s);
  h.lambda_tilde = ruling_lambda(net.params, net.params.s_tilde);
  h.Q = pencil_quadric(net.params, h.lambda);
  h.Qt = pencil_quadric(net.params, h.lambda_tilde);
  return h;
}

QuadricForm fit_quadric(const std::vector<Vec>& points) {
  if (points.size() < 9) fail(ErrorCode::InsufficientData, "a quadric of RP^3 needs at least 9 points");
  Mat design(static_cast<Eigen::Index>(points.size()), 10);
  for (size_t r = 0; r < points.size(); ++r) {
    const Vec x = points[r] / points[r].norm();
    int c = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i; j < 4; ++j) design(static_cast<Eigen::Index>(r), c++) = x[i] * x[j];
    }
  }
  Eigen::JacobiSVD<Mat> svd(design, Eigen::ComputeFullV);
  const Vec coef = svd.matrixV().col(9);
  Mat a = Mat::Zero(4, 4);
  int c = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      if (i == j) {
        a(i, i) = coef[c];
      } else {
        a(i, j) = a(j, i) = 0.5 * coef[c];
      }
      ++c;
    }
  }
  return QuadricForm(a);
}

AssociatedHyperboloids fit_associated_hyperboloids(const CbicNet& net, int samples_per_line) {
  std::vector<Vec> even, odd;
  int even_lines = 0, odd_lines = 0;
  auto sample = [&](const HPoint& a, const HPoint& b, std::vector<Vec>& out) {
    const Vec x = a.coords() / a.coords().norm();
    const Vec y = b.coords() / b.coords().norm();
    for (int k = 0; k < samples_per_line; ++k) {
      const double t = std::numbers::pi * k / samples_per_line;
      out.push_back(std::cos(t) * x + std::sin(t) * y);
    }
  };
  for (const auto* fam : {&net.ell, &net.m}) {
    for (const auto& [i, x] : *fam) {
      auto next = fam->find(i + 1);
      if (next == fam->end()) continue;
      if (i % 2 == 0) {
        sample(x, next->second, even);
        ++even_lines;
      } else {
        sample(x, next->second, odd);
        ++odd_lines;
      }
    }
  }
  if (even_lines < 3 || odd_lines < 3) fail(ErrorCode::InsufficientData, "need at least 3 ruling lines per hyperboloid");
  AssociatedHyperboloids h = associated_hyperboloids(net);
  h.Q = fit_quadric(even);
  h.Qt = fit_quadric(odd);
  return h;
}

HPoint nu_point(const NetParams& p, int family, int k) {
  switch (family) {
    case 1: return ell_at(p, 2 * k);
    case 2: return ell_at(p, -2 * k + 1);
    case 3: return m_at(p, -2 * k);
    case 4: return m_at(p, 2 * k + 1);
    default: fail(ErrorCode::InvalidParams, "family index must be 1..4");
  }
}

OctahedralGrid octahedral_grid(const NetParams& p, int radius) {
  validate(p);
  const Mat B = net_laguerre_quadric(p).matrix();
  const bool euclidean = p.epsilon == 0;
  OctahedralGrid grid;
  for (int k1 = -radius; k1 <= radius; ++k1) {
    for (int k2 = -radius; k2 <= radius; ++k2) {
      for (int k3 = -radius; k3 <= radius; ++k3) {
        const int k4 = -(k1 + k2 + k3);
        if (std::abs(k4) > radius) continue;
        const A3Index a{k1, k2, k3, k4};
        std::vector<Vec> planes;
        for (int f = 0; f < 4; ++f) {
          const Vec nu = nu_point(p, f + 1, a[f]).coords();
          planes.push_back(euclidean ? nu : Vec(B * nu));
        }
        double res = 0.0;
        for (int skip = 0; skip < 4; ++skip) {
          std::vector<Vec> three;
          for (int f = 0; f < 4; ++f) {
            if (f != skip) three.push_back(planes[f]);
          }
          const Vec c = null_vector(three);
          res = std::max(res, std::abs(planes[skip].dot(c)) / planes[skip].norm());
        }
        grid.points.emplace(a, HPoint(null_vector(planes)));
        grid.residuals.emplace(a, res);
        grid.max_residual = std::max(grid.max_residual, res);
      }
    }
  }
  if (grid.points.empty()) fail(ErrorCode::WindowEmpty, "no A3 index in the window");
  return grid;
}

namespace {

using Cplx = std::complex<double>;

// Roots of sum c_i t^i after dropping negligible leading coefficients.
std::vector<Cplx> poly_roots(Vec c) {
  const double scale = c.cwiseAbs().maxCoeff();
  Eigen::Index deg = c.size() - 1;
  while (deg > 0 && std::abs(c[deg]) <= 1e-13 * scale) --deg;
  std::vector<Cplx> roots;
  if (deg == 0) return roots;
  Mat comp = Mat::Zero(deg, deg);
  for (Eigen::Index i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < deg; ++i) comp(i, deg - 1) = -c[i] / c[deg];
  Eigen::EigenSolver<Mat> es(comp, false);
  for (Eigen::Index i = 0; i < deg; ++i) roots.push_back(es.eigenvalues()[i]);
  return roots;
}

Cplx eval_binary_cubic(const Vec& c, Cplx x, Cplx y) {
  return c[0] * x * x * x + c[1] * x * x * y + c[2] * x * y * y + c[3] * y * y * y;
}

}  // namespace

double dual_pencil_residual(const NetParams& p, const std::array<HPoint, 4>& cs) {
  const Mat B = net_laguerre_quadric(p).matrix();
  const Mat C = base_cone(p).matrix();
  const bool euclidean = p.epsilon == 0;
  const std::array<double, 4> angles{0.3, 0.9, 1.7, 2.6};
  Mat mono(4, 4);
  std::array<Mat, 4> adj;
  for (int r = 0; r < 4; ++r) {
    const double x = std::cos(angles[r]), y = std::sin(angles[r]);
    mono.row(r) << x * x * x, x * x * y, x * y * y, y * y * y;
    const Mat m = x * B + y * C;
    adj[r] = m.determinant() * m.inverse();
  }
  std::vector<Vec> coef;
  for (const auto& c : cs) {
    Vec w = c.coords() / c.coords().norm();
    if (!euclidean) w = B * w;
    Vec vals(4);
    for (int r = 0; r < 4; ++r) vals[r] = w.dot(adj[r] * w);
    const Vec k = mono.fullPivLu().solve(vals);
    coef.push_back(k / k.norm());
  }
  std::vector<std::pair<Cplx, Cplx>> dirs;
  for (const Cplx& t : poly_roots(coef[0])) dirs.emplace_back(1.0, t);
  for (const Cplx& s : poly_roots(Vec(coef[0].reverse()))) dirs.emplace_back(s, 1.0);
  double best = std::numeric_limits<double>::infinity();
  for (auto [x, y] : dirs) {
    const double n = std::sqrt(std::norm(x) + std::norm(y));
    x /= n;
    y /= n;
    double worst = 0.0;
    for (const auto& k : coef) worst = std::max(worst, std::abs(eval_binary_cubic(k, x, y)));
    best = std::min(best, worst);
  }
  return best;
}

}  // namespace sg
