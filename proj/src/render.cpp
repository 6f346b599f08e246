#include "sphgeo/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace sg {

namespace {

constexpr double kFar = 1e6;

Eigen::Vector3d cross3(const Vec& a, const Vec& b) {
  return Eigen::Vector3d(a[0], a[1], a[2]).cross(Eigen::Vector3d(b[0], b[1], b[2]));
}

bool finite(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

}  // namespace

const char* to_string(Model model) {
  switch (model) {
    case Model::Klein: return "klein";
    case Model::PoincareDisk: return "poincare_disk";
    case Model::HalfPlane: return "half_plane";
    case Model::SphereOrthographic: return "sphere_orthographic";
    case Model::SphereStereographic: return "sphere_stereographic";
    case Model::EuclideanPlane: return "euclidean_plane";
  }
  return "unknown";
}

Model model_from_string(const std::string& name) {
  for (Model m : {Model::Klein, Model::PoincareDisk, Model::HalfPlane, Model::SphereOrthographic,
                  Model::SphereStereographic, Model::EuclideanPlane}) {
    if (name == to_string(m)) return m;
  }
  fail(ErrorCode::InvalidParams, "unknown model '" + name + "'");
}

void check_model(const SpaceForm& sf, Model model) {
  bool ok = false;
  switch (model) {
    case Model::Klein: ok = sf.tag != SpaceTag::Euclidean; break;
    case Model::PoincareDisk:
    case Model::HalfPlane: ok = sf.tag == SpaceTag::Hyperbolic; break;
    case Model::SphereOrthographic:
    case Model::SphereStereographic: ok = sf.tag == SpaceTag::Elliptic; break;
    case Model::EuclideanPlane: ok = sf.tag == SpaceTag::Euclidean; break;
  }
  if (!ok) {
    fail(ErrorCode::KindMismatch,
         std::string("model ") + to_string(model) + " cannot display " + to_string(sf.tag) + " geometry");
  }
}

std::optional<Point2> project_point(const SpaceForm& sf, Model model, const Vec& z) {
  const double scale = z.norm();
  if (!(scale > 0.0) || !std::isfinite(scale)) return std::nullopt;
  std::optional<Point2> out;
  switch (sf.tag) {
    case SpaceTag::Hyperbolic: {
      if (std::abs(z[2]) <= 1e-12 * scale) return std::nullopt;
      const double kx = z[0] / z[2], ky = z[1] / z[2];
      const double r2 = kx * kx + ky * ky;
      if (r2 > 1.0 + 1e-12) return std::nullopt;
      if (model == Model::Klein) {
        out = Point2{kx, ky};
        break;
      }
      const double f = 1.0 / (1.0 + std::sqrt(std::max(0.0, 1.0 - r2)));
      const double a = kx * f, b = ky * f;
      if (model == Model::PoincareDisk) {
        out = Point2{a, b};
        break;
      }
      const double d = (1.0 - a) * (1.0 - a) + b * b;
      if (d <= 1e-12) return std::nullopt;
      out = Point2{-2.0 * b / d, (1.0 - a * a - b * b) / d};
      break;
    }
    case SpaceTag::Elliptic: {
      Vec u = z / scale;
      if (u[2] < 0) u = -u;
      if (model == Model::SphereOrthographic) {
        out = Point2{u[0], u[1]};
      } else if (model == Model::SphereStereographic) {
        out = Point2{u[0] / (1.0 + u[2]), u[1] / (1.0 + u[2])};
      } else {
        if (u[2] <= 1e-9) return std::nullopt;
        out = Point2{u[0] / u[2], u[1] / u[2]};
      }
      break;
    }
    case SpaceTag::Euclidean:
      if (std::abs(z[2]) <= 1e-12 * scale) return std::nullopt;
      out = Point2{z[0] / z[2], z[1] / z[2]};
      break;
  }
  if (!out || !finite(*out) || std::abs(out->x) > kFar || std::abs(out->y) > kFar) return std::nullopt;
  return out;
}

Vec line_coefficients(const SpaceForm& sf, const Vec& line) {
  Vec c = line.head(3);
  if (sf.tag != SpaceTag::Elliptic) c[2] = -c[2];
  return c;
}

std::vector<Polyline> project_curve(const SpaceForm& sf, Model model, const std::vector<Vec>& samples,
                                    const Style& style, bool closed) {
  std::vector<Polyline> runs;
  Polyline cur;
  cur.style = style;
  bool all = true;
  for (const Vec& z : samples) {
    const auto p = project_point(sf, model, z);
    if (p) {
      cur.points.push_back(*p);
    } else {
      all = false;
      if (cur.points.size() >= 2) runs.push_back(cur);
      cur.points.clear();
    }
  }
  if (cur.points.size() >= 2) runs.push_back(cur);
  if (closed && all && runs.size() == 1) runs.front().closed = true;
  return runs;
}

std::vector<Vec> sample_line(const SpaceForm& sf, const Vec& line, int samples) {
  Vec c = line_coefficients(sf, line);
  if (line[line.size() - 1] < 0) c = -c;
  c.normalize();
  Vec e3 = Vec::Zero(3);
  e3[2] = 1.0;
  Vec b1 = e3 - e3.dot(c) * c;
  if (b1.norm() < 1e-9) {
    b1 = Vec::Zero(3);
    b1[std::abs(c[0]) < 0.9 ? 0 : 1] = 1.0;
    b1 -= b1.dot(c) * c;
  }
  b1.normalize();
  const Eigen::Vector3d b2v = cross3(c, b1);
  const Vec b2 = b2v;
  std::vector<Vec> out;
  const double half = 0.5 * std::numbers::pi;
  for (int k = 0; k < samples; ++k) {
    const double t = -half + std::numbers::pi * (k + 0.5) / samples;
    out.push_back(std::cos(t) * b1 + std::sin(t) * b2);
  }
  return out;
}

std::vector<Vec> sample_laguerre_circle(const LaguerreContext& ctx, const Vec& x, int samples) {
  const Vec a = section_plane(ctx, x);
  const Mat u = null_space(Mat(a.transpose()), Tolerance{1e-12});
  if (u.cols() != 3) return {};
  Eigen::SelfAdjointEigenSolver<Mat> es(Mat(u.transpose() * ctx.B.matrix() * u));
  const Vec& ev = es.eigenvalues();
  const double thr = 1e-12 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  std::vector<int> pos, neg;
  for (int i = 0; i < 3; ++i) {
    if (ev[i] > thr) pos.push_back(i);
    else if (ev[i] < -thr) neg.push_back(i);
  }
  const std::vector<int>* pair = nullptr;
  const std::vector<int>* single = nullptr;
  if (pos.size() == 2 && neg.size() == 1) {
    pair = &pos;
    single = &neg;
  } else if (pos.size() == 1 && neg.size() == 2) {
    pair = &neg;
    single = &pos;
  } else {
    return {};
  }
  auto basis = [&](int i) { return Vec(u * es.eigenvectors().col(i) / std::sqrt(std::abs(ev[i]))); };
  const Vec f1 = basis((*pair)[0]), f2 = basis((*pair)[1]), f3 = basis((*single)[0]);
  std::vector<Vec> out;
  for (int k = 0; k < samples; ++k) {
    const double t = 2.0 * std::numbers::pi * k / samples;
    const Vec l = std::cos(t) * f1 + std::sin(t) * f2 + f3;
    const Vec dl = -std::sin(t) * f1 + std::cos(t) * f2;
    const Eigen::Vector3d z = cross3(line_coefficients(ctx.sf, l), line_coefficients(ctx.sf, dl));
    out.push_back(Vec(z));
  }
  return out;
}

Polyline arrowhead(const Polyline& line, double size, const Style& style) {
  Polyline head;
  head.style = style;
  head.style.fill = style.stroke;
  head.closed = true;
  const size_t n = line.points.size();
  if (n < 2) return head;
  const size_t i = std::min(n / 2, n - 2);
  const Point2 p0 = line.points[i], p1 = line.points[i + 1];
  double dx = p1.x - p0.x, dy = p1.y - p0.y;
  const double len = std::hypot(dx, dy);
  if (!(len > 0.0)) return head;
  dx /= len;
  dy /= len;
  head.points = {{p0.x + dx * size, p0.y + dy * size},
                 {p0.x - 0.5 * dy * size, p0.y + 0.5 * dx * size},
                 {p0.x + 0.5 * dy * size, p0.y - 0.5 * dx * size}};
  return head;
}

namespace {

void add_runs(Scene2D& scene, std::vector<Polyline> runs) {
  for (auto& r : runs) scene.polylines.push_back(std::move(r));
}

void clip_to(Scene2D& scene, double margin) {
  const double w = scene.xmax - scene.xmin, h = scene.ymax - scene.ymin;
  const double x0 = scene.xmin - margin * w, x1 = scene.xmax + margin * w;
  const double y0 = scene.ymin - margin * h, y1 = scene.ymax + margin * h;
  std::vector<Polyline> out;
  for (const auto& pl : scene.polylines) {
    Polyline cur;
    cur.style = pl.style;
    bool all = true;
    for (const auto& p : pl.points) {
      if (p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1) {
        cur.points.push_back(p);
      } else {
        all = false;
        if (cur.points.size() >= 2) out.push_back(cur);
        cur.points.clear();
      }
    }
    if (cur.points.size() >= 2 || (pl.closed && cur.points.size() >= 3)) {
      cur.closed = pl.closed && all;
      out.push_back(cur);
    }
  }
  scene.polylines = std::move(out);
}

}  // namespace

Scene2D render_net(const CbicNet& net, const RenderOptions& o) {
  const SpaceForm sf = net_space_form(net.params);
  check_model(sf, o.model);
  Scene2D scene;
  scene.width = o.width;
  scene.height = o.height;
  scene.background = o.background;
  const double e = o.extent;
  if (o.model == Model::HalfPlane) {
    scene.xmin = -2.0 * e;
    scene.xmax = 2.0 * e;
    scene.ymin = -0.1 * e;
    scene.ymax = 3.9 * e;
  } else {
    scene.xmin = scene.ymin = -e;
    scene.xmax = scene.ymax = e;
  }

  const Style boundary{o.boundary_color, o.line_width, "none"};
  if (o.model == Model::HalfPlane) {
    Polyline axis;
    axis.style = boundary;
    axis.points = {{scene.xmin, 0.0}, {scene.xmax, 0.0}};
    scene.polylines.push_back(axis);
  } else if (o.model != Model::EuclideanPlane && o.model != Model::Klein) {
    Polyline circle;
    circle.style = boundary;
    circle.closed = true;
    for (int k = 0; k < o.samples_per_circle; ++k) {
      const double t = 2.0 * std::numbers::pi * k / o.samples_per_circle;
      circle.points.push_back({std::cos(t), std::sin(t)});
    }
    scene.polylines.push_back(circle);
  } else if (o.model == Model::Klein && sf.tag == SpaceTag::Hyperbolic) {
    Polyline circle;
    circle.style = boundary;
    circle.closed = true;
    for (int k = 0; k < o.samples_per_circle; ++k) {
      const double t = 2.0 * std::numbers::pi * k / o.samples_per_circle;
      circle.points.push_back({std::cos(t), std::sin(t)});
    }
    scene.polylines.push_back(circle);
  }

  const Style conic{o.conic_color, o.line_width, "none"};
  const double a = net.params.alpha, b = net.params.beta;
  if (net.params.conic == ConicType::Ellipse) {
    std::vector<Vec> pts;
    for (int k = 0; k < o.samples_per_circle; ++k) {
      const double t = 2.0 * std::numbers::pi * k / o.samples_per_circle;
      Vec z(3);
      z << a * std::cos(t), b * std::sin(t), 1.0;
      pts.push_back(z);
    }
    add_runs(scene, project_curve(sf, o.model, pts, conic, true));
  } else {
    for (double side : {1.0, -1.0}) {
      std::vector<Vec> pts;
      for (int k = 0; k <= o.samples_per_circle; ++k) {
        const double t = -3.0 + 6.0 * k / o.samples_per_circle;
        Vec z(3);
        z << side * a * std::cosh(t), b * std::sinh(t), 1.0;
        pts.push_back(z);
      }
      add_runs(scene, project_curve(sf, o.model, pts, conic, false));
    }
  }

  const double arrow = 0.012 * (scene.xmax - scene.xmin);
  auto draw_lines = [&](const std::map<int, HPoint>& fam, const std::string& color) {
    const Style st{color, o.line_width, "none"};
    for (const auto& [i, x] : fam) {
      auto runs = project_curve(sf, o.model, sample_line(sf, x.coords(), o.samples_per_line), st, false);
      for (auto& r : runs) {
        const Polyline head = arrowhead(r, arrow, st);
        scene.polylines.push_back(std::move(r));
        if (head.points.size() == 3) scene.polylines.push_back(head);
      }
    }
  };
  draw_lines(net.ell, o.ell_color);
  draw_lines(net.m, o.m_color);

  const LaguerreContext ctx = laguerre_context(sf);
  const Style circle{o.circle_color, o.circle_width, "none"};
  for (const auto& c : net_incircles(net)) {
    if (!c.valid) continue;
    add_runs(scene, project_curve(sf, o.model, sample_laguerre_circle(ctx, c.point.coords(), o.samples_per_circle),
                                  circle, true));
  }
  clip_to(scene, 0.02);
  return scene;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string emit_svg(const Scene2D& scene) {
  std::ostringstream out;
  const double sx = scene.width / (scene.xmax - scene.xmin);
  const double sy = scene.height / (scene.ymax - scene.ymin);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << scene.width << "\" height=\""
      << scene.height << "\" viewBox=\"0 0 " << scene.width << " " << scene.height << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << scene.width << "\" height=\"" << scene.height << "\" fill=\""
      << scene.background << "\"/>\n";
  for (const auto& pl : scene.polylines) {
    out << (pl.closed ? "<polygon" : "<polyline") << " points=\"";
    for (size_t k = 0; k < pl.points.size(); ++k) {
      if (k) out << ' ';
      out << format_number((pl.points[k].x - scene.xmin) * sx) << ','
          << format_number((scene.ymax - pl.points[k].y) * sy);
    }
    out << "\" fill=\"" << pl.style.fill << "\" stroke=\"" << pl.style.stroke << "\" stroke-width=\""
        << format_number(pl.style.width) << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace sg
