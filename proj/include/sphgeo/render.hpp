#pragma once

// Display models of the planar space forms and deterministic SVG output.

#include <optional>
#include <string>
#include <vector>

#include "sphgeo/nets.hpp"

namespace sg {

enum class Model { Klein, PoincareDisk, HalfPlane, SphereOrthographic, SphereStereographic, EuclideanPlane };

const char* to_string(Model model);
Model model_from_string(const std::string& name);

/// KindMismatch unless the model can display the space form.
void check_model(const SpaceForm& sf, Model model);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Image of a homogeneous base point [z1, z2, z3]; empty outside the model.
std::optional<Point2> project_point(const SpaceForm& sf, Model model, const Vec& z);

/// Homogeneous line coefficients in the base plane of an oriented line on B.
Vec line_coefficients(const SpaceForm& sf, const Vec& line);

struct Style {
  std::string stroke = "#000000";
  double width = 1.0;
  std::string fill = "none";
};

struct Polyline {
  std::vector<Point2> points;
  Style style;
  bool closed = false;
};

struct Scene2D {
  double xmin = -1.05, xmax = 1.05, ymin = -1.05, ymax = 1.05;
  int width = 800;
  int height = 800;
  std::string background = "#ffffff";
  std::vector<Polyline> polylines;
};

/// Splits the samples of a curve into runs of representable points.
std::vector<Polyline> project_curve(const SpaceForm& sf, Model model, const std::vector<Vec>& samples,
                                    const Style& style, bool closed);

/// Base-plane samples of an oriented line, ordered along its orientation.
std::vector<Vec> sample_line(const SpaceForm& sf, const Vec& line, int samples);
/// Contact points of the tangent lines sampled uniformly on the B-section of
/// the Laguerre sphere x. Empty when the section is not a real conic.
std::vector<Vec> sample_laguerre_circle(const LaguerreContext& ctx, const Vec& x, int samples);

/// Small arrowhead at the first sample of a polyline pointing to the next.
Polyline arrowhead(const Polyline& line, double size, const Style& style);

struct RenderOptions {
  Model model = Model::Klein;
  int samples_per_circle = 256;
  int samples_per_line = 256;
  int width = 800;
  int height = 800;
  double extent = 1.05;
  double line_width = 1.0;
  double circle_width = 1.0;
  std::string background = "#ffffff";
  std::string ell_color = "#1f4e9c";
  std::string m_color = "#b22222";
  std::string circle_color = "#2e8b57";
  std::string conic_color = "#000000";
  std::string boundary_color = "#808080";
};

Scene2D render_net(const CbicNet& net, const RenderOptions& options);

std::string emit_svg(const Scene2D& scene);

/// Fixed six-decimal formatting without negative zero.
std::string format_number(double v);

}  // namespace sg
