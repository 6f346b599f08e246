#include "sphgeo/io.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"

namespace sg {

using nlohmann::json;

namespace {

std::string squash(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c != '_' && c != '-' && c != ' ') out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

Model parse_model(const std::string& name) {
  for (Model m : {Model::Klein, Model::PoincareDisk, Model::HalfPlane, Model::SphereOrthographic,
                  Model::SphereStereographic, Model::EuclideanPlane}) {
    if (squash(name) == squash(to_string(m))) return m;
  }
  throw ConfigError("unknown model '" + name + "'");
}

int parse_space_form(const json& v) {
  if (v.is_number_integer()) return v.get<int>();
  const std::string s = squash(v.get<std::string>());
  if (s == "hyperbolic") return -1;
  if (s == "elliptic") return 1;
  if (s == "euclidean") return 0;
  throw ConfigError("unknown space_form '" + v.get<std::string>() + "'");
}

const char* space_form_name(int epsilon) {
  return epsilon < 0 ? "hyperbolic" : (epsilon > 0 ? "elliptic" : "euclidean");
}

IndexRange parse_range(const json& v) {
  if (!v.is_array() || v.size() != 2) throw ConfigError("index ranges are [lo, hi] pairs");
  return {v[0].get<int>(), v[1].get<int>()};
}

json point_json(const HPoint& x) {
  const Vec c = canonical(x.coords());
  json a = json::array();
  for (int k = 0; k < c.size(); ++k) a.push_back(c[k]);
  return a;
}

HPoint point_from(const json& v) {
  if (!v.is_array() || v.empty()) throw ConfigError("points are non-empty arrays");
  Vec c(static_cast<Eigen::Index>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) c[static_cast<Eigen::Index>(k)] = v[k].get<double>();
  if (c.size() != 4) throw ConfigError("net lines have four coordinates");
  return HPoint(c);
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (int k = 0; k < v.size(); ++k) a.push_back(v[k]);
  return a;
}

SceneConfig config_from(const json& j) {
  SceneConfig cfg;
  NetParams& p = cfg.params;
  p.epsilon = parse_space_form(j.at("space_form"));
  const json& conic = j.at("conic");
  const std::string type = squash(conic.value("type", std::string("ellipse")));
  if (type == "ellipse") p.conic = ConicType::Ellipse;
  else if (type == "hyperbola") p.conic = ConicType::Hyperbola;
  else throw ConfigError("conic type must be ellipse or hyperbola");
  p.alpha = conic.at("alpha").get<double>();
  p.beta = conic.at("beta").get<double>();

  const json& net = j.at("net");
  p.s = net.at("s").get<double>();
  p.u0_l = net.value("u0_l", 0.0);
  p.u0_m = net.value("u0_m", 0.0);
  if (net.contains("i_range")) p.i_range = parse_range(net["i_range"]);
  if (net.contains("j_range")) p.j_range = parse_range(net["j_range"]);
  const bool has_n = net.contains("N"), has_st = net.contains("s_tilde");
  if (has_n == has_st) throw ConfigError("net needs exactly one of N and s_tilde");

  const std::string default_model = p.epsilon == 0 ? "euclidean_plane" : "klein";
  RenderOptions& r = cfg.render;
  r.model = parse_model(j.value("model", default_model));
  if (j.contains("render")) {
    const json& o = j["render"];
    r.samples_per_circle = o.value("samples_per_circle", r.samples_per_circle);
    r.samples_per_line = o.value("samples_per_line", r.samples_per_line);
    r.width = o.value("width", r.width);
    r.height = o.value("height", r.height);
    r.extent = o.value("extent", r.extent);
    r.line_width = o.value("line_width", r.line_width);
    r.circle_width = o.value("circle_width", r.circle_width);
    if (o.contains("palette")) {
      const json& c = o["palette"];
      r.background = c.value("background", r.background);
      r.ell_color = c.value("ell", r.ell_color);
      r.m_color = c.value("m", r.m_color);
      r.circle_color = c.value("circle", r.circle_color);
      r.conic_color = c.value("conic", r.conic_color);
      r.boundary_color = c.value("boundary", r.boundary_color);
    }
  }
  if (r.samples_per_circle < 3 || r.samples_per_line < 2 || r.width <= 0 || r.height <= 0 || !(r.extent > 0.0)) {
    throw ConfigError("render sizes must be positive");
  }

  try {
    validate(p);
    if (has_n) {
      cfg.N = net.at("N").get<int>();
      p.s_tilde = periodic_step(p, *cfg.N);
    } else {
      p.s_tilde = net.at("s_tilde").get<double>();
    }
    validate(p);
    check_model(net_space_form(p), r.model);
  } catch (const GeometryError& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

json config_json(const SceneConfig& cfg) {
  const NetParams& p = cfg.params;
  const RenderOptions& r = cfg.render;
  json net = {{"s", p.s},
              {"u0_l", p.u0_l},
              {"u0_m", p.u0_m},
              {"i_range", {p.i_range.lo, p.i_range.hi}},
              {"j_range", {p.j_range.lo, p.j_range.hi}}};
  if (cfg.N) net["N"] = *cfg.N;
  else net["s_tilde"] = p.s_tilde;
  return {{"space_form", space_form_name(p.epsilon)},
          {"conic", {{"type", to_string(p.conic)}, {"alpha", p.alpha}, {"beta", p.beta}}},
          {"net", net},
          {"model", to_string(r.model)},
          {"render",
           {{"samples_per_circle", r.samples_per_circle},
            {"samples_per_line", r.samples_per_line},
            {"width", r.width},
            {"height", r.height},
            {"extent", r.extent},
            {"line_width", r.line_width},
            {"circle_width", r.circle_width},
            {"palette",
             {{"background", r.background},
              {"ell", r.ell_color},
              {"m", r.m_color},
              {"circle", r.circle_color},
              {"conic", r.conic_color},
              {"boundary", r.boundary_color}}}}}};
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

SceneConfig parse_config(const std::string& text) {
  return guarded([&] { return config_from(json::parse(text)); });
}

std::string config_to_json(const SceneConfig& config) { return config_json(config).dump(2) + "\n"; }

std::string dump_net(const CbicNet& net, const SceneConfig& config) {
  json out;
  out["format"] = "sphgeo-net";
  out["config"] = config_json(config);
  const NetParams& p = net.params;
  out["params"] = {{"epsilon", p.epsilon},
                   {"conic", to_string(p.conic)},
                   {"alpha", p.alpha},
                   {"beta", p.beta},
                   {"s", p.s},
                   {"s_tilde", p.s_tilde},
                   {"u0_l", p.u0_l},
                   {"u0_m", p.u0_m},
                   {"i_range", {p.i_range.lo, p.i_range.hi}},
                   {"j_range", {p.j_range.lo, p.j_range.hi}}};
  json ell = json::array(), m = json::array();
  for (const auto& [i, x] : net.ell) ell.push_back(point_json(x));
  for (const auto& [j, x] : net.m) m.push_back(point_json(x));
  out["ell"] = ell;
  out["m"] = m;
  json circles = json::array();
  for (const auto& c : net_incircles(net)) {
    if (!c.valid) continue;
    circles.push_back({{"i", c.i},
                       {"j", c.j},
                       {"kind", to_string(c.sphere.kind)},
                       {"center", vec_json(c.sphere.center)},
                       {"radius", c.sphere.signed_radius()}});
  }
  out["incircles"] = circles;
  const NetResiduals r = net_residuals(net);
  out["residuals"] = {{"max_coplanarity", r.max_coplanarity}, {"max_on_quadric", r.max_on_quadric}};
  return out.dump(2) + "\n";
}

NetDump load_net(const std::string& text) {
  return guarded([&] {
    const json j = json::parse(text);
    if (j.value("format", std::string()) != "sphgeo-net") throw ConfigError("not a net dump");
    NetDump d;
    d.config = config_from(j.at("config"));
    d.net.params = d.config.params;
    d.net.B = net_laguerre_quadric(d.net.params);
    d.net.C = base_cone(d.net.params);
    const json& ell = j.at("ell");
    const json& m = j.at("m");
    const IndexRange ir = d.net.params.i_range, jr = d.net.params.j_range;
    if (ell.size() != static_cast<std::size_t>(ir.hi - ir.lo + 1) ||
        m.size() != static_cast<std::size_t>(jr.hi - jr.lo + 1)) {
      throw ConfigError("line families do not match the index ranges");
    }
    for (int i = ir.lo; i <= ir.hi; ++i) d.net.ell[i] = point_from(ell[static_cast<std::size_t>(i - ir.lo)]);
    for (int k = jr.lo; k <= jr.hi; ++k) d.net.m[k] = point_from(m[static_cast<std::size_t>(k - jr.lo)]);
    return d;
  });
}

bool is_net_dump(const std::string& text) {
  try {
    const json j = json::parse(text);
    return j.is_object() && j.value("format", std::string()) == "sphgeo-net";
  } catch (const json::exception&) {
    return false;
  }
}

}  // namespace sg
