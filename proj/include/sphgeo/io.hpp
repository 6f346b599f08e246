#pragma once

// Scene configurations and net dumps as JSON.

#include <optional>
#include <stdexcept>
#include <string>

#include "sphgeo/nets.hpp"
#include "sphgeo/render.hpp"

namespace sg {

/// Malformed or inconsistent configuration or dump.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SceneConfig {
  NetParams params;
  /// Period used to derive s_tilde; empty when s_tilde was given directly.
  std::optional<int> N;
  RenderOptions render;
};

/// Parses a scene configuration and resolves s_tilde from N when needed.
SceneConfig parse_config(const std::string& text);
std::string config_to_json(const SceneConfig& config);

/// Net dump: configuration, both line families, incircles and residuals.
std::string dump_net(const CbicNet& net, const SceneConfig& config);

struct NetDump {
  SceneConfig config;
  CbicNet net;
};

/// Rebuilds a net from a dump, keeping the stored line coordinates.
NetDump load_net(const std::string& text);

/// Whether the text is a net dump rather than a scene configuration.
bool is_net_dump(const std::string& text);

}  // namespace sg
