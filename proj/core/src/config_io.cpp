#include "cartpole/config_io.hpp"

#include <array>
#include <functional>

namespace cartpole {

namespace {

constexpr std::array<std::string_view, 5> kMetadataKeys = {
    "artifact_version", "scenario", "diverged", "trajectory_csv", "plot_svg"};

bool is_metadata_key(const std::string& key) {
  for (std::string_view m : kMetadataKeys)
    if (key == m) return true;
  return false;
}

double* field_slot(SimConfig& config, const std::string& key) {
  static constexpr struct {
    std::string_view key;
    double SimConfig::*direct;
  } kDirect[] = {
      {"dt", &SimConfig::dt},
      {"duration", &SimConfig::duration},
      {"target_angle", &SimConfig::target_angle},
      {"saturation_low", &SimConfig::saturation_low},
      {"saturation_high", &SimConfig::saturation_high},
  };
  for (const auto& f : kDirect)
    if (key == f.key) return &(config.*f.direct);

  if (key == "cart_mass") return &config.params.cart_mass;
  if (key == "ball_mass") return &config.params.ball_mass;
  if (key == "rod_length") return &config.params.rod_length;
  if (key == "friction_coefficient") return &config.params.friction_coefficient;
  if (key == "gravity") return &config.params.gravity;
  if (key == "cart_position") return &config.initial_state.cart_position;
  if (key == "cart_velocity") return &config.initial_state.cart_velocity;
  if (key == "rod_angle") return &config.initial_state.rod_angle;
  if (key == "rod_angular_velocity")
    return &config.initial_state.rod_angular_velocity;
  if (key == "k_p") return &config.gains.proportional;
  if (key == "k_i") return &config.gains.integral;
  if (key == "k_d") return &config.gains.derivative;
  return nullptr;
}

}  // namespace

KeyValueList config_entries(const SimConfig& c) {
  return {
      {"cart_mass", format_double(c.params.cart_mass)},
      {"ball_mass", format_double(c.params.ball_mass)},
      {"rod_length", format_double(c.params.rod_length)},
      {"friction_coefficient", format_double(c.params.friction_coefficient)},
      {"gravity", format_double(c.params.gravity)},
      {"cart_position", format_double(c.initial_state.cart_position)},
      {"cart_velocity", format_double(c.initial_state.cart_velocity)},
      {"rod_angle", format_double(c.initial_state.rod_angle)},
      {"rod_angular_velocity",
       format_double(c.initial_state.rod_angular_velocity)},
      {"dt", format_double(c.dt)},
      {"duration", format_double(c.duration)},
      {"k_p", format_double(c.gains.proportional)},
      {"k_i", format_double(c.gains.integral)},
      {"k_d", format_double(c.gains.derivative)},
      {"target_angle", format_double(c.target_angle)},
      {"saturation_low", format_double(c.saturation_low)},
      {"saturation_high", format_double(c.saturation_high)},
  };
}

void apply_config_entries(SimConfig& config, const KeyValueList& entries) {
  for (const KeyValue& entry : entries) {
    if (is_metadata_key(entry.key)) continue;
    double* slot = field_slot(config, entry.key);
    if (slot == nullptr)
      throw ParseError("unknown config key \"" + entry.key + "\"");
    *slot = parse_double(entry.value, "key \"" + entry.key + "\"");
  }
}

SimConfig read_config_file(const std::filesystem::path& path, SimConfig base) {
  apply_config_entries(base, read_key_value_file(path.string()));
  validate(base);
  return base;
}

KeyValueList manifest_entries(const RunManifest& m) {
  KeyValueList entries = {
      {"artifact_version", m.artifact_version},
      {"scenario", m.scenario.empty() ? "none" : m.scenario},
  };
  KeyValueList config = config_entries(m.config);
  entries.insert(entries.end(), config.begin(), config.end());
  entries.push_back({"diverged", m.diverged ? "true" : "false"});
  entries.push_back({"trajectory_csv", m.trajectory_csv});
  entries.push_back({"plot_svg", m.plot_svg});
  return entries;
}

void write_manifest(const std::filesystem::path& path, const RunManifest& m) {
  write_key_value_file(path.string(), manifest_entries(m));
}

}  // namespace cartpole
