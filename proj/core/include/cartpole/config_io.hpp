#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cartpole/keyvalue.hpp"
#include "cartpole/simulate.hpp"

namespace cartpole {

inline constexpr std::string_view kArtifactVersion = "0.1.0";

// SimConfig as ordered `key = value` entries. Keys follow the field names:
// cart_mass, ball_mass, rod_length, friction_coefficient, gravity,
// cart_position, cart_velocity, rod_angle, rod_angular_velocity, dt,
// duration, k_p, k_i, k_d, target_angle, saturation_low, saturation_high.
KeyValueList config_entries(const SimConfig& config);

// Applies entries onto `config`. Unknown keys raise ParseError naming the
// key; manifest metadata keys (artifact_version, scenario, diverged,
// trajectory_csv, plot_svg) are ignored so a manifest loads back as a
// config.
void apply_config_entries(SimConfig& config, const KeyValueList& entries);

// Reads a config file on top of `base`, then validates the result.
SimConfig read_config_file(const std::filesystem::path& path,
                           SimConfig base = {});

// Resolved-run echo written alongside every trajectory; loading it back as
// a config reproduces the run.
struct RunManifest {
  std::string artifact_version{kArtifactVersion};
  std::string scenario;  // empty when the run was not a named scenario
  SimConfig config{};
  bool diverged = false;
  std::string trajectory_csv;
  std::string plot_svg;
};

KeyValueList manifest_entries(const RunManifest& manifest);
void write_manifest(const std::filesystem::path& path,
                    const RunManifest& manifest);

}  // namespace cartpole
