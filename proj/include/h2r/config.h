/*
 * Copyright 2026 The h2r Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef H2R_CONFIG_H_
#define H2R_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "h2r/demo_generator.h"
#include "h2r/policies.h"
#include "h2r/renderer.h"
#include "h2r/rollout.h"

namespace h2r {

// Experiment configuration. Angles are kept in degrees exactly as written
// in the file so that load -> serialize -> load is lossless; the module
// configs (radians) are derived on demand.
//
// File format: TOML-style `key = value` lines under [section] headers,
// '#' comments, strings in double quotes. A top-level `seed` is mandatory.
struct RunConfig {
  uint64_t seed = 0;

  // [paths], relative to the config file's directory.
  std::string object_name = "object";
  std::string scene_path = "scene.txt";
  std::string grasps_path = "grasps.txt";

  // [safety]
  double d_s = 0.1;

  // [sampler]
  int k = 15;
  double radius = 0.7;
  double alpha_min_deg = 60.0;
  double theta_offset_deg = 20.0;
  double theta_max_deg = 100.0;
  int max_attempts = 10000;

  // [trajectory]
  double s = 0.3;
  double d = 0.5;
  double phi_deg = 0.0;
  double d_min = 0.1;
  int max_steps = 30;
  double step_translation = 0.05;
  double step_rotation_deg = 10.0;

  // [episode]
  double tau_c = 0.7;
  int episode_max_steps = 30;
  double band_low = 0.35;
  double band_high = 0.45;
  double center_angle_max_deg = 10.0;
  int starts = 10;

  // [camera]
  CameraIntrinsics camera;

  // [render]
  bool write_images = true;
  double point_radius = 0.005;
  double opacity = 0.8;

  // [loss]
  double lambda_t = 100.0;
  double lambda_r = 100.0;

  // [ibvs]
  double ibvs_gain = 0.001;
  double ibvs_advance = 0.04;
  double ibvs_area_threshold = 0.15;

  SamplerConfig sampler_config() const;
  TrajectoryConfig trajectory_config() const;
  EpisodeConfig episode_config() const;
  SplatParams splat_params() const;
  LossWeights loss_weights() const;
  IbvsGains ibvs_gains() const;

  // Throws ConfigError on any out-of-range value.
  void Validate() const;

  bool operator==(const RunConfig&) const = default;
};

// Throws ConfigError (missing seed, unknown key, bad value) or ParseError.
RunConfig ParseRunConfig(std::string_view text);
RunConfig LoadRunConfig(const std::filesystem::path& path);
std::string SerializeRunConfig(const RunConfig& config);

}  // namespace h2r

#endif  // H2R_CONFIG_H_
