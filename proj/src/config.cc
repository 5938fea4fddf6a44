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

#include "h2r/config.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <vector>

#include "h2r/error.h"
#include "text_util.h"

namespace h2r {
namespace {

struct Field {
  std::string_view section;
  std::string_view key;
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

std::string FormatDouble(double v) {
  std::string out;
  internal::AppendDouble(&out, v);
  return out;
}

std::string Unquote(std::string_view value) {
  if (value.size() < 2 || value.front() != '"' || value.back() != '"') {
    throw Error(ErrorKind::kConfigError,
                "expected a quoted string, got '" + std::string(value) + "'");
  }
  return std::string(value.substr(1, value.size() - 2));
}

template <typename T>
Field Real(std::string_view section, std::string_view key, T accessor) {
  return Field{section, key,
               [accessor](RunConfig& c, std::string_view v) {
                 accessor(c) = internal::ParseDouble(v, "config value");
               },
               [accessor](const RunConfig& c) {
                 return FormatDouble(accessor(const_cast<RunConfig&>(c)));
               }};
}

template <typename T>
Field Integer(std::string_view section, std::string_view key, T accessor) {
  return Field{section, key,
               [accessor](RunConfig& c, std::string_view v) {
                 accessor(c) = static_cast<int>(
                     internal::ParseInt(v, "config value"));
               },
               [accessor](const RunConfig& c) {
                 return std::to_string(accessor(const_cast<RunConfig&>(c)));
               }};
}

template <typename T>
Field Text(std::string_view section, std::string_view key, T accessor) {
  return Field{section, key,
               [accessor](RunConfig& c, std::string_view v) {
                 accessor(c) = Unquote(v);
               },
               [accessor](const RunConfig& c) {
                 return "\"" + accessor(const_cast<RunConfig&>(c)) + "\"";
               }};
}

#define H2R_FIELD(member) [](RunConfig& c) -> auto& { return c.member; }

const std::vector<Field>& Fields() {
  static const std::vector<Field> fields = {
      Text("paths", "object", H2R_FIELD(object_name)),
      Text("paths", "scene", H2R_FIELD(scene_path)),
      Text("paths", "grasps", H2R_FIELD(grasps_path)),
      Real("safety", "d_s", H2R_FIELD(d_s)),
      Integer("sampler", "k", H2R_FIELD(k)),
      Real("sampler", "radius", H2R_FIELD(radius)),
      Real("sampler", "alpha_min_deg", H2R_FIELD(alpha_min_deg)),
      Real("sampler", "theta_offset_deg", H2R_FIELD(theta_offset_deg)),
      Real("sampler", "theta_max_deg", H2R_FIELD(theta_max_deg)),
      Integer("sampler", "max_attempts", H2R_FIELD(max_attempts)),
      Real("trajectory", "s", H2R_FIELD(s)),
      Real("trajectory", "d", H2R_FIELD(d)),
      Real("trajectory", "phi_deg", H2R_FIELD(phi_deg)),
      Real("trajectory", "d_min", H2R_FIELD(d_min)),
      Integer("trajectory", "max_steps", H2R_FIELD(max_steps)),
      Real("trajectory", "step_translation", H2R_FIELD(step_translation)),
      Real("trajectory", "step_rotation_deg", H2R_FIELD(step_rotation_deg)),
      Real("episode", "tau_c", H2R_FIELD(tau_c)),
      Integer("episode", "max_steps", H2R_FIELD(episode_max_steps)),
      Real("episode", "band_low", H2R_FIELD(band_low)),
      Real("episode", "band_high", H2R_FIELD(band_high)),
      Real("episode", "center_angle_max_deg", H2R_FIELD(center_angle_max_deg)),
      Integer("episode", "starts", H2R_FIELD(starts)),
      Real("camera", "fx", H2R_FIELD(camera.fx)),
      Real("camera", "fy", H2R_FIELD(camera.fy)),
      Real("camera", "cx", H2R_FIELD(camera.cx)),
      Real("camera", "cy", H2R_FIELD(camera.cy)),
      Integer("camera", "width", H2R_FIELD(camera.width)),
      Integer("camera", "height", H2R_FIELD(camera.height)),
      Real("camera", "near", H2R_FIELD(camera.near)),
      Field{"render", "write_images",
            [](RunConfig& c, std::string_view v) {
              if (v != "true" && v != "false") {
                throw Error(ErrorKind::kConfigError,
                            "render.write_images must be true or false");
              }
              c.write_images = v == "true";
            },
            [](const RunConfig& c) -> std::string {
              return c.write_images ? "true" : "false";
            }},
      Real("render", "point_radius", H2R_FIELD(point_radius)),
      Real("render", "opacity", H2R_FIELD(opacity)),
      Real("loss", "lambda_t", H2R_FIELD(lambda_t)),
      Real("loss", "lambda_r", H2R_FIELD(lambda_r)),
      Real("ibvs", "gain", H2R_FIELD(ibvs_gain)),
      Real("ibvs", "advance", H2R_FIELD(ibvs_advance)),
      Real("ibvs", "area_threshold", H2R_FIELD(ibvs_area_threshold)),
  };
  return fields;
}

#undef H2R_FIELD

}  // namespace

SamplerConfig RunConfig::sampler_config() const {
  SamplerConfig c;
  c.k = k;
  c.radius = radius;
  c.alpha_min = alpha_min_deg * kDegree;
  c.theta_offset_range = theta_offset_deg * kDegree;
  c.theta_max = theta_max_deg * kDegree;
  c.d_min = d_min;
  c.seed = seed;
  c.max_attempts_per_pose = max_attempts;
  return c;
}

TrajectoryConfig RunConfig::trajectory_config() const {
  TrajectoryConfig c;
  c.pregrasp_offset = s;
  c.refine_distance = d;
  c.facing_tolerance = phi_deg * kDegree;
  c.d_min = d_min;
  c.max_steps = max_steps;
  c.step_translation = step_translation;
  c.step_rotation = step_rotation_deg * kDegree;
  return c;
}

EpisodeConfig RunConfig::episode_config() const {
  EpisodeConfig c;
  c.tau_c = tau_c;
  c.max_steps = episode_max_steps;
  c.success_band_low = band_low;
  c.success_band_high = band_high;
  c.center_angle_max = center_angle_max_deg * kDegree;
  c.d_s = d_s;
  c.step_translation = step_translation;
  c.step_rotation = step_rotation_deg * kDegree;
  return c;
}

SplatParams RunConfig::splat_params() const {
  SplatParams p;
  p.point_radius = point_radius;
  p.opacity = opacity;
  return p;
}

LossWeights RunConfig::loss_weights() const {
  return LossWeights{lambda_t, lambda_r};
}

IbvsGains RunConfig::ibvs_gains() const {
  return IbvsGains{ibvs_gain, ibvs_advance, ibvs_area_threshold};
}

void RunConfig::Validate() const {
  if (!(d_s > 0.0)) throw Error(ErrorKind::kConfigError, "safety.d_s must be > 0");
  sampler_config().Validate();
  trajectory_config().Validate();
  episode_config().Validate();
  camera.Validate();
  if (starts < 1) throw Error(ErrorKind::kConfigError, "episode.starts must be >= 1");
  if (!(point_radius > 0.0 && opacity > 0.0 && opacity <= 1.0)) {
    throw Error(ErrorKind::kConfigError, "render parameters out of range");
  }
  if (lambda_t < 0.0 || lambda_r < 0.0) {
    throw Error(ErrorKind::kConfigError, "loss weights must be >= 0");
  }
  if (!(ibvs_area_threshold > 0.0 && ibvs_area_threshold <= 1.0)) {
    throw Error(ErrorKind::kConfigError, "ibvs.area_threshold must be in (0, 1]");
  }
}

RunConfig ParseRunConfig(std::string_view text) {
  RunConfig config;
  bool has_seed = false;
  std::string section;
  internal::LineReader reader(text);
  std::string_view line;
  while (reader.Next(&line)) {
    const std::string where = "config line " + std::to_string(reader.line_number());
    // Trailing comments are allowed outside strings.
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line = line.substr(0, i);
        break;
      }
    }
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw Error(ErrorKind::kConfigError, where + ": malformed section header");
      }
      section = std::string(line.substr(1, line.size() - 2));
      const bool known_section =
          std::any_of(Fields().begin(), Fields().end(),
                      [&](const Field& f) { return f.section == section; });
      if (!known_section) {
        throw Error(ErrorKind::kConfigError,
                    where + ": unknown section [" + section + "]");
      }
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::kConfigError, where + ": expected key = value");
    }
    auto trim = [](std::string_view s) {
      const size_t b = s.find_first_not_of(" \t");
      const size_t e = s.find_last_not_of(" \t");
      return b == std::string_view::npos ? std::string_view()
                                         : s.substr(b, e - b + 1);
    };
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (section.empty() && key == "seed") {
      const auto [end, ec] =
          std::from_chars(value.data(), value.data() + value.size(), config.seed);
      if (ec != std::errc() || end != value.data() + value.size()) {
        throw Error(ErrorKind::kConfigError,
                    where + ": seed must be an unsigned 64-bit integer");
      }
      has_seed = true;
      continue;
    }
    bool known = false;
    for (const Field& field : Fields()) {
      if (field.section == section && field.key == key) {
        try {
          field.set(config, value);
        } catch (const Error& e) {
          throw Error(ErrorKind::kConfigError, where + ": " + e.what());
        }
        known = true;
        break;
      }
    }
    if (!known) {
      throw Error(ErrorKind::kConfigError,
                  where + ": unknown key '" + section + "." + std::string(key) + "'");
    }
  }
  if (!has_seed) {
    throw Error(ErrorKind::kConfigError, "config must set a top-level seed");
  }
  config.Validate();
  return config;
}

RunConfig LoadRunConfig(const std::filesystem::path& path) {
  return ParseRunConfig(internal::ReadFile(path));
}

std::string SerializeRunConfig(const RunConfig& config) {
  std::string out = "seed = " + std::to_string(config.seed) + "\n";
  std::string_view section;
  for (const Field& field : Fields()) {
    if (field.section != section) {
      section = field.section;
      out += "\n[";
      out += section;
      out += "]\n";
    }
    out += field.key;
    out += " = ";
    out += field.get(config);
    out += '\n';
  }
  return out;
}

}  // namespace h2r
