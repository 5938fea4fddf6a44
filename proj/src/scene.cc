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

#include "h2r/scene.h"

#include <cmath>
#include <limits>

#include "h2r/error.h"
#include "text_util.h"

namespace h2r {
namespace {

using internal::LineReader;
using internal::ParseDouble;
using internal::SplitFields;

void ValidateCloud(const PointCloud& cloud, bool require_points) {
  const std::string name(CloudLabelName(cloud.label));
  if (require_points && cloud.points.empty()) {
    throw Error(ErrorKind::kEmptyCloud, name + " cloud is empty");
  }
  if (cloud.colors.size() != cloud.points.size()) {
    throw Error(ErrorKind::kParseError,
                name + " cloud has mismatched point and color counts");
  }
  for (size_t i = 0; i < cloud.points.size(); ++i) {
    if (!cloud.points[i].allFinite()) {
      throw Error(ErrorKind::kNonFiniteCoordinate,
                  name + " point " + std::to_string(i) + " is not finite");
    }
    const Vec3& c = cloud.colors[i];
    if (!c.allFinite() || c.minCoeff() < 0.0 || c.maxCoeff() > 1.0) {
      throw Error(ErrorKind::kParseError,
                  name + " color " + std::to_string(i) + " is outside [0, 1]");
    }
  }
}

Vec3 Mean(const std::vector<Vec3>& points) {
  Vec3 sum = Vec3::Zero();
  for (const Vec3& p : points) sum += p;
  return sum / static_cast<double>(points.size());
}

}  // namespace

std::string_view CloudLabelName(CloudLabel label) {
  switch (label) {
    case CloudLabel::kObject:
      return "object";
    case CloudLabel::kHand:
      return "hand";
    case CloudLabel::kBackground:
      return "background";
  }
  return "unknown";
}

std::optional<CloudLabel> ParseCloudLabel(std::string_view name) {
  if (name == "object") return CloudLabel::kObject;
  if (name == "hand") return CloudLabel::kHand;
  if (name == "background") return CloudLabel::kBackground;
  return std::nullopt;
}

SceneAssets::SceneAssets(PointCloud object, PointCloud hand,
                         std::optional<PointCloud> background)
    : object_(std::move(object)),
      hand_(std::move(hand)),
      background_(std::move(background)) {
  object_.label = CloudLabel::kObject;
  hand_.label = CloudLabel::kHand;
  ValidateCloud(object_, true);
  ValidateCloud(hand_, true);
  if (background_) {
    background_->label = CloudLabel::kBackground;
    ValidateCloud(*background_, false);
  }
  object_mean_ = Mean(object_.points);
  hand_centroid_ = Mean(hand_.points);

  std::vector<Vec3> obstacles = object_.points;
  obstacles.insert(obstacles.end(), hand_.points.begin(), hand_.points.end());
  clearance_index_ = std::make_shared<const VoxelGridIndex>(obstacles);
  hand_index_ = std::make_shared<const VoxelGridIndex>(hand_.points);
}

Pose AlignGraspToScene(const GraspCandidate& grasp, const SceneAssets& scene,
                       AlignDirection direction) {
  const Vec3& offset = scene.object_mean();
  const Vec3 t = direction == AlignDirection::kToScene
                     ? Vec3(grasp.pose.translation() + offset)
                     : Vec3(grasp.pose.translation() - offset);
  return Pose(grasp.pose.rotation(), t);
}

double MinDistanceToClouds(const Vec3& p,
                           std::span<const PointCloud* const> clouds) {
  std::vector<Vec3> points;
  for (const PointCloud* cloud : clouds) {
    points.insert(points.end(), cloud->points.begin(), cloud->points.end());
  }
  return VoxelGridIndex(points).MinDistance(p);
}

SceneAssets ParseScene(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.Next(&line) || SplitFields(line) !=
                                 std::vector<std::string_view>{"scene", "v1"}) {
    throw Error(ErrorKind::kParseError, "missing 'scene v1' header");
  }
  std::optional<PointCloud> clouds[3];
  while (reader.Next(&line)) {
    const auto header = SplitFields(line);
    const auto label =
        header.size() == 3 && header[0] == "cloud" ? ParseCloudLabel(header[1])
                                                   : std::nullopt;
    if (!label) {
      throw Error(ErrorKind::kParseError,
                  "line " + std::to_string(reader.line_number()) +
                      ": expected 'cloud <label> <N>'");
    }
    const long long n = internal::ParseInt(header[2], "cloud size");
    if (n < 0) throw Error(ErrorKind::kParseError, "negative cloud size");
    auto& slot = clouds[static_cast<int>(*label)];
    if (slot) {
      throw Error(ErrorKind::kParseError,
                  "duplicate " + std::string(header[1]) + " cloud");
    }
    PointCloud cloud;
    cloud.label = *label;
    cloud.points.reserve(n);
    cloud.colors.reserve(n);
    for (long long i = 0; i < n; ++i) {
      if (!reader.Next(&line)) {
        throw Error(ErrorKind::kParseError, "truncated cloud block");
      }
      const auto f = SplitFields(line);
      if (f.size() != 6) {
        throw Error(ErrorKind::kParseError,
                    "line " + std::to_string(reader.line_number()) +
                        ": expected 'x y z r g b'");
      }
      cloud.points.emplace_back(ParseDouble(f[0], "x"), ParseDouble(f[1], "y"),
                                ParseDouble(f[2], "z"));
      cloud.colors.emplace_back(ParseDouble(f[3], "r"), ParseDouble(f[4], "g"),
                                ParseDouble(f[5], "b"));
    }
    slot = std::move(cloud);
  }
  if (!clouds[0]) throw Error(ErrorKind::kEmptyCloud, "scene has no object cloud");
  if (!clouds[1]) throw Error(ErrorKind::kEmptyCloud, "scene has no hand cloud");
  return SceneAssets(std::move(*clouds[0]), std::move(*clouds[1]),
                     std::move(clouds[2]));
}

SceneAssets LoadScene(const std::filesystem::path& path) {
  return ParseScene(internal::ReadFile(path));
}

std::string SerializeScene(const SceneAssets& scene) {
  std::string out = "scene v1\n";
  auto append_cloud = [&out](const PointCloud& cloud) {
    out += "cloud ";
    out += CloudLabelName(cloud.label);
    out += ' ';
    out += std::to_string(cloud.size());
    out += '\n';
    for (size_t i = 0; i < cloud.size(); ++i) {
      for (int a = 0; a < 3; ++a) {
        internal::AppendDouble(&out, cloud.points[i][a]);
        out += ' ';
      }
      for (int a = 0; a < 3; ++a) {
        internal::AppendDouble(&out, cloud.colors[i][a]);
        out += a == 2 ? '\n' : ' ';
      }
    }
  };
  append_cloud(scene.object());
  append_cloud(scene.hand());
  if (scene.background()) append_cloud(*scene.background());
  return out;
}

void SaveScene(const SceneAssets& scene, const std::filesystem::path& path) {
  internal::WriteFile(path, SerializeScene(scene));
}

std::vector<GraspCandidate> ParseGrasps(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.Next(&line) || SplitFields(line) !=
                                 std::vector<std::string_view>{"grasps", "v1"}) {
    throw Error(ErrorKind::kParseError, "missing 'grasps v1' header");
  }
  std::vector<GraspCandidate> grasps;
  while (reader.Next(&line)) {
    const auto f = SplitFields(line);
    if (f.size() != 17) {
      throw Error(ErrorKind::kParseError,
                  "line " + std::to_string(reader.line_number()) +
                      ": expected 16 pose numbers and a score");
    }
    std::array<double, 16> m;
    for (int i = 0; i < 16; ++i) m[i] = ParseDouble(f[i], "grasp pose");
    const double score = ParseDouble(f[16], "grasp score");
    for (double v : m) {
      if (!std::isfinite(v)) {
        throw Error(ErrorKind::kNonFiniteCoordinate, "non-finite grasp pose");
      }
    }
    if (!std::isfinite(score)) {
      throw Error(ErrorKind::kParseError, "non-finite grasp score");
    }
    grasps.push_back(GraspCandidate{Pose::FromRowMajor(m), score});
  }
  return grasps;
}

std::vector<GraspCandidate> LoadGrasps(const std::filesystem::path& path) {
  return ParseGrasps(internal::ReadFile(path));
}

std::string SerializeGrasps(std::span<const GraspCandidate> grasps) {
  std::string out = "grasps v1\n";
  for (const GraspCandidate& g : grasps) {
    for (double v : g.pose.ToRowMajor()) {
      internal::AppendDouble(&out, v);
      out += ' ';
    }
    internal::AppendDouble(&out, g.score);
    out += '\n';
  }
  return out;
}

PointCloud ParsePlyCloud(std::string_view text, CloudLabel label) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.Next(&line) || line.substr(0, 3) != "ply") {
    throw Error(ErrorKind::kParseError, "missing 'ply' magic");
  }
  long long vertex_count = -1;
  bool in_vertex = false;
  std::vector<std::pair<std::string, std::string>> properties;  // type, name
  while (true) {
    if (!reader.Next(&line)) {
      throw Error(ErrorKind::kParseError, "PLY header not terminated");
    }
    const auto f = SplitFields(line);
    if (f.empty()) continue;
    if (f[0] == "end_header") break;
    if (f[0] == "format") {
      if (f.size() < 2 || f[1] != "ascii") {
        throw Error(ErrorKind::kParseError, "only ASCII PLY is supported");
      }
    } else if (f[0] == "element" && f.size() == 3) {
      in_vertex = f[1] == "vertex";
      if (in_vertex) vertex_count = internal::ParseInt(f[2], "vertex count");
    } else if (f[0] == "property" && in_vertex && f.size() == 3) {
      properties.emplace_back(std::string(f[1]), std::string(f[2]));
    }
  }
  if (vertex_count < 0) {
    throw Error(ErrorKind::kParseError, "PLY has no vertex element");
  }
  auto find = [&properties](std::string_view name) -> int {
    for (size_t i = 0; i < properties.size(); ++i) {
      if (properties[i].second == name) return static_cast<int>(i);
    }
    return -1;
  };
  const int ix = find("x"), iy = find("y"), iz = find("z");
  const int ir = find("red"), ig = find("green"), ib = find("blue");
  if (ix < 0 || iy < 0 || iz < 0) {
    throw Error(ErrorKind::kParseError, "PLY vertex lacks x/y/z");
  }
  const bool has_color = ir >= 0 && ig >= 0 && ib >= 0;
  const bool integer_color =
      has_color && properties[ir].first != "float" &&
      properties[ir].first != "double" && properties[ir].first != "float32";

  PointCloud cloud;
  cloud.label = label;
  for (long long v = 0; v < vertex_count; ++v) {
    if (!reader.Next(&line)) {
      throw Error(ErrorKind::kParseError, "PLY vertex list truncated");
    }
    const auto f = SplitFields(line);
    if (f.size() < properties.size()) {
      throw Error(ErrorKind::kParseError, "PLY vertex has too few fields");
    }
    cloud.points.emplace_back(ParseDouble(f[ix], "x"), ParseDouble(f[iy], "y"),
                              ParseDouble(f[iz], "z"));
    Vec3 color(0.5, 0.5, 0.5);
    if (has_color) {
      color = Vec3(ParseDouble(f[ir], "red"), ParseDouble(f[ig], "green"),
                   ParseDouble(f[ib], "blue"));
      if (integer_color) color /= 255.0;
    }
    cloud.colors.push_back(color);
  }
  ValidateCloud(cloud, label != CloudLabel::kBackground);
  return cloud;
}

PointCloud LoadPlyCloud(const std::filesystem::path& path, CloudLabel label) {
  return ParsePlyCloud(internal::ReadFile(path), label);
}

}  // namespace h2r
