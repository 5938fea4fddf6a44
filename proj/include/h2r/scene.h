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

#ifndef H2R_SCENE_H_
#define H2R_SCENE_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "h2r/geometry.h"
#include "h2r/spatial_index.h"

namespace h2r {

enum class CloudLabel { kObject, kHand, kBackground };

std::string_view CloudLabelName(CloudLabel label);
std::optional<CloudLabel> ParseCloudLabel(std::string_view name);

// Metric point cloud with per-point RGB in [0, 1].
struct PointCloud {
  CloudLabel label = CloudLabel::kObject;
  std::vector<Vec3> points;
  std::vector<Vec3> colors;

  size_t size() const { return points.size(); }
};

// Object, hand and optional background clouds of one handover scene.
// Immutable once built; owns nearest-distance indices used by clearance and
// safety queries.
class SceneAssets {
 public:
  // Validates the clouds: object and hand non-empty, coordinates finite,
  // colors in [0, 1]. Throws EmptyCloud / NonFiniteCoordinate / ParseError.
  SceneAssets(PointCloud object, PointCloud hand,
              std::optional<PointCloud> background = std::nullopt);

  const PointCloud& object() const { return object_; }
  const PointCloud& hand() const { return hand_; }
  const std::optional<PointCloud>& background() const { return background_; }

  const Vec3& object_mean() const { return object_mean_; }
  const Vec3& hand_centroid() const { return hand_centroid_; }

  // Exact distance from `p` to the union of object and hand points.
  double ClearanceDistance(const Vec3& p) const {
    return clearance_index_->MinDistance(p);
  }
  // Exact distance from `p` to the hand points.
  double HandDistance(const Vec3& p) const {
    return hand_index_->MinDistance(p);
  }

 private:
  PointCloud object_;
  PointCloud hand_;
  std::optional<PointCloud> background_;
  Vec3 object_mean_;
  Vec3 hand_centroid_;
  std::shared_ptr<const VoxelGridIndex> clearance_index_;
  std::shared_ptr<const VoxelGridIndex> hand_index_;
};

// Scored grasp hypothesis; the pose is in the object-centered frame.
struct GraspCandidate {
  Pose pose;
  double score = 0.0;
};

// Direction of the grasp alignment offset.
//   kToScene: object-centered grasp -> scene frame (adds the object mean).
//   kSubtractMean: subtracts the object mean from the grasp translation
//     (scene-frame grasp -> object-centered frame).
enum class AlignDirection { kToScene, kSubtractMean };

// Pure translation offset by the object mean; rotation is unchanged.
Pose AlignGraspToScene(const GraspCandidate& grasp, const SceneAssets& scene,
                       AlignDirection direction = AlignDirection::kToScene);

// Exact minimum distance from `p` to the union of `clouds`.
double MinDistanceToClouds(const Vec3& p,
                           std::span<const PointCloud* const> clouds);

// Text scene format:
//   scene v1
//   cloud <object|hand|background> <N>
//   x y z r g b        (N lines)
SceneAssets LoadScene(const std::filesystem::path& path);
SceneAssets ParseScene(std::string_view text);
std::string SerializeScene(const SceneAssets& scene);
void SaveScene(const SceneAssets& scene, const std::filesystem::path& path);

// Grasp format:
//   grasps v1
//   m00 m01 ... m33 score   (16 row-major pose numbers + score per line)
std::vector<GraspCandidate> LoadGrasps(const std::filesystem::path& path);
std::vector<GraspCandidate> ParseGrasps(std::string_view text);
std::string SerializeGrasps(std::span<const GraspCandidate> grasps);

// ASCII PLY with x, y, z and optional red, green, blue vertex properties.
// Integer color properties are scaled from [0, 255].
PointCloud LoadPlyCloud(const std::filesystem::path& path, CloudLabel label);
PointCloud ParsePlyCloud(std::string_view text, CloudLabel label);

}  // namespace h2r

#endif  // H2R_SCENE_H_
