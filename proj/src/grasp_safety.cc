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

#include "h2r/grasp_safety.h"

#include "h2r/error.h"
#include "h2r/spatial_index.h"
#include "text_util.h"

namespace h2r {
namespace {

template <typename DistanceFn>
std::vector<SafetyVerdict> Classify(std::span<const GraspCandidate> grasps,
                                    double safety_distance,
                                    DistanceFn&& distance) {
  std::vector<SafetyVerdict> verdicts;
  verdicts.reserve(grasps.size());
  for (size_t i = 0; i < grasps.size(); ++i) {
    const double d = distance(grasps[i].pose.translation());
    verdicts.push_back(SafetyVerdict{i, d > safety_distance, d});
  }
  return verdicts;
}

}  // namespace

Vec3 HandPointInGraspFrame(const Pose& grasp, const Vec3& hand_point) {
  return grasp.inverse() * hand_point;
}

std::vector<SafetyVerdict> FilterUnsafeGrasps(
    std::span<const GraspCandidate> grasps, const PointCloud& hand,
    double safety_distance) {
  const VoxelGridIndex index(hand.points);
  return Classify(grasps, safety_distance,
                  [&index](const Vec3& p) { return index.MinDistance(p); });
}

std::vector<SafetyVerdict> FilterUnsafeGrasps(
    std::span<const GraspCandidate> grasps, const SceneAssets& scene,
    double safety_distance) {
  return Classify(grasps, safety_distance,
                  [&scene](const Vec3& p) { return scene.HandDistance(p); });
}

size_t SelectGrasp(std::span<const GraspCandidate> grasps,
                   std::span<const SafetyVerdict> verdicts) {
  bool found = false;
  size_t best = 0;
  for (const SafetyVerdict& v : verdicts) {
    if (!v.safe) continue;
    if (!found || grasps[v.grasp_index].score > grasps[best].score ||
        (grasps[v.grasp_index].score == grasps[best].score &&
         v.grasp_index < best)) {
      best = v.grasp_index;
      found = true;
    }
  }
  if (!found) {
    throw Error(ErrorKind::kNoSafeGrasp,
                "all " + std::to_string(verdicts.size()) +
                    " grasp candidates are within the safety distance of the "
                    "hand");
  }
  return best;
}

std::string VerdictsToCsv(std::span<const SafetyVerdict> verdicts) {
  std::string out = "grasp_index,safe,min_hand_distance\n";
  for (const SafetyVerdict& v : verdicts) {
    out += std::to_string(v.grasp_index);
    out += v.safe ? ",true," : ",false,";
    internal::AppendDouble(&out, v.min_hand_distance);
    out += '\n';
  }
  return out;
}

}  // namespace h2r
