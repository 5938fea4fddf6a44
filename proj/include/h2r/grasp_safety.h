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

#ifndef H2R_GRASP_SAFETY_H_
#define H2R_GRASP_SAFETY_H_

#include <span>
#include <string>
#include <vector>

#include "h2r/geometry.h"
#include "h2r/scene.h"

namespace h2r {

// The default distance a grasp must keep from every hand point, meters.
inline constexpr double kDefaultSafetyDistance = 0.1;

struct SafetyVerdict {
  size_t grasp_index = 0;
  bool safe = false;  // min_hand_distance > d_s
  double min_hand_distance = 0.0;
};

// Hand point expressed in the grasp frame: grasp^-1 * p.
Vec3 HandPointInGraspFrame(const Pose& grasp, const Vec3& hand_point);

// A grasp is unsafe when some hand point lies within `safety_distance` of the
// grasp origin. Rigid transforms preserve distance, so the test runs on
// scene-frame positions. Grasp poses and the hand cloud must share a frame.
std::vector<SafetyVerdict> FilterUnsafeGrasps(
    std::span<const GraspCandidate> grasps, const PointCloud& hand,
    double safety_distance);

// Same, reusing the scene's hand index. Grasps must be in the scene frame.
std::vector<SafetyVerdict> FilterUnsafeGrasps(
    std::span<const GraspCandidate> grasps, const SceneAssets& scene,
    double safety_distance);

// Index of the highest-scoring safe grasp; ties go to the lower index.
// Throws NoSafeGrasp when every verdict is unsafe.
size_t SelectGrasp(std::span<const GraspCandidate> grasps,
                   std::span<const SafetyVerdict> verdicts);

// CSV with header "grasp_index,safe,min_hand_distance".
std::string VerdictsToCsv(std::span<const SafetyVerdict> verdicts);

}  // namespace h2r

#endif  // H2R_GRASP_SAFETY_H_
