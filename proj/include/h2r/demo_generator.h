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

#ifndef H2R_DEMO_GENERATOR_H_
#define H2R_DEMO_GENERATOR_H_

#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "h2r/geometry.h"
#include "h2r/scene.h"

namespace h2r {

inline constexpr double kDegree = std::numbers::pi / 180.0;

// Initial hand-eye pose sampling around a grasp.
struct SamplerConfig {
  int k = 15;                                  // poses per grasp
  double radius = 0.7;                         // distance from the grasp, m
  double alpha_min = 60.0 * kDegree;           // hand / camera separation
  double theta_offset_range = 20.0 * kDegree;  // +/- view perturbation
  double theta_max = 100.0 * kDegree;          // max view vs approach angle
  double d_min = 0.1;                          // clearance to hand and object
  uint64_t seed = 0;
  int max_attempts_per_pose = 10000;

  // Throws ConfigError when a field is out of range.
  void Validate() const;
};

struct TrajectoryConfig {
  double pregrasp_offset = 0.3;         // s: pregrasp back-off along grasp z
  double refine_distance = 0.5;         // d: translate -> refine switch
  double facing_tolerance = 0.0;        // phi: re-aim when facing error > phi
  double d_min = 0.1;                   // clearance for every waypoint
  int max_steps = 30;                   // waypoints per demonstration
  double step_translation = 0.05;       // per-step bound, m
  double step_rotation = 10.0 * kDegree;  // per-step bound, rad

  void Validate() const;
};

enum class Phase { kAlign, kTranslate, kRefine };

std::string_view PhaseName(Phase phase);

struct Waypoint {
  Pose pose;
  Phase phase = Phase::kAlign;
  bool is_pregrasp = false;
};

struct Demonstration {
  std::vector<Waypoint> waypoints;
  Pose grasp;
  Pose pregrasp;
  // actions[i] takes waypoints[i] to waypoints[i + 1] in waypoints[i]'s frame.
  std::vector<EulerAction> actions;
};

// Backs off `offset` meters along the grasp z-axis; rotation unchanged.
Pose ComputePregrasp(const Pose& grasp, double offset);

// Camera rotation at `position` whose z-axis points at `target`. The
// reference (grasp) y-axis is used as the up hint so the roll matches the
// grasp; its x-axis is the fallback when the view is parallel to y.
Rotation FacingRotation(const Vec3& position, const Vec3& target,
                        const Rotation& reference);

// Seeded rejection sampler of initial hand-eye poses. Each candidate lies
// on the radius sphere around the grasp position, sits on the far side of
// the object from the hand, looks at the object centroid up to a random
// x/y offset, stays within theta_max of the grasp approach axis and clears
// the object and hand clouds by d_min.
class InitialPoseSampler {
 public:
  InitialPoseSampler(const Pose& grasp_scene, const SceneAssets& scene,
                     const Vec3& hand_centroid, const SamplerConfig& config);

  // Next accepted pose. Throws SamplingExhausted after
  // max_attempts_per_pose rejections.
  Pose Next();

 private:
  Pose grasp_;
  const SceneAssets& scene_;
  Vec3 hand_centroid_;
  SamplerConfig config_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

// Exactly config.k poses from a fresh sampler seeded with config.seed.
std::vector<Pose> SampleInitialPoses(const Pose& grasp_scene,
                                     const SceneAssets& scene,
                                     const Vec3& hand_centroid,
                                     const SamplerConfig& config);

// Three-phase reach from `initial` to the pregrasp of `grasp_scene`:
//   align      rotate in place until facing the object centroid,
//   translate  straight-line approach re-aiming at the object every step,
//              until strictly inside refine_distance of the pregrasp,
//   refine     linear position + SLERP rotation onto the pregrasp pose.
// Throws ClearanceViolation or StepBudgetExceeded.
Demonstration GenerateTrajectory(const Pose& initial, const Pose& grasp_scene,
                                 const SceneAssets& scene,
                                 const TrajectoryConfig& config);

// Step-to-next-waypoint relative transforms.
std::vector<EulerAction> ActionsFromWaypoints(
    std::span<const Waypoint> waypoints);

}  // namespace h2r

#endif  // H2R_DEMO_GENERATOR_H_
