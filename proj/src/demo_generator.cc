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

#include "h2r/demo_generator.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "h2r/error.h"

namespace h2r {
namespace {

void Require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::kConfigError, message);
}

bool SamePose(const Pose& a, const Pose& b) {
  return (a.translation() - b.translation()).norm() < 1e-12 &&
         AngularDistance(a.rotation(), b.rotation()) < 1e-12;
}

int StepsFor(double amount, double bound) {
  if (amount <= 1e-12) return 0;
  return static_cast<int>(std::ceil(amount / bound - 1e-12));
}

}  // namespace

void SamplerConfig::Validate() const {
  Require(k >= 1, "sampler.k must be >= 1");
  Require(radius > 0.0, "sampler.radius must be positive");
  Require(alpha_min > 0.0 && alpha_min < std::numbers::pi,
          "sampler.alpha_min must be in (0, 180) degrees");
  Require(theta_offset_range >= 0.0, "sampler.theta_offset_range must be >= 0");
  Require(theta_max > 0.0 && theta_max <= std::numbers::pi,
          "sampler.theta_max must be in (0, 180] degrees");
  Require(d_min > 0.0, "sampler.d_min must be positive");
  Require(max_attempts_per_pose >= 1, "sampler.max_attempts must be >= 1");
}

void TrajectoryConfig::Validate() const {
  Require(pregrasp_offset > 0.0 && pregrasp_offset < refine_distance,
          "trajectory requires 0 < s < d");
  Require(facing_tolerance >= 0.0, "trajectory.phi must be >= 0");
  Require(d_min > 0.0, "trajectory.d_min must be positive");
  Require(max_steps >= 1, "trajectory.max_steps must be >= 1");
  Require(step_translation > 0.0, "trajectory.step_translation must be > 0");
  Require(step_rotation > 0.0, "trajectory.step_rotation must be > 0");
}

std::string_view PhaseName(Phase phase) {
  switch (phase) {
    case Phase::kAlign:
      return "align";
    case Phase::kTranslate:
      return "translate";
    case Phase::kRefine:
      return "refine";
  }
  return "unknown";
}

Pose ComputePregrasp(const Pose& grasp, double offset) {
  return Pose(grasp.rotation(),
              grasp.translation() - offset * grasp.rotation().axis_z());
}

Rotation FacingRotation(const Vec3& position, const Vec3& target,
                        const Rotation& reference) {
  const Vec3 forward = target - position;
  if (forward.norm() <= 1e-12) {
    throw Error(ErrorKind::kZeroVector, "camera coincides with its target");
  }
  const Vec3 dir = forward.normalized();
  const Vec3 up = reference.axis_y();
  if (up.cross(dir).norm() < 1e-6) {
    return LookRotation(dir, reference.axis_x());
  }
  return LookRotation(dir, up);
}

InitialPoseSampler::InitialPoseSampler(const Pose& grasp_scene,
                                       const SceneAssets& scene,
                                       const Vec3& hand_centroid,
                                       const SamplerConfig& config)
    : grasp_(grasp_scene),
      scene_(scene),
      hand_centroid_(hand_centroid),
      config_(config),
      rng_(config.seed) {
  config_.Validate();
}

Pose InitialPoseSampler::Next() {
  const Vec3& object_center = scene_.object_mean();
  const Vec3 hand_dir = hand_centroid_ - object_center;
  const Vec3 approach = grasp_.rotation().axis_z();
  const double cos_theta_max = std::cos(config_.theta_max);

  for (int attempt = 0; attempt < config_.max_attempts_per_pose; ++attempt) {
    // Every attempt consumes the same five draws so the stream stays aligned.
    Vec3 dir(normal_(rng_), normal_(rng_), normal_(rng_));
    const double theta_x = config_.theta_offset_range * (2.0 * uniform_(rng_) - 1.0);
    const double theta_y = config_.theta_offset_range * (2.0 * uniform_(rng_) - 1.0);
    if (dir.norm() < 1e-12) continue;
    dir.normalize();

    const Vec3 position = grasp_.translation() + config_.radius * dir;
    const Vec3 to_camera = position - object_center;
    if (to_camera.norm() < 1e-9) continue;
    if (hand_dir.norm() > 1e-9 &&
        AngleBetween(hand_dir, to_camera) <= config_.alpha_min) {
      continue;
    }

    const Rotation facing = FacingRotation(position, object_center, grasp_.rotation());
    const Rotation rotation =
        facing * Rotation::AboutX(theta_x) * Rotation::AboutY(theta_y);
    if (rotation.axis_z().dot(approach) < cos_theta_max) continue;
    if (scene_.ClearanceDistance(position) <= config_.d_min) continue;
    return Pose(rotation, position);
  }
  throw Error(ErrorKind::kSamplingExhausted,
              "no admissible initial pose after " +
                  std::to_string(config_.max_attempts_per_pose) + " attempts");
}

std::vector<Pose> SampleInitialPoses(const Pose& grasp_scene,
                                     const SceneAssets& scene,
                                     const Vec3& hand_centroid,
                                     const SamplerConfig& config) {
  InitialPoseSampler sampler(grasp_scene, scene, hand_centroid, config);
  std::vector<Pose> poses;
  poses.reserve(config.k);
  for (int i = 0; i < config.k; ++i) poses.push_back(sampler.Next());
  return poses;
}

Demonstration GenerateTrajectory(const Pose& initial, const Pose& grasp_scene,
                                 const SceneAssets& scene,
                                 const TrajectoryConfig& config) {
  config.Validate();
  Demonstration demo;
  demo.grasp = grasp_scene;
  demo.pregrasp = ComputePregrasp(grasp_scene, config.pregrasp_offset);
  const Vec3& target = scene.object_mean();
  const Vec3 goal = demo.pregrasp.translation();

  auto push = [&](const Pose& pose, Phase phase) {
    const double clearance = scene.ClearanceDistance(pose.translation());
    if (clearance <= config.d_min) {
      throw Error(ErrorKind::kClearanceViolation,
                  "waypoint " + std::to_string(demo.waypoints.size()) +
                      " is " + std::to_string(clearance) +
                      " m from the hand/object clouds");
    }
    if (static_cast<int>(demo.waypoints.size()) >= config.max_steps) {
      throw Error(ErrorKind::kStepBudgetExceeded,
                  "pregrasp not reachable within " +
                      std::to_string(config.max_steps) + " steps");
    }
    demo.waypoints.push_back(Waypoint{pose, phase, false});
  };

  push(initial, Phase::kAlign);
  if (SamePose(initial, demo.pregrasp)) {
    demo.waypoints.back().pose = demo.pregrasp;
    demo.waypoints.back().is_pregrasp = true;
    return demo;
  }

  // Align: rotate in place until the optical axis hits the object centroid.
  Vec3 position = initial.translation();
  const Rotation facing = FacingRotation(position, target, grasp_scene.rotation());
  const int align_steps =
      StepsFor(AngularDistance(initial.rotation(), facing), config.step_rotation);
  for (int j = 1; j <= align_steps; ++j) {
    const double u = static_cast<double>(j) / align_steps;
    push(Pose(Slerp(initial.rotation(), facing, u), position), Phase::kAlign);
  }
  Rotation rotation = align_steps > 0 ? facing : initial.rotation();

  // Translate: straight toward the pregrasp, re-aiming at the object.
  while ((goal - position).norm() >= config.refine_distance) {
    const Vec3 delta = goal - position;
    const Vec3 dir = delta.normalized();
    double length = std::min(config.step_translation, delta.norm());
    Vec3 next_position;
    Rotation next_rotation;
    while (true) {
      next_position = position + length * dir;
      next_rotation = rotation;
      const double facing_error =
          AngleBetween(rotation.axis_z(), target - next_position);
      if (facing_error > config.facing_tolerance) {
        next_rotation =
            FacingRotation(next_position, target, grasp_scene.rotation());
      }
      if (AngularDistance(rotation, next_rotation) <= config.step_rotation) break;
      length *= 0.5;
      if (length < 1e-6) {
        throw Error(ErrorKind::kClearanceViolation,
                    "approach passes through the object centroid");
      }
    }
    position = next_position;
    rotation = next_rotation;
    push(Pose(rotation, position), Phase::kTranslate);
  }

  // Refine: linear position and SLERP rotation onto the pregrasp.
  const Vec3 start = position;
  const Rotation start_rotation = rotation;
  const int refine_steps = std::max(
      {StepsFor((goal - start).norm(), config.step_translation),
       StepsFor(AngularDistance(start_rotation, demo.pregrasp.rotation()),
                config.step_rotation),
       1});
  for (int j = 1; j < refine_steps; ++j) {
    const double u = static_cast<double>(j) / refine_steps;
    push(Pose(Slerp(start_rotation, demo.pregrasp.rotation(), u),
              (1.0 - u) * start + u * goal),
         Phase::kRefine);
  }
  push(demo.pregrasp, Phase::kRefine);
  demo.waypoints.back().is_pregrasp = true;
  demo.actions = ActionsFromWaypoints(demo.waypoints);
  return demo;
}

std::vector<EulerAction> ActionsFromWaypoints(
    std::span<const Waypoint> waypoints) {
  std::vector<EulerAction> actions;
  for (size_t i = 0; i + 1 < waypoints.size(); ++i) {
    actions.push_back(EulerAction::FromPose(
        RelativeTransform(waypoints[i].pose, waypoints[i + 1].pose)));
  }
  return actions;
}

}  // namespace h2r
