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

#ifndef H2R_ROLLOUT_H_
#define H2R_ROLLOUT_H_

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "h2r/demo_generator.h"
#include "h2r/geometry.h"
#include "h2r/renderer.h"
#include "h2r/scene.h"

namespace h2r {

struct PolicyDecision {
  EulerAction action;
  double confidence = 0.0;  // pregrasp confidence in [0, 1]
};

// Closed-loop reaching policy: (background-free image, masks) -> decision.
// Implementations may keep per-episode state; the harness clones one
// instance per episode and never shares it across threads.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::string_view name() const = 0;
  virtual PolicyDecision Decide(const RenderedFrame& masked_frame) = 0;
  virtual std::unique_ptr<Policy> Clone() const = 0;
};

struct EpisodeConfig {
  double tau_c = 0.7;
  int max_steps = 30;  // policy queries
  double success_band_low = 0.35;
  double success_band_high = 0.45;
  double center_angle_max = 10.0 * kDegree;
  double d_s = 0.1;
  // Actions are clamped to the generator's per-step bounds.
  double step_translation = 0.05;
  double step_rotation = 10.0 * kDegree;
  // Spacing of the straight-line grasp-approach safety samples.
  double safety_sample_spacing = 0.005;

  void Validate() const;
};

enum class TerminatedBy { kPolicyCls, kStepBudget, kAborted };

std::string_view TerminatedByName(TerminatedBy t);

struct RolloutReport {
  double final_distance = 0.0;  // to the grasp position
  bool centered = false;
  bool safe = false;
  bool in_success_band = false;
  int steps = 0;
  TerminatedBy terminated_by = TerminatedBy::kStepBudget;
  Pose final_pose;
};

struct LossWeights {
  double lambda_t = 100.0;
  double lambda_r = 100.0;
};

struct LossTerms {
  double translation = 0.0;     // MSE over tx, ty, tz
  double rotation = 0.0;        // MSE over rx, ry, rz
  double classification = 0.0;  // (confidence - cls)^2
  double total = 0.0;           // lambda_t * T + lambda_r * R + C
};

// Pregrasp reached iff confidence >= tau_c (boundary inclusive).
bool ClassifyPregrasp(double confidence, double tau_c);

LossTerms HandoverLossTerms(const PolicyDecision& prediction,
                            const EulerAction& target_action, int target_cls,
                            const LossWeights& weights);
double HandoverLoss(const PolicyDecision& prediction,
                    const EulerAction& target_action, int target_cls,
                    const LossWeights& weights);

// Applies `action` as a relative transform in the current camera frame,
// clamped to the per-step translation and rotation bounds.
Pose ApplyAction(const Pose& current, const EulerAction& action,
                 double max_translation, double max_rotation);

// True when every sample on the segment [from, to] (spacing `spacing`,
// endpoints included) is farther than `d_s` from the hand.
bool SegmentKeepsClear(const SceneAssets& scene, const Vec3& from,
                       const Vec3& to, double d_s, double spacing);

// Render -> decide -> act loop from `start` until the policy classifies a
// pregrasp or max_steps queries are used. A non-finite action aborts the
// episode as a failed trial; other policy exceptions propagate as
// PolicyFailure.
RolloutReport RunEpisode(const SceneAssets& scene, const Pose& start,
                         Policy& policy, const Pose& grasp_scene,
                         const EpisodeConfig& config,
                         const CameraIntrinsics& intrinsics);

struct EpisodeSpec {
  Pose start;
  std::shared_ptr<const Policy> prototype;
};

// Independent episodes on `workers` threads; each episode clones its policy.
std::vector<RolloutReport> RunEpisodes(const SceneAssets& scene,
                                       std::span<const EpisodeSpec> episodes,
                                       const Pose& grasp_scene,
                                       const EpisodeConfig& config,
                                       const CameraIntrinsics& intrinsics,
                                       int workers);

struct RolloutSummary {
  int trials = 0;
  double mean_distance = 0.0;
  double std_distance = 0.0;  // population
  int safe = 0;
  int centered = 0;
  int in_band = 0;
  int policy_cls = 0;
};

RolloutSummary AggregateReports(std::span<const RolloutReport> reports);

// "0.37 ± 0.10, 10/10, 10/10"
std::string FormatSummary(const RolloutSummary& summary);

}  // namespace h2r

#endif  // H2R_ROLLOUT_H_
