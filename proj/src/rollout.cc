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

#include "h2r/rollout.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "h2r/error.h"

namespace h2r {

void EpisodeConfig::Validate() const {
  if (!(tau_c > 0.0 && tau_c < 1.0)) {
    throw Error(ErrorKind::kConfigError, "episode.tau_c must be in (0, 1)");
  }
  if (max_steps < 1) {
    throw Error(ErrorKind::kConfigError, "episode.max_steps must be >= 1");
  }
  if (!(success_band_low < success_band_high)) {
    throw Error(ErrorKind::kConfigError, "episode success band is empty");
  }
  if (!(d_s > 0.0 && safety_sample_spacing > 0.0 && step_translation > 0.0 &&
        step_rotation > 0.0 && center_angle_max > 0.0)) {
    throw Error(ErrorKind::kConfigError, "episode bounds must be positive");
  }
}

std::string_view TerminatedByName(TerminatedBy t) {
  switch (t) {
    case TerminatedBy::kPolicyCls:
      return "policy_cls";
    case TerminatedBy::kStepBudget:
      return "step_budget";
    case TerminatedBy::kAborted:
      return "aborted";
  }
  return "unknown";
}

bool ClassifyPregrasp(double confidence, double tau_c) {
  return confidence >= tau_c;
}

LossTerms HandoverLossTerms(const PolicyDecision& prediction,
                            const EulerAction& target_action, int target_cls,
                            const LossWeights& weights) {
  LossTerms terms;
  terms.translation =
      (prediction.action.translation - target_action.translation)
          .squaredNorm() / 3.0;
  terms.rotation =
      (prediction.action.rotation - target_action.rotation).squaredNorm() / 3.0;
  const double c = prediction.confidence - static_cast<double>(target_cls);
  terms.classification = c * c;
  terms.total = weights.lambda_t * terms.translation +
                weights.lambda_r * terms.rotation + terms.classification;
  return terms;
}

double HandoverLoss(const PolicyDecision& prediction,
                    const EulerAction& target_action, int target_cls,
                    const LossWeights& weights) {
  return HandoverLossTerms(prediction, target_action, target_cls, weights).total;
}

Pose ApplyAction(const Pose& current, const EulerAction& action,
                 double max_translation, double max_rotation) {
  Rotation rotation = Rotation::FromEulerXYZ(action.rotation);
  if (rotation.angle() > max_rotation) {
    const Vec3 rv = rotation.ToRotationVector();
    rotation = Rotation::FromRotationVector(rv * (max_rotation / rv.norm()));
  }
  Vec3 translation = action.translation;
  const double length = translation.norm();
  if (length > max_translation) translation *= max_translation / length;
  return current * Pose(rotation, translation);
}

bool SegmentKeepsClear(const SceneAssets& scene, const Vec3& from,
                       const Vec3& to, double d_s, double spacing) {
  const double length = (to - from).norm();
  const int intervals =
      std::max(1, static_cast<int>(std::ceil(length / spacing)));
  for (int i = 0; i <= intervals; ++i) {
    const double u = static_cast<double>(i) / intervals;
    if (scene.HandDistance((1.0 - u) * from + u * to) <= d_s) return false;
  }
  return true;
}

RolloutReport RunEpisode(const SceneAssets& scene, const Pose& start,
                         Policy& policy, const Pose& grasp_scene,
                         const EpisodeConfig& config,
                         const CameraIntrinsics& intrinsics) {
  config.Validate();
  RolloutReport report;
  report.terminated_by = TerminatedBy::kStepBudget;
  report.steps = config.max_steps;
  Pose pose = start;
  for (int step = 1; step <= config.max_steps; ++step) {
    const RenderedFrame frame =
        MaskedInput(Render(scene, pose, intrinsics, SplatParams{}, 1));
    PolicyDecision decision;
    try {
      decision = policy.Decide(frame);
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw Error(ErrorKind::kPolicyFailure,
                  std::string(policy.name()) + " failed: " + e.what());
    }
    if (!decision.action.AllFinite() || !std::isfinite(decision.confidence)) {
      report.terminated_by = TerminatedBy::kAborted;
      report.steps = step;
      break;
    }
    if (ClassifyPregrasp(decision.confidence, config.tau_c)) {
      report.terminated_by = TerminatedBy::kPolicyCls;
      report.steps = step;
      break;
    }
    pose = ApplyAction(pose, decision.action, config.step_translation,
                       config.step_rotation);
  }

  report.final_pose = pose;
  report.final_distance = (pose.translation() - grasp_scene.translation()).norm();
  report.in_success_band = report.final_distance >= config.success_band_low &&
                           report.final_distance <= config.success_band_high;
  const Vec3 to_object = scene.object_mean() - pose.translation();
  report.centered = to_object.norm() > 1e-9 &&
                    AngleBetween(pose.rotation().axis_z(), to_object) <=
                        config.center_angle_max;
  report.safe = report.terminated_by != TerminatedBy::kAborted &&
                SegmentKeepsClear(scene, pose.translation(),
                                  grasp_scene.translation(), config.d_s,
                                  config.safety_sample_spacing);
  return report;
}

std::vector<RolloutReport> RunEpisodes(const SceneAssets& scene,
                                       std::span<const EpisodeSpec> episodes,
                                       const Pose& grasp_scene,
                                       const EpisodeConfig& config,
                                       const CameraIntrinsics& intrinsics,
                                       int workers) {
  std::vector<RolloutReport> reports(episodes.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (size_t i = next++; i < episodes.size(); i = next++) {
      try {
        std::unique_ptr<Policy> policy = episodes[i].prototype->Clone();
        reports[i] = RunEpisode(scene, episodes[i].start, *policy, grasp_scene,
                                config, intrinsics);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int n = std::clamp<int>(workers, 1, std::max<size_t>(1, episodes.size()));
  if (n == 1) {
    work();
  } else {
    std::vector<std::jthread> threads;
    for (int t = 0; t < n; ++t) threads.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

RolloutSummary AggregateReports(std::span<const RolloutReport> reports) {
  RolloutSummary s;
  s.trials = static_cast<int>(reports.size());
  if (reports.empty()) return s;
  double sum = 0.0;
  for (const RolloutReport& r : reports) {
    sum += r.final_distance;
    s.safe += r.safe;
    s.centered += r.centered;
    s.in_band += r.in_success_band;
    s.policy_cls += r.terminated_by == TerminatedBy::kPolicyCls;
  }
  s.mean_distance = sum / s.trials;
  double var = 0.0;
  for (const RolloutReport& r : reports) {
    const double d = r.final_distance - s.mean_distance;
    var += d * d;
  }
  s.std_distance = std::sqrt(var / s.trials);
  return s;
}

std::string FormatSummary(const RolloutSummary& s) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.2f ± %.2f, %d/%d, %d/%d",
                s.mean_distance, s.std_distance, s.safe, s.trials, s.centered,
                s.trials);
  return buf;
}

}  // namespace h2r
