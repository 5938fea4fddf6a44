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

#include "h2r/dataset.h"

#include <cstdio>
#include <optional>

#include "h2r/error.h"
#include "h2r/image_io.h"
#include "h2r/renderer.h"
#include "json.hpp"
#include "parallel.h"
#include "text_util.h"

namespace h2r {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kDatasetFormat = "h2r-dataset v1";

Json PoseJson(const Pose& pose) { return Json(pose.ToRowMajor()); }

Pose PoseFromJson(const Json& j) {
  const auto values = j.get<std::vector<double>>();
  if (values.size() != 16) {
    throw Error(ErrorKind::kParseError, "pose must have 16 numbers");
  }
  return Pose::FromRowMajor(std::span<const double, 16>(values.data(), 16));
}

Phase PhaseFromName(std::string_view name) {
  for (Phase p : {Phase::kAlign, Phase::kTranslate, Phase::kRefine}) {
    if (PhaseName(p) == name) return p;
  }
  throw Error(ErrorKind::kParseError, "unknown phase '" + std::string(name) + "'");
}

std::string Numbered(std::string_view prefix, size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*s%03zu", static_cast<int>(prefix.size()),
                prefix.data(), i);
  return buf;
}

}  // namespace

GeneratedDataset BuildDataset(const SceneAssets& scene,
                              const std::vector<GraspCandidate>& grasps,
                              const RunConfig& config, int workers) {
  config.Validate();
  GeneratedDataset out;
  std::vector<GraspCandidate> aligned;
  aligned.reserve(grasps.size());
  for (const GraspCandidate& g : grasps) {
    aligned.push_back(GraspCandidate{AlignGraspToScene(g, scene), g.score});
  }
  out.verdicts = FilterUnsafeGrasps(aligned, scene, config.d_s);
  out.grasp_index = SelectGrasp(aligned, out.verdicts);
  out.grasp_scene = aligned[out.grasp_index].pose;

  const SamplerConfig sampler_config = config.sampler_config();
  const TrajectoryConfig trajectory_config = config.trajectory_config();
  InitialPoseSampler sampler(out.grasp_scene, scene, scene.hand_centroid(),
                             sampler_config);
  std::vector<Pose> starts;
  for (int i = 0; i < sampler_config.k; ++i) starts.push_back(sampler.Next());

  std::vector<std::optional<Demonstration>> demos(starts.size());
  const int max_replacements = 10 * sampler_config.k;
  while (true) {
    std::vector<size_t> pending;
    for (size_t i = 0; i < demos.size(); ++i) {
      if (!demos[i]) pending.push_back(i);
    }
    if (pending.empty()) break;
    std::vector<std::optional<Error>> failures(pending.size());
    internal::ParallelFor(pending.size(), workers, [&](size_t j) {
      const size_t i = pending[j];
      try {
        demos[i] = GenerateTrajectory(starts[i], out.grasp_scene, scene,
                                      trajectory_config);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kClearanceViolation &&
            e.kind() != ErrorKind::kStepBudgetExceeded) {
          throw;
        }
        failures[j] = e;
      }
    });
    // Redraw serially in index order so the result is worker-independent.
    for (size_t j = 0; j < pending.size(); ++j) {
      if (!failures[j]) continue;
      if (out.replaced >= max_replacements) throw *failures[j];
      starts[pending[j]] = sampler.Next();
      ++out.replaced;
    }
  }
  for (auto& d : demos) out.demonstrations.push_back(std::move(*d));
  return out;
}

std::string DemonstrationToJson(const Demonstration& demo,
                                bool with_image_names) {
  Json j;
  j["grasp"] = PoseJson(demo.grasp);
  j["pregrasp"] = PoseJson(demo.pregrasp);
  Json waypoints = Json::array();
  for (size_t i = 0; i < demo.waypoints.size(); ++i) {
    const Waypoint& w = demo.waypoints[i];
    Json entry;
    entry["pose"] = PoseJson(w.pose);
    entry["phase"] = PhaseName(w.phase);
    entry["is_pregrasp"] = w.is_pregrasp;
    if (with_image_names) {
      const std::string stem = Numbered("step_", i);
      entry["rgb"] = stem + "_rgb.ppm";
      entry["object_mask"] = stem + "_object_mask.pgm";
      entry["hand_mask"] = stem + "_hand_mask.pgm";
      entry["depth"] = stem + "_depth.bin";
    }
    waypoints.push_back(std::move(entry));
  }
  j["waypoints"] = std::move(waypoints);
  Json actions = Json::array();
  for (const EulerAction& a : demo.actions) actions.push_back(a.ToArray());
  j["actions"] = std::move(actions);
  return j.dump(1) + "\n";
}

Demonstration DemonstrationFromJson(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    Demonstration demo;
    demo.grasp = PoseFromJson(j.at("grasp"));
    demo.pregrasp = PoseFromJson(j.at("pregrasp"));
    for (const Json& w : j.at("waypoints")) {
      demo.waypoints.push_back(Waypoint{PoseFromJson(w.at("pose")),
                                        PhaseFromName(w.at("phase").get<std::string>()),
                                        w.at("is_pregrasp").get<bool>()});
    }
    for (const Json& a : j.at("actions")) {
      const auto v = a.get<std::vector<double>>();
      if (v.size() != 6) {
        throw Error(ErrorKind::kParseError, "action must have 6 numbers");
      }
      demo.actions.push_back(
          EulerAction::FromArray(std::span<const double, 6>(v.data(), 6)));
    }
    if (demo.waypoints.empty() ||
        demo.actions.size() + 1 != demo.waypoints.size()) {
      throw Error(ErrorKind::kParseError,
                  "trajectory needs one action per waypoint transition");
    }
    return demo;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParseError, std::string("trajectory json: ") + e.what());
  }
}

void WriteDataset(const GeneratedDataset& dataset, const SceneAssets& scene,
                  const RunConfig& config, const std::filesystem::path& out,
                  int workers) {
  std::filesystem::create_directories(out);
  internal::WriteFile(out / "verdicts.csv", VerdictsToCsv(dataset.verdicts));

  const SplatParams splat = config.splat_params();
  internal::ParallelFor(dataset.demonstrations.size(), workers, [&](size_t i) {
    const Demonstration& demo = dataset.demonstrations[i];
    const std::filesystem::path dir = out / Numbered("traj_", i);
    std::filesystem::create_directories(dir);
    internal::WriteFile(dir / "trajectory.json",
                        DemonstrationToJson(demo, config.write_images));
    if (!config.write_images) return;
    for (size_t s = 0; s < demo.waypoints.size(); ++s) {
      const RenderedFrame frame =
          Render(scene, demo.waypoints[s].pose, config.camera, splat, 1);
      WriteFrame(frame, dir, Numbered("step_", s));
    }
  });

  Json index;
  index["format"] = kDatasetFormat;
  index["object"] = config.object_name;
  index["seed"] = config.seed;
  index["grasp_index"] = dataset.grasp_index;
  index["grasp"] = PoseJson(dataset.grasp_scene);
  index["replaced_initial_poses"] = dataset.replaced;
  Json trajectories = Json::array();
  for (size_t i = 0; i < dataset.demonstrations.size(); ++i) {
    const Demonstration& demo = dataset.demonstrations[i];
    Json entry;
    entry["dir"] = Numbered("traj_", i);
    entry["steps"] = demo.waypoints.size();
    entry["initial"] = PoseJson(demo.waypoints.front().pose);
    trajectories.push_back(std::move(entry));
  }
  index["trajectories"] = std::move(trajectories);
  internal::WriteFile(out / "dataset.json", index.dump(1) + "\n");
}

LoadedDataset LoadDataset(const std::filesystem::path& dir) {
  LoadedDataset loaded;
  try {
    const Json index = Json::parse(internal::ReadFile(dir / "dataset.json"));
    if (index.at("format").get<std::string>() != kDatasetFormat) {
      throw Error(ErrorKind::kParseError, "unsupported dataset format");
    }
    loaded.object_name = index.at("object").get<std::string>();
    loaded.grasp_scene = PoseFromJson(index.at("grasp"));
    for (const Json& t : index.at("trajectories")) {
      loaded.demonstrations.push_back(DemonstrationFromJson(internal::ReadFile(
          dir / t.at("dir").get<std::string>() / "trajectory.json")));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParseError, std::string("dataset.json: ") + e.what());
  }
  return loaded;
}

}  // namespace h2r
