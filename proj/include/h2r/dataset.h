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

#ifndef H2R_DATASET_H_
#define H2R_DATASET_H_

#include <filesystem>
#include <string>
#include <vector>

#include "h2r/config.h"
#include "h2r/demo_generator.h"
#include "h2r/grasp_safety.h"
#include "h2r/scene.h"

namespace h2r {

// Dataset layout:
//   <out>/dataset.json          index of all trajectories
//   <out>/verdicts.csv          grasp safety verdicts
//   <out>/traj_NNN/trajectory.json
//   <out>/traj_NNN/step_NNN_{rgb.ppm,object_mask.pgm,hand_mask.pgm,depth.bin}
struct GeneratedDataset {
  size_t grasp_index = 0;
  Pose grasp_scene;
  std::vector<SafetyVerdict> verdicts;
  std::vector<Demonstration> demonstrations;
  // Initial poses whose trajectory was infeasible and got redrawn.
  int replaced = 0;
};

// Grasp alignment, safety filtering, grasp selection, initial pose sampling
// and trajectory generation; pure given (scene, grasps, config).
// Infeasible trajectories (clearance or step budget) are replaced by further
// draws of the same sampler, at most 10 * k times.
GeneratedDataset BuildDataset(const SceneAssets& scene,
                              const std::vector<GraspCandidate>& grasps,
                              const RunConfig& config, int workers);

// Writes the layout above; renders every waypoint when write_images is set.
void WriteDataset(const GeneratedDataset& dataset, const SceneAssets& scene,
                  const RunConfig& config, const std::filesystem::path& out,
                  int workers);

struct LoadedDataset {
  std::string object_name;
  Pose grasp_scene;
  std::vector<Demonstration> demonstrations;
};

LoadedDataset LoadDataset(const std::filesystem::path& dir);

std::string DemonstrationToJson(const Demonstration& demo,
                                bool with_image_names);
Demonstration DemonstrationFromJson(std::string_view json);

}  // namespace h2r

#endif  // H2R_DATASET_H_
