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

#ifndef H2R_CLI_H_
#define H2R_CLI_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "h2r/rollout.h"

namespace h2r {

// `generate`: dataset from the scene and grasps named in the config.
void CmdGenerate(const std::filesystem::path& config_path,
                 const std::filesystem::path& out_dir, int workers);

// `rollout`: one episode per starting position (the first `starts`
// trajectories of the dataset) with policy oracle | ibvs_mask | zero.
// Writes reports.jsonl and summary.csv; returns the per-episode reports.
std::vector<RolloutReport> CmdRollout(const std::filesystem::path& config_path,
                                      const std::filesystem::path& dataset_dir,
                                      const std::string& policy_name,
                                      const std::filesystem::path& out_dir,
                                      int workers);

// `fixture`: synthetic scene, grasps and config.
void CmdFixture(const std::string& name, uint64_t seed,
                const std::filesystem::path& out_dir);

// Entry point for the h2r binary. Exit codes: 0 ok, 1 module error,
// 2 usage error. Errors are reported as a single JSON line on stderr.
int RunCli(int argc, char** argv);

}  // namespace h2r

#endif  // H2R_CLI_H_
