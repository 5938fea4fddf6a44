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

#include "h2r/cli.h"

#include <cstdlib>
#include <iostream>
#include <memory>
#include <mutex>

#include "CLI11.hpp"
#include "h2r/config.h"
#include "h2r/dataset.h"
#include "h2r/error.h"
#include "h2r/fixtures.h"
#include "h2r/policies.h"
#include "json.hpp"
#include "spdlog/sinks/stdout_color_sinks.h"
#include "spdlog/spdlog.h"
#include "text_util.h"

namespace h2r {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void ConfigureLogging() {
  static std::once_flag once;
  std::call_once(once, [] {
    spdlog::set_default_logger(spdlog::stderr_color_mt("h2r"));
    spdlog::set_level(spdlog::level::warn);
    if (const char* level = std::getenv("H2R_LOG")) {
      const std::string value(level);
      if (value == "debug") spdlog::set_level(spdlog::level::debug);
      if (value == "info") spdlog::set_level(spdlog::level::info);
    }
  });
}

void EmitError(std::string_view kind, std::string_view message) {
  Json record;
  record["error"] = kind;
  record["message"] = message;
  std::cerr << record.dump() << std::endl;
}

std::filesystem::path Resolve(const std::filesystem::path& config_path,
                              const std::string& relative) {
  const std::filesystem::path p(relative);
  return p.is_absolute() ? p : config_path.parent_path() / p;
}

std::string ReportLine(const RolloutReport& r, const std::string& object,
                       std::string_view policy, uint64_t seed,
                       const Pose& start) {
  Json j;
  j["scene"] = object;
  j["policy"] = policy;
  j["seed"] = seed;
  j["start"] = start.ToRowMajor();
  j["final_distance"] = r.final_distance;
  j["centered"] = r.centered;
  j["safe"] = r.safe;
  j["in_success_band"] = r.in_success_band;
  j["steps"] = r.steps;
  j["terminated_by"] = TerminatedByName(r.terminated_by);
  j["final_pose"] = r.final_pose.ToRowMajor();
  return j.dump();
}

}  // namespace

void CmdGenerate(const std::filesystem::path& config_path,
                 const std::filesystem::path& out_dir, int workers) {
  ConfigureLogging();
  const RunConfig config = LoadRunConfig(config_path);
  const SceneAssets scene = LoadScene(Resolve(config_path, config.scene_path));
  const auto grasps = LoadGrasps(Resolve(config_path, config.grasps_path));
  spdlog::info("loaded {} object / {} hand points, {} grasps",
               scene.object().size(), scene.hand().size(), grasps.size());
  const GeneratedDataset dataset = BuildDataset(scene, grasps, config, workers);
  spdlog::info("grasp {} selected, {} trajectories ({} initial poses redrawn)",
               dataset.grasp_index, dataset.demonstrations.size(),
               dataset.replaced);
  WriteDataset(dataset, scene, config, out_dir, workers);
}

std::vector<RolloutReport> CmdRollout(const std::filesystem::path& config_path,
                                      const std::filesystem::path& dataset_dir,
                                      const std::string& policy_name,
                                      const std::filesystem::path& out_dir,
                                      int workers) {
  ConfigureLogging();
  if (policy_name != "oracle" && policy_name != "ibvs_mask" &&
      policy_name != "zero") {
    throw UsageError("unknown policy '" + policy_name +
                     "' (expected oracle, ibvs_mask or zero)");
  }
  const RunConfig config = LoadRunConfig(config_path);
  const SceneAssets scene = LoadScene(Resolve(config_path, config.scene_path));
  const LoadedDataset dataset = LoadDataset(dataset_dir);
  const size_t n = std::min<size_t>(config.starts, dataset.demonstrations.size());
  if (n == 0) throw Error(ErrorKind::kParseError, "dataset has no trajectories");

  std::vector<EpisodeSpec> episodes;
  for (size_t i = 0; i < n; ++i) {
    const Demonstration& demo = dataset.demonstrations[i];
    std::shared_ptr<const Policy> policy;
    if (policy_name == "oracle") {
      policy = std::make_shared<OracleReplayPolicy>(demo.actions);
    } else if (policy_name == "ibvs_mask") {
      policy = std::make_shared<IbvsMaskPolicy>(config.ibvs_gains());
    } else {
      policy = std::make_shared<ZeroPolicy>();
    }
    episodes.push_back(EpisodeSpec{demo.waypoints.front().pose, policy});
  }
  const std::vector<RolloutReport> reports =
      RunEpisodes(scene, episodes, dataset.grasp_scene, config.episode_config(),
                  config.camera, workers);

  std::filesystem::create_directories(out_dir);
  std::string jsonl;
  for (size_t i = 0; i < reports.size(); ++i) {
    jsonl += ReportLine(reports[i], dataset.object_name, policy_name,
                        config.seed, episodes[i].start);
    jsonl += '\n';
  }
  internal::WriteFile(out_dir / "reports.jsonl", jsonl);

  const RolloutSummary summary = AggregateReports(reports);
  char row[256];
  std::snprintf(row, sizeof(row), "%s,%s,%.6f,%.6f,%d/%d,%d/%d\n",
                dataset.object_name.c_str(), policy_name.c_str(),
                summary.mean_distance, summary.std_distance, summary.safe,
                summary.trials, summary.centered, summary.trials);
  internal::WriteFile(out_dir / "summary.csv",
                      std::string("object,policy,mean_dis,std_dis,safe_rate,"
                                  "center_rate\n") + row);
  spdlog::info("{} on {}: {}", policy_name, dataset.object_name,
               FormatSummary(summary));
  return reports;
}

void CmdFixture(const std::string& name, uint64_t seed,
                const std::filesystem::path& out_dir) {
  WriteFixture(MakeFixture(name, seed), seed, out_dir);
}

int RunCli(int argc, char** argv) {
  ConfigureLogging();
  CLI::App app{"Handover demonstration synthesis and reaching-policy evaluation"};
  app.require_subcommand(1);
  int workers = 1;
  app.add_option("--workers", workers, "Worker threads")
      ->check(CLI::PositiveNumber);

  std::string config_path, out_dir, dataset_dir, policy, fixture_name;
  uint64_t seed = 0;

  auto* generate = app.add_subcommand("generate", "Synthesize a demonstration dataset");
  generate->add_option("--config", config_path)->required();
  generate->add_option("--out", out_dir)->required();
  generate->add_option("--workers", workers)->check(CLI::PositiveNumber);

  auto* rollout = app.add_subcommand("rollout", "Closed-loop policy evaluation");
  rollout->add_option("--config", config_path)->required();
  rollout->add_option("--dataset", dataset_dir)->required();
  rollout->add_option("--policy", policy)->required();
  rollout->add_option("--out", out_dir)->required();
  rollout->add_option("--workers", workers)->check(CLI::PositiveNumber);

  auto* fixture = app.add_subcommand("fixture", "Write a synthetic scene");
  fixture->add_option("--name", fixture_name)->required();
  fixture->add_option("--seed", seed)->required();
  fixture->add_option("--out", out_dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    EmitError("UsageError", e.what());
    return 2;
  }

  try {
    if (*generate) {
      CmdGenerate(config_path, out_dir, workers);
    } else if (*rollout) {
      CmdRollout(config_path, dataset_dir, policy, out_dir, workers);
    } else if (*fixture) {
      CmdFixture(fixture_name, seed, out_dir);
    }
  } catch (const UsageError& e) {
    EmitError("UsageError", e.what());
    return 2;
  } catch (const Error& e) {
    EmitError(ErrorKindName(e.kind()), e.what());
    return 1;
  } catch (const std::exception& e) {
    EmitError("InternalError", e.what());
    return 1;
  }
  return 0;
}

}  // namespace h2r
