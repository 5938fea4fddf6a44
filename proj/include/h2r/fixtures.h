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

#ifndef H2R_FIXTURES_H_
#define H2R_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "h2r/scene.h"

namespace h2r {

// Deterministic synthetic handover scenes.
//   sphere_in_hand  ball (r = 8 cm)
//   box_in_hand     10 x 7 x 18 cm box
//   mug_in_hand     open cylinder with a side handle
// Each has a finger-like hand blob below the object, a background table
// plane, and two grasp candidates in the object-centered frame:
//   [0] unsafe, score 0.9, 5 cm above the top of the hand
//   [1] safe,   score 0.7, on top of the object, >= 0.3 m from the hand,
//       approach axis through the object centroid.
struct Fixture {
  std::string name;
  SceneAssets scene;
  std::vector<GraspCandidate> grasps;
};

std::span<const std::string_view> FixtureNames();

// Throws UnknownFixture.
Fixture MakeFixture(std::string_view name, uint64_t seed);

// Writes scene.txt, grasps.txt and a ready-to-run config.toml into `dir`.
void WriteFixture(const Fixture& fixture, uint64_t seed,
                  const std::filesystem::path& dir);

}  // namespace h2r

#endif  // H2R_FIXTURES_H_
