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

#include "h2r/config.h"

#include "gtest/gtest.h"
#include "h2r/error.h"

namespace h2r {
namespace {

ErrorKind KindOf(std::string_view text) {
  try {
    ParseRunConfig(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorKind::kIoError;
}

TEST(RunConfigTest, DefaultsArePublishedValues) {
  const RunConfig c = ParseRunConfig("seed = 1\n");
  EXPECT_EQ(c.d_s, 0.1);
  const SamplerConfig sc = c.sampler_config();
  EXPECT_EQ(sc.k, 15);
  EXPECT_EQ(sc.radius, 0.7);
  EXPECT_DOUBLE_EQ(sc.alpha_min, 60 * kDegree);
  EXPECT_DOUBLE_EQ(sc.theta_offset_range, 20 * kDegree);
  EXPECT_DOUBLE_EQ(sc.theta_max, 100 * kDegree);
  EXPECT_EQ(sc.seed, 1u);
  const TrajectoryConfig tc = c.trajectory_config();
  EXPECT_EQ(tc.pregrasp_offset, 0.3);
  EXPECT_EQ(tc.refine_distance, 0.5);
  EXPECT_EQ(tc.facing_tolerance, 0.0);
  EXPECT_EQ(tc.d_min, 0.1);
  EXPECT_EQ(tc.max_steps, 30);
  const EpisodeConfig ec = c.episode_config();
  EXPECT_EQ(ec.tau_c, 0.7);
  EXPECT_EQ(ec.max_steps, 30);
  EXPECT_EQ(ec.d_s, 0.1);
  EXPECT_EQ(c.loss_weights().lambda_t, 100.0);
  EXPECT_EQ(c.loss_weights().lambda_r, 100.0);
  EXPECT_EQ(c.camera, CameraIntrinsics{});
}

TEST(RunConfigTest, ParsesSectionsAndComments) {
  const RunConfig c = ParseRunConfig(
      "# experiment\nseed = 42\n\n[paths]\nscene = \"a b.txt\"  # spaces\n"
      "[sampler]\nk = 3\ntheta_max_deg = 90\n[episode]\ntau_c = 0.6\n"
      "[render]\nwrite_images = false\n[camera]\nwidth = 320\ncx = 160\n");
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.scene_path, "a b.txt");
  EXPECT_EQ(c.k, 3);
  EXPECT_DOUBLE_EQ(c.sampler_config().theta_max, 90 * kDegree);
  EXPECT_EQ(c.tau_c, 0.6);
  EXPECT_FALSE(c.write_images);
  EXPECT_EQ(c.camera.width, 320);
}

TEST(RunConfigTest, RoundTrip) {
  RunConfig c = ParseRunConfig("seed = 18446744073709551615\n");
  c.object_name = "mug";
  c.radius = 0.6999999999999999;
  c.theta_offset_deg = 12.345678901234567;
  c.write_images = false;
  c.camera.fx = 600.125;
  c.ibvs_gain = 3e-4;
  const RunConfig back = ParseRunConfig(SerializeRunConfig(c));
  EXPECT_EQ(back, c);
  EXPECT_EQ(SerializeRunConfig(back), SerializeRunConfig(c));
}

TEST(RunConfigTest, Errors) {
  EXPECT_EQ(KindOf("[sampler]\nk = 3\n"), ErrorKind::kConfigError);
  EXPECT_EQ(KindOf("seed = 1\nbogus = 2\n"), ErrorKind::kConfigError);
  EXPECT_EQ(KindOf("seed = 1\n[nope]\n"), ErrorKind::kConfigError);
  EXPECT_EQ(KindOf("seed = 1\n[sampler]\nk = 0\n"), ErrorKind::kConfigError);
  EXPECT_EQ(KindOf("seed = 1\n[episode]\nband_low = 0.5\nband_high = 0.4\n"),
            ErrorKind::kConfigError);
  EXPECT_EQ(KindOf("seed = 1\n[trajectory]\ns = 0.6\n"), ErrorKind::kConfigError);
  EXPECT_EQ(KindOf("seed = x\n"), ErrorKind::kConfigError);
  EXPECT_EQ(KindOf("seed = -1\n"), ErrorKind::kConfigError);
  EXPECT_EQ(KindOf("seed 1\n"), ErrorKind::kConfigError);
}

}  // namespace
}  // namespace h2r
