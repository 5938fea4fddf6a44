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

#include <random>

#include "gtest/gtest.h"
#include "h2r/error.h"
#include "h2r/fixtures.h"
#include "oracles.h"

namespace h2r {
namespace {

struct Bench {
  Fixture fixture;
  Pose grasp;
};

Bench MakeBench(std::string_view name, uint64_t seed = 7) {
  Fixture f = MakeFixture(name, seed);
  const Pose grasp = AlignGraspToScene(f.grasps[1], f.scene);
  return {std::move(f), grasp};
}

SamplerConfig Sampler(uint64_t seed) {
  SamplerConfig c;
  c.seed = seed;
  return c;
}

Waypoint At(const Pose& p) { return Waypoint{p, Phase::kRefine, false}; }

TEST(PregraspTest, Examples) {
  EXPECT_LT((ComputePregrasp(Pose(), 0.3).translation() - Vec3(0, 0, -0.3)).norm(), 1e-15);
  const Pose g(Rotation::AboutY(0.3), Vec3(1, 2, 3));
  const Pose same = ComputePregrasp(g, 0.0);
  EXPECT_EQ(same.translation(), g.translation());

  const Pose rx(Rotation::AboutX(M_PI / 2), Vec3::Zero());
  // Oracle: rotate unit z by the quaternion directly.
  const Eigen::Quaterniond q = rx.rotation().quaternion();
  const Vec3 z = (q * Eigen::Quaterniond(0, 0, 0, 1) * q.conjugate()).vec();
  const Pose pre = ComputePregrasp(rx, 0.3);
  EXPECT_LT((pre.translation() - (-0.3 * z)).norm(), 1e-15);
  EXPECT_LT((pre.translation() - Vec3(0, 0.3, 0)).norm(), 1e-15);
  EXPECT_EQ(pre.rotation().quaternion().coeffs(), rx.rotation().quaternion().coeffs());
}

TEST(SamplerTest, SeparationExample) {
  // Hand 0.3 m from the object center along +x.
  PointCloud object, hand;
  object.points = {Vec3(0, 0, 0.02), Vec3(0, 0, -0.02)};
  object.colors.assign(2, Vec3(1, 0, 0));
  hand.label = CloudLabel::kHand;
  hand.points = {Vec3(0.3, 0, 0)};
  hand.colors = {Vec3(1, 1, 1)};
  const SceneAssets scene(object, hand);
  const Pose grasp(Rotation::AboutY(-M_PI / 2), Vec3(0.0, 0, 0));
  SamplerConfig c = Sampler(5);
  const auto poses = SampleInitialPoses(grasp, scene, scene.hand_centroid(), c);
  ASSERT_EQ(poses.size(), 15u);
  for (const Pose& p : poses) {
    EXPECT_GT(AngleBetween(Vec3(0.3, 0, 0), p.translation()), 60 * kDegree);
  }
}

TEST(SamplerTest, ConstraintClosureOnFixtures) {
  for (std::string_view name : FixtureNames()) {
    const Bench s = MakeBench(name);
    const auto poses = SampleInitialPoses(s.grasp, s.fixture.scene,
                                          s.fixture.scene.hand_centroid(), Sampler(17));
    ASSERT_EQ(poses.size(), 15u);
    for (const Pose& p : poses) {
      EXPECT_EQ(testing::CheckInitialPose(p, s.grasp, s.fixture.scene, {}), "") << name;
    }
  }
}

TEST(SamplerTest, ZeroOffsetLooksAtCentroid) {
  const Bench s = MakeBench("sphere_in_hand");
  SamplerConfig c = Sampler(3);
  c.theta_offset_range = 0.0;
  const auto poses = SampleInitialPoses(s.grasp, s.fixture.scene,
                                        s.fixture.scene.hand_centroid(), c);
  for (const Pose& p : poses) {
    const Vec3 look = (s.fixture.scene.object_mean() - p.translation()).normalized();
    EXPECT_LT((p.rotation().axis_z() - look).norm(), 1e-9);
  }
}

TEST(SamplerTest, DeterministicForSeed) {
  const Bench s = MakeBench("mug_in_hand");
  const Vec3 hc = s.fixture.scene.hand_centroid();
  const auto a = SampleInitialPoses(s.grasp, s.fixture.scene, hc, Sampler(99));
  const auto b = SampleInitialPoses(s.grasp, s.fixture.scene, hc, Sampler(99));
  const auto c = SampleInitialPoses(s.grasp, s.fixture.scene, hc, Sampler(100));
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].ToRowMajor(), b[i].ToRowMajor());
  }
  EXPECT_NE(a[0].ToRowMajor(), c[0].ToRowMajor());
}

TEST(SamplerTest, ImpossibleConstraintsExhaust) {
  const Bench s = MakeBench("sphere_in_hand");
  SamplerConfig c = Sampler(1);
  c.theta_max = 1e-9;  // view must equal the approach axis
  c.max_attempts_per_pose = 200;
  try {
    SampleInitialPoses(s.grasp, s.fixture.scene, s.fixture.scene.hand_centroid(), c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSamplingExhausted);
  }
}

TEST(SamplerTest, ConfigValidation) {
  SamplerConfig c;
  c.k = 0;
  EXPECT_THROW(c.Validate(), Error);
  c = SamplerConfig{};
  c.alpha_min = M_PI;
  EXPECT_THROW(c.Validate(), Error);
  TrajectoryConfig t;
  t.refine_distance = 0.2;  // must exceed the pregrasp offset
  EXPECT_THROW(t.Validate(), Error);
}

TEST(TrajectoryTest, StartAtPregraspIsSingleWaypoint) {
  const Bench s = MakeBench("box_in_hand");
  const Pose pre = ComputePregrasp(s.grasp, 0.3);
  const Demonstration d = GenerateTrajectory(pre, s.grasp, s.fixture.scene, {});
  ASSERT_EQ(d.waypoints.size(), 1u);
  EXPECT_TRUE(d.waypoints[0].is_pregrasp);
  EXPECT_TRUE(d.actions.empty());
}

class TrajectoryFixtureTest : public ::testing::TestWithParam<std::string_view> {};

TEST_P(TrajectoryFixtureTest, Properties) {
  const Bench s = MakeBench(GetParam());
  const SceneAssets& scene = s.fixture.scene;
  const TrajectoryConfig cfg;
  const Pose pre = ComputePregrasp(s.grasp, cfg.pregrasp_offset);
  const auto starts = SampleInitialPoses(s.grasp, scene, scene.hand_centroid(), Sampler(41));
  int generated = 0;
  for (const Pose& start : starts) {
    Demonstration d;
    try {
      d = GenerateTrajectory(start, s.grasp, scene, cfg);
    } catch (const Error& e) {
      ASSERT_TRUE(e.kind() == ErrorKind::kClearanceViolation ||
                  e.kind() == ErrorKind::kStepBudgetExceeded);
      continue;
    }
    ++generated;
    const auto& w = d.waypoints;
    ASSERT_LE(w.size(), static_cast<size_t>(cfg.max_steps));
    ASSERT_EQ(d.actions.size(), w.size() - 1);
    EXPECT_EQ(w.front().pose.ToRowMajor(), start.ToRowMajor());

    // Endpoint.
    EXPECT_LT((w.back().pose.translation() - pre.translation()).norm(), 1e-6);
    EXPECT_LT(AngularDistance(w.back().pose.rotation(), pre.rotation()), 1e-6);

    int pregrasp_flags = 0;
    double last_dist = 1e9;
    for (size_t i = 0; i < w.size(); ++i) {
      pregrasp_flags += w[i].is_pregrasp;
      EXPECT_GT(testing::BruteClearance(w[i].pose.translation(), scene), cfg.d_min);
      if (i > 0) {
        EXPECT_LE((w[i].pose.translation() - w[i - 1].pose.translation()).norm(),
                  cfg.step_translation + 1e-9);
        EXPECT_LE(testing::MatrixAngle(w[i - 1].pose.rotation().ToMatrix().transpose() *
                                       w[i].pose.rotation().ToMatrix()),
                  cfg.step_rotation + 1e-9);
        EXPECT_GE(static_cast<int>(w[i].phase), static_cast<int>(w[i - 1].phase));
      }
      const double dist = (w[i].pose.translation() - pre.translation()).norm();
      if (w[i].phase != Phase::kAlign) {
        EXPECT_LE(dist, last_dist + 1e-12);
        last_dist = dist;
      }
      if (w[i].phase == Phase::kTranslate) {
        // The translate phase ends on its first waypoint strictly inside d.
        const bool last = i + 1 == w.size() || w[i + 1].phase != Phase::kTranslate;
        if (last) {
          EXPECT_LT(dist, cfg.refine_distance);
        } else {
          EXPECT_GE(dist, cfg.refine_distance);
        }
      }
      if (w[i].phase == Phase::kAlign) {
        EXPECT_EQ(w[i].pose.translation(), start.translation());
      }
    }
    EXPECT_EQ(pregrasp_flags, 1);
    EXPECT_TRUE(w.back().is_pregrasp);

    // Left fold of actions reproduces the final pose.
    Pose p = w.front().pose;
    for (const EulerAction& a : d.actions) p = p * a.ToPose();
    EXPECT_LT((p.translation() - w.back().pose.translation()).norm(), 1e-6);
    EXPECT_LT(AngularDistance(p.rotation(), w.back().pose.rotation()), 1e-6);

    // The last aligned waypoint faces the object exactly.
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].phase == Phase::kAlign && w[i + 1].phase != Phase::kAlign) {
        const Vec3 look = (scene.object_mean() - w[i].pose.translation()).normalized();
        EXPECT_LT((w[i].pose.rotation().axis_z() - look).norm(), 1e-9);
      }
    }
  }
  EXPECT_GE(generated, 13);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, TrajectoryFixtureTest,
                         ::testing::Values("sphere_in_hand", "box_in_hand", "mug_in_hand"));

TEST(TrajectoryTest, TransitionAtRefineDistance) {
  // Straight approach along the grasp axis, 0.7 m from the pregrasp so the
  // translate phase is exercised.
  const Bench s = MakeBench("sphere_in_hand");
  const Pose pre = ComputePregrasp(s.grasp, 0.3);
  const Vec3 z = s.grasp.rotation().axis_z();
  const Pose start(pre.rotation(), pre.translation() - 0.7 * z);
  const Demonstration d = GenerateTrajectory(start, s.grasp, s.fixture.scene, {});
  const auto& w = d.waypoints;
  size_t last_translate = w.size();
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i].phase == Phase::kTranslate) last_translate = i;
  }
  ASSERT_LT(last_translate, w.size());
  ASSERT_GT(last_translate, 0u);
  EXPECT_LT((w[last_translate].pose.translation() - pre.translation()).norm(), 0.5);
  EXPECT_GE((w[last_translate - 1].pose.translation() - pre.translation()).norm(), 0.5);
  EXPECT_EQ(w[last_translate + 1].phase, Phase::kRefine);
}

TEST(TrajectoryTest, StepBudgetExceeded) {
  const Bench s = MakeBench("sphere_in_hand");
  const auto starts = SampleInitialPoses(s.grasp, s.fixture.scene,
                                         s.fixture.scene.hand_centroid(), Sampler(2));
  TrajectoryConfig cfg;
  cfg.max_steps = 3;
  try {
    GenerateTrajectory(starts[0], s.grasp, s.fixture.scene, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kStepBudgetExceeded);
  }
}

TEST(TrajectoryTest, ClearanceViolation) {
  const Bench s = MakeBench("sphere_in_hand");
  TrajectoryConfig cfg;
  cfg.d_min = 0.35;  // larger than the pregrasp's distance to the object
  const auto starts = SampleInitialPoses(s.grasp, s.fixture.scene,
                                         s.fixture.scene.hand_centroid(), Sampler(2));
  try {
    GenerateTrajectory(starts[0], s.grasp, s.fixture.scene, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kClearanceViolation);
  }
}

TEST(TrajectoryTest, Deterministic) {
  const Bench s = MakeBench("mug_in_hand");
  const auto starts = SampleInitialPoses(s.grasp, s.fixture.scene,
                                         s.fixture.scene.hand_centroid(), Sampler(8));
  const auto a = GenerateTrajectory(starts[1], s.grasp, s.fixture.scene, {});
  const auto b = GenerateTrajectory(starts[1], s.grasp, s.fixture.scene, {});
  ASSERT_EQ(a.waypoints.size(), b.waypoints.size());
  for (size_t i = 0; i < a.waypoints.size(); ++i) {
    EXPECT_EQ(a.waypoints[i].pose.ToRowMajor(), b.waypoints[i].pose.ToRowMajor());
  }
}

TEST(ActionsTest, Examples) {
  const Pose p(Rotation::AboutX(0.2), Vec3(1, 2, 3));
  const std::vector<Waypoint> same = {At(p), At(p)};
  const auto zero = ActionsFromWaypoints(same);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_LT(zero[0].rotation.norm(), 1e-15);
  EXPECT_LT(zero[0].translation.norm(), 1e-15);

  const std::vector<Waypoint> advance = {At(p), At(p * Pose::FromTranslation(Vec3(0, 0, 0.05)))};
  const auto a = ActionsFromWaypoints(advance)[0];
  EXPECT_LT(a.rotation.norm(), 1e-15);
  EXPECT_LT((a.translation - Vec3(0, 0, 0.05)).norm(), 1e-15);
}

TEST(ActionsTest, FoldReproducesRandomTrajectory) {
  std::mt19937_64 rng(51);
  std::vector<Waypoint> w;
  for (int i = 0; i < 30; ++i) w.push_back(At(testing::RandomPose(rng, 0.5)));
  const auto actions = ActionsFromWaypoints(w);
  Pose p = w.front().pose;
  for (size_t i = 0; i < actions.size(); ++i) {
    p = p * actions[i].ToPose();
    ASSERT_LT((p.translation() - w[i + 1].pose.translation()).norm(), 1e-6);
    ASSERT_LT(AngularDistance(p.rotation(), w[i + 1].pose.rotation()), 1e-6);
  }
}

}  // namespace
}  // namespace h2r
