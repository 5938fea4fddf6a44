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

#include "h2r/fixtures.h"

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "h2r/config.h"
#include "h2r/error.h"
#include "text_util.h"

namespace h2r {
namespace {

constexpr std::array<std::string_view, 3> kNames = {
    "sphere_in_hand", "box_in_hand", "mug_in_hand"};

// Nominal object center in the scene frame.
const Vec3 kObjectCenter(0.5, 0.0, 0.3);
// Gap between the object's lowest point and the hand center.
constexpr double kHandGap = 0.23;
const Vec3 kHandSemiAxes(0.08, 0.03, 0.025);
constexpr double kUnsafeClearance = 0.05;

class SurfaceSampler {
 public:
  explicit SurfaceSampler(uint64_t seed) : rng_(seed) {}

  double Uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform_(rng_);
  }
  Vec3 UnitVector() {
    Vec3 v;
    do {
      v = Vec3(normal_(rng_), normal_(rng_), normal_(rng_));
    } while (v.norm() < 1e-9);
    return v.normalized();
  }
  Vec3 Jitter(const Vec3& base, double amount) {
    Vec3 c = base + Vec3(Uniform(-amount, amount), Uniform(-amount, amount),
                         Uniform(-amount, amount));
    return c.cwiseMax(0.0).cwiseMin(1.0);
  }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

void Add(PointCloud* cloud, const Vec3& p, const Vec3& color) {
  cloud->points.push_back(p);
  cloud->colors.push_back(color);
}

// Returns the object's half height (extent below its center).
double BuildObject(std::string_view name, SurfaceSampler& rng,
                   PointCloud* object, Vec3* top) {
  const Vec3& o = kObjectCenter;
  if (name == "sphere_in_hand") {
    constexpr double kRadius = 0.08;
    for (int i = 0; i < 4000; ++i) {
      Add(object, o + kRadius * rng.UnitVector(),
          rng.Jitter(Vec3(0.85, 0.15, 0.1), 0.05));
    }
    *top = o + Vec3(0.0, 0.0, kRadius);
    return kRadius;
  }
  if (name == "box_in_hand") {
    const Vec3 half(0.05, 0.035, 0.09);
    const std::array<double, 3> face_area = {half.y() * half.z(),
                                             half.x() * half.z(),
                                             half.x() * half.y()};
    const double total = face_area[0] + face_area[1] + face_area[2];
    for (int i = 0; i < 4000; ++i) {
      const double pick = rng.Uniform(0.0, total);
      const int axis = pick < face_area[0] ? 0
                       : pick < face_area[0] + face_area[1] ? 1
                                                            : 2;
      Vec3 p(rng.Uniform(-half.x(), half.x()), rng.Uniform(-half.y(), half.y()),
             rng.Uniform(-half.z(), half.z()));
      p[axis] = rng.Uniform(0.0, 1.0) < 0.5 ? -half[axis] : half[axis];
      Add(object, o + p, rng.Jitter(Vec3(0.9, 0.75, 0.2), 0.05));
    }
    *top = o + Vec3(0.0, 0.0, half.z());
    return half.z();
  }
  // mug_in_hand
  constexpr double kRadius = 0.045;
  constexpr double kHalfHeight = 0.05;
  for (int i = 0; i < 3000; ++i) {
    const double a = rng.Uniform(0.0, 2.0 * std::numbers::pi);
    Add(object,
        o + Vec3(kRadius * std::cos(a), kRadius * std::sin(a),
                 rng.Uniform(-kHalfHeight, kHalfHeight)),
        rng.Jitter(Vec3(0.2, 0.35, 0.8), 0.05));
  }
  for (int i = 0; i < 600; ++i) {
    const double a = rng.Uniform(0.0, 2.0 * std::numbers::pi);
    const double r = kRadius * std::sqrt(rng.Uniform(0.0, 1.0));
    Add(object, o + Vec3(r * std::cos(a), r * std::sin(a), -kHalfHeight),
        rng.Jitter(Vec3(0.2, 0.35, 0.8), 0.05));
  }
  // Handle: a tube swept along a half circle on the -x side.
  for (int i = 0; i < 600; ++i) {
    const double t = rng.Uniform(-0.5 * std::numbers::pi, 0.5 * std::numbers::pi);
    const Vec3 spine(-kRadius - 0.025 * std::cos(t), 0.0, 0.03 * std::sin(t));
    Add(object, o + spine + 0.008 * rng.UnitVector(),
        rng.Jitter(Vec3(0.2, 0.35, 0.8), 0.05));
  }
  *top = o + Vec3(kRadius, 0.0, kHalfHeight);
  return kHalfHeight;
}

Vec3 Mean(const std::vector<Vec3>& points) {
  Vec3 sum = Vec3::Zero();
  for (const Vec3& p : points) sum += p;
  return sum / static_cast<double>(points.size());
}

}  // namespace

std::span<const std::string_view> FixtureNames() { return kNames; }

Fixture MakeFixture(std::string_view name, uint64_t seed) {
  if (std::find(kNames.begin(), kNames.end(), name) == kNames.end()) {
    throw Error(ErrorKind::kUnknownFixture,
                "unknown fixture '" + std::string(name) + "'");
  }
  SurfaceSampler rng(seed);

  PointCloud object;
  object.label = CloudLabel::kObject;
  Vec3 grasp_point;
  const double half_height = BuildObject(name, rng, &object, &grasp_point);

  PointCloud hand;
  hand.label = CloudLabel::kHand;
  const Vec3 hand_center =
      kObjectCenter - Vec3(0.0, 0.0, half_height + kHandGap);
  const Vec3 hand_top = hand_center + Vec3(0.0, 0.0, kHandSemiAxes.z());
  const Vec3 skin(0.87, 0.68, 0.55);
  Add(&hand, hand_top, skin);
  for (int i = 0; i < 1500; ++i) {
    Add(&hand, hand_center + rng.UnitVector().cwiseProduct(kHandSemiAxes),
        rng.Jitter(skin, 0.04));
  }

  PointCloud table;
  table.label = CloudLabel::kBackground;
  const double table_z = hand_center.z() - 0.1;
  for (int i = 0; i < 3000; ++i) {
    Add(&table,
        Vec3(rng.Uniform(-0.3, 1.3), rng.Uniform(-0.8, 0.8), table_z),
        rng.Jitter(Vec3(0.45, 0.42, 0.4), 0.03));
  }

  const Vec3 mean = Mean(object.points);
  const Vec3 world_y = Vec3::UnitY();

  // Safe: on top of the object, approaching through the centroid.
  const Rotation safe_rotation = LookRotation((mean - grasp_point).normalized(), world_y);
  // Unsafe: hovering just above the hand, approaching straight down.
  const Vec3 unsafe_point = hand_top + Vec3(0.0, 0.0, kUnsafeClearance);
  const Rotation unsafe_rotation = LookRotation(-Vec3::UnitZ(), world_y);

  std::vector<GraspCandidate> grasps = {
      {Pose(unsafe_rotation, unsafe_point - mean), 0.9},
      {Pose(safe_rotation, grasp_point - mean), 0.7},
  };
  return Fixture{std::string(name),
                 SceneAssets(std::move(object), std::move(hand), std::move(table)),
                 std::move(grasps)};
}

void WriteFixture(const Fixture& fixture, uint64_t seed,
                  const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  SaveScene(fixture.scene, dir / "scene.txt");
  internal::WriteFile(dir / "grasps.txt", SerializeGrasps(fixture.grasps));
  RunConfig config;
  config.seed = seed;
  config.object_name = fixture.name;
  internal::WriteFile(dir / "config.toml", SerializeRunConfig(config));
}

}  // namespace h2r
