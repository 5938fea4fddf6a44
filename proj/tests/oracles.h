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

// Independent oracles shared by the unit and acceptance suites. Nothing here
// calls into the code paths it is used to check.

#ifndef H2R_TESTS_ORACLES_H_
#define H2R_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "Eigen/Dense"
#include "h2r/geometry.h"
#include "h2r/scene.h"

namespace h2r::testing {

inline Rotation RandomRotation(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return Rotation::FromQuaternion(n(rng), n(rng), n(rng), n(rng));
}

inline Vec3 RandomVector(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return Vec3(u(rng), u(rng), u(rng));
}

inline Pose RandomPose(std::mt19937_64& rng, double scale = 1.0) {
  return Pose(RandomRotation(rng), RandomVector(rng, scale));
}

// General 4x4 LU inverse of the homogeneous matrix.
inline Eigen::Matrix4d MatrixInverse(const Pose& p) {
  return p.ToMatrix().inverse();
}

inline Vec3 ApplyMatrix(const Eigen::Matrix4d& m, const Vec3& p) {
  return (m * p.homogeneous()).head<3>();
}

// Rotation angle of a 3x3 rotation matrix from its trace.
inline double MatrixAngle(const Eigen::Matrix3d& m) {
  const double c = std::clamp((m.trace() - 1.0) / 2.0, -1.0, 1.0);
  // Near zero the trace loses precision; use the skew part instead.
  const Vec3 w(m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1));
  return std::atan2(0.5 * w.norm(), c);
}

inline double BruteMinDistance(const Vec3& p, const std::vector<Vec3>& points) {
  double best = std::numeric_limits<double>::infinity();
  for (const Vec3& q : points) best = std::min(best, (q - p).norm());
  return best;
}

inline double BruteClearance(const Vec3& p, const SceneAssets& scene) {
  return std::min(BruteMinDistance(p, scene.object().points),
                  BruteMinDistance(p, scene.hand().points));
}

struct SamplingLimits {
  double radius = 0.7;
  double alpha_min = 60.0 * M_PI / 180.0;
  double theta_offset = 20.0 * M_PI / 180.0;
  double theta_max = 100.0 * M_PI / 180.0;
  double d_min = 0.1;
};

// Re-validates one sampled initial pose straight from the constraint
// formulas. Returns an empty string when every constraint holds.
inline std::string CheckInitialPose(const Pose& pose, const Pose& grasp,
                                    const SceneAssets& scene,
                                    const SamplingLimits& lim) {
  const Eigen::Matrix3d r = pose.rotation().ToMatrix();
  const Vec3 t = pose.translation();
  const Vec3 center = scene.object_mean();
  const Vec3 hand = scene.hand_centroid();

  if (std::abs((t - grasp.translation()).norm() - lim.radius) > 1e-6) {
    return "radius";
  }
  const Vec3 a = hand - center;
  const Vec3 b = t - center;
  const double cos_sep = a.dot(b) / (a.norm() * b.norm());
  if (!(std::acos(std::clamp(cos_sep, -1.0, 1.0)) > lim.alpha_min)) {
    return "hand/camera separation";
  }
  // z-axis must be the look direction tilted by Rx(tx) Ry(ty) with
  // |tx|, |ty| <= offset, which bounds the tilt by acos(cos^2(offset)).
  const Vec3 z = r.col(2);
  const Vec3 look = (center - t).normalized();
  const double tilt = std::acos(std::clamp(z.dot(look), -1.0, 1.0));
  const double max_tilt =
      std::acos(std::cos(lim.theta_offset) * std::cos(lim.theta_offset));
  if (tilt > max_tilt + 1e-9) return "view offset";
  const Vec3 zf = grasp.rotation().ToMatrix().col(2);
  if (z.dot(zf) < std::cos(lim.theta_max) - 1e-12) return "approach angle";
  if (!(BruteClearance(t, scene) > lim.d_min)) return "clearance";
  if (std::abs(r.determinant() - 1.0) > 1e-9 ||
      (r.transpose() * r - Eigen::Matrix3d::Identity()).norm() > 1e-9) {
    return "not a rotation";
  }
  return "";
}

}  // namespace h2r::testing

#endif  // H2R_TESTS_ORACLES_H_
