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

#include "h2r/geometry.h"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "h2r/error.h"
#include "oracles.h"

namespace h2r {
namespace {

constexpr double kPi = std::numbers::pi;

void ExpectPoseNear(const Pose& a, const Pose& b, double tol) {
  EXPECT_LT((a.translation() - b.translation()).norm(), tol);
  EXPECT_LT(AngularDistance(a.rotation(), b.rotation()), tol);
}

TEST(PoseTest, ComposeWithIdentity) {
  std::mt19937_64 rng(1);
  const Pose p = testing::RandomPose(rng);
  ExpectPoseNear(Pose::Identity() * p, p, 1e-15);
  ExpectPoseNear(p * Pose::Identity(), p, 1e-15);
}

TEST(PoseTest, ComposeWithInverseIsIdentity) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const Pose p = testing::RandomPose(rng, 5.0);
    ExpectPoseNear(p * p.inverse(), Pose::Identity(), 1e-9);
    ExpectPoseNear(p.inverse() * p, Pose::Identity(), 1e-9);
  }
}

TEST(PoseTest, CommutingTranslations) {
  const Pose a = Pose::FromTranslation(Vec3(1, 0, 0));
  const Pose b = Pose::FromTranslation(Vec3(0, 2, 0));
  EXPECT_TRUE((a * b).translation().isApprox(Vec3(1, 2, 0)));
}

TEST(PoseTest, ComposeAppliesRightOperandFirst) {
  std::mt19937_64 rng(3);
  const Pose a = testing::RandomPose(rng);
  const Pose b = testing::RandomPose(rng);
  const Vec3 p(0.3, -0.2, 0.9);
  EXPECT_LT(((a * b) * p - a * (b * p)).norm(), 1e-12);
}

TEST(PoseTest, InverseExamples) {
  ExpectPoseNear(Pose::Identity().inverse(), Pose::Identity(), 1e-15);
  const Pose up = Pose::FromTranslation(Vec3(0, 0, 0.3));
  EXPECT_EQ(up.inverse().translation(), Vec3(0, 0, -0.3));

  // 90 degrees about z plus (1, 0, 0): checked against a general 4x4 inverse.
  const Pose p(Rotation::AboutZ(kPi / 2), Vec3(1, 0, 0));
  const Eigen::Matrix4d oracle = testing::MatrixInverse(p);
  EXPECT_LT((p.inverse().ToMatrix() - oracle).norm(), 1e-12);
  // R^T ((1, 1, 0) - (1, 0, 0)) with R a quarter turn about z.
  const Vec3 q = p.inverse() * Vec3(1, 1, 0);
  EXPECT_LT((q - testing::ApplyMatrix(oracle, Vec3(1, 1, 0))).norm(), 1e-12);
  EXPECT_LT((q - Vec3(1, 0, 0)).norm(), 1e-12);
}

TEST(PoseTest, InverseMatchesMatrixOracleRandomized) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const Pose p = testing::RandomPose(rng, 3.0);
    EXPECT_LT((p.inverse().ToMatrix() - testing::MatrixInverse(p)).norm(), 1e-12);
  }
}

TEST(PoseTest, RowMajorLayout) {
  const Pose p(Rotation(), Vec3(1, 2, 3));
  const auto m = p.ToRowMajor();
  EXPECT_EQ(m[3], 1.0);
  EXPECT_EQ(m[7], 2.0);
  EXPECT_EQ(m[11], 3.0);
  EXPECT_EQ(m[15], 1.0);
  ExpectPoseNear(Pose::FromRowMajor(m), p, 1e-15);
}

TEST(RotationTest, CanonicalHemisphere) {
  const Rotation r = Rotation::FromQuaternion(-0.5, 0.5, 0.5, 0.5);
  EXPECT_GE(r.w(), 0.0);
  EXPECT_NEAR(r.quaternion().norm(), 1.0, 1e-15);
  const Rotation unnormalized = Rotation::FromQuaternion(2, 0, 0, 2);
  EXPECT_NEAR(unnormalized.quaternion().norm(), 1.0, 1e-15);
}

TEST(RotationTest, NormStaysUnitUnderLongProducts) {
  std::mt19937_64 rng(5);
  Rotation r;
  for (int i = 0; i < 10000; ++i) {
    r = r * testing::RandomRotation(rng);
    ASSERT_NEAR(r.quaternion().norm(), 1.0, 1e-9);
    ASSERT_GE(r.w(), 0.0);
  }
}

TEST(SlerpTest, SameRotationIsFixed) {
  std::mt19937_64 rng(6);
  const Rotation r = testing::RandomRotation(rng);
  for (double u : {0.0, 0.3, 0.5, 1.0}) {
    EXPECT_LT(AngularDistance(Slerp(r, r, u), r), 1e-12);
  }
}

TEST(SlerpTest, MidpointOfQuarterTurn) {
  const Rotation mid = Slerp(Rotation(), Rotation::AboutZ(kPi / 2), 0.5);
  EXPECT_LT(AngularDistance(mid, Rotation::AboutZ(kPi / 4)), 1e-12);
}

TEST(SlerpTest, AxisAngleScalingOracle) {
  const Vec3 axis = Vec3(1, 1, 1).normalized();
  const Rotation r = Slerp(Rotation(), Rotation::FromAngleAxis(2 * kPi / 3, axis), 0.25);
  // Oracle: 30 degrees about the same axis, built from the matrix formula.
  const double a = kPi / 6;
  Eigen::Matrix3d k;
  k << 0, -axis.z(), axis.y(), axis.z(), 0, -axis.x(), -axis.y(), axis.x(), 0;
  const Eigen::Matrix3d oracle =
      Eigen::Matrix3d::Identity() + std::sin(a) * k + (1 - std::cos(a)) * k * k;
  EXPECT_LT((r.ToMatrix() - oracle).norm(), 1e-12);
}

TEST(SlerpTest, TakesShortestArc) {
  const Rotation r0 = Rotation::AboutZ(kPi * 170 / 180);
  const Rotation r1 = Rotation::AboutZ(-kPi * 170 / 180);
  // The short way crosses 180 degrees: 20 degrees total.
  const Rotation mid = Slerp(r0, r1, 0.5);
  EXPECT_LT(AngularDistance(mid, Rotation::AboutZ(kPi)), 1e-12);
  EXPECT_NEAR(AngularDistance(r0, mid), kPi / 18, 1e-12);
}

TEST(SlerpTest, NearlyEqualFallsBackToLinear) {
  const Rotation r0 = Rotation::AboutX(0.3);
  const Rotation r1 = Rotation::AboutX(0.3 + 1e-10);
  const Rotation r = Slerp(r0, r1, 0.5);
  EXPECT_NEAR(r.quaternion().norm(), 1.0, 1e-15);
  EXPECT_LT(AngularDistance(r, r0), 1e-9);
}

TEST(SlerpTest, EndpointsAndGeodesicPropertyRandomized) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Rotation r0 = testing::RandomRotation(rng);
    const Rotation r1 = testing::RandomRotation(rng);
    EXPECT_EQ(Slerp(r0, r1, 0.0).quaternion().coeffs(), r0.quaternion().coeffs());
    EXPECT_EQ(Slerp(r0, r1, 1.0).quaternion().coeffs(), r1.quaternion().coeffs());
    const double u = unit(rng);
    const double total = AngularDistance(r0, r1);
    const Rotation r = Slerp(r0, r1, u);
    ASSERT_NEAR(AngularDistance(r0, r), u * total, 1e-7);
    ASSERT_NEAR(AngularDistance(r, r1), (1 - u) * total, 1e-7);
  }
}

TEST(LookRotationTest, Examples) {
  const Rotation identity = LookRotation(Vec3(0, 0, 1), Vec3(0, 1, 0));
  EXPECT_LT(AngularDistance(identity, Rotation()), 1e-12);

  const Rotation side = LookRotation(Vec3(1, 0, 0), Vec3(0, 1, 0));
  EXPECT_LT((side.ToMatrix().col(2) - Vec3(1, 0, 0)).norm(), 1e-12);

  const Vec3 diag = Vec3(1, 1, 1).normalized();
  const Eigen::Matrix3d m = LookRotation(diag, Vec3(0, 1, 0)).ToMatrix();
  EXPECT_LT((m.col(2) - diag).norm(), 1e-9);
  EXPECT_NEAR(m.col(0).dot(Vec3(0, 1, 0)), 0.0, 1e-12);
  EXPECT_NEAR(m.determinant(), 1.0, 1e-12);
}

TEST(LookRotationTest, ParallelUpHintThrows) {
  try {
    LookRotation(Vec3(0, 1, 0), Vec3(0, 1, 0));
    FAIL() << "expected DegenerateFrame";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegenerateFrame);
  }
}

TEST(AngleBetweenTest, Examples) {
  EXPECT_EQ(AngleBetween(Vec3(1, 0, 0), Vec3(1, 0, 0)), 0.0);
  EXPECT_NEAR(AngleBetween(Vec3(1, 0, 0), Vec3(-1, 0, 0)), kPi, 1e-15);
  EXPECT_NEAR(AngleBetween(Vec3(1, 0, 0), Vec3(1, 1, 0)), kPi / 4, 1e-15);
  EXPECT_THROW(AngleBetween(Vec3::Zero(), Vec3(1, 0, 0)), Error);
}

TEST(EulerTest, IntrinsicXyzComposition) {
  const Vec3 angles(0.1, -0.4, 0.7);
  const Eigen::Matrix3d expected =
      (Eigen::AngleAxisd(0.1, Vec3::UnitX()) * Eigen::AngleAxisd(-0.4, Vec3::UnitY()) *
       Eigen::AngleAxisd(0.7, Vec3::UnitZ())).toRotationMatrix();
  EXPECT_LT((Rotation::FromEulerXYZ(angles).ToMatrix() - expected).norm(), 1e-14);
}

TEST(EulerTest, RoundTripAwayFromGimbalLock) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> roll(-kPi, kPi);
  std::uniform_real_distribution<double> pitch(-kPi / 2 + 1e-3, kPi / 2 - 1e-3);
  for (int i = 0; i < 1000; ++i) {
    const EulerAction a{Vec3(roll(rng), pitch(rng), roll(rng)),
                        testing::RandomVector(rng, 0.1)};
    const EulerAction back = EulerAction::FromPose(a.ToPose());
    ASSERT_LT((back.rotation - a.rotation).norm(), 1e-6) << i;
    ASSERT_LT((back.translation - a.translation).norm(), 1e-15);
  }
}

TEST(EulerTest, ArrayLayout) {
  const EulerAction a{Vec3(1, 2, 3), Vec3(4, 5, 6)};
  const auto v = a.ToArray();
  EXPECT_EQ(v, (std::array<double, 6>{1, 2, 3, 4, 5, 6}));
  const EulerAction b = EulerAction::FromArray(v);
  EXPECT_EQ(b.rotation, a.rotation);
  EXPECT_EQ(b.translation, a.translation);
}

TEST(ComposeTest, AssociativeRandomized) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    const Pose a = testing::RandomPose(rng), b = testing::RandomPose(rng),
               c = testing::RandomPose(rng);
    ExpectPoseNear((a * b) * c, a * (b * c), 1e-9);
  }
}

}  // namespace
}  // namespace h2r
