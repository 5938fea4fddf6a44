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

#include <algorithm>
#include <cmath>

#include "h2r/error.h"

namespace h2r {
namespace {

Eigen::Quaterniond Canonical(Eigen::Quaterniond q) {
  q.normalize();
  if (q.w() < 0.0) q.coeffs() = -q.coeffs();
  return q;
}

}  // namespace

Rotation Rotation::FromQuaternion(double w, double x, double y, double z) {
  return FromQuaternion(Eigen::Quaterniond(w, x, y, z));
}

Rotation Rotation::FromQuaternion(const Eigen::Quaterniond& q) {
  return Rotation(Canonical(q));
}

Rotation Rotation::FromAngleAxis(double angle, const Vec3& axis) {
  return Rotation(Canonical(
      Eigen::Quaterniond(Eigen::AngleAxisd(angle, axis.normalized()))));
}

Rotation Rotation::FromRotationVector(const Vec3& rotation_vector) {
  const double angle = rotation_vector.norm();
  if (angle < 1e-300) return Rotation();
  return FromAngleAxis(angle, rotation_vector / angle);
}

Rotation Rotation::FromMatrix(const Eigen::Matrix3d& m) {
  return Rotation(Canonical(Eigen::Quaterniond(m)));
}

Rotation Rotation::AboutX(double angle) {
  return FromAngleAxis(angle, Vec3::UnitX());
}
Rotation Rotation::AboutY(double angle) {
  return FromAngleAxis(angle, Vec3::UnitY());
}
Rotation Rotation::AboutZ(double angle) {
  return FromAngleAxis(angle, Vec3::UnitZ());
}

Rotation Rotation::FromEulerXYZ(const Vec3& angles) {
  const Eigen::Quaterniond q =
      Eigen::AngleAxisd(angles.x(), Vec3::UnitX()) *
      Eigen::AngleAxisd(angles.y(), Vec3::UnitY()) *
      Eigen::AngleAxisd(angles.z(), Vec3::UnitZ());
  return Rotation(Canonical(q));
}

Vec3 Rotation::ToEulerXYZ() const {
  // For R = Rx(a) Ry(b) Rz(c):
  //   R(0,2) = sin b, R(1,2) = -sin a cos b, R(2,2) = cos a cos b,
  //   R(0,1) = -cos b sin c, R(0,0) = cos b cos c.
  const Eigen::Matrix3d m = ToMatrix();
  const double sin_b = std::clamp(m(0, 2), -1.0, 1.0);
  const double b = std::asin(sin_b);
  if (std::abs(sin_b) > 1.0 - 1e-12) {
    // Gimbal lock: only a +/- c is observable; put it all in a.
    const double a = std::atan2(m(2, 1), m(1, 1));
    return Vec3(a, b, 0.0);
  }
  const double a = std::atan2(-m(1, 2), m(2, 2));
  const double c = std::atan2(-m(0, 1), m(0, 0));
  return Vec3(a, b, c);
}

Vec3 Rotation::ToRotationVector() const {
  const Vec3 v = q_.vec();
  const double sin_half = v.norm();
  if (sin_half < 1e-300) return Vec3::Zero();
  const double angle = 2.0 * std::atan2(sin_half, q_.w());
  return v * (angle / sin_half);
}

double Rotation::angle() const {
  return 2.0 * std::atan2(q_.vec().norm(), std::abs(q_.w()));
}

Rotation Rotation::inverse() const {
  return Rotation(Canonical(q_.conjugate()));
}

Rotation Rotation::operator*(const Rotation& other) const {
  return Rotation(Canonical(q_ * other.q_));
}

double AngularDistance(const Rotation& a, const Rotation& b) {
  return (a.inverse() * b).angle();
}

Rotation Slerp(const Rotation& r0, const Rotation& r1, double u) {
  if (u <= 0.0) return r0;
  if (u >= 1.0) return r1;
  const Eigen::Vector4d q0 = r0.quaternion().coeffs();
  Eigen::Vector4d q1 = r1.quaternion().coeffs();
  double dot = q0.dot(q1);
  if (dot < 0.0) {
    q1 = -q1;
    dot = -dot;
  }
  Eigen::Vector4d q;
  if (dot > 1.0 - 1e-9) {
    q = (1.0 - u) * q0 + u * q1;
  } else {
    // Half-angle between the quaternions; atan2 keeps precision near 0.
    const double theta =
        2.0 * std::atan2((q1 - q0).norm(), (q1 + q0).norm());
    const double sin_theta = std::sin(theta);
    q = (std::sin((1.0 - u) * theta) / sin_theta) * q0 +
        (std::sin(u * theta) / sin_theta) * q1;
  }
  // Eigen stores coefficients as (x, y, z, w).
  return Rotation::FromQuaternion(q[3], q[0], q[1], q[2]);
}

Rotation LookRotation(const Vec3& forward, const Vec3& up_hint) {
  const Vec3 z = forward.normalized();
  const Vec3 x_raw = up_hint.normalized().cross(z);
  if (x_raw.norm() < 1e-6) {
    throw Error(ErrorKind::kDegenerateFrame,
                "look direction is parallel to the up hint");
  }
  const Vec3 x = x_raw.normalized();
  const Vec3 y = z.cross(x);
  Eigen::Matrix3d m;
  m.col(0) = x;
  m.col(1) = y;
  m.col(2) = z;
  return Rotation::FromMatrix(m);
}

double AngleBetween(const Vec3& a, const Vec3& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na <= 1e-9 || nb <= 1e-9) {
    throw Error(ErrorKind::kZeroVector, "angle with a zero-length vector");
  }
  const double c = std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
  // atan2 form agrees with arccos(c) but stays accurate near 0 and pi.
  const double s = a.cross(b).norm() / (na * nb);
  return std::atan2(s, c);
}

Pose Pose::FromMatrix(const Eigen::Matrix4d& m) {
  return Pose(Rotation::FromMatrix(m.topLeftCorner<3, 3>()),
              m.topRightCorner<3, 1>());
}

Pose Pose::FromRowMajor(std::span<const double, 16> values) {
  Eigen::Matrix4d m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(r, c) = values[r * 4 + c];
  }
  return FromMatrix(m);
}

Eigen::Matrix4d Pose::ToMatrix() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.topLeftCorner<3, 3>() = rotation_.ToMatrix();
  m.topRightCorner<3, 1>() = translation_;
  return m;
}

std::array<double, 16> Pose::ToRowMajor() const {
  const Eigen::Matrix4d m = ToMatrix();
  std::array<double, 16> out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out[r * 4 + c] = m(r, c);
  }
  return out;
}

Pose Pose::inverse() const {
  const Rotation inv = rotation_.inverse();
  return Pose(inv, -(inv * translation_));
}

Pose Pose::operator*(const Pose& other) const {
  return Pose(rotation_ * other.rotation_,
              rotation_ * other.translation_ + translation_);
}

Pose RelativeTransform(const Pose& from, const Pose& to) {
  return from.inverse() * to;
}

EulerAction EulerAction::FromPose(const Pose& pose) {
  return EulerAction{pose.rotation().ToEulerXYZ(), pose.translation()};
}

EulerAction EulerAction::FromArray(std::span<const double, 6> v) {
  return EulerAction{Vec3(v[0], v[1], v[2]), Vec3(v[3], v[4], v[5])};
}

Pose EulerAction::ToPose() const {
  return Pose(Rotation::FromEulerXYZ(rotation), translation);
}

std::array<double, 6> EulerAction::ToArray() const {
  return {rotation.x(),    rotation.y(),    rotation.z(),
          translation.x(), translation.y(), translation.z()};
}

bool EulerAction::AllFinite() const {
  return rotation.allFinite() && translation.allFinite();
}

}  // namespace h2r
