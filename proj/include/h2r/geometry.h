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

#ifndef H2R_GEOMETRY_H_
#define H2R_GEOMETRY_H_

#include <array>
#include <span>

#include "Eigen/Core"
#include "Eigen/Geometry"

namespace h2r {

using Vec3 = Eigen::Vector3d;

// Unit quaternion rotation. The stored quaternion is always normalized and
// canonicalized to the w >= 0 hemisphere, so equal rotations compare equal
// component-wise.
class Rotation {
 public:
  Rotation() : q_(Eigen::Quaterniond::Identity()) {}

  static Rotation FromQuaternion(double w, double x, double y, double z);
  static Rotation FromQuaternion(const Eigen::Quaterniond& q);
  static Rotation FromAngleAxis(double angle, const Vec3& axis);
  // Rotation vector (axis * angle, radians).
  static Rotation FromRotationVector(const Vec3& rotation_vector);
  static Rotation FromMatrix(const Eigen::Matrix3d& m);
  // Intrinsic XYZ: R = Rx(angles.x) * Ry(angles.y) * Rz(angles.z).
  static Rotation FromEulerXYZ(const Vec3& angles);
  static Rotation AboutX(double angle);
  static Rotation AboutY(double angle);
  static Rotation AboutZ(double angle);

  // Inverse of FromEulerXYZ. The pitch (y) angle is in [-pi/2, pi/2].
  Vec3 ToEulerXYZ() const;
  Vec3 ToRotationVector() const;
  Eigen::Matrix3d ToMatrix() const { return q_.toRotationMatrix(); }

  const Eigen::Quaterniond& quaternion() const { return q_; }
  double w() const { return q_.w(); }
  double x() const { return q_.x(); }
  double y() const { return q_.y(); }
  double z() const { return q_.z(); }

  // Rotation angle in [0, pi].
  double angle() const;
  Vec3 axis_x() const { return q_ * Vec3::UnitX(); }
  Vec3 axis_y() const { return q_ * Vec3::UnitY(); }
  Vec3 axis_z() const { return q_ * Vec3::UnitZ(); }

  Rotation inverse() const;
  Rotation operator*(const Rotation& other) const;
  Vec3 operator*(const Vec3& v) const { return q_ * v; }

 private:
  explicit Rotation(const Eigen::Quaterniond& q) : q_(q) {}
  Eigen::Quaterniond q_;
};

// Geodesic distance between two rotations, radians in [0, pi].
double AngularDistance(const Rotation& a, const Rotation& b);

// Shortest-arc spherical linear interpolation, u in [0, 1].
Rotation Slerp(const Rotation& r0, const Rotation& r1, double u);

// Camera-style frame whose z-axis is `forward` and whose y-axis lies in the
// plane of `forward` and `up_hint` (x = up_hint x forward, normalized).
// Throws DegenerateFrame when the two are parallel.
Rotation LookRotation(const Vec3& forward, const Vec3& up_hint);

// Unsigned angle in [0, pi]. Throws ZeroVector on degenerate input.
double AngleBetween(const Vec3& a, const Vec3& b);

class Pose {
 public:
  Pose() : translation_(Vec3::Zero()) {}
  Pose(const Rotation& rotation, const Vec3& translation)
      : rotation_(rotation), translation_(translation) {}

  static Pose Identity() { return Pose(); }
  static Pose FromTranslation(const Vec3& t) { return Pose(Rotation(), t); }
  static Pose FromMatrix(const Eigen::Matrix4d& m);
  // 16 numbers, row-major 4x4 homogeneous matrix.
  static Pose FromRowMajor(std::span<const double, 16> values);

  Eigen::Matrix4d ToMatrix() const;
  std::array<double, 16> ToRowMajor() const;

  const Rotation& rotation() const { return rotation_; }
  const Vec3& translation() const { return translation_; }

  Pose inverse() const;
  // (a * b) * p == a * (b * p)
  Pose operator*(const Pose& other) const;
  Vec3 operator*(const Vec3& p) const {
    return rotation_ * p + translation_;
  }

 private:
  Rotation rotation_;
  Vec3 translation_;
};

inline Pose Compose(const Pose& a, const Pose& b) { return a * b; }
inline Pose Inverse(const Pose& p) { return p.inverse(); }

// Transform taking `from` to `to`, expressed in the frame of `from`:
// from * RelativeTransform(from, to) == to.
Pose RelativeTransform(const Pose& from, const Pose& to);

// Relative motion label: intrinsic XYZ Euler angles (radians) plus a
// translation (meters). Serialized as [rx, ry, rz, tx, ty, tz].
struct EulerAction {
  Vec3 rotation = Vec3::Zero();
  Vec3 translation = Vec3::Zero();

  static EulerAction FromPose(const Pose& pose);
  static EulerAction FromArray(std::span<const double, 6> values);
  Pose ToPose() const;
  std::array<double, 6> ToArray() const;
  bool AllFinite() const;
};

}  // namespace h2r

#endif  // H2R_GEOMETRY_H_
