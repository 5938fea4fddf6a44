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

#ifndef H2R_RENDERER_H_
#define H2R_RENDERER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "Eigen/Core"
#include "h2r/geometry.h"
#include "h2r/scene.h"

namespace h2r {

// Pinhole model. Camera frame: x right, y down, z forward. Pixel (i, j) has
// its center at u = i, v = j.
struct CameraIntrinsics {
  double fx = 525.0;
  double fy = 525.0;
  double cx = 320.0;
  double cy = 240.0;
  int width = 640;
  int height = 480;
  double near = 0.01;

  void Validate() const;
  bool operator==(const CameraIntrinsics&) const = default;
};

struct SplatParams {
  double point_radius = 0.005;  // m; sets sigma_px = radius * f / z
  double opacity = 0.8;         // alpha at the splat center
  double min_sigma_px = 0.5;
  double max_sigma_px = 8.0;
  double cutoff_sigmas = 3.0;   // footprint truncation
};

struct RenderedFrame {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> rgb;          // row-major, 3 bytes per pixel
  std::vector<uint8_t> object_mask;  // 0 / 1
  std::vector<uint8_t> hand_mask;    // 0 / 1
  std::vector<float> depth;          // camera z of nearest splat, 0 = empty

  size_t PixelIndex(int u, int v) const {
    return static_cast<size_t>(v) * width + u;
  }
};

struct Projection {
  Eigen::Vector2d pixel;
  double depth = 0.0;
};

// Projects a scene point through `camera` (camera-to-scene pose). Empty when
// the point is in front of the near plane or outside the image.
std::optional<Projection> ProjectPoint(const Vec3& point, const Pose& camera,
                                       const CameraIntrinsics& intrinsics);

// Depth-sorted, back-to-front alpha compositing of isotropic Gaussian splats
// over black. Masks are hard discs of radius max(sigma, sqrt(0.5)) from the
// object and hand clouds only. `num_threads` = 0 picks the hardware concurrency; the output
// does not depend on it.
RenderedFrame Render(const SceneAssets& scene, const Pose& camera,
                     const CameraIntrinsics& intrinsics,
                     const SplatParams& params = {}, int num_threads = 0);

// Zeroes rgb outside the union of the object and hand masks.
RenderedFrame MaskedInput(const RenderedFrame& frame);

}  // namespace h2r

#endif  // H2R_RENDERER_H_
