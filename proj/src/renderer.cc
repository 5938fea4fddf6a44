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

#include "h2r/renderer.h"

#include <algorithm>
#include <cmath>
#include <thread>

#include "h2r/error.h"

namespace h2r {
namespace {

enum SplatKind : uint8_t { kObjectSplat, kHandSplat, kBackgroundSplat };

struct Splat {
  double u;
  double v;
  double depth;
  double sigma;
  Eigen::Vector3f color;
  uint32_t index;
  SplatKind kind;
};

void CompositeRows(const std::vector<Splat>& splats, const SplatParams& params,
                   int row_begin, int row_end, std::vector<float>* color,
                   RenderedFrame* frame) {
  std::vector<float> gx;
  for (const Splat& s : splats) {
    const double reach = params.cutoff_sigmas * s.sigma;
    const int x0 = std::max(0, static_cast<int>(std::ceil(s.u - reach)));
    const int x1 =
        std::min(frame->width - 1, static_cast<int>(std::floor(s.u + reach)));
    const int y0 = std::max(row_begin, static_cast<int>(std::ceil(s.v - reach)));
    const int y1 =
        std::min(row_end - 1, static_cast<int>(std::floor(s.v + reach)));
    if (x0 > x1 || y0 > y1) continue;

    const double inv_two_var = 1.0 / (2.0 * s.sigma * s.sigma);
    const double reach_sq = reach * reach;
    // At least the half-diagonal of a pixel, so the pixel holding the
    // projected center is always covered.
    const double mask_sq = std::max(s.sigma * s.sigma, 0.5);
    gx.resize(x1 - x0 + 1);
    for (int x = x0; x <= x1; ++x) {
      const double dx = x - s.u;
      gx[x - x0] = static_cast<float>(std::exp(-dx * dx * inv_two_var));
    }
    const float depth = static_cast<float>(s.depth);
    for (int y = y0; y <= y1; ++y) {
      const double dy = y - s.v;
      const double dy_sq = dy * dy;
      const float alpha_row =
          static_cast<float>(params.opacity * std::exp(-dy_sq * inv_two_var));
      const size_t row = static_cast<size_t>(y) * frame->width;
      for (int x = x0; x <= x1; ++x) {
        const double dx = x - s.u;
        const double d_sq = dx * dx + dy_sq;
        if (d_sq > reach_sq) continue;
        const size_t p = row + x;
        const float a = alpha_row * gx[x - x0];
        float* c = &(*color)[3 * p];
        c[0] = a * s.color[0] + (1.0f - a) * c[0];
        c[1] = a * s.color[1] + (1.0f - a) * c[1];
        c[2] = a * s.color[2] + (1.0f - a) * c[2];
        frame->depth[p] = depth;
        if (d_sq <= mask_sq) {
          if (s.kind == kObjectSplat) frame->object_mask[p] = 1;
          if (s.kind == kHandSplat) frame->hand_mask[p] = 1;
        }
      }
    }
  }
}

}  // namespace

void CameraIntrinsics::Validate() const {
  if (!(fx > 0.0 && fy > 0.0 && width > 0 && height > 0 && cx > 0.0 &&
        cx < width && cy > 0.0 && cy < height && near > 0.0)) {
    throw Error(ErrorKind::kConfigError, "invalid camera intrinsics");
  }
}

std::optional<Projection> ProjectPoint(const Vec3& point, const Pose& camera,
                                       const CameraIntrinsics& k) {
  const Vec3 pc = camera.inverse() * point;
  if (pc.z() < k.near) return std::nullopt;
  const double u = k.fx * pc.x() / pc.z() + k.cx;
  const double v = k.fy * pc.y() / pc.z() + k.cy;
  if (u < -0.5 || u >= k.width - 0.5 || v < -0.5 || v >= k.height - 0.5) {
    return std::nullopt;
  }
  return Projection{Eigen::Vector2d(u, v), pc.z()};
}

RenderedFrame Render(const SceneAssets& scene, const Pose& camera,
                     const CameraIntrinsics& k, const SplatParams& params,
                     int num_threads) {
  k.Validate();
  RenderedFrame frame;
  frame.width = k.width;
  frame.height = k.height;
  const size_t num_pixels = static_cast<size_t>(k.width) * k.height;
  frame.rgb.assign(3 * num_pixels, 0);
  frame.object_mask.assign(num_pixels, 0);
  frame.hand_mask.assign(num_pixels, 0);
  frame.depth.assign(num_pixels, 0.0f);

  const Eigen::Matrix3d world_to_camera =
      camera.rotation().ToMatrix().transpose();
  const Vec3 origin = camera.translation();
  const double focal = 0.5 * (k.fx + k.fy);

  std::vector<Splat> splats;
  uint32_t index = 0;
  auto add_cloud = [&](const PointCloud& cloud, SplatKind kind) {
    for (size_t i = 0; i < cloud.size(); ++i, ++index) {
      const Vec3 pc = world_to_camera * (cloud.points[i] - origin);
      if (pc.z() < k.near) continue;
      const double u = k.fx * pc.x() / pc.z() + k.cx;
      const double v = k.fy * pc.y() / pc.z() + k.cy;
      const double sigma =
          std::clamp(params.point_radius * focal / pc.z(), params.min_sigma_px,
                     params.max_sigma_px);
      const double reach = params.cutoff_sigmas * sigma;
      if (u + reach < 0.0 || u - reach > k.width - 1 || v + reach < 0.0 ||
          v - reach > k.height - 1) {
        continue;
      }
      splats.push_back(Splat{u, v, pc.z(), sigma, cloud.colors[i].cast<float>(),
                             index, kind});
    }
  };
  add_cloud(scene.object(), kObjectSplat);
  add_cloud(scene.hand(), kHandSplat);
  if (scene.background()) add_cloud(*scene.background(), kBackgroundSplat);

  // Painter's order: farthest first, ties by point index.
  std::sort(splats.begin(), splats.end(), [](const Splat& a, const Splat& b) {
    if (a.depth != b.depth) return a.depth > b.depth;
    return a.index < b.index;
  });

  std::vector<float> color(3 * num_pixels, 0.0f);
  int threads = num_threads > 0
                    ? num_threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, k.height);
  if (threads == 1) {
    CompositeRows(splats, params, 0, k.height, &color, &frame);
  } else {
    // Row bands are disjoint, so workers never touch the same pixel.
    std::vector<std::jthread> workers;
    for (int t = 0; t < threads; ++t) {
      const int begin = k.height * t / threads;
      const int end = k.height * (t + 1) / threads;
      workers.emplace_back([&, begin, end] {
        CompositeRows(splats, params, begin, end, &color, &frame);
      });
    }
  }

  for (size_t i = 0; i < color.size(); ++i) {
    frame.rgb[i] = static_cast<uint8_t>(
        std::lround(std::clamp(color[i], 0.0f, 1.0f) * 255.0f));
  }
  return frame;
}

RenderedFrame MaskedInput(const RenderedFrame& frame) {
  RenderedFrame out = frame;
  for (size_t p = 0; p < out.object_mask.size(); ++p) {
    if (!out.object_mask[p] && !out.hand_mask[p]) {
      out.rgb[3 * p] = out.rgb[3 * p + 1] = out.rgb[3 * p + 2] = 0;
    }
  }
  return out;
}

}  // namespace h2r
