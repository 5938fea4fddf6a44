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

#include "h2r/spatial_index.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace h2r {

VoxelGridIndex::VoxelGridIndex(std::span<const Vec3> points, double cell_size)
    : cell_size_(cell_size) {
  if (points.empty()) return;
  Vec3 lo = points.front();
  Vec3 hi = points.front();
  for (const Vec3& p : points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  origin_ = lo;
  for (int a = 0; a < 3; ++a) {
    dims_[a] = static_cast<int64_t>(std::floor((hi[a] - lo[a]) / cell_size_)) + 1;
  }
  const int64_t num_cells = dims_[0] * dims_[1] * dims_[2];

  std::vector<int64_t> cell_of(points.size());
  std::vector<uint32_t> counts(num_cells + 1, 0);
  for (size_t i = 0; i < points.size(); ++i) {
    std::array<int64_t, 3> c;
    for (int a = 0; a < 3; ++a) {
      c[a] = std::clamp<int64_t>(
          static_cast<int64_t>(std::floor((points[i][a] - lo[a]) / cell_size_)),
          0, dims_[a] - 1);
    }
    cell_of[i] = CellIndex(c[0], c[1], c[2]);
    ++counts[cell_of[i] + 1];
  }
  for (int64_t c = 0; c < num_cells; ++c) counts[c + 1] += counts[c];
  cell_start_ = counts;
  points_.resize(points.size());
  std::vector<uint32_t> cursor(counts.begin(), counts.end() - 1);
  for (size_t i = 0; i < points.size(); ++i) {
    points_[cursor[cell_of[i]]++] = points[i];
  }
}

double VoxelGridIndex::MinDistance(const Vec3& query) const {
  double best_sq = std::numeric_limits<double>::infinity();
  if (points_.empty()) return best_sq;

  std::array<int64_t, 3> center;
  for (int a = 0; a < 3; ++a) {
    const double f = std::floor((query[a] - origin_[a]) / cell_size_);
    center[a] = static_cast<int64_t>(std::clamp(
        f, 0.0, static_cast<double>(dims_[a] - 1)));
  }
  const int64_t max_ring =
      std::max({dims_[0], dims_[1], dims_[2]});

  for (int64_t ring = 0; ring <= max_ring; ++ring) {
    const int64_t z0 = std::max<int64_t>(center[2] - ring, 0);
    const int64_t z1 = std::min<int64_t>(center[2] + ring, dims_[2] - 1);
    const int64_t y0 = std::max<int64_t>(center[1] - ring, 0);
    const int64_t y1 = std::min<int64_t>(center[1] + ring, dims_[1] - 1);
    const int64_t x0 = std::max<int64_t>(center[0] - ring, 0);
    const int64_t x1 = std::min<int64_t>(center[0] + ring, dims_[0] - 1);
    for (int64_t iz = z0; iz <= z1; ++iz) {
      const bool z_edge = std::abs(iz - center[2]) == ring;
      for (int64_t iy = y0; iy <= y1; ++iy) {
        const bool yz_edge = z_edge || std::abs(iy - center[1]) == ring;
        for (int64_t ix = x0; ix <= x1; ++ix) {
          // Only the shell of this ring; inner cells were already visited.
          if (!yz_edge && std::abs(ix - center[0]) != ring) {
            ix = center[0] + ring - 1;
            continue;
          }
          const int64_t c = CellIndex(ix, iy, iz);
          for (uint32_t k = cell_start_[c]; k < cell_start_[c + 1]; ++k) {
            best_sq = std::min(best_sq, (points_[k] - query).squaredNorm());
          }
        }
      }
    }
    // Any cell in ring r + 1 is at least r cells away from the query.
    const double bound = static_cast<double>(ring) * cell_size_;
    if (best_sq <= bound * bound) break;
  }
  return std::sqrt(best_sq);
}

}  // namespace h2r
