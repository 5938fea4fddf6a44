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

#ifndef H2R_SPATIAL_INDEX_H_
#define H2R_SPATIAL_INDEX_H_

#include <cstdint>
#include <span>
#include <vector>

#include "h2r/geometry.h"

namespace h2r {

// Uniform voxel grid over a static point set answering exact
// nearest-distance queries. Points are bucketed by cell; a query walks
// Chebyshev rings of cells outward from the query cell and stops once the
// best distance found cannot be beaten by any unvisited ring.
class VoxelGridIndex {
 public:
  static constexpr double kDefaultCellSize = 0.05;

  explicit VoxelGridIndex(std::span<const Vec3> points,
                          double cell_size = kDefaultCellSize);

  // Exact minimum Euclidean distance from `query` to the indexed points.
  // Returns +infinity for an empty index.
  double MinDistance(const Vec3& query) const;

  size_t size() const { return points_.size(); }
  double cell_size() const { return cell_size_; }

 private:
  int64_t CellIndex(int64_t ix, int64_t iy, int64_t iz) const {
    return (iz * dims_[1] + iy) * dims_[0] + ix;
  }

  double cell_size_;
  Vec3 origin_ = Vec3::Zero();
  std::array<int64_t, 3> dims_ = {0, 0, 0};
  // Points sorted by cell; cell c owns [cell_start_[c], cell_start_[c + 1]).
  std::vector<Vec3> points_;
  std::vector<uint32_t> cell_start_;
};

}  // namespace h2r

#endif  // H2R_SPATIAL_INDEX_H_
