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

#include "h2r/policies.h"

namespace h2r {

PolicyDecision OracleReplayPolicy::Decide(const RenderedFrame&) {
  if (next_ >= actions_.size()) return PolicyDecision{EulerAction{}, 1.0};
  return PolicyDecision{actions_[next_++], 0.0};
}

std::unique_ptr<Policy> OracleReplayPolicy::Clone() const {
  // Fresh episode state.
  return std::make_unique<OracleReplayPolicy>(actions_);
}

PolicyDecision IbvsMaskDecision(const RenderedFrame& frame,
                                const IbvsGains& gains) {
  double sum_u = 0.0;
  double sum_v = 0.0;
  size_t area = 0;
  for (int v = 0; v < frame.height; ++v) {
    for (int u = 0; u < frame.width; ++u) {
      if (frame.object_mask[frame.PixelIndex(u, v)]) {
        sum_u += u;
        sum_v += v;
        ++area;
      }
    }
  }
  PolicyDecision decision;
  if (area == 0) return decision;

  const double centroid_u = sum_u / area;
  const double centroid_v = sum_v / area;
  const double center_u = 0.5 * frame.width;
  const double center_v = 0.5 * frame.height;
  // Camera x/y run along image u/v, so stepping toward the centroid's offset
  // shifts the object back toward the center.
  decision.action.translation =
      Vec3(gains.gain * (centroid_u - center_u),
           gains.gain * (centroid_v - center_v), gains.advance);
  const double area_ratio =
      static_cast<double>(area) / (static_cast<double>(frame.width) * frame.height);
  decision.confidence = area_ratio >= gains.area_threshold ? 1.0 : 0.0;
  return decision;
}

}  // namespace h2r
