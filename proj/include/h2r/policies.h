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

#ifndef H2R_POLICIES_H_
#define H2R_POLICIES_H_

#include <memory>
#include <string_view>
#include <vector>

#include "h2r/rollout.h"

namespace h2r {

// Replays a stored demonstration: emits actions[i] on query i and confidence
// 1 once every action has been emitted (the pregrasp observation).
class OracleReplayPolicy : public Policy {
 public:
  explicit OracleReplayPolicy(std::vector<EulerAction> actions)
      : actions_(std::move(actions)) {}

  std::string_view name() const override { return "oracle"; }
  PolicyDecision Decide(const RenderedFrame& masked_frame) override;
  std::unique_ptr<Policy> Clone() const override;

 private:
  std::vector<EulerAction> actions_;
  size_t next_ = 0;
};

// Constant zero action with a fixed confidence.
class ZeroPolicy : public Policy {
 public:
  explicit ZeroPolicy(double confidence = 0.0) : confidence_(confidence) {}

  std::string_view name() const override { return "zero"; }
  PolicyDecision Decide(const RenderedFrame&) override {
    return PolicyDecision{EulerAction{}, confidence_};
  }
  std::unique_ptr<Policy> Clone() const override {
    return std::make_unique<ZeroPolicy>(*this);
  }

 private:
  double confidence_;
};

struct IbvsGains {
  double gain = 0.001;           // m per pixel of centroid error
  double advance = 0.04;         // m along the optical axis per step
  double area_threshold = 0.15;  // object mask area / image area
};

// Mask-centroid visual servoing baseline. Translates in the image plane so
// the object-mask centroid moves toward the image center (width/2,
// height/2), advances along the optical axis, never rotates, and reports
// confidence 1 once the mask covers area_threshold of the image. An empty
// mask yields a zero action with confidence 0.
PolicyDecision IbvsMaskDecision(const RenderedFrame& frame,
                                const IbvsGains& gains);

class IbvsMaskPolicy : public Policy {
 public:
  explicit IbvsMaskPolicy(IbvsGains gains = {}) : gains_(gains) {}

  std::string_view name() const override { return "ibvs_mask"; }
  PolicyDecision Decide(const RenderedFrame& masked_frame) override {
    return IbvsMaskDecision(masked_frame, gains_);
  }
  std::unique_ptr<Policy> Clone() const override {
    return std::make_unique<IbvsMaskPolicy>(*this);
  }

 private:
  IbvsGains gains_;
};

}  // namespace h2r

#endif  // H2R_POLICIES_H_
