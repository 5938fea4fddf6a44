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

#include "h2r/image_io.h"

#include <bit>
#include <cstring>

#include "h2r/error.h"
#include "text_util.h"

namespace h2r {
namespace {

void AppendU32(std::string* out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out->push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

uint32_t ReadU32(std::string_view bytes, size_t offset) {
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    v |= static_cast<uint32_t>(static_cast<uint8_t>(bytes[offset + i])) << (8 * i);
  }
  return v;
}

}  // namespace

std::string EncodePpm(int width, int height, std::span<const uint8_t> rgb) {
  std::string out = "P6\n" + std::to_string(width) + " " +
                    std::to_string(height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(rgb.data()), rgb.size());
  return out;
}

std::string EncodeMaskPgm(int width, int height, std::span<const uint8_t> mask) {
  std::string out = "P5\n" + std::to_string(width) + " " +
                    std::to_string(height) + "\n255\n";
  out.reserve(out.size() + mask.size());
  for (uint8_t m : mask) out.push_back(m ? static_cast<char>(255) : 0);
  return out;
}

std::string EncodeDepth(int width, int height, std::span<const float> depth) {
  std::string out;
  out.reserve(8 + 4 * depth.size());
  AppendU32(&out, static_cast<uint32_t>(width));
  AppendU32(&out, static_cast<uint32_t>(height));
  for (float d : depth) AppendU32(&out, std::bit_cast<uint32_t>(d));
  return out;
}

DepthRaster DecodeDepth(std::string_view bytes) {
  if (bytes.size() < 8) throw Error(ErrorKind::kParseError, "depth header truncated");
  DepthRaster raster;
  raster.width = static_cast<int>(ReadU32(bytes, 0));
  raster.height = static_cast<int>(ReadU32(bytes, 4));
  const size_t n = static_cast<size_t>(raster.width) * raster.height;
  if (bytes.size() != 8 + 4 * n) {
    throw Error(ErrorKind::kParseError, "depth raster size mismatch");
  }
  raster.values.resize(n);
  for (size_t i = 0; i < n; ++i) {
    raster.values[i] = std::bit_cast<float>(ReadU32(bytes, 8 + 4 * i));
  }
  return raster;
}

void WriteFrame(const RenderedFrame& frame, const std::filesystem::path& dir,
                const std::string& stem) {
  internal::WriteFile(dir / (stem + "_rgb.ppm"),
                      EncodePpm(frame.width, frame.height, frame.rgb));
  internal::WriteFile(dir / (stem + "_object_mask.pgm"),
                      EncodeMaskPgm(frame.width, frame.height, frame.object_mask));
  internal::WriteFile(dir / (stem + "_hand_mask.pgm"),
                      EncodeMaskPgm(frame.width, frame.height, frame.hand_mask));
  internal::WriteFile(dir / (stem + "_depth.bin"),
                      EncodeDepth(frame.width, frame.height, frame.depth));
}

}  // namespace h2r
