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

#ifndef H2R_IMAGE_IO_H_
#define H2R_IMAGE_IO_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "h2r/renderer.h"

namespace h2r {

// Binary PPM (P6), 8-bit RGB.
std::string EncodePpm(int width, int height, std::span<const uint8_t> rgb);
// Binary PGM (P5); a 0/1 mask is written as 0/255.
std::string EncodeMaskPgm(int width, int height, std::span<const uint8_t> mask);
// Little-endian uint32 width, uint32 height, then width*height float32.
std::string EncodeDepth(int width, int height, std::span<const float> depth);

struct DepthRaster {
  int width = 0;
  int height = 0;
  std::vector<float> values;
};
DepthRaster DecodeDepth(std::string_view bytes);

// Writes <stem>_rgb.ppm, <stem>_object_mask.pgm, <stem>_hand_mask.pgm and
// <stem>_depth.bin into `dir`.
void WriteFrame(const RenderedFrame& frame, const std::filesystem::path& dir,
                const std::string& stem);

}  // namespace h2r

#endif  // H2R_IMAGE_IO_H_
