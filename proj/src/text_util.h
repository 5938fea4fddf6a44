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

// Internal helpers for the line-oriented text formats.

#ifndef H2R_SRC_TEXT_UTIL_H_
#define H2R_SRC_TEXT_UTIL_H_

#include <charconv>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace h2r::internal {

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

// Splits on spaces and tabs, dropping empty fields.
std::vector<std::string_view> SplitFields(std::string_view line);

// Line reader that skips blank lines and '#' comments and tracks line
// numbers for error messages.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}
  // Returns false at end of input.
  bool Next(std::string_view* line);
  int line_number() const { return line_number_; }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  int line_number_ = 0;
};

// Full-field parse; throws ParseError naming `what` on failure.
double ParseDouble(std::string_view field, std::string_view what);
long long ParseInt(std::string_view field, std::string_view what);

// Shortest representation that parses back to the same double.
void AppendDouble(std::string* out, double value);

}  // namespace h2r::internal

#endif  // H2R_SRC_TEXT_UTIL_H_
