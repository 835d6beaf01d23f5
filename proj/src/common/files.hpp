// Copyright 2026 The mtcgen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MTCGEN_COMMON_FILES_HPP_
#define MTCGEN_COMMON_FILES_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace mtcgen {

// Throws Error(kIo) on failure.
std::string ReadFile(const std::filesystem::path& path);
// Creates parent directories as needed. Throws Error(kIo) on failure.
void WriteFile(const std::filesystem::path& path, std::string_view contents);

// Regular files in `dir` (non-recursive) with the given extension, sorted by
// path. Returns an empty list when `dir` does not exist.
std::vector<std::filesystem::path> ListFiles(const std::filesystem::path& dir,
                                             std::string_view extension);

}  // namespace mtcgen

#endif  // MTCGEN_COMMON_FILES_HPP_
