// Copyright 2026 The ODIC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace odic {

// One line per record, tab separated (or whitespace when no tab is present):
//   image  saliency  fixations-or-dash  split
//
//   image_path  saliency_path  fixation_path|-  split
//
// Blank lines and lines starting with '#' are ignored. Relative paths are
// resolved against the manifest's directory.
struct ManifestRecord {
  std::string image;
  std::string saliency;
  std::optional<std::string> fixations;
  std::string split;
};

struct CorpusManifest {
  std::vector<ManifestRecord> records;
};

CorpusManifest ParseManifest(const std::string& text,
                             const std::string& base_dir = "");

// Parses and checks that every referenced file exists. When
// `check_dimensions` is set, each record's rasters are loaded and must share
// width and height.
CorpusManifest LoadManifest(const std::string& path,
                            bool check_dimensions = true);

std::string FormatManifest(const CorpusManifest& m);

}  // namespace odic
