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

#include "odic/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "odic/error.hpp"
#include "odic/image_io.hpp"

namespace odic {
namespace fs = std::filesystem;

namespace {

std::vector<std::string> SplitFields(const std::string& line) {
  std::vector<std::string> out;
  if (line.find('\t') != std::string::npos) {
    std::string f;
    std::istringstream ss(line);
    while (std::getline(ss, f, '\t'))
      if (!f.empty()) out.push_back(f);
  } else {
    std::istringstream ss(line);
    std::string f;
    while (ss >> f) out.push_back(f);
  }
  return out;
}

std::string Resolve(const std::string& p, const std::string& base) {
  if (base.empty() || fs::path(p).is_absolute()) return p;
  return (fs::path(base) / p).string();
}

}  // namespace

CorpusManifest ParseManifest(const std::string& text,
                             const std::string& base_dir) {
  CorpusManifest m;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::vector<std::string> f = SplitFields(line);
    if (f.size() != 4)
      throw ArgumentError("manifest line " + std::to_string(line_no) +
                          ": expected 4 fields");
    ManifestRecord r;
    r.image = Resolve(f[0], base_dir);
    r.saliency = Resolve(f[1], base_dir);
    if (f[2] != "-") r.fixations = Resolve(f[2], base_dir);
    r.split = f[3];
    m.records.push_back(std::move(r));
  }
  return m;
}

CorpusManifest LoadManifest(const std::string& path, bool check_dimensions) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  CorpusManifest m =
      ParseManifest(ss.str(), fs::path(path).parent_path().string());
  for (const ManifestRecord& r : m.records) {
    for (const std::string* p : {&r.image, &r.saliency}) {
      if (!fs::exists(*p)) throw IoError("manifest references missing " + *p);
    }
    if (r.fixations && !fs::exists(*r.fixations))
      throw IoError("manifest references missing " + *r.fixations);
    if (!check_dimensions) continue;
    const ErpImage img = LoadImage(r.image);
    const SaliencyMap sal = LoadSaliency(r.saliency);
    if (sal.width() != img.width() || sal.height() != img.height())
      throw ArgumentError("saliency size differs from image: " + r.saliency);
    if (r.fixations) {
      const FixationMap fix = LoadFixations(*r.fixations);
      if (fix.width() != img.width() || fix.height() != img.height())
        throw ArgumentError("fixation size differs from image: " +
                            *r.fixations);
    }
  }
  return m;
}

std::string FormatManifest(const CorpusManifest& m) {
  std::string out;
  for (const ManifestRecord& r : m.records) {
    out += r.image + "\t" + r.saliency + "\t" + r.fixations.value_or("-") +
           "\t" + r.split + "\n";
  }
  return out;
}

}  // namespace odic
