// Copyright 2026 The srbench Authors
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

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "srbench/image.h"

namespace srbench::bench {

inline constexpr int kDatasetManifestVersion = 1;

// On-disk layout:
//   <root>/HR/<stem>.png
//   <root>/LR/x<scale>/<stem>.png
//   <root>/manifest.json
// LR and HR files pair up by identical stems.
struct DatasetSpec {
  std::string name;
  std::filesystem::path root;
  std::vector<std::string> hr_stems;            // sorted
  std::map<int, std::vector<std::string>> lr;   // scale -> sorted stems

  std::filesystem::path hr_path(const std::string& stem) const;
  std::filesystem::path lr_path(int scale, const std::string& stem) const;
  bool has_scale(int scale) const { return lr.count(scale) != 0; }
};

// Scans the layout under `root`. The name comes from manifest.json when
// present, otherwise from the directory name. Throws if an LR stem has no HR
// counterpart.
DatasetSpec open_dataset(const std::filesystem::path& root);

struct PrepareOptions {
  std::string name;   // defaults to the output directory name
  bool force = false; // overwrite files whose checksum differs
};

struct PrepareResult {
  DatasetSpec dataset;
  int files_written = 0;
  int files_skipped = 0;
};

// Copies HR images into <out_root>/HR (unless they already live there),
// generates LR/x<s> with downscale_hr, and writes a manifest with per-file
// SHA-256 checksums and the HR crop used for each LR file. Files that
// already exist with the expected checksum are left untouched; a differing
// file is an error unless `force` is set.
PrepareResult prepare_dataset(const std::filesystem::path& hr_dir,
                              const std::filesystem::path& out_root, const std::vector<int>& scales,
                              const PrepareOptions& options = {});

// The HR region that corresponds to an LR image at `scale`: a centered crop
// of lr_width*scale x lr_height*scale.
CropRect hr_region(int hr_width, int hr_height, int lr_width, int lr_height, int scale);

}  // namespace srbench::bench
