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

#include "srbench/bench/dataset.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "srbench/error.h"
#include "srbench/hash.h"
#include "srbench/png_io.h"
#include "srbench/resample.h"

namespace srbench::bench {
namespace fs = std::filesystem;

namespace {

bool is_png(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".png";
}

// Sorted PNG files directly inside `dir`.
std::vector<fs::path> list_pngs(const fs::path& dir) {
  std::vector<fs::path> out;
  std::error_code ec;
  for (const auto& e : fs::directory_iterator(dir, ec)) {
    if (e.is_regular_file() && is_png(e.path())) out.push_back(e.path());
  }
  if (ec) throw Error(ErrorKind::kIo, fmt::format("cannot list {}: {}", dir.string(), ec.message()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint8_t> read_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, fmt::format("cannot read {}", p.string()));
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Writes `bytes` unless an identical file already exists. Returns true when
// the file was written.
bool place_file(const fs::path& target, const std::vector<std::uint8_t>& bytes, bool force) {
  if (fs::exists(target)) {
    if (sha256_file(target) == sha256_hex(bytes)) return false;
    if (!force) {
      throw Error(ErrorKind::kIo,
                  fmt::format("{} exists with a different checksum; rerun with --force to "
                              "overwrite",
                              target.string()));
    }
  }
  fs::create_directories(target.parent_path());
  std::ofstream out(target, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::kIo, fmt::format("cannot write {}", target.string()));
  return true;
}

std::string manifest_name(const fs::path& root) {
  const fs::path manifest = root / "manifest.json";
  if (fs::exists(manifest)) {
    std::ifstream in(manifest);
    try {
      const auto j = nlohmann::json::parse(in);
      if (j.contains("name") && j["name"].is_string()) return j["name"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::kFormat, fmt::format("{}: {}", manifest.string(), e.what()));
    }
  }
  return fs::absolute(root).lexically_normal().filename().string();
}

}  // namespace

fs::path DatasetSpec::hr_path(const std::string& stem) const {
  return root / "HR" / (stem + ".png");
}

fs::path DatasetSpec::lr_path(int scale, const std::string& stem) const {
  return root / "LR" / fmt::format("x{}", scale) / (stem + ".png");
}

CropRect hr_region(int hr_width, int hr_height, int lr_width, int lr_height, int scale) {
  const int w = lr_width * scale;
  const int h = lr_height * scale;
  if (w > hr_width || h > hr_height) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("LR {}x{} at scale {} exceeds HR {}x{}", lr_width, lr_height, scale,
                            hr_width, hr_height));
  }
  return {(hr_width - w) / 2, (hr_height - h) / 2, w, h};
}

DatasetSpec open_dataset(const fs::path& root) {
  DatasetSpec ds;
  ds.root = root;
  const fs::path hr_dir = root / "HR";
  if (!fs::is_directory(hr_dir)) {
    throw Error(ErrorKind::kIo, fmt::format("dataset {} has no HR/ directory", root.string()));
  }
  ds.name = manifest_name(root);
  for (const auto& p : list_pngs(hr_dir)) ds.hr_stems.push_back(p.stem().string());
  const std::set<std::string> hr(ds.hr_stems.begin(), ds.hr_stems.end());

  const fs::path lr_dir = root / "LR";
  std::error_code ec;
  if (fs::is_directory(lr_dir)) {
    for (const auto& e : fs::directory_iterator(lr_dir, ec)) {
      const std::string dirname = e.path().filename().string();
      if (!e.is_directory() || dirname.size() < 2 || dirname[0] != 'x') continue;
      int scale = 0;
      try {
        std::size_t used = 0;
        scale = std::stoi(dirname.substr(1), &used);
        if (used != dirname.size() - 1) continue;
      } catch (const std::exception&) {
        continue;
      }
      auto& stems = ds.lr[scale];
      for (const auto& p : list_pngs(e.path())) {
        const std::string stem = p.stem().string();
        if (!hr.count(stem)) {
          throw Error(ErrorKind::kFormat,
                      fmt::format("{} has no matching HR image", p.string()));
        }
        stems.push_back(stem);
      }
    }
  }
  return ds;
}

PrepareResult prepare_dataset(const fs::path& hr_dir, const fs::path& out_root,
                              const std::vector<int>& scales, const PrepareOptions& options) {
  const auto sources = list_pngs(hr_dir);
  if (sources.empty()) {
    throw Error(ErrorKind::kIo, fmt::format("no PNG files in {}", hr_dir.string()));
  }
  for (int s : scales) {
    if (s < 1) throw Error(ErrorKind::kInvalidArgument, fmt::format("invalid scale {}", s));
  }
  PrepareResult result;
  const fs::path hr_out = out_root / "HR";
  fs::create_directories(hr_out);
  const bool in_place = fs::equivalent(hr_dir, hr_out);

  nlohmann::ordered_json images = nlohmann::ordered_json::array();
  for (const auto& src : sources) {
    const std::string stem = src.stem().string();
    const auto hr_bytes = read_bytes(src);
    const fs::path hr_target = hr_out / (stem + ".png");
    if (!in_place) {
      if (place_file(hr_target, hr_bytes, options.force)) {
        ++result.files_written;
      } else {
        ++result.files_skipped;
      }
    }
    const PlanarImage hr = decode_png(hr_bytes);

    nlohmann::ordered_json entry;
    entry["stem"] = stem;
    entry["hr"] = {{"path", fmt::format("HR/{}.png", stem)},
                   {"sha256", sha256_hex(hr_bytes)},
                   {"width", hr.width()},
                   {"height", hr.height()}};
    nlohmann::ordered_json lr_entries = nlohmann::ordered_json::object();
    for (int s : scales) {
      const CropRect crop = center_crop_rect(hr.width(), hr.height(), s);
      const auto lr_bytes = encode_png(downscale_hr(hr, s));
      const std::string rel = fmt::format("LR/x{}/{}.png", s, stem);
      if (place_file(out_root / rel, lr_bytes, options.force)) {
        ++result.files_written;
      } else {
        ++result.files_skipped;
      }
      lr_entries[fmt::format("x{}", s)] = {
          {"path", rel},
          {"sha256", sha256_hex(lr_bytes)},
          {"width", crop.width / s},
          {"height", crop.height / s},
          {"crop", {{"x", crop.x}, {"y", crop.y}, {"width", crop.width}, {"height", crop.height}}}};
    }
    entry["lr"] = std::move(lr_entries);
    images.push_back(std::move(entry));
  }

  std::vector<int> sorted_scales = scales;
  std::sort(sorted_scales.begin(), sorted_scales.end());
  sorted_scales.erase(std::unique(sorted_scales.begin(), sorted_scales.end()), sorted_scales.end());
  nlohmann::ordered_json manifest;
  manifest["schema_version"] = kDatasetManifestVersion;
  manifest["name"] = options.name.empty()
                         ? fs::absolute(out_root).lexically_normal().filename().string()
                         : options.name;
  manifest["scales"] = sorted_scales;
  manifest["lr_generation"] = "center crop to a multiple of scale, bicubic (a=-0.5) antialiased "
                              "downscale, 8-bit quantization";
  manifest["images"] = std::move(images);
  const std::string text = manifest.dump(2) + "\n";
  // The manifest is regenerated in full and always overwritten when it
  // changes; it describes the files rather than being one of them.
  const fs::path manifest_path = out_root / "manifest.json";
  const std::vector<std::uint8_t> manifest_bytes(text.begin(), text.end());
  if (place_file(manifest_path, manifest_bytes, true)) {
    ++result.files_written;
  } else {
    ++result.files_skipped;
  }
  result.dataset = open_dataset(out_root);
  return result;
}

}  // namespace srbench::bench
