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

#include <png.h>

#include <cmath>
#include <cstdio>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "srbench/error.h"
#include "srbench/hash.h"
#include "srbench/image.h"
#include "srbench/png_io.h"
#include "test_util.h"

namespace srbench {
namespace {

TEST(QuantizeTest, RoundsHalfAwayFromZeroAndClips) {
  EXPECT_EQ(quantize_sample(0.5), 1.0);
  EXPECT_EQ(quantize_sample(1.5), 2.0);
  EXPECT_EQ(quantize_sample(2.5), 3.0);
  EXPECT_EQ(quantize_sample(2.4999), 2.0);
  EXPECT_EQ(quantize_sample(-0.2), 0.0);
  EXPECT_EQ(quantize_sample(254.5), 255.0);
  EXPECT_EQ(quantize_sample(300.0), 255.0);
}

TEST(QuantizeTest, Idempotent) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-20, 280);
  PlanarImage img(9, 7, ColorSpace::kRgb);
  for (double& v : img.data()) v = d(rng);
  const PlanarImage once = quantize(img);
  EXPECT_EQ(quantize(once), once);
  EXPECT_EQ(apply_precision(img, PrecisionMode::kFloat), img);
  EXPECT_EQ(apply_precision(img, PrecisionMode::kInteger8), once);
}

TEST(ImageTest, RejectsBadShapes) {
  EXPECT_THROW(PlanarImage(0, 3, ColorSpace::kGray), Error);
  EXPECT_THROW(PlanarImage(2, 2, ColorSpace::kRgb, std::vector<double>(5)), Error);
  EXPECT_THROW(PlanarImage::gray(2, 2).relabeled(ColorSpace::kRgb), Error);
}

TEST(ImageTest, CropCopiesRectangle) {
  PlanarImage img = PlanarImage::gray(5, 4);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 5; ++x) img.at(0, y, x) = 10 * y + x;
  const PlanarImage c = crop(img, 1, 2, 3, 2);
  ASSERT_EQ(c.width(), 3);
  ASSERT_EQ(c.height(), 2);
  EXPECT_EQ(c.at(0, 0, 0), 21);
  EXPECT_EQ(c.at(0, 1, 2), 33);
  EXPECT_THROW(crop(img, 3, 0, 3, 1), Error);
}

TEST(ImageTest, CenterCropRect) {
  EXPECT_EQ(center_crop_rect(101, 50, 4), (CropRect{0, 1, 100, 48}));
  EXPECT_EQ(center_crop_rect(64, 64, 4), (CropRect{0, 0, 64, 64}));
  EXPECT_EQ(center_crop_rect(10, 7, 3), (CropRect{0, 0, 9, 6}));
}

TEST(ImageTest, FlipAndRotate) {
  PlanarImage img = PlanarImage::gray(3, 2);
  // 0 1 2
  // 3 4 5
  for (int i = 0; i < 6; ++i) img.data()[i] = i;
  const PlanarImage f = flip_horizontal(img);
  EXPECT_EQ(f.at(0, 0, 0), 2);
  EXPECT_EQ(f.at(0, 1, 2), 3);
  // Counter-clockwise: the right column becomes the top row.
  const PlanarImage r = rotate90_ccw(img);
  ASSERT_EQ(r.width(), 2);
  ASSERT_EQ(r.height(), 3);
  EXPECT_EQ(r.at(0, 0, 0), 2);
  EXPECT_EQ(r.at(0, 0, 1), 5);
  EXPECT_EQ(r.at(0, 2, 0), 0);
  EXPECT_EQ(rotate90_ccw(img, 4), img);
  EXPECT_EQ(rotate90_ccw(img, -1), rotate90_ccw(img, 3));
  EXPECT_EQ(rotate90_ccw(rotate90_ccw(img, 1), 1), rotate90_ccw(img, 2));
}

TEST(PngTest, RoundTripsRgbAndGray) {
  std::mt19937_64 rng(3);
  for (auto cs : {ColorSpace::kRgb, ColorSpace::kGray}) {
    const PlanarImage img = oracle::random_image(17, 11, cs, rng);
    const auto bytes = encode_png(img);
    EXPECT_EQ(decode_png(bytes), img);
    // Fixed compression settings make the encoding reproducible.
    EXPECT_EQ(encode_png(img), bytes);
  }
}

TEST(PngTest, QuantizesOnEncode) {
  PlanarImage img = PlanarImage::gray(2, 1);
  img.at(0, 0, 0) = 10.5;
  img.at(0, 0, 1) = 300;
  const PlanarImage back = decode_png(encode_png(img));
  EXPECT_EQ(back.at(0, 0, 0), 11);
  EXPECT_EQ(back.at(0, 0, 1), 255);
}

TEST(PngTest, FileRoundTripAndErrors) {
  testing::TempDir dir;
  std::mt19937_64 rng(4);
  const PlanarImage img = oracle::random_image(8, 6, ColorSpace::kRgb, rng);
  save_png(img, dir / "a.png");
  EXPECT_EQ(load_png(dir / "a.png"), img);
  EXPECT_THROW(load_png(dir / "missing.png"), Error);
  EXPECT_THROW(decode_png({1, 2, 3, 4}), Error);
}

TEST(PngTest, Rejects16BitWithMessage) {
  testing::TempDir dir;
  const auto path = dir / "deep.png";
  FILE* fp = std::fopen(path.c_str(), "wb");
  ASSERT_NE(fp, nullptr);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  png_init_io(png, fp);
  png_set_IHDR(png, info, 2, 1, 16, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_byte row[4] = {1, 2, 3, 4};
  png_write_row(png, row);
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  std::fclose(fp);
  try {
    load_png(path);
    FAIL() << "16-bit PNG accepted";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("16-bit"), std::string::npos) << e.what();
  }
}

TEST(HashTest, KnownVectors) {
  EXPECT_EQ(sha256_hex(std::string_view("abc")),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(std::string_view("")),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  testing::TempDir dir;
  std::ofstream(dir / "f.txt") << "abc";
  EXPECT_EQ(sha256_file(dir / "f.txt"), sha256_hex(std::string_view("abc")));
}

}  // namespace
}  // namespace srbench
