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

// Reference implementations used as test oracles. Each one is written from
// the textbook definition, trading speed for directness, and shares no code
// with the library.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "srbench/image.h"

namespace srbench::oracle {

// MATLAB rgb2ycbcr luma on the [0, 255] scale.
inline double bt601_luma(double r, double g, double b) {
  return 16.0 + (65.481 * r + 128.553 * g + 24.966 * b) / 255.0;
}

inline double bt601_cb(double r, double g, double b) {
  return 128.0 + (-37.797 * r - 74.203 * g + 112.0 * b) / 255.0;
}

inline double bt601_cr(double r, double g, double b) {
  return 128.0 + (112.0 * r - 93.786 * g - 18.214 * b) / 255.0;
}

// Keys cubic, a = -0.5, written in its piecewise textbook form.
inline double cubic(double x) {
  const double t = std::fabs(x);
  if (t <= 1) return 1.5 * t * t * t - 2.5 * t * t + 1;
  if (t < 2) return -0.5 * t * t * t + 2.5 * t * t - 4 * t + 2;
  return 0;
}

inline double triangle(double x) { return std::max(0.0, 1.0 - std::fabs(x)); }
inline double box(double x) { return (x >= -0.5 && x < 0.5) ? 1.0 : 0.0; }

enum class Kernel { kBox, kTriangle, kCubic };

inline double kernel(Kernel k, double x) {
  switch (k) {
    case Kernel::kBox: return box(x);
    case Kernel::kTriangle: return triangle(x);
    case Kernel::kCubic: return cubic(x);
  }
  return 0;
}

// Non-separable resize: every output sample is a 2-D weighted sum over the
// whole (edge-extended) source grid, normalized by the total weight.
inline PlanarImage direct_resize(const PlanarImage& img, int ow, int oh, Kernel k, bool antialias) {
  const int iw = img.width(), ih = img.height();
  const double sx = static_cast<double>(ow) / iw, sy = static_cast<double>(oh) / ih;
  const double kx = (antialias && sx < 1) ? sx : 1.0;
  const double ky = (antialias && sy < 1) ? sy : 1.0;
  // Taps far enough out to cover any stretched kernel.
  const int reach_x = static_cast<int>(std::ceil(2.0 / kx)) + 2;
  const int reach_y = static_cast<int>(std::ceil(2.0 / ky)) + 2;
  PlanarImage out(ow, oh, img.colorspace());
  for (int c = 0; c < img.channels(); ++c) {
    for (int oy = 0; oy < oh; ++oy) {
      const double cy = (oy + 0.5) / sy - 0.5;
      for (int ox = 0; ox < ow; ++ox) {
        const double cx = (ox + 0.5) / sx - 0.5;
        double num = 0, den = 0;
        for (int j = static_cast<int>(std::floor(cy)) - reach_y; j <= std::ceil(cy) + reach_y; ++j) {
          const double wy = kernel(k, (cy - j) * ky);
          if (wy == 0) continue;
          for (int i = static_cast<int>(std::floor(cx)) - reach_x; i <= std::ceil(cx) + reach_x; ++i) {
            const double wx = kernel(k, (cx - i) * kx);
            if (wx == 0) continue;
            num += wy * wx * img.at(c, std::clamp(j, 0, ih - 1), std::clamp(i, 0, iw - 1));
            den += wy * wx;
          }
        }
        out.at(c, oy, ox) = num / den;
      }
    }
  }
  return out;
}

// SSIM with an explicit double loop per window position and no downsampling.
inline double naive_ssim(const PlanarImage& a, const PlanarImage& b, int win = 11, double sigma = 1.5) {
  std::vector<double> g(static_cast<std::size_t>(win) * win);
  double gsum = 0;
  const double r = (win - 1) / 2.0;
  for (int y = 0; y < win; ++y) {
    for (int x = 0; x < win; ++x) {
      const double v = std::exp(-((x - r) * (x - r) + (y - r) * (y - r)) / (2 * sigma * sigma));
      g[static_cast<std::size_t>(y) * win + x] = v;
      gsum += v;
    }
  }
  for (double& v : g) v /= gsum;
  const double c1 = std::pow(0.01 * 255, 2), c2 = std::pow(0.03 * 255, 2);
  double total = 0;
  int count = 0;
  for (int y0 = 0; y0 + win <= a.height(); ++y0) {
    for (int x0 = 0; x0 + win <= a.width(); ++x0) {
      double ma = 0, mb = 0;
      for (int y = 0; y < win; ++y)
        for (int x = 0; x < win; ++x) {
          const double w = g[static_cast<std::size_t>(y) * win + x];
          ma += w * a.at(0, y0 + y, x0 + x);
          mb += w * b.at(0, y0 + y, x0 + x);
        }
      double va = 0, vb = 0, cov = 0;
      for (int y = 0; y < win; ++y)
        for (int x = 0; x < win; ++x) {
          const double w = g[static_cast<std::size_t>(y) * win + x];
          const double da = a.at(0, y0 + y, x0 + x) - ma;
          const double db = b.at(0, y0 + y, x0 + x) - mb;
          va += w * da * da;
          vb += w * db * db;
          cov += w * da * db;
        }
      total += ((2 * ma * mb + c1) * (2 * cov + c2)) / ((ma * ma + mb * mb + c1) * (va + vb + c2));
      ++count;
    }
  }
  return total / count;
}

// Draws from an asymmetric generalized Gaussian with density proportional to
// exp(-(|x| / beta_side)^shape), where beta_side is chosen so that the
// one-sided root mean square equals left_sigma / right_sigma.
class AggdSampler {
 public:
  AggdSampler(double shape, double left_sigma, double right_sigma, unsigned seed)
      : shape_(shape), gamma_(1.0 / shape, 1.0), rng_(seed) {
    const double ratio = std::sqrt(std::tgamma(1.0 / shape) / std::tgamma(3.0 / shape));
    beta_left_ = left_sigma * ratio;
    beta_right_ = right_sigma * ratio;
  }

  double operator()() {
    const double magnitude = std::pow(gamma_(rng_), 1.0 / shape_);
    // Each side carries probability proportional to its scale.
    const double p_left = beta_left_ / (beta_left_ + beta_right_);
    return uniform_(rng_) < p_left ? -beta_left_ * magnitude : beta_right_ * magnitude;
  }

  std::vector<double> draw(std::size_t n) {
    std::vector<double> out(n);
    for (double& v : out) v = (*this)();
    return out;
  }

 private:
  double shape_;
  double beta_left_ = 1, beta_right_ = 1;
  std::gamma_distribution<double> gamma_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
  std::mt19937_64 rng_;
};

// Mean of the AGGD above: (beta_r - beta_l) Gamma(2/a) / Gamma(1/a).
inline double aggd_mean(double shape, double left_sigma, double right_sigma) {
  const double ratio = std::sqrt(std::tgamma(1.0 / shape) / std::tgamma(3.0 / shape));
  return (right_sigma - left_sigma) * ratio * std::tgamma(2.0 / shape) / std::tgamma(1.0 / shape);
}

// Random image with integer samples in [0, 255].
inline PlanarImage random_image(int w, int h, ColorSpace cs, std::mt19937_64& rng) {
  PlanarImage img(w, h, cs);
  std::uniform_int_distribution<int> d(0, 255);
  for (int c = 0; c < img.channels(); ++c)
    for (double& v : img.plane(c)) v = d(rng);
  return img;
}

}  // namespace srbench::oracle
