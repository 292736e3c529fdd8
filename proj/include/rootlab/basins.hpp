#pragma once

#include <string>
#include <vector>

#include "rootlab/methods.hpp"

namespace rootlab {

struct BasinConfig {
  const Problem* problem = nullptr;
  MethodId method = MethodId::Slss;
  const WeightPair* weight = nullptr;  // canonical pair when null
  int width = 256;
  int height = 256;
  BigReal re_min, re_max, im_min, im_max;  // default square [-3,3]^2
  int max_iters = 100;
  BigReal root_tol;        // default 1e-3
  Precision precision{16};  // 16 digits runs on hardware doubles
  int threads = 0;          // 0 = hardware concurrency

  BasinConfig();
  explicit BasinConfig(const Problem& p);
};

struct BasinPixel {
  int root_index = -1;  // -1 = no root reached (black)
  int iterations = 0;
};

struct BasinImage {
  int width = 0;
  int height = 0;
  int n_roots = 0;
  int max_iters = 0;
  std::vector<BasinPixel> pixels;  // row-major, top row = largest imaginary part

  const BasinPixel& at(int col, int row) const {
    return pixels[static_cast<size_t>(row) * width + col];
  }
};

struct BasinStats {
  long total = 0;
  long black = 0;
  std::vector<long> per_root;
  double converged_fraction = 0.0;
  double mean_iters = 0.0;  // over converged pixels
};

/// Iterate the configured method from z0. Returns the index of the first
/// root approached within root_tol (nearest root, lowest index on ties) and
/// the number of steps taken; {-1, max_iters} when the orbit never gets
/// close, diverges past 1e10, leaves the domain or a step degenerates.
BasinPixel classify_point(const BigComplex& z0, const BasinConfig& cfg);

/// Classify every pixel center: pixel (i, j) maps to
/// re_min + (i+0.5)*dre + i(im_max - (j+0.5)*dim). Deterministic regardless
/// of thread count.
BasinImage render_basin(const BasinConfig& cfg);

BasinStats basin_stats(const BasinImage& img);

/// Binary PPM (P6, maxval 255). Root k of N at hue 360k/N, brightness
/// scaled by 1 - iterations/max_iters clamped to [0.25, 1]; black pixels 0.
void write_ppm(const BasinImage& img, const std::string& path);

/// "method,converged_fraction,mean_iters,root0,root1,root2,root3,black"
std::string stats_csv_header();
std::string stats_csv_line(const std::string& method, const BasinStats& s);

}  // namespace rootlab
