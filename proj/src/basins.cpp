#include "rootlab/basins.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace rootlab {

BasinConfig::BasinConfig()
    : re_min(-3, Precision(16)),
      re_max(3, Precision(16)),
      im_min(-3, Precision(16)),
      im_max(3, Precision(16)),
      root_tol(make_scalar("1e-3", Precision(16))) {}

BasinConfig::BasinConfig(const Problem& p) : BasinConfig() { problem = &p; }

namespace {

template <class S>
struct OrbitSpace;

template <>
struct OrbitSpace<BigComplex> {
  std::vector<BigComplex> roots;
  BigReal tol, bound;

  OrbitSpace(const BasinConfig& cfg)
      : roots(cfg.problem->complex_roots),
        tol(cfg.root_tol),
        bound(BigReal::pow10(10, cfg.precision)) {}

  static BigComplex from(const BigComplex& z) { return z; }
};

template <>
struct OrbitSpace<std::complex<double>> {
  std::vector<std::complex<double>> roots;
  double tol, bound;

  OrbitSpace(const BasinConfig& cfg) : tol(cfg.root_tol.to_double()), bound(1e10) {
    for (const auto& r : cfg.problem->complex_roots)
      roots.emplace_back(r.real().to_double(), r.imag().to_double());
  }

  static std::complex<double> from(const BigComplex& z) {
    return {z.real().to_double(), z.imag().to_double()};
  }
};

template <class S>
int nearest_root_within(const OrbitSpace<S>& space, const S& z) {
  using ops = scalar_ops<S>;
  int best = -1;
  typename ops::mag_t best_dist = space.tol;
  for (size_t k = 0; k < space.roots.size(); ++k) {
    auto d = ops::magnitude(z - space.roots[k]);
    if (d < best_dist) {  // strict: ties keep the lowest index
      best = static_cast<int>(k);
      best_dist = d;
    }
  }
  return best;
}

template <class S>
BasinPixel classify_impl(const S& z0, const BasinConfig& cfg, const OrbitSpace<S>& space) {
  using ops = scalar_ops<S>;
  int hit = nearest_root_within(space, z0);
  if (hit >= 0) return {hit, 0};
  const WeightPair* w = cfg.weight;
  CountingOracle<S> oracle(*cfg.problem);
  S z = z0;
  for (int it = 1; it <= cfg.max_iters; ++it) {
    try {
      z = method_step(cfg.method, oracle, z, w).next;
    } catch (const Error&) {
      return {-1, it};
    }
    if (!ops::finite(z) || ops::magnitude(z) > space.bound) return {-1, it};
    hit = nearest_root_within(space, z);
    if (hit >= 0) return {hit, it};
  }
  return {-1, cfg.max_iters};
}

void check_config(const BasinConfig& cfg) {
  if (!cfg.problem) fail(ErrorKind::EvalError, "basin config has no problem");
  if (cfg.problem->complex_roots.empty())
    fail(ErrorKind::EvalError, "problem '" + cfg.problem->id + "' has no complex roots");
  if (cfg.width < 1 || cfg.height < 1)
    fail(ErrorKind::EvalError, "grid dimensions must be >= 1");
}

bool use_double_path(const BasinConfig& cfg) {
  return cfg.precision.digits <= 16 && cfg.problem->f_d && cfg.problem->fprime_d;
}

}  // namespace

BasinPixel classify_point(const BigComplex& z0, const BasinConfig& cfg) {
  check_config(cfg);
  if (use_double_path(cfg)) {
    OrbitSpace<std::complex<double>> space(cfg);
    return classify_impl(OrbitSpace<std::complex<double>>::from(z0), cfg, space);
  }
  OrbitSpace<BigComplex> space(cfg);
  return classify_impl(z0, cfg, space);
}

namespace {

template <class S>
void render_rows(const BasinConfig& cfg, BasinImage& img, std::atomic<int>& next_row) {
  OrbitSpace<S> space(cfg);
  BigReal dre = (cfg.re_max - cfg.re_min) / cfg.width;
  BigReal dim = (cfg.im_max - cfg.im_min) / cfg.height;
  for (int j; (j = next_row.fetch_add(1)) < cfg.height;) {
    BigReal im = cfg.im_max - (2 * j + 1) * dim / 2;
    for (int i = 0; i < cfg.width; ++i) {
      BigReal re = cfg.re_min + (2 * i + 1) * dre / 2;
      S z0 = OrbitSpace<S>::from(BigComplex(re, im));
      img.pixels[static_cast<size_t>(j) * cfg.width + i] = classify_impl(z0, cfg, space);
    }
  }
}

}  // namespace

BasinImage render_basin(const BasinConfig& cfg) {
  check_config(cfg);
  BasinImage img;
  img.width = cfg.width;
  img.height = cfg.height;
  img.n_roots = static_cast<int>(cfg.problem->complex_roots.size());
  img.max_iters = cfg.max_iters;
  img.pixels.assign(static_cast<size_t>(cfg.width) * cfg.height, BasinPixel{});

  int n_threads = cfg.threads > 0 ? cfg.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
  if (n_threads < 1) n_threads = 1;
  if (n_threads > cfg.height) n_threads = cfg.height;

  std::atomic<int> next_row{0};
  auto worker = [&] {
    if (use_double_path(cfg))
      render_rows<std::complex<double>>(cfg, img, next_row);
    else
      render_rows<BigComplex>(cfg, img, next_row);
  };
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return img;
}

BasinStats basin_stats(const BasinImage& img) {
  BasinStats s;
  s.total = static_cast<long>(img.pixels.size());
  s.per_root.assign(img.n_roots, 0);
  long iter_sum = 0;
  for (const auto& px : img.pixels) {
    if (px.root_index < 0) {
      ++s.black;
    } else {
      ++s.per_root[px.root_index];
      iter_sum += px.iterations;
    }
  }
  long converged = s.total - s.black;
  s.converged_fraction = s.total ? static_cast<double>(converged) / s.total : 0.0;
  s.mean_iters = converged ? static_cast<double>(iter_sum) / converged : 0.0;
  return s;
}

namespace {

void hsv_to_rgb(double h, double v, unsigned char* rgb) {
  // s = 1; h in degrees
  double hh = h / 60.0;
  int sector = static_cast<int>(hh) % 6;
  double f = hh - static_cast<int>(hh);
  double p = 0.0, q = v * (1.0 - f), t = v * f;
  double r = 0, g = 0, b = 0;
  switch (sector) {
    case 0: r = v; g = t; b = p; break;
    case 1: r = q; g = v; b = p; break;
    case 2: r = p; g = v; b = t; break;
    case 3: r = p; g = q; b = v; break;
    case 4: r = t; g = p; b = v; break;
    default: r = v; g = p; b = q; break;
  }
  rgb[0] = static_cast<unsigned char>(std::lround(r * 255.0));
  rgb[1] = static_cast<unsigned char>(std::lround(g * 255.0));
  rgb[2] = static_cast<unsigned char>(std::lround(b * 255.0));
}

}  // namespace

void write_ppm(const BasinImage& img, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  f << "P6\n" << img.width << " " << img.height << "\n255\n";
  std::string bytes;
  bytes.reserve(img.pixels.size() * 3);
  for (const auto& px : img.pixels) {
    unsigned char rgb[3] = {0, 0, 0};
    if (px.root_index >= 0 && img.n_roots > 0) {
      double hue = 360.0 * px.root_index / img.n_roots;
      double brightness =
          1.0 - static_cast<double>(px.iterations) / std::max(1, img.max_iters);
      if (brightness < 0.25) brightness = 0.25;
      if (brightness > 1.0) brightness = 1.0;
      hsv_to_rgb(hue, brightness, rgb);
    }
    bytes.append(reinterpret_cast<const char*>(rgb), 3);
  }
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) fail(ErrorKind::IoError, "write to '" + path + "' failed");
}

std::string stats_csv_header() {
  return "method,converged_fraction,mean_iters,root0,root1,root2,root3,black";
}

std::string stats_csv_line(const std::string& method, const BasinStats& s) {
  char buf[256];
  long roots[4] = {0, 0, 0, 0};
  for (size_t i = 0; i < s.per_root.size() && i < 4; ++i) roots[i] = s.per_root[i];
  std::snprintf(buf, sizeof buf, "%s,%.6f,%.3f,%ld,%ld,%ld,%ld,%ld", method.c_str(),
                s.converged_fraction, s.mean_iters, roots[0], roots[1], roots[2],
                roots[3], s.black);
  return buf;
}

}  // namespace rootlab
