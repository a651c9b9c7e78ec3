#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "hazeforge/errors.hpp"
#include "hazeforge/rng.hpp"
#include "hazeforge/tensor.hpp"

namespace hazeforge {

// Per-channel global atmospheric light, each component in [0,1].
template <typename T>
struct AtmosphericLight {
  std::array<T, 3> value{T(1), T(1), T(1)};
};

// Parameters of the procedural nonhomogeneous transmission field.
struct HazeFieldParams {
  std::uint64_t seed = 0;
  std::size_t num_blobs = 6;
  double blob_sigma_min = 8.0;  // pixels
  double blob_sigma_max = 32.0;
  double t_min = 0.3;
  double t_max = 0.95;

  void validate() const {
    if (!(t_min < t_max) || t_min < 0.0 || t_max > 1.0)
      throw ConfigError("haze field: t_range must satisfy 0 <= t_min < t_max <= 1");
    if (!(blob_sigma_min < blob_sigma_max) || blob_sigma_min <= 0.0)
      throw ConfigError("haze field: blob sigma range must satisfy 0 < min < max");
  }
};

// I(x) = J(x) t(x) + A (1 - t(x)), clipped to [0,1].
template <typename T>
Tensor<T> synthesize_haze(const Tensor<T>& clear, const Tensor<T>& t,
                          const AtmosphericLight<T>& a) {
  if (clear.rank() != 3 || clear.dim(0) != 3)
    throw ShapeError("synthesize_haze: image must be {3,H,W}, got " + shape_str(clear.shape()));
  if (t.rank() != 2 || t.dim(0) != clear.dim(1) || t.dim(1) != clear.dim(2))
    throw ShapeError("synthesize_haze: transmission " + shape_str(t.shape()) +
                     " does not match image " + shape_str(clear.shape()));
  const std::size_t h = clear.dim(1), w = clear.dim(2);
  Tensor<T> hazy(clear.shape());
  for (std::size_t c = 0; c < 3; ++c) {
    const T ac = a.value[c];
    for (std::size_t y = 0; y < h; ++y)
      for (std::size_t x = 0; x < w; ++x) {
        const T tv = t.at(y, x);
        T v = clear.at(c, y, x) * tv + ac * (T(1) - tv);
        hazy.at(c, y, x) = v < T(0) ? T(0) : (v > T(1) ? T(1) : v);
      }
  }
  return hazy;
}

// Analytic inversion of the scattering model, used as a test oracle:
// J = (I - A(1-t)) / max(t, t_floor), clipped to [0,1].
template <typename T>
Tensor<T> invert_haze(const Tensor<T>& hazy, const Tensor<T>& t,
                      const AtmosphericLight<T>& a, T t_floor = T(1e-3)) {
  if (!(t_floor > T(0))) throw ConfigError("invert_haze: t_floor must be > 0");
  if (hazy.rank() != 3 || hazy.dim(0) != 3)
    throw ShapeError("invert_haze: image must be {3,H,W}, got " + shape_str(hazy.shape()));
  if (t.rank() != 2 || t.dim(0) != hazy.dim(1) || t.dim(1) != hazy.dim(2))
    throw ShapeError("invert_haze: transmission " + shape_str(t.shape()) +
                     " does not match image " + shape_str(hazy.shape()));
  const std::size_t h = hazy.dim(1), w = hazy.dim(2);
  Tensor<T> clear(hazy.shape());
  for (std::size_t c = 0; c < 3; ++c) {
    const T ac = a.value[c];
    for (std::size_t y = 0; y < h; ++y)
      for (std::size_t x = 0; x < w; ++x) {
        const T tv = t.at(y, x);
        const T denom = tv > t_floor ? tv : t_floor;
        T v = (hazy.at(c, y, x) - ac * (T(1) - tv)) / denom;
        clear.at(c, y, x) = v < T(0) ? T(0) : (v > T(1) ? T(1) : v);
      }
  }
  return clear;
}

// Smooth spatially varying transmission: a seeded sum of Gaussian blobs
// (haze density), affinely mapped so dense haze hits t_min and clear air
// hits t_max. An empty blob sum degenerates to a constant t_max field.
template <typename T = float>
Tensor<T> generate_transmission(std::size_t height, std::size_t width,
                                const HazeFieldParams& p) {
  p.validate();
  if (height < 1 || width < 1)
    throw ShapeError("generate_transmission: dimensions must be >= 1");

  Tensor<double> density({height, width});
  Rng rng(p.seed);
  for (std::size_t k = 0; k < p.num_blobs; ++k) {
    const double cy = rng.uniform(0.0, double(height));
    const double cx = rng.uniform(0.0, double(width));
    const double sigma = rng.uniform(p.blob_sigma_min, p.blob_sigma_max);
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    for (std::size_t y = 0; y < height; ++y) {
      const double dy = double(y) - cy;
      for (std::size_t x = 0; x < width; ++x) {
        const double dx = double(x) - cx;
        density.at(y, x) += std::exp(-(dy * dy + dx * dx) * inv2s2);
      }
    }
  }

  double lo = density[0], hi = density[0];
  for (std::size_t i = 0; i < density.size(); ++i) {
    lo = std::min(lo, density[i]);
    hi = std::max(hi, density[i]);
  }

  Tensor<T> t({height, width});
  if (hi - lo <= 0.0) {
    t.fill(T(p.t_max));
    return t;
  }
  const double s = (p.t_max - p.t_min) / (hi - lo);
  for (std::size_t i = 0; i < t.size(); ++i)
    t[i] = T(p.t_max - (density[i] - lo) * s);
  return t;
}

}  // namespace hazeforge
