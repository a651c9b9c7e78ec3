#pragma once

#include <png.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "hazeforge/errors.hpp"
#include "hazeforge/tensor.hpp"

namespace hazeforge {

namespace detail {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

inline FilePtr open_file(const std::filesystem::path& p, const char* mode) {
  FilePtr f(std::fopen(p.string().c_str(), mode));
  if (!f) throw IoError("cannot open '" + p.string() + "'");
  return f;
}

[[noreturn]] inline void png_throw(png_structp, png_const_charp msg) {
  throw IoError(std::string("png: ") + (msg ? msg : "unknown error"));
}

inline void png_warn_ignore(png_structp, png_const_charp) {}

}  // namespace detail

// Round-half-up quantization used for all 8-bit exports.
template <typename T>
inline unsigned quantize8(T v) {
  T c = v < T(0) ? T(0) : (v > T(1) ? T(1) : v);
  return unsigned(std::floor(double(c) * 255.0 + 0.5));
}

template <typename T>
inline unsigned quantize16(T v) {
  T c = v < T(0) ? T(0) : (v > T(1) ? T(1) : v);
  return unsigned(std::floor(double(c) * 65535.0 + 0.5));
}

// Reads any PNG as an RGB image {3,H,W} with values in [0,1]. Palette,
// grayscale and alpha inputs are expanded/stripped to plain 8-bit RGB.
template <typename T = float>
Tensor<T> read_image_png(const std::filesystem::path& path) {
  auto fp = detail::open_file(path, "rb");
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                           detail::png_throw, detail::png_warn_ignore);
  if (!png) throw IoError("png: read struct allocation failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("png: info struct allocation failed");
  }
  try {
    png_init_io(png, fp.get());
    png_read_info(png, info);

    png_set_expand(png);
    png_set_strip_16(png);
    png_set_strip_alpha(png);
    png_set_gray_to_rgb(png);
    png_read_update_info(png, info);

    const std::size_t h = png_get_image_height(png, info);
    const std::size_t w = png_get_image_width(png, info);
    if (png_get_channels(png, info) != 3)
      throw IoError("png: '" + path.string() + "' did not decode to RGB");

    std::vector<unsigned char> row(w * 3);
    Tensor<T> img({3, h, w});
    for (std::size_t y = 0; y < h; ++y) {
      png_read_row(png, row.data(), nullptr);
      for (std::size_t x = 0; x < w; ++x)
        for (std::size_t c = 0; c < 3; ++c)
          img.at(c, y, x) = T(row[x * 3 + c]) / T(255);
    }
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
  } catch (...) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw;
  }
}

// Writes an RGB image {3,H,W} as 8-bit PNG with round-half-up quantization.
template <typename T>
void write_image_png(const std::filesystem::path& path, const Tensor<T>& img) {
  if (img.rank() != 3 || img.dim(0) != 3)
    throw ShapeError("write_image_png: expected {3,H,W}, got " + shape_str(img.shape()));
  auto fp = detail::open_file(path, "wb");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                            detail::png_throw, detail::png_warn_ignore);
  if (!png) throw IoError("png: write struct allocation failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("png: info struct allocation failed");
  }
  try {
    const std::size_t h = img.dim(1), w = img.dim(2);
    png_init_io(png, fp.get());
    png_set_compression_level(png, 1);  // throughput over size
    png_set_IHDR(png, info, w, h, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<unsigned char> row(w * 3);
    for (std::size_t y = 0; y < h; ++y) {
      for (std::size_t x = 0; x < w; ++x)
        for (std::size_t c = 0; c < 3; ++c)
          row[x * 3 + c] = (unsigned char)quantize8(img.at(c, y, x));
      png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
  } catch (...) {
    png_destroy_write_struct(&png, &info);
    throw;
  }
}

// Single-channel 16-bit PNG, used for transmission-map inspection dumps.
template <typename T>
void write_map_png16(const std::filesystem::path& path, const Tensor<T>& map) {
  if (map.rank() != 2)
    throw ShapeError("write_map_png16: expected {H,W}, got " + shape_str(map.shape()));
  auto fp = detail::open_file(path, "wb");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                            detail::png_throw, detail::png_warn_ignore);
  if (!png) throw IoError("png: write struct allocation failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("png: info struct allocation failed");
  }
  try {
    const std::size_t h = map.dim(0), w = map.dim(1);
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, w, h, 16, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<unsigned char> row(w * 2);  // big-endian per PNG spec
    for (std::size_t y = 0; y < h; ++y) {
      for (std::size_t x = 0; x < w; ++x) {
        unsigned v = quantize16(map.at(y, x));
        row[x * 2] = (unsigned char)(v >> 8);
        row[x * 2 + 1] = (unsigned char)(v & 0xff);
      }
      png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
  } catch (...) {
    png_destroy_write_struct(&png, &info);
    throw;
  }
}

template <typename T = float>
Tensor<T> read_map_png16(const std::filesystem::path& path) {
  auto fp = detail::open_file(path, "rb");
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                           detail::png_throw, detail::png_warn_ignore);
  if (!png) throw IoError("png: read struct allocation failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("png: info struct allocation failed");
  }
  try {
    png_init_io(png, fp.get());
    png_read_info(png, info);
    if (png_get_color_type(png, info) != PNG_COLOR_TYPE_GRAY ||
        png_get_bit_depth(png, info) != 16)
      throw IoError("png: '" + path.string() + "' is not 16-bit grayscale");
    const std::size_t h = png_get_image_height(png, info);
    const std::size_t w = png_get_image_width(png, info);

    std::vector<unsigned char> row(w * 2);
    Tensor<T> map({h, w});
    for (std::size_t y = 0; y < h; ++y) {
      png_read_row(png, row.data(), nullptr);
      for (std::size_t x = 0; x < w; ++x) {
        unsigned v = (unsigned(row[x * 2]) << 8) | unsigned(row[x * 2 + 1]);
        map.at(y, x) = T(v) / T(65535);
      }
    }
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return map;
  } catch (...) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw;
  }
}

}  // namespace hazeforge
