#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "hazeforge/png_io.hpp"
#include "hazeforge/rng.hpp"
#include "hazeforge/tensor.hpp"

using namespace hazeforge;
namespace fs = std::filesystem;

TEST_CASE("rng determinism and range") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    double u = a.uniform();
    REQUIRE(u == b.uniform());
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
  REQUIRE(derive_seed(7, 0) != derive_seed(7, 1));
}

TEST_CASE("tensor shape checks") {
  Tensor<float> a({3, 4, 5}), b({3, 4, 6});
  REQUIRE(a.size() == 60);
  REQUIRE_THROWS_AS(add(a, b), ShapeError);
  a.at(1, 2, 3) = 2.5f;
  REQUIRE(clamp01(a).at(1, 2, 3) == 1.0f);
}

TEST_CASE("png rgb round trip is bitwise on the 8-bit grid") {
  Rng rng(123);
  Tensor<float> img({3, 17, 23});
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = float(rng.below(256)) / 255.0f;

  auto path = fs::temp_directory_path() / "hf_png_rt.png";
  write_image_png(path, img);
  auto back = read_image_png<float>(path);
  REQUIRE(back.shape() == img.shape());
  REQUIRE(max_abs_diff(img, back) == 0.0f);
  fs::remove(path);
}

TEST_CASE("png quantization rounds half up") {
  Tensor<float> img({3, 1, 2});
  img.at(0, 0, 0) = 0.5f / 255.0f;          // exactly halfway -> 1
  img.at(0, 0, 1) = 0.49f / 255.0f;         // just below -> 0
  auto path = fs::temp_directory_path() / "hf_png_q.png";
  write_image_png(path, img);
  auto back = read_image_png<float>(path);
  REQUIRE(back.at(0, 0, 0) == 1.0f / 255.0f);
  REQUIRE(back.at(0, 0, 1) == 0.0f);
  fs::remove(path);
}

TEST_CASE("png 16-bit map round trip") {
  Rng rng(5);
  Tensor<double> map({9, 13});
  for (std::size_t i = 0; i < map.size(); ++i)
    map[i] = double(rng.below(65536)) / 65535.0;
  auto path = fs::temp_directory_path() / "hf_png16.png";
  write_map_png16(path, map);
  auto back = read_map_png16<double>(path);
  REQUIRE(max_abs_diff(map, back) < 1e-12);
  fs::remove(path);
}

TEST_CASE("png io errors") {
  REQUIRE_THROWS_AS(read_image_png<float>("/nonexistent/nope.png"), IoError);
  // truncated file: valid signature, then garbage
  auto path = fs::temp_directory_path() / "hf_png_bad.png";
  {
    std::FILE* f = std::fopen(path.string().c_str(), "wb");
    const unsigned char sig[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    std::fwrite(sig, 1, 8, f);
    std::fwrite("junkjunk", 1, 8, f);
    std::fclose(f);
  }
  REQUIRE_THROWS_AS(read_image_png<float>(path), IoError);
  fs::remove(path);
}
