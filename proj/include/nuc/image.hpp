#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace nuc {

/// 8-bit grayscale image, row-major. Dimensions are fixed at construction
/// and always at least 1x1.
class GrayImage {
 public:
  GrayImage(int width, int height, std::uint8_t fill = 0)
      : width_(width), height_(height) {
    if (width < 1 || height < 1)
      throw std::invalid_argument("GrayImage: dimensions must be >= 1");
    pixels_.assign(static_cast<std::size_t>(width) * height, fill);
  }

  GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
      : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width < 1 || height < 1)
      throw std::invalid_argument("GrayImage: dimensions must be >= 1");
    if (pixels_.size() != static_cast<std::size_t>(width) * height)
      throw std::invalid_argument("GrayImage: pixel count does not match dimensions");
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return pixels_.size(); }

  std::uint8_t operator()(int row, int col) const {
    return pixels_[static_cast<std::size_t>(row) * width_ + col];
  }
  std::uint8_t& operator()(int row, int col) {
    return pixels_[static_cast<std::size_t>(row) * width_ + col];
  }

  std::uint8_t at(int row, int col) const {
    if (row < 0 || row >= height_ || col < 0 || col >= width_)
      throw std::out_of_range("GrayImage::at: index out of range");
    return (*this)(row, col);
  }

  std::span<const std::uint8_t> row(int i) const {
    return {pixels_.data() + static_cast<std::size_t>(i) * width_,
            static_cast<std::size_t>(width_)};
  }

  const std::vector<std::uint8_t>& pixels() const { return pixels_; }
  std::vector<std::uint8_t>& pixels() { return pixels_; }

  std::vector<std::uint8_t> column(int j) const {
    std::vector<std::uint8_t> out(height_);
    for (int i = 0; i < height_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  void set_column(int j, std::span<const std::uint8_t> values) {
    for (int i = 0; i < height_; ++i) (*this)(i, j) = values[i];
  }

  GrayImage transposed() const {
    GrayImage out(height_, width_);
    for (int i = 0; i < height_; ++i)
      for (int j = 0; j < width_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool operator==(const GrayImage&) const = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

/// Direction of the fixed pattern: "columns" means each image column has its
/// own transfer function (vertical stripes), "rows" the transpose situation.
enum class Orientation { columns, rows };

/// Ties (x.5) round toward +inf; used everywhere a real level becomes a pixel.
inline int round_half_up(double v) { return static_cast<int>(std::floor(v + 0.5)); }

inline std::uint8_t clamp_level(int v) {
  return static_cast<std::uint8_t>(v < 0 ? 0 : (v > 255 ? 255 : v));
}

}  // namespace nuc
