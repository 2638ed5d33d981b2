#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace dynamask {

/// Dense row-major image container. (0,0) is the top-left pixel,
/// x grows rightward, y grows downward.
template <typename T>
class Image {
 public:
  Image() = default;
  Image(int width, int height, T fill = T{})
      : width_(width), height_(height),
        data_(static_cast<size_t>(width) * static_cast<size_t>(height), fill) {
    assert(width >= 0 && height >= 0);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  bool contains(int x, int y) const {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }
  bool same_size(const Image& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  T& at(int x, int y) {
    assert(contains(x, y));
    return data_[static_cast<size_t>(y) * width_ + x];
  }
  const T& at(int x, int y) const {
    assert(contains(x, y));
    return data_[static_cast<size_t>(y) * width_ + x];
  }

  T* row(int y) { return data_.data() + static_cast<size_t>(y) * width_; }
  const T* row(int y) const { return data_.data() + static_cast<size_t>(y) * width_; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  void fill(T value) { std::fill(data_.begin(), data_.end(), value); }

  bool operator==(const Image& other) const {
    return width_ == other.width_ && height_ == other.height_ && data_ == other.data_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

struct Rgb8 {
  uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb8&) const = default;
};

using ImageU8 = Image<uint8_t>;
using ImageU16 = Image<uint16_t>;
using ImageRgb = Image<Rgb8>;

/// Binary bitmap; pixels are 0 or 1.
using Mask = Image<uint8_t>;

/// Number of set pixels.
size_t mask_count(const Mask& m);

/// a |= b, pixelwise. Throws ShapeError on dimension mismatch.
void mask_union_inplace(Mask& a, const Mask& b);

/// True when every set pixel of a is also set in b.
bool mask_subset(const Mask& a, const Mask& b);

/// Morphological dilation/erosion with a disk structuring element.
/// radius 0 returns the input unchanged.
Mask mask_dilate(const Mask& m, int radius);
Mask mask_erode(const Mask& m, int radius);

/// Tight bounding box of the set pixels as (u_min, v_min, u_max, v_max),
/// max-exclusive. Returns false when the mask is empty.
bool mask_bbox(const Mask& m, int& u_min, int& v_min, int& u_max, int& v_max);

/// Rec.601 luminance.
ImageU8 to_gray(const ImageRgb& rgb);

}  // namespace dynamask
