#include "dynamask/rle.hpp"

#include "dynamask/errors.hpp"

namespace dynamask {

std::vector<int64_t> rle_encode(const Mask& mask) {
  std::vector<int64_t> runs;
  uint8_t current = 0;  // first run counts zeros
  int64_t length = 0;
  const uint8_t* p = mask.data();
  for (size_t i = 0; i < mask.size(); ++i) {
    const uint8_t v = p[i] ? 1 : 0;
    if (v == current) {
      ++length;
    } else {
      runs.push_back(length);
      current = v;
      length = 1;
    }
  }
  runs.push_back(length);
  return runs;
}

Mask rle_decode(std::span<const int64_t> runs, int width, int height) {
  const int64_t total = static_cast<int64_t>(width) * height;
  Mask mask(width, height, 0);
  int64_t pos = 0;
  uint8_t value = 0;
  for (int64_t run : runs) {
    if (run < 0) throw FormatError("rle_decode: negative run length");
    if (pos + run > total) throw FormatError("rle_decode: run sum exceeds width*height");
    if (value) {
      uint8_t* p = mask.data();
      for (int64_t i = pos; i < pos + run; ++i) p[i] = 1;
    }
    pos += run;
    value = 1 - value;
  }
  if (pos != total) throw FormatError("rle_decode: run sum does not equal width*height");
  return mask;
}

}  // namespace dynamask
