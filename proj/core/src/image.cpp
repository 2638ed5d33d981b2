#include "dynamask/image.hpp"

#include <algorithm>

#include "dynamask/errors.hpp"

namespace dynamask {

size_t mask_count(const Mask& m) {
  size_t n = 0;
  for (uint8_t v : m) n += (v != 0);
  return n;
}

void mask_union_inplace(Mask& a, const Mask& b) {
  if (!a.same_size(b)) throw ShapeError("mask_union: dimension mismatch");
  uint8_t* pa = a.data();
  const uint8_t* pb = b.data();
  for (size_t i = 0; i < a.size(); ++i) pa[i] = (pa[i] || pb[i]) ? 1 : 0;
}

bool mask_subset(const Mask& a, const Mask& b) {
  if (!a.same_size(b)) throw ShapeError("mask_subset: dimension mismatch");
  const uint8_t* pa = a.data();
  const uint8_t* pb = b.data();
  for (size_t i = 0; i < a.size(); ++i)
    if (pa[i] && !pb[i]) return false;
  return true;
}

namespace {

// Disk offsets for a given radius, precomputed per call (radii are tiny).
std::vector<std::pair<int, int>> disk_offsets(int radius) {
  std::vector<std::pair<int, int>> offs;
  for (int dy = -radius; dy <= radius; ++dy)
    for (int dx = -radius; dx <= radius; ++dx)
      if (dx * dx + dy * dy <= radius * radius) offs.emplace_back(dx, dy);
  return offs;
}

}  // namespace

Mask mask_dilate(const Mask& m, int radius) {
  if (radius <= 0) return m;
  const auto offs = disk_offsets(radius);
  Mask out(m.width(), m.height(), 0);
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      if (!m.at(x, y)) continue;
      for (auto [dx, dy] : offs) {
        int nx = x + dx, ny = y + dy;
        if (m.contains(nx, ny)) out.at(nx, ny) = 1;
      }
    }
  }
  return out;
}

Mask mask_erode(const Mask& m, int radius) {
  if (radius <= 0) return m;
  const auto offs = disk_offsets(radius);
  Mask out(m.width(), m.height(), 0);
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      if (!m.at(x, y)) continue;
      bool keep = true;
      for (auto [dx, dy] : offs) {
        int nx = x + dx, ny = y + dy;
        if (!m.contains(nx, ny) || !m.at(nx, ny)) {
          keep = false;
          break;
        }
      }
      if (keep) out.at(x, y) = 1;
    }
  }
  return out;
}

bool mask_bbox(const Mask& m, int& u_min, int& v_min, int& u_max, int& v_max) {
  u_min = m.width();
  v_min = m.height();
  u_max = 0;
  v_max = 0;
  bool any = false;
  for (int y = 0; y < m.height(); ++y) {
    const uint8_t* row = m.row(y);
    for (int x = 0; x < m.width(); ++x) {
      if (!row[x]) continue;
      any = true;
      u_min = std::min(u_min, x);
      v_min = std::min(v_min, y);
      u_max = std::max(u_max, x + 1);
      v_max = std::max(v_max, y + 1);
    }
  }
  return any;
}

ImageU8 to_gray(const ImageRgb& rgb) {
  ImageU8 out(rgb.width(), rgb.height());
  const Rgb8* in = rgb.data();
  uint8_t* dst = out.data();
  for (size_t i = 0; i < rgb.size(); ++i) {
    // Integer Rec.601: (77 R + 150 G + 29 B) >> 8
    dst[i] = static_cast<uint8_t>((77 * in[i].r + 150 * in[i].g + 29 * in[i].b) >> 8);
  }
  return out;
}

}  // namespace dynamask
