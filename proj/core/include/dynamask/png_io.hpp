#pragma once

#include <string>

#include "dynamask/image.hpp"

namespace dynamask {

/// Reads an 8-bit color PNG. Grayscale, palette and alpha inputs are
/// expanded/stripped to plain RGB. Throws IoError / FormatError.
ImageRgb read_png_rgb8(const std::string& path);

/// Reads a 16-bit single-channel PNG (TUM depth convention, host byte order).
ImageU16 read_png_gray16(const std::string& path);

void write_png_rgb8(const std::string& path, const ImageRgb& img);
void write_png_gray16(const std::string& path, const ImageU16& img);

}  // namespace dynamask
