#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dynamask/image.hpp"

namespace dynamask {

/// Run-length encodes a binary mask over row-major pixel order. Runs
/// alternate zeros/ones and always start with a zeros run (possibly of
/// length 0). The run sum equals width*height, which makes any encoding
/// verifiable by inspection.
std::vector<int64_t> rle_encode(const Mask& mask);

/// Inverse of rle_encode. Throws FormatError when a run is negative or the
/// run sum does not equal width*height.
Mask rle_decode(std::span<const int64_t> runs, int width, int height);

}  // namespace dynamask
