#pragma once

#include <stdexcept>
#include <string>

namespace dynamask {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad user-supplied configuration: unknown key, out-of-range value, bad manifest.
struct ConfigError : Error {
  using Error::Error;
};

/// Malformed input data (index files, detection files, trajectories, images).
/// The message carries the offending path and, where known, the line number.
struct FormatError : Error {
  using Error::Error;
};

/// Filesystem failure: unreadable/unwritable path.
struct IoError : Error {
  using Error::Error;
};

/// Depth value is zero or negative where a metric depth is required.
struct InvalidDepthError : Error {
  using Error::Error;
};

/// Point configuration does not constrain the requested transform
/// (fewer than 3 pairs, collinear points).
struct DegenerateGeometryError : Error {
  using Error::Error;
};

/// Image or matrix dimension mismatch.
struct ShapeError : Error {
  using Error::Error;
};

/// Timestamps are not strictly increasing where the contract requires it.
struct TimeOrderError : Error {
  using Error::Error;
};

/// Numerical failure, e.g. a covariance that is no longer invertible.
struct NumericalError : Error {
  using Error::Error;
};

/// Too few associated trajectory pairs to align and evaluate.
struct InsufficientOverlapError : Error {
  using Error::Error;
};

/// Inpainting mask covers the entire image; no boundary to propagate from.
struct AllMaskedError : Error {
  using Error::Error;
};

/// A pipeline stage failed; message carries the stage name and frame timestamp.
struct StageError : Error {
  using Error::Error;
};

}  // namespace dynamask
